from fractions import Fraction

import pytest

from coarray import (
    Verdict,
    check_ddb,
    classify,
    generate_2fra,
    optimal_params,
    periodicity_report,
    scan_family,
)
from coarray.family import ScanRow, expected_hes_presence, family_aperture
from coarray.errors import (
    InvalidRange,
    NTooSmall,
    RangeNotContiguous,
    RangeTooLarge,
)

from goldens import TABLE_2FRA


class TestOptimalParams:
    @pytest.mark.parametrize("n,expected", [(9, (1, 4)), (6, (1, 1)), (18, (4, 7))])
    def test_known_parameter_pairs(self, n, expected):
        assert optimal_params(n) == expected

    def test_too_small(self):
        with pytest.raises(NTooSmall):
            optimal_params(5)

    def test_maximizes_aperture_brute_force(self):
        # enumerate all (m, p) with p >= 1 and n = 2m + p + 3
        for n in range(6, 101):
            m_star, p_star = optimal_params(n)
            best = max(
                family_aperture(m, n - 2 * m - 3)
                for m in range(0, (n - 4) // 2 + 1)
                if n - 2 * m - 3 >= 1
            )
            assert family_aperture(m_star, p_star) == best
            # tie-break toward larger m
            for m in range(m_star + 1, (n - 4) // 2 + 1):
                p = n - 2 * m - 3
                if p >= 1:
                    assert family_aperture(m, p) < best


class TestGenerate2fra:
    @pytest.mark.parametrize("n", sorted(TABLE_2FRA))
    def test_golden_positions(self, n):
        config = generate_2fra(n)
        assert config.positions.positions == TABLE_2FRA[n][0]

    def test_ies_word_structure(self):
        config = generate_2fra(9)
        assert config.ies_word == (1, 4, 1, 6, 1, 1, 1, 1)
        assert len(config.ies_word) == 8

    def test_all_members_are_ddb(self):
        for n in range(6, 61):
            assert check_ddb(generate_2fra(n).positions)

    def test_large_members_well_formed(self):
        for n in (100, 250, 500):
            positions = generate_2fra(n).positions
            assert positions.n_sensors == n
            assert all(
                b > a for a, b in zip(positions.positions, positions.positions[1:])
            )

    def test_too_small(self):
        with pytest.raises(NTooSmall):
            generate_2fra(5)


class TestScanFamily:
    def test_table_range_matches_goldens(self):
        rows = scan_family(6, 30)
        assert len(rows) == 25
        for row in rows:
            golden_positions, golden_hes = TABLE_2FRA[row.n_sensors]
            assert row.positions == golden_positions
            assert row.hes_positions == golden_hes
            assert row.aperture == golden_positions[-1]

    def test_ten_to_seventeen_block_structure(self):
        rows = scan_family(10, 17)
        with_hes = [r.n_sensors for r in rows if r.hes_positions]
        assert with_hes == [10, 11, 12, 13]

    def test_single_row(self):
        rows = scan_family(6, 6)
        assert len(rows) == 1
        assert rows[0].hes_positions == (3,)

    def test_range_errors(self):
        with pytest.raises(NTooSmall):
            scan_family(3, 5)
        with pytest.raises(InvalidRange):
            scan_family(10, 9)
        with pytest.raises(RangeTooLarge):
            scan_family(6, 501)
        with pytest.raises(RangeTooLarge):
            scan_family(6, 13, ceiling=12)
        assert len(scan_family(6, 13, ceiling=13)) == 8  # explicit ceiling honored


class TestPeriodicityReport:
    def test_pattern_verified_10_to_41(self):
        summary = periodicity_report(scan_family(10, 41))
        assert summary.pattern_verified
        assert summary.first_violation is None
        # complete 8-blocks: exactly half carry an HES
        assert summary.fraction_with_hes == Fraction(1, 2)

    def test_fraction_over_full_table(self):
        # 16 of the 25 published rows carry an HES (counted with the oracle)
        summary = periodicity_report(scan_family(6, 30))
        assert summary.n_with_hes == 16
        assert summary.fraction_with_hes == Fraction(16, 25)
        assert summary.pattern_verified

    def test_non_contiguous_rejected(self):
        rows = scan_family(10, 14)
        with pytest.raises(RangeNotContiguous):
            periodicity_report(rows[:2] + rows[3:])

    def test_empty_rejected(self):
        with pytest.raises(InvalidRange):
            periodicity_report([])

    def test_violation_detected(self):
        rows = scan_family(10, 17)
        # forge a row that breaks the expected pattern at N = 14
        forged = [
            ScanRow(
                n_sensors=r.n_sensors,
                positions=r.positions,
                verdict=Verdict.DDB_WITH_HES if r.n_sensors == 14 else r.verdict,
                hes_positions=(1,) if r.n_sensors == 14 else r.hes_positions,
                aperture=r.aperture,
            )
            for r in rows
        ]
        summary = periodicity_report(forged)
        assert not summary.pattern_verified
        assert summary.first_violation == 14

    def test_expected_presence_law(self):
        for n, (_, hes) in TABLE_2FRA.items():
            assert expected_hes_presence(n) == bool(hes)

    def test_law_against_classify_up_to_80(self):
        for n in range(6, 81):
            report = classify(generate_2fra(n).positions)
            assert bool(report.hes_positions) == expected_hes_presence(n)

    def test_extended_scan_to_505(self):
        # full 8-blocks from N = 10 up to the default generation limit
        summary = periodicity_report(scan_family(10, 505, ceiling=505))
        assert summary.pattern_verified
        assert summary.fraction_with_hes == Fraction(1, 2)
