from fractions import Fraction

import pytest

from coarray import (
    SensorArray,
    Verdict,
    check_ddb,
    classify,
    is_essential,
    parse_and_normalize,
    single_failure_sweep,
)
from coarray.errors import PositionNotInArray, TooFewSensors

from conftest import random_arrays
from goldens import MISC_6, TFRA_9, TFRA_9_FLIPPED, TFRA_13
from oracle import brute_classify


class TestCheckDdb:
    def test_misc_is_not_ddb(self, misc6):
        assert not check_ddb(misc6)

    def test_nine_element_is_ddb(self, tfra9):
        assert check_ddb(tfra9)

    def test_four_element_ula(self):
        # positive-side weights (3, 2, 1) by the ULA closed form
        assert check_ddb(SensorArray((0, 1, 2, 3)))

    def test_adjacent_pair_degenerate_ddb(self):
        # no lags strictly between 0 and L, and w(1) == 1
        assert check_ddb(SensorArray((0, 1)))
        assert not check_ddb(SensorArray((0, 5)))


class TestSingleFailureSweep:
    def test_nine_element_hole_at_six(self, tfra9):
        outcomes = {o.removed_position: o for o in single_failure_sweep(tfra9)}
        assert set(outcomes) == {1, 5, 6, 12, 13, 14, 15}
        assert outcomes[6].residual_holes == (6,)
        assert outcomes[6].breaks_continuity
        for p, o in outcomes.items():
            if p != 6:
                assert not o.breaks_continuity

    def test_flipped_nine_element_hole_at_ten(self):
        arr = SensorArray(TFRA_9_FLIPPED)
        breakers = [
            o.removed_position for o in single_failure_sweep(arr) if o.breaks_continuity
        ]
        assert breakers == [10]

    def test_five_element_ula_all_intact(self):
        outcomes = single_failure_sweep(SensorArray((0, 1, 2, 3, 4)))
        assert [o.removed_position for o in outcomes] == [1, 2, 3]
        assert all(not o.breaks_continuity for o in outcomes)

    def test_outcomes_ascending(self, tfra13):
        outcomes = single_failure_sweep(tfra13)
        removed = [o.removed_position for o in outcomes]
        assert removed == sorted(removed) == list(tfra13.positions[1:-1])

    def test_too_few_sensors(self):
        with pytest.raises(TooFewSensors):
            single_failure_sweep(SensorArray((0, 3)))

    def test_standalone_on_non_ddb_allowed(self, misc6):
        # exploratory use outside the verdict pipeline
        outcomes = single_failure_sweep(misc6)
        assert len(outcomes) == 4


class TestClassify:
    def test_misc_not_ddb_aborts(self, misc6):
        report = classify(misc6)
        assert report.verdict is Verdict.NOT_DDB
        assert not report.ddb_satisfied
        assert report.failure_outcomes == ()
        assert report.hes_positions == ()
        assert report.essential_positions == (0, 13)

    def test_nine_element_hes(self, tfra9):
        report = classify(tfra9)
        assert report.verdict is Verdict.DDB_WITH_HES
        assert report.hes_positions == (6,)
        assert report.essential_positions == (0, 6, 16)
        assert report.fragility == Fraction(3, 9)

    def test_thirteen_element_hes(self, tfra13):
        report = classify(tfra13)
        assert report.verdict is Verdict.DDB_WITH_HES
        assert report.hes_positions == (16,)

    def test_true_2fra_ula(self):
        report = classify(SensorArray((0, 1, 2, 3, 4)))
        assert report.verdict is Verdict.TRUE_2FRA
        assert report.fragility == Fraction(2, 5)
        assert report.hes_positions == ()

    def test_exploratory_sweep_on_non_ddb(self, misc6):
        report = classify(misc6, sweep_on_non_ddb=True)
        assert report.verdict is Verdict.NOT_DDB
        assert len(report.failure_outcomes) == 4
        # raw outcomes never promote to HES findings
        assert report.hes_positions == ()

    def test_two_sensors(self):
        report = classify(SensorArray((0, 1)))
        assert report.verdict is Verdict.TRUE_2FRA
        assert report.fragility == Fraction(2, 2)

    def test_too_few(self):
        with pytest.raises(TooFewSensors):
            classify(SensorArray((0,)))


class TestIsEssential:
    def test_edge_sensor(self, tfra9):
        assert is_essential(tfra9, 16)
        assert is_essential(tfra9, 0)

    def test_hidden_essential(self, tfra9):
        assert is_essential(tfra9, 6)

    def test_non_essential_interior(self, tfra9):
        # verified against the brute-force oracle in the acceptance suite
        assert not is_essential(tfra9, 13)

    def test_unknown_position(self, tfra9):
        with pytest.raises(PositionNotInArray):
            is_essential(tfra9, 7)


class TestProperties:
    def test_ulas_up_to_50_truly_redundant(self):
        for n in range(4, 51):
            assert classify(SensorArray(tuple(range(n)))).verdict is Verdict.TRUE_2FRA

    def test_three_element_ula_has_hes(self):
        # both occurrences of lag 1 route through the middle sensor
        report = classify(SensorArray((0, 1, 2)))
        assert report.verdict is Verdict.DDB_WITH_HES
        assert report.hes_positions == (1,)

    def test_shift_flip_invariance_sample(self):
        for arr in random_arrays(100, seed=11):
            base = classify(arr)
            shifted = classify(parse_and_normalize([p + 5 for p in arr.positions]))
            flipped = classify(
                parse_and_normalize([arr.aperture - p for p in arr.positions])
            )
            assert shifted.verdict == base.verdict == flipped.verdict
            assert shifted.fragility == base.fragility == flipped.fragility
            assert shifted.hes_positions == base.hes_positions
            assert flipped.hes_positions == tuple(
                sorted(arr.aperture - p for p in base.hes_positions)
            )

    def test_true_2fra_fragility_is_two_over_n(self):
        for arr in random_arrays(200, seed=12):
            report = classify(arr)
            if report.verdict is Verdict.TRUE_2FRA:
                assert report.fragility == Fraction(2, arr.n_sensors)
                assert report.essential_positions == (0, arr.aperture)

    def test_agrees_with_brute_oracle_sample(self):
        for arr in random_arrays(150, max_aperture=20, seed=13):
            report = classify(arr)
            verdict, hes = brute_classify(list(arr.positions))
            assert report.verdict.value == verdict
            assert list(report.hes_positions) == hes

    def test_known_goldens_against_oracle(self):
        for positions in (MISC_6, TFRA_9, TFRA_9_FLIPPED, TFRA_13):
            report = classify(SensorArray(positions))
            verdict, hes = brute_classify(list(positions))
            assert report.verdict.value == verdict
            assert list(report.hes_positions) == hes
