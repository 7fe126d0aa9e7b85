import numpy as np
import pytest

from coarray import (
    DOAScenario,
    SensorArray,
    coarray_lag_averages,
    coarray_music,
    coarray_profile,
    compare_health_states,
    simulate_snapshots,
    smoothed_coarray_matrix,
    steering_vector,
    weight_table,
)
from coarray.errors import (
    AngleOutOfRange,
    DegenerateCovariance,
    InvalidRange,
    NoSurvivingSensors,
    PositionNotInArray,
    RankDeficient,
)

from goldens import TFRA_13

ELEVEN_SOURCES = tuple(float(a) for a in range(-20, 21, 4))


def tfra13_scenario(**overrides):
    defaults = dict(
        array=SensorArray(TFRA_13),
        source_angles_deg=ELEVEN_SOURCES,
        snr_db=0.0,
        n_snapshots=500,
        rng_seed=0,
    )
    defaults.update(overrides)
    return DOAScenario(**defaults)


class TestSteeringVector:
    def test_broadside_all_ones(self):
        v = steering_vector((0, 1, 7, 8), 0.0)
        assert np.allclose(v, np.ones(4))

    def test_thirty_degrees_phase(self):
        # sin 30 = 0.5, so position 2 accumulates phase pi
        v = steering_vector((0, 2), 30.0)
        assert np.allclose(np.angle(v[1]), np.pi)

    def test_unit_magnitude(self):
        v = steering_vector(TFRA_13, 47.3)
        assert np.allclose(np.abs(v), 1.0)

    def test_angle_out_of_range(self):
        with pytest.raises(AngleOutOfRange):
            steering_vector((0, 1), 90.0)
        with pytest.raises(AngleOutOfRange):
            steering_vector((0, 1), -95.0)


class TestScenario:
    def test_surviving_positions(self):
        sc = tfra13_scenario(failed_positions=(16, 17))
        assert 16 not in sc.surviving_positions
        assert len(sc.surviving_positions) == 11

    def test_failed_position_must_exist(self):
        with pytest.raises(PositionNotInArray):
            tfra13_scenario(failed_positions=(2,))

    def test_duplicate_angles_rejected(self):
        with pytest.raises(InvalidRange):
            tfra13_scenario(source_angles_deg=(0.0, 0.0))

    def test_angles_validated(self):
        with pytest.raises(AngleOutOfRange):
            tfra13_scenario(source_angles_deg=(95.0,))


class TestSimulateSnapshots:
    def test_shape_and_determinism(self):
        sc = tfra13_scenario()
        X1 = simulate_snapshots(sc)
        X2 = simulate_snapshots(sc)
        assert X1.shape == (13, 500)
        assert np.array_equal(X1, X2)

    def test_noise_free_single_source_broadside(self):
        sc = tfra13_scenario(source_angles_deg=(0.0,), snr_db=300.0, n_snapshots=32)
        X = simulate_snapshots(sc)
        # steering at broadside is all-ones: every column is a constant vector
        assert np.allclose(X, np.tile(X[0], (13, 1)), atol=1e-10)

    def test_failed_rows_are_shared_noise_streams(self):
        healthy = simulate_snapshots(tfra13_scenario())
        faulty = simulate_snapshots(tfra13_scenario(failed_positions=(16,)))
        surv = [i for i, p in enumerate(TFRA_13) if p != 16]
        assert np.array_equal(healthy[surv], faulty)

    def test_sample_covariance_approaches_rank_one(self):
        sc = tfra13_scenario(
            source_angles_deg=(10.0,), snr_db=300.0, n_snapshots=100_000
        )
        X = simulate_snapshots(sc)
        R = X @ X.conj().T / X.shape[1]
        a = steering_vector(TFRA_13, 10.0)
        assert np.abs(R - np.outer(a, a.conj())).max() < 0.05

    def test_all_failed(self):
        with pytest.raises(NoSurvivingSensors):
            simulate_snapshots(tfra13_scenario(failed_positions=TFRA_13))


class TestSmoothedMatrix:
    def test_lag_set_equals_dca(self):
        sc = tfra13_scenario(failed_positions=(16,))
        X = simulate_snapshots(sc)
        R = X @ X.conj().T / X.shape[1]
        lags, _ = coarray_lag_averages(R, sc.surviving_positions)
        rebased = SensorArray(sc.surviving_positions)
        profile = coarray_profile(weight_table(rebased))
        assert lags.tolist() == list(profile.dca)

    def test_positive_semidefinite_and_hermitian(self):
        for failed in ((), (16,), (17,)):
            sc = tfra13_scenario(failed_positions=failed)
            X = simulate_snapshots(sc)
            R = X @ X.conj().T / X.shape[1]
            smoothed, bound = smoothed_coarray_matrix(R, sc.surviving_positions)
            assert smoothed.shape == (bound + 1, bound + 1)
            assert np.allclose(smoothed, smoothed.conj().T)
            evals = np.linalg.eigvalsh(smoothed)
            assert evals.min() >= -1e-9 * np.trace(smoothed).real

    def test_uniform_dof_halving(self):
        healthy, healthy_bound = smoothed_coarray_matrix(
            np.eye(13), TFRA_13
        )
        assert healthy_bound == 31  # 63 contiguous lags
        surviving = tuple(p for p in TFRA_13 if p != 16)
        _, faulty_bound = smoothed_coarray_matrix(np.eye(12), surviving)
        assert faulty_bound == 14  # 29 contiguous lags


class TestCoarrayMusic:
    def test_healthy_resolves_eleven_sources(self):
        sc = tfra13_scenario()
        X = simulate_snapshots(sc)
        result = coarray_music(
            X, sc.surviving_positions, 11, true_angles_deg=ELEVEN_SOURCES
        )
        assert len(result.matched) == 11
        assert result.missed == () and result.ghosts == ()
        assert result.rmse_deg < 0.5
        assert result.central_ula_bound == 31

    def test_rank_deficient_advises_cap(self):
        sc = tfra13_scenario(failed_positions=(16,))
        X = simulate_snapshots(sc)
        with pytest.raises(RankDeficient) as err:
            coarray_music(X, sc.surviving_positions, 20)
        assert err.value.detail["central_ula_bound"] == 14

    def test_non_finite_rejected(self):
        X = np.full((13, 8), np.nan, dtype=complex)
        with pytest.raises(DegenerateCovariance):
            coarray_music(X, TFRA_13, 3)

    def test_spectrum_positive_finite(self):
        sc = tfra13_scenario(n_snapshots=100)
        X = simulate_snapshots(sc)
        result = coarray_music(X, sc.surviving_positions, 11, grid_step_deg=0.5)
        assert np.isfinite(result.pseudospectrum).all()
        assert (result.pseudospectrum > 0).all()

    def test_peak_count_capped(self):
        sc = tfra13_scenario()
        X = simulate_snapshots(sc)
        result = coarray_music(X, sc.surviving_positions, 11)
        assert len(result.detected_peaks_deg) <= 11

    def test_noise_free_oracle_single_source(self):
        rng = np.random.default_rng(2024)
        arr = SensorArray(TFRA_13)
        for angle in rng.uniform(-85.0, 85.0, size=50):
            sc = DOAScenario(
                array=arr,
                source_angles_deg=(float(angle),),
                snr_db=300.0,
                n_snapshots=200,
                rng_seed=int(rng.integers(1 << 31)),
            )
            X = simulate_snapshots(sc)
            result = coarray_music(X, arr.positions, 1)
            assert len(result.detected_peaks_deg) == 1
            assert abs(result.detected_peaks_deg[0] - angle) <= 0.1 + 1e-9

    def test_mirror_symmetry(self):
        angles = (-24.0, -8.0, 14.0, 33.0)
        base = tfra13_scenario(source_angles_deg=angles, snr_db=20.0)
        mirrored = tfra13_scenario(
            source_angles_deg=tuple(-a for a in angles), snr_db=20.0
        )
        res_base = coarray_music(
            simulate_snapshots(base), base.surviving_positions, len(angles)
        )
        res_mirr = coarray_music(
            simulate_snapshots(mirrored), mirrored.surviving_positions, len(angles)
        )
        flipped = sorted(-p for p in res_mirr.detected_peaks_deg)
        for a, b in zip(sorted(res_base.detected_peaks_deg), flipped):
            assert abs(a - b) <= 0.1 + 1e-9


class TestCompareHealthStates:
    def test_fig_style_three_way_comparison(self):
        sc = tfra13_scenario()
        results = compare_health_states(sc, [(), (17,), (16,)])
        healthy, non_hes, hes = results
        assert len(healthy.matched) == 11 and healthy.ghosts == ()
        assert len(non_hes.matched) == 11 and non_hes.ghosts == ()
        assert len(hes.matched) < 11 or hes.ghosts != ()
        assert hes.central_ula_bound == 14

    def test_empty_failure_set_equals_direct_call(self):
        sc = tfra13_scenario()
        direct = coarray_music(
            simulate_snapshots(sc),
            sc.surviving_positions,
            11,
            true_angles_deg=ELEVEN_SOURCES,
        )
        via_compare = compare_health_states(sc, [()])[0]
        assert np.array_equal(direct.pseudospectrum, via_compare.pseudospectrum)
        assert direct.detected_peaks_deg == via_compare.detected_peaks_deg

    def test_healthy_match_stable_across_seeds(self):
        for seed in range(20):
            sc = tfra13_scenario(rng_seed=seed)
            result = compare_health_states(sc, [()])[0]
            assert len(result.matched) == 11
            assert result.ghosts == ()
