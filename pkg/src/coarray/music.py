"""Snapshot simulation and coarray MUSIC for healthy-vs-faulty comparisons.

The estimator works in the coarray domain: sample-covariance entries are
averaged per spatial lag, the central contiguous run of lags acts as a
virtual ULA, and spatial smoothing turns its lag vector into a positive
semidefinite matrix whose noise subspace yields the MUSIC pseudospectrum.
Because the virtual aperture is the central ULA bound of the *surviving*
array, failing a hidden essential sensor visibly collapses the usable
degrees of freedom and the estimator starts missing targets or detecting
ghosts, while non-essential failures leave the spectrum intact.

Randomness is fully reproducible: sources and noise draw from two named
PCG64 streams derived from the scenario seed (``SeedSequence([seed, 0])``
for source symbols, ``SeedSequence([seed, 1])`` for noise), and noise is
generated for the full physical array so that every failure subset of the
same scenario observes identical per-sensor noise.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .arrays import SensorArray, coarray_profile, weight_table
from .errors import (
    AngleOutOfRange,
    DegenerateCovariance,
    InvalidRange,
    NoSurvivingSensors,
    PositionNotInArray,
    RankDeficient,
)

DEFAULT_SNR_DB = 0.0
DEFAULT_SNAPSHOTS = 500
DEFAULT_GRID_STEP_DEG = 0.1
DEFAULT_MATCH_TOLERANCE_DEG = 1.0


@dataclass(frozen=True)
class DOAScenario:
    """Narrowband far-field reception scenario on a (possibly failed) array.

    ``failed_positions`` may be any subset of the array for exploration;
    the single-failure convention of skipping edge sensors is enforced by
    the CLI, not here.
    """

    array: SensorArray
    source_angles_deg: tuple[float, ...]
    failed_positions: tuple[int, ...] = ()
    snr_db: float = DEFAULT_SNR_DB
    n_snapshots: int = DEFAULT_SNAPSHOTS
    rng_seed: int = 0

    def __post_init__(self):
        object.__setattr__(
            self, "source_angles_deg", tuple(float(a) for a in self.source_angles_deg)
        )
        object.__setattr__(
            self, "failed_positions", tuple(sorted(int(p) for p in self.failed_positions))
        )
        if not self.source_angles_deg:
            raise InvalidRange("scenario needs at least one source angle")
        for a in self.source_angles_deg:
            _check_angle(a)
        if len(set(self.source_angles_deg)) != len(self.source_angles_deg):
            raise InvalidRange("source angles must be distinct")
        for p in self.failed_positions:
            if p not in self.array.positions:
                raise PositionNotInArray(
                    f"cannot fail position {p}: no sensor there",
                    detail={"position": p},
                )
        if self.n_snapshots < 1:
            raise InvalidRange("snapshot count must be positive")

    @property
    def surviving_positions(self) -> tuple[int, ...]:
        failed = set(self.failed_positions)
        return tuple(p for p in self.array.positions if p not in failed)

    @property
    def n_sources(self) -> int:
        return len(self.source_angles_deg)


@dataclass(frozen=True, eq=False)
class DOAResult:
    """Pseudospectrum with detected peaks and detection bookkeeping.

    ``matched`` pairs (true angle, detected angle) within the matching
    tolerance; unmatched truths are ``missed`` and unmatched detections are
    ``ghosts``. When no ground truth was supplied all three are empty.
    """

    grid_deg: np.ndarray = field(repr=False)
    pseudospectrum: np.ndarray = field(repr=False)
    detected_peaks_deg: tuple[float, ...]
    matched: tuple[tuple[float, float], ...]
    missed: tuple[float, ...]
    ghosts: tuple[float, ...]
    rmse_deg: float | None
    k_sources: int
    central_ula_bound: int

    def __post_init__(self):
        for name in ("grid_deg", "pseudospectrum"):
            arr = np.asarray(getattr(self, name), dtype=np.float64)
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    def spectrum_db(self) -> np.ndarray:
        """Pseudospectrum in decibels, normalized to a 0 dB peak."""
        return 10.0 * np.log10(self.pseudospectrum / self.pseudospectrum.max())


def _check_angle(theta_deg: float):
    if not -90.0 < float(theta_deg) < 90.0:
        raise AngleOutOfRange(
            f"angle {theta_deg} outside the open interval (-90, 90) degrees",
            detail={"angle": float(theta_deg)},
        )


def steering_vector(positions, theta_deg: float) -> np.ndarray:
    """Unit-magnitude steering vector; element g has phase pi*pos_g*sin(theta)."""
    _check_angle(theta_deg)
    pos = np.asarray(positions, dtype=np.float64)
    return np.exp(1j * np.pi * pos * np.sin(np.deg2rad(float(theta_deg))))


def _steering_matrix(positions, thetas_deg: np.ndarray) -> np.ndarray:
    pos = np.asarray(positions, dtype=np.float64)
    phases = np.pi * np.outer(pos, np.sin(np.deg2rad(thetas_deg)))
    return np.exp(1j * phases)


def source_rng(seed: int) -> np.random.Generator:
    """Named stream for source symbols."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, 0])))


def noise_rng(seed: int) -> np.random.Generator:
    """Named stream for additive noise."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, 1])))


def _circular_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def simulate_snapshots(sc: DOAScenario) -> np.ndarray:
    """Simulate received snapshots X = A S + W on the surviving sensors.

    Sources are uncorrelated unit-power circular complex Gaussians; noise is
    circular complex Gaussian with power 10^(-snr_db/10) per sensor. Noise
    is drawn for the full physical array and rows of failed sensors are
    dropped, so failure subsets of one scenario share sensor noise.

    Returns:
        Complex matrix of shape (surviving sensors, n_snapshots), rows
        ordered by ascending sensor position.

    Raises:
        NoSurvivingSensors: if every sensor is marked failed.
    """
    surviving = sc.surviving_positions
    if not surviving:
        raise NoSurvivingSensors("all sensors failed; nothing to simulate")
    k = sc.n_sources
    t = sc.n_snapshots
    symbols = _circular_gaussian(source_rng(sc.rng_seed), (k, t))
    sigma = 10.0 ** (-sc.snr_db / 20.0)
    noise_full = sigma * _circular_gaussian(
        noise_rng(sc.rng_seed), (sc.array.n_sensors, t)
    )
    surv_set = set(surviving)
    surv_idx = [i for i, p in enumerate(sc.array.positions) if p in surv_set]
    a_matrix = _steering_matrix(surviving, np.asarray(sc.source_angles_deg))
    return a_matrix @ symbols + noise_full[surv_idx]


def _as_positions(surviving) -> tuple[int, ...]:
    if isinstance(surviving, SensorArray):
        return surviving.positions
    return tuple(int(p) for p in surviving)


def _surviving_profile(positions: tuple[int, ...]):
    # shift-invariant: rebase on zero so coarray-core accepts the frame
    base = positions[0]
    rebased = SensorArray(tuple(p - base for p in positions))
    return coarray_profile(weight_table(rebased))


def coarray_lag_averages(R: np.ndarray, positions):
    """Mean covariance entry per coarray lag.

    Returns (lags, means) over exactly the difference coarray of
    ``positions``: every lag some sensor pair generates, and no other.
    """
    pos = np.asarray(_as_positions(positions), dtype=np.int64)
    span = int(pos.max() - pos.min())
    diff = (pos[:, None] - pos[None, :]).ravel() + span
    sums = np.zeros(2 * span + 1, dtype=np.complex128)
    np.add.at(sums, diff, np.asarray(R).ravel())
    counts = np.bincount(diff, minlength=2 * span + 1)
    present = counts > 0
    lags = np.arange(-span, span + 1)[present]
    means = sums[present] / counts[present]
    return lags, means


def smoothed_coarray_matrix(R: np.ndarray, positions) -> tuple[np.ndarray, int]:
    """Spatially smoothed coarray matrix and the central ULA bound Lc.

    The Hermitian matrix of central-segment lag averages (entry (u, v) is
    the mean at lag u-v) is squared and scaled by 1/(Lc+1); the result is
    positive semidefinite and shares its eigenvectors, so MUSIC subspaces
    carry over. Forward-only smoothing; no forward-backward averaging.
    """
    pos = _as_positions(positions)
    bound = _surviving_profile(pos).central_ula_bound
    lags, means = coarray_lag_averages(R, pos)
    lag_to_mean = dict(zip(lags.tolist(), means.tolist()))
    z = np.array([lag_to_mean[m] for m in range(-bound, bound + 1)])
    idx = np.arange(bound + 1)
    toeplitz = z[(idx[:, None] - idx[None, :]) + bound]
    return toeplitz @ toeplitz.conj().T / (bound + 1), bound


def coarray_music(
    X: np.ndarray,
    surviving,
    k_sources: int,
    grid_step_deg: float = DEFAULT_GRID_STEP_DEG,
    *,
    true_angles_deg: tuple[float, ...] = (),
    match_tolerance_deg: float = DEFAULT_MATCH_TOLERANCE_DEG,
) -> DOAResult:
    """Coarray MUSIC on snapshot data from the surviving sensors.

    Pipeline: sample covariance, per-lag averaging over the surviving
    difference coarray, central contiguous segment [-Lc, Lc] as a virtual
    ULA, spatial smoothing of the Hermitian lag-average matrix into a
    positive semidefinite matrix, eigendecomposition, and a pseudospectrum
    from the noise subspace. Detected peaks are the ``k_sources`` largest
    strict local maxima on the grid (ties broken toward the lower angle;
    no sub-grid interpolation).

    Args:
        X: Complex snapshot matrix, one row per surviving sensor in
            ascending position order.
        surviving: The surviving sensor positions (SensorArray or ints).
        k_sources: Number of sources to resolve; must not exceed the
            central ULA bound of the surviving coarray.
        grid_step_deg: Angle grid resolution in degrees.
        true_angles_deg: Optional ground truth for match/miss/ghost
            bookkeeping within ``match_tolerance_deg``.

    Raises:
        RankDeficient: if ``k_sources`` exceeds the usable virtual aperture.
        DegenerateCovariance: on non-finite snapshot data.
    """
    positions = _as_positions(surviving)
    if not positions:
        raise NoSurvivingSensors("surviving array is empty")
    if any(b <= a for a, b in zip(positions, positions[1:])):
        raise InvalidRange("surviving positions must be strictly ascending")
    X = np.asarray(X, dtype=np.complex128)
    if X.ndim != 2 or X.shape[0] != len(positions):
        raise InvalidRange(
            f"snapshot matrix must have {len(positions)} rows, got shape {X.shape}"
        )
    if grid_step_deg <= 0:
        raise InvalidRange("grid step must be positive")
    if not np.isfinite(X).all():
        raise DegenerateCovariance("snapshot data contains non-finite entries")

    bound = _surviving_profile(positions).central_ula_bound
    if k_sources < 1:
        raise InvalidRange("source count must be positive")
    if k_sources > bound:
        raise RankDeficient(
            f"cannot resolve {k_sources} sources: the surviving coarray "
            f"supports at most {bound} (its central ULA bound)",
            detail={"k_sources": k_sources, "central_ula_bound": bound},
        )

    n_snapshots = X.shape[1]
    R = X @ X.conj().T / n_snapshots
    smoothed, bound = smoothed_coarray_matrix(R, positions)

    evals, evecs = np.linalg.eigh(smoothed)
    noise_basis = evecs[:, : bound + 1 - k_sources]

    n_points = round(180.0 / grid_step_deg) - 1
    grid = -90.0 + grid_step_deg * np.arange(1, n_points + 1)
    a_grid = _steering_matrix(np.arange(bound + 1), grid)
    proj = noise_basis.conj().T @ a_grid
    denom = np.einsum("ij,ij->j", proj.conj(), proj).real
    spectrum = 1.0 / np.maximum(denom, np.finfo(np.float64).tiny)

    peaks = _top_peaks(grid, spectrum, k_sources)
    matched, missed, ghosts, rmse = _match_detections(
        tuple(float(a) for a in true_angles_deg), peaks, match_tolerance_deg
    )
    return DOAResult(
        grid_deg=grid,
        pseudospectrum=spectrum,
        detected_peaks_deg=peaks,
        matched=matched,
        missed=missed,
        ghosts=ghosts,
        rmse_deg=rmse,
        k_sources=k_sources,
        central_ula_bound=bound,
    )


def _top_peaks(grid: np.ndarray, spectrum: np.ndarray, k: int) -> tuple[float, ...]:
    """The k largest strict local maxima, reported in ascending angle."""
    inner = (spectrum[1:-1] > spectrum[:-2]) & (spectrum[1:-1] > spectrum[2:])
    candidates = np.nonzero(inner)[0] + 1
    ranked = sorted(candidates, key=lambda i: (-spectrum[i], grid[i]))
    return tuple(sorted(float(grid[i]) for i in ranked[:k]))


def _match_detections(
    truths: tuple[float, ...], peaks: tuple[float, ...], tolerance: float
):
    """Greedy one-to-one matching by ascending angular distance."""
    pairs = []
    used_truth: set[int] = set()
    used_peak: set[int] = set()
    candidates = sorted(
        (abs(t - d), i, j)
        for i, t in enumerate(truths)
        for j, d in enumerate(peaks)
        if abs(t - d) <= tolerance
    )
    for _, i, j in candidates:
        if i in used_truth or j in used_peak:
            continue
        used_truth.add(i)
        used_peak.add(j)
        pairs.append((truths[i], peaks[j]))
    missed = tuple(t for i, t in enumerate(truths) if i not in used_truth)
    ghosts = tuple(d for j, d in enumerate(peaks) if j not in used_peak)
    rmse = None
    if pairs:
        rmse = float(np.sqrt(np.mean([(t - d) ** 2 for t, d in pairs])))
    return tuple(pairs), missed, ghosts, rmse


def compare_health_states(
    sc_base: DOAScenario,
    failure_sets,
    *,
    grid_step_deg: float = DEFAULT_GRID_STEP_DEG,
    match_tolerance_deg: float = DEFAULT_MATCH_TOLERANCE_DEG,
) -> list[DOAResult]:
    """Run the identical scenario once per failure set.

    Same seed, hence identical source symbols and per-sensor noise across
    all runs; only the surviving rows differ. Results align one-to-one with
    ``failure_sets`` for side-by-side spectrum comparison.
    """
    results = []
    for failed in failure_sets:
        sc = replace(sc_base, failed_positions=tuple(failed))
        X = simulate_snapshots(sc)
        results.append(
            coarray_music(
                X,
                sc.surviving_positions,
                sc.n_sources,
                grid_step_deg,
                true_angles_deg=sc.source_angles_deg,
                match_tolerance_deg=match_tolerance_deg,
            )
        )
    return results
