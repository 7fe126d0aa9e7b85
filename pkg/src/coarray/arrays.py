"""Core coarray vocabulary: sensor arrays, difference sets, weight functions.

A sparse linear array lives on an integer grid with half-wavelength pitch.
Everything downstream (robustness verdicts, family audits, coarray MUSIC)
is built from the handful of pure functions in this module:

* :func:`parse_and_normalize` turns raw positions into a validated,
  zero-based :class:`SensorArray`,
* :func:`weight_table` counts sensor pairs per spatial lag,
* :func:`coarray_profile` extracts the difference coarray, its holes, and
  the central contiguous segment usable as a virtual ULA,
* :func:`indicator_sequence` / :func:`weight_table_via_autocorrelation`
  provide the independent autocorrelation route to the same weight table.

All values are immutable after construction and all functions are pure, so
they are safe for unrestricted concurrent use.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    ApertureExceeded,
    DuplicatePositions,
    EmptyInput,
    NegativePosition,
    NonIntegerPosition,
    TooFewSensors,
)

#: Aperture guard against pathological inputs; override per call or via the
#: COARRAY_MAX_APERTURE environment variable.
DEFAULT_MAX_APERTURE = 100_000

_INT_TOKEN = re.compile(r"^[+-]?\d+$")


def default_max_aperture() -> int:
    """Aperture cap currently in effect (env override honoured)."""
    raw = os.environ.get("COARRAY_MAX_APERTURE")
    if raw is None:
        return DEFAULT_MAX_APERTURE
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_MAX_APERTURE
    return value if value > 0 else DEFAULT_MAX_APERTURE


@dataclass(frozen=True)
class SensorArray:
    """A normalized sparse linear array on the half-wavelength grid.

    ``positions`` are strictly increasing non-negative integers with
    ``positions[0] == 0``. Construct via :func:`parse_and_normalize` rather
    than directly; the constructor only re-checks the invariants.
    """

    positions: tuple[int, ...]

    def __post_init__(self):
        if not self.positions:
            raise EmptyInput("sensor array must contain at least one position")
        if self.positions[0] != 0:
            raise NegativePosition(
                f"normalized array must start at 0, got {self.positions[0]}"
            )
        if any(b <= a for a, b in zip(self.positions, self.positions[1:])):
            raise DuplicatePositions(
                "positions must be strictly increasing with no duplicates"
            )

    @property
    def n_sensors(self) -> int:
        return len(self.positions)

    @property
    def aperture(self) -> int:
        """Largest position L; the array spans lags [-L, L]."""
        return self.positions[-1]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.positions, dtype=np.int64)

    def without(self, position: int) -> "SensorArray":
        """Copy with one sensor removed; positions keep their original frame.

        Only non-origin removals yield a valid zero-based array, which is
        all the failure sweep needs (it never removes edge sensors).
        Callers that remove the origin must renormalize explicitly.
        """
        if position not in self.positions:
            from .errors import PositionNotInArray

            raise PositionNotInArray(f"no sensor at position {position}")
        return SensorArray(tuple(p for p in self.positions if p != position))

    def __str__(self) -> str:
        return "[" + " ".join(str(p) for p in self.positions) + "]"


@dataclass(frozen=True, eq=False)
class WeightTable:
    """Dense weight function w(m) over all lags m in [-L, L].

    ``counts[m + aperture]`` holds w(m), the number of ordered sensor pairs
    (i, j) with ``a_i - a_j == m``. Zeros are stored explicitly so that hole
    queries and plotting need no special casing.
    """

    aperture: int
    counts: np.ndarray = field(repr=False)

    def __post_init__(self):
        counts = np.asarray(self.counts, dtype=np.int64)
        counts.flags.writeable = False
        object.__setattr__(self, "counts", counts)
        if counts.shape != (2 * self.aperture + 1,):
            raise ValueError(
                f"counts must cover [-{self.aperture}, {self.aperture}]"
            )
        if not np.array_equal(counts, counts[::-1]):
            raise ValueError("weight function must satisfy w(m) == w(-m)")

    def weight(self, lag: int) -> int:
        """w(lag); zero outside [-L, L]."""
        if abs(lag) > self.aperture:
            return 0
        return int(self.counts[lag + self.aperture])

    def lags(self) -> np.ndarray:
        return np.arange(-self.aperture, self.aperture + 1)

    @property
    def n_sensors(self) -> int:
        """w(0) always equals the sensor count."""
        return int(self.counts[self.aperture])

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightTable):
            return NotImplemented
        return self.aperture == other.aperture and np.array_equal(
            self.counts, other.counts
        )

    __hash__ = None


@dataclass(frozen=True)
class CoarrayProfile:
    """Difference coarray, holes, and virtual-ULA extent of a weight table."""

    aperture: int
    dca: tuple[int, ...]
    holes: tuple[int, ...]  # positive side only; negative side by symmetry
    hole_free: bool
    central_ula_bound: int

    def __post_init__(self):
        if self.hole_free != (not self.holes):
            raise ValueError("hole_free must mirror emptiness of holes")


@dataclass(frozen=True)
class IndicatorSequence:
    """Binary occupancy over grid positions 0..L; bits[g] == 1 iff sensor at g."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if not self.bits:
            raise EmptyInput("indicator sequence must be non-empty")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("indicator bits must be 0 or 1")
        if self.bits[0] != 1 or self.bits[-1] != 1:
            raise ValueError("indicator sequence must start and end with 1")

    @property
    def n_sensors(self) -> int:
        return sum(self.bits)

    @property
    def aperture(self) -> int:
        return len(self.bits) - 1


def parse_positions_text(text: str) -> list[int]:
    """Parse the canonical textual array form into a raw integer list.

    Accepts bracketed or bare lists with space and/or comma separators,
    e.g. ``"[0 1 5 6 12 13 14 15 16]"`` or ``"0,1,5,6"``.
    """
    stripped = text.strip().strip("[]").strip()
    if not stripped:
        raise EmptyInput("no sensor positions given")
    tokens = [t for t in re.split(r"[\s,]+", stripped) if t]
    values = []
    for tok in tokens:
        if not _INT_TOKEN.match(tok):
            raise NonIntegerPosition(
                f"position {tok!r} is not an integer", detail={"token": tok}
            )
        values.append(int(tok))
    return values


def parse_and_normalize(raw, max_aperture: int | None = None) -> SensorArray:
    """Validate raw positions and normalize them to a zero-based reference.

    The minimum position is subtracted from every entry so the first sensor
    sits at the origin; the difference coarray is immune to this shift.
    Duplicates are a hard error rather than silently merged, since repeated
    entries in a validation tool almost always indicate a typo.

    Args:
        raw: Iterable of non-negative integer positions, in any order.
        max_aperture: Optional cap on the normalized aperture; defaults to
            :func:`default_max_aperture`.

    Raises:
        EmptyInput, NonIntegerPosition, NegativePosition, DuplicatePositions,
        ApertureExceeded.
    """
    values = list(raw)
    if not values:
        raise EmptyInput("no sensor positions given")
    cleaned = []
    for v in values:
        if isinstance(v, bool):
            raise NonIntegerPosition(f"position {v!r} is not an integer")
        if isinstance(v, (int, np.integer)):
            iv = int(v)
        elif isinstance(v, float) and v.is_integer():
            iv = int(v)
        else:
            raise NonIntegerPosition(
                f"position {v!r} is not an integer", detail={"value": repr(v)}
            )
        if iv < 0:
            raise NegativePosition(
                f"position {iv} is negative", detail={"value": iv}
            )
        cleaned.append(iv)
    if len(set(cleaned)) != len(cleaned):
        dupes = sorted({v for v in cleaned if cleaned.count(v) > 1})
        raise DuplicatePositions(
            f"duplicate position(s) {dupes}", detail={"duplicates": dupes}
        )
    low = min(cleaned)
    normalized = tuple(sorted(v - low for v in cleaned))
    cap = default_max_aperture() if max_aperture is None else max_aperture
    if normalized[-1] > cap:
        raise ApertureExceeded(
            f"aperture {normalized[-1]} exceeds cap {cap}",
            detail={"aperture": normalized[-1], "cap": cap},
        )
    return SensorArray(normalized)


def _require_analysis_size(arr: SensorArray):
    if arr.n_sensors < 2:
        raise TooFewSensors(
            "coarray analysis needs at least 2 sensors; a single sensor "
            "only generates lag 0"
        )


def difference_set(arr: SensorArray) -> np.ndarray:
    """All N^2 ordered pairwise differences a_i - a_j, sorted ascending.

    This is the raw difference multiset: lag 0 appears N times and every
    other lag once per generating pair.
    """
    _require_analysis_size(arr)
    pos = arr.as_array()
    return np.sort((pos[:, None] - pos[None, :]).ravel())


def weight_table(arr: SensorArray) -> WeightTable:
    """Weight function by direct pair counting.

    w(m) = number of ordered pairs at separation m, tabulated densely over
    [-L, L] with explicit zeros at holes.
    """
    _require_analysis_size(arr)
    pos = arr.as_array()
    L = arr.aperture
    diffs = (pos[:, None] - pos[None, :]).ravel()
    counts = np.bincount(diffs + L, minlength=2 * L + 1)
    return WeightTable(aperture=L, counts=counts)


def coarray_profile(wt: WeightTable) -> CoarrayProfile:
    """Difference coarray, holes, and central-ULA extent of a weight table.

    The central ULA bound is the largest Lc >= 0 such that every lag in
    [-Lc, Lc] is present; it caps the uniform degrees of freedom available
    to coarray-domain estimators.
    """
    L = wt.aperture
    present = wt.counts > 0
    lags = wt.lags()
    dca = tuple(int(m) for m in lags[present])
    holes = tuple(int(h) for h in range(1, L + 1) if not present[h + L])
    hole_free = len(dca) == 2 * L + 1
    bound = 0
    while bound + 1 <= L and present[L + bound + 1]:
        bound += 1
    return CoarrayProfile(
        aperture=L,
        dca=dca,
        holes=holes,
        hole_free=hole_free,
        central_ula_bound=bound,
    )


def indicator_sequence(arr: SensorArray) -> IndicatorSequence:
    """Binary occupancy string of length L+1 with ones at sensor positions."""
    _require_analysis_size(arr)
    bits = [0] * (arr.aperture + 1)
    for p in arr.positions:
        bits[p] = 1
    return IndicatorSequence(tuple(bits))


def weight_table_via_autocorrelation(ind: IndicatorSequence) -> WeightTable:
    """Weight function as the autocorrelation of the indicator sequence.

    w(m) = sum_g bits[g] * bits[g + m]. Independent computation route that
    must agree with :func:`weight_table` on the same array; the pair acts
    as a built-in cross-check.
    """
    bits = np.asarray(ind.bits, dtype=np.int64)
    counts = np.correlate(bits, bits, mode="full")
    return WeightTable(aperture=ind.aperture, counts=counts)
