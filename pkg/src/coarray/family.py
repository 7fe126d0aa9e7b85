"""Closed-form 2FRA family generation and batch robustness auditing.

The family is parameterized by (m*, p*) and written in interelement-spacing
(IES) notation as ``{1, p*, (1, p*+2)^{m*}, 1^{p*}}``; sensor positions are
the cumulative sums of that word with a leading zero. For a given sensor
count N the parameters satisfy N = 2 m* + p* + 3 and are chosen to maximize
the aperture L = 1 + 2 p* + m* (p* + 3).

Parameter-rule note: the rounding form ``m* = floor(N/4)`` sometimes quoted
for this family does not reproduce the reference configurations at
N = 9, 13, 17, ... (for N = 9 it yields [0,1,3,4,8,9,13,14,15] instead of
[0,1,5,6,12,13,14,15,16]). This module therefore derives m* by maximizing
the aperture with ties broken toward larger m*, equivalent to
``m* = floor((N-2)/4)``, which reproduces every reference row from N = 6
to N = 30 exactly. See the README for the full discrepancy write-up.

Auditing every generated member with :func:`~coarray.robustness.classify`
exposes a striking periodicity: starting at N = 10, blocks of four
HES-bearing sizes alternate with blocks of four HES-free sizes, so almost
half of the family's configurations are not truly two-fold redundant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arrays import SensorArray
from .errors import InvalidRange, NTooSmall, RangeNotContiguous, RangeTooLarge
from .robustness import Verdict, classify

MIN_FAMILY_SIZE = 6

#: Default upper bound for family scans; raise explicitly for larger sweeps.
DEFAULT_SCAN_CEILING = 500

#: First sensor count at which the 4-on/4-off HES periodicity is anchored.
PATTERN_START = 10


@dataclass(frozen=True)
class FamilyConfig2FRA:
    """One generated family member: parameters, IES word, and positions."""

    n_sensors: int
    m_star: int
    p_star: int
    ies_word: tuple[int, ...]
    positions: SensorArray

    def __post_init__(self):
        m, p = self.m_star, self.p_star
        expected = (1, p) + (1, p + 2) * m + (1,) * p
        if self.ies_word != expected:
            raise ValueError("IES word does not match (m*, p*) expansion")
        if len(self.ies_word) != self.n_sensors - 1:
            raise ValueError("IES word must have N-1 spacings")
        if self.n_sensors != 2 * m + p + 3:
            raise ValueError("N must equal 2*m + p + 3")


@dataclass(frozen=True)
class ScanRow:
    """Audit result for one family member."""

    n_sensors: int
    positions: tuple[int, ...]
    verdict: Verdict
    hes_positions: tuple[int, ...]
    aperture: int


@dataclass(frozen=True)
class PeriodicitySummary:
    """Aggregate findings over a contiguous scan range."""

    n_from: int
    n_to: int
    n_with_hes: int
    n_rows: int
    fraction_with_hes: Fraction
    pattern_verified: bool
    first_violation: int | None


def family_aperture(m: int, p: int) -> int:
    """Aperture of the member with parameters (m, p)."""
    return 1 + 2 * p + m * (p + 3)


def optimal_params(n: int) -> tuple[int, int]:
    """Aperture-maximizing (m*, p*) for a member with n sensors.

    Among all (m, p) with p = n - 2m - 3 >= 1, picks the m maximizing the
    aperture, breaking ties toward larger m; closed form m* = (n - 2) // 4.

    Raises:
        NTooSmall: for n < 6, below the smallest valid member.
    """
    if n < MIN_FAMILY_SIZE:
        raise NTooSmall(
            f"family members need at least {MIN_FAMILY_SIZE} sensors, got {n}",
            detail={"n": n, "min": MIN_FAMILY_SIZE},
        )
    m = (n - 2) // 4
    p = n - 2 * (m + 2) + 1
    return m, p


def generate_2fra(n: int) -> FamilyConfig2FRA:
    """Generate the n-sensor family member.

    Expands the IES word for (m*, p*) and accumulates it into positions
    with a leading zero.
    """
    m, p = optimal_params(n)
    ies = (1, p) + (1, p + 2) * m + (1,) * p
    positions = [0]
    for spacing in ies:
        positions.append(positions[-1] + spacing)
    return FamilyConfig2FRA(
        n_sensors=n,
        m_star=m,
        p_star=p,
        ies_word=ies,
        positions=SensorArray(tuple(positions)),
    )


def scan_family(
    n_from: int, n_to: int, *, ceiling: int = DEFAULT_SCAN_CEILING
) -> list[ScanRow]:
    """Generate and classify every member with n_from <= N <= n_to.

    Rows are ordered by N. The per-N work items are independent and safely
    parallelizable; this implementation is sequential and deterministic.
    """
    if n_from < MIN_FAMILY_SIZE:
        raise NTooSmall(
            f"scan must start at N >= {MIN_FAMILY_SIZE}, got {n_from}",
            detail={"n": n_from, "min": MIN_FAMILY_SIZE},
        )
    if n_to < n_from:
        raise InvalidRange(f"empty scan range {n_from}..{n_to}")
    if n_to > ceiling:
        raise RangeTooLarge(
            f"scan upper bound {n_to} exceeds ceiling {ceiling}",
            detail={"n_to": n_to, "ceiling": ceiling},
        )
    rows = []
    for n in range(n_from, n_to + 1):
        config = generate_2fra(n)
        report = classify(config.positions)
        rows.append(
            ScanRow(
                n_sensors=n,
                positions=config.positions.positions,
                verdict=report.verdict,
                hes_positions=report.hes_positions,
                aperture=config.positions.aperture,
            )
        )
    return rows


def expected_hes_presence(n: int) -> bool:
    """The periodic law: does the n-sensor member carry an HES?

    Members below the pattern anchor (6 <= N < 10) all carry one; from
    N = 10 on, blocks of four alternate (10-13 yes, 14-17 no, 18-21 yes,
    and so on).
    """
    if n < PATTERN_START:
        return True
    return ((n - PATTERN_START) // 4) % 2 == 0


def periodicity_report(rows: list[ScanRow]) -> PeriodicitySummary:
    """Check the 4-on/4-off HES pattern and tally the HES fraction.

    ``fraction_with_hes`` counts all given rows; ``pattern_verified``
    inspects only rows with N >= 10, where the alternating pattern is
    anchored. Rows must form a contiguous N range.

    Raises:
        RangeNotContiguous: if the rows skip or repeat any N.
    """
    if not rows:
        raise InvalidRange("periodicity report needs at least one row")
    ns = [r.n_sensors for r in rows]
    if ns != list(range(ns[0], ns[0] + len(ns))):
        raise RangeNotContiguous(
            "scan rows must cover a contiguous N range",
            detail={"got": ns},
        )
    n_hes = sum(1 for r in rows if r.hes_positions)
    first_violation = None
    for r in rows:
        if r.n_sensors < PATTERN_START:
            continue
        if bool(r.hes_positions) != expected_hes_presence(r.n_sensors):
            first_violation = r.n_sensors
            break
    return PeriodicitySummary(
        n_from=ns[0],
        n_to=ns[-1],
        n_with_hes=n_hes,
        n_rows=len(rows),
        fraction_with_hes=Fraction(n_hes, len(rows)),
        pattern_verified=first_violation is None,
        first_violation=first_violation,
    )
