"""Single serialization layer for every machine-readable output format.

The CLI and the HTTP service both call these functions, so identical inputs
produce byte-identical JSON on either surface. Field names in the payloads
are part of the public API contract consumed by the web UI and scripts.
"""

from __future__ import annotations

import io
import csv
import json
from fractions import Fraction

from .arrays import SensorArray, CoarrayProfile, WeightTable, coarray_profile, weight_table
from .family import FamilyConfig2FRA, PeriodicitySummary, ScanRow
from .music import DOAResult
from .robustness import RobustnessReport

#: Decimal places kept for angles and spectrum values in JSON payloads.
FLOAT_DECIMALS = 6


def to_json(payload) -> str:
    """Canonical JSON rendering used by both the CLI and the service."""
    return json.dumps(payload, indent=2)


def _round(x: float) -> float:
    return round(float(x), FLOAT_DECIMALS)


def _fraction_payload(num: int, den: int) -> dict:
    return {"num": num, "den": den}


def weights_payload(
    arr: SensorArray,
    wt: WeightTable | None = None,
    profile: CoarrayProfile | None = None,
) -> dict:
    """Weight function with its coarray profile; one entry per lag in [-L, L]."""
    wt = wt if wt is not None else weight_table(arr)
    profile = profile if profile is not None else coarray_profile(wt)
    return {
        "positions": list(arr.positions),
        "n_sensors": arr.n_sensors,
        "aperture": arr.aperture,
        "entries": [
            {"lag": int(lag), "weight": int(w)}
            for lag, w in zip(wt.lags(), wt.counts)
        ],
        "dca": list(profile.dca),
        "holes": list(profile.holes),
        "hole_free": profile.hole_free,
        "central_ula_bound": profile.central_ula_bound,
    }


def report_payload(report: RobustnessReport) -> dict:
    """Robustness verdict in the documented shape.

    The fragility ratio is kept unreduced (essential count over sensor
    count) so the 2/N comparison stays legible.
    """
    return {
        "verdict": report.verdict.value,
        "ddb": report.ddb_satisfied,
        "hes": list(report.hes_positions),
        "essential": list(report.essential_positions),
        "fragility": _fraction_payload(
            len(report.essential_positions), report.n_sensors
        ),
        "failures": [
            {"removed": o.removed_position, "holes": list(o.residual_holes)}
            for o in report.failure_outcomes
        ],
    }


def family_payload(config: FamilyConfig2FRA, report: RobustnessReport) -> dict:
    return {
        "n": config.n_sensors,
        "m": config.m_star,
        "p": config.p_star,
        "ies": list(config.ies_word),
        "positions": list(config.positions.positions),
        "aperture": config.positions.aperture,
        "verdict": report.verdict.value,
        "hes": list(report.hes_positions),
    }


def scan_row_payload(row: ScanRow) -> dict:
    return {
        "n": row.n_sensors,
        "positions": list(row.positions),
        "verdict": row.verdict.value,
        "hes": list(row.hes_positions),
        "aperture": row.aperture,
    }


def periodicity_payload(summary: PeriodicitySummary) -> dict:
    frac: Fraction = summary.fraction_with_hes
    return {
        "n_from": summary.n_from,
        "n_to": summary.n_to,
        "rows": summary.n_rows,
        "with_hes": summary.n_with_hes,
        "fraction_with_hes": _fraction_payload(frac.numerator, frac.denominator),
        "pattern_verified": summary.pattern_verified,
        "first_violation": summary.first_violation,
    }


def scan_rows_payload(rows: list[ScanRow]) -> list[dict]:
    """The scan export artifact: a bare array of ScanRow objects."""
    return [scan_row_payload(r) for r in rows]


def scan_payload(rows: list[ScanRow], summary: PeriodicitySummary | None) -> dict:
    """Service response: the row export plus the periodicity summary."""
    return {
        "rows": scan_rows_payload(rows),
        "summary": periodicity_payload(summary) if summary is not None else None,
    }


def doa_payload(result: DOAResult) -> dict:
    """DOA result with the spectrum in dB normalized to a 0 dB peak."""
    return {
        "grid": [_round(a) for a in result.grid_deg],
        "spectrum_db": [_round(v) for v in result.spectrum_db()],
        "peaks": [_round(p) for p in result.detected_peaks_deg],
        "matched": [[_round(t), _round(d)] for t, d in result.matched],
        "missed": [_round(t) for t in result.missed],
        "ghosts": [_round(d) for d in result.ghosts],
        "rmse": _round(result.rmse_deg) if result.rmse_deg is not None else None,
        "k_sources": result.k_sources,
        "central_ula_bound": result.central_ula_bound,
    }


def doa_run_payload(
    arr: SensorArray,
    source_angles_deg,
    snr_db: float,
    n_snapshots: int,
    rng_seed: int,
    grid_step_deg: float,
    failure_sets,
    results: list[DOAResult],
) -> dict:
    """Scenario echo plus one result per failure set, aligned by index."""
    return {
        "scenario": {
            "array": list(arr.positions),
            "sources": [_round(a) for a in source_angles_deg],
            "snr_db": float(snr_db),
            "snapshots": int(n_snapshots),
            "seed": int(rng_seed),
            "grid_step": float(grid_step_deg),
        },
        "results": [
            {"failed": list(fs), **doa_payload(res)}
            for fs, res in zip(failure_sets, results)
        ],
    }


def weights_csv(wt: WeightTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["lag", "weight"])
    for lag, w in zip(wt.lags(), wt.counts):
        writer.writerow([int(lag), int(w)])
    return buf.getvalue()


def scan_csv(rows: list[ScanRow]) -> str:
    """Scan export: ``N,positions,verdict,hes,aperture`` with semicolon-joined lists."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["N", "positions", "verdict", "hes", "aperture"])
    for row in rows:
        writer.writerow(
            [
                row.n_sensors,
                ";".join(str(p) for p in row.positions),
                row.verdict.value,
                ";".join(str(p) for p in row.hes_positions),
                row.aperture,
            ]
        )
    return buf.getvalue()
