"""Deterministic SVG rendering of weight functions and DOA spectra.

Hand-rolled string assembly instead of a plotting library: output bytes
depend only on the input data, imports stay light, and the stem-plot idiom
(vertical line plus marker per lag, symmetric axis, grid lines) is easy to
keep visually faithful to the conventional weight-function presentation.
"""

from __future__ import annotations

import numpy as np

from .arrays import WeightTable

#: X-axis tick spacing for weight-function plots, in lags.
TICK_SPACING_LAGS = 10

#: Display floor for normalized spectra, in dB.
SPECTRUM_FLOOR_DB = -50.0

_SERIES_COLORS = ["#1f6fb2", "#2a9d5c", "#d1495b", "#8a5cc0", "#c88719"]


def _svg_open(width: int, height: int) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}" '
        f'font-family="sans-serif" font-size="12">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def svg_stem_plot(
    wt: WeightTable,
    title: str = "Weight function",
    highlight_lags: tuple[int, ...] = (),
    width: int = 880,
    height: int = 440,
) -> str:
    """Stem plot of w(m) over [-L, L].

    ``highlight_lags`` marks (positive-side) lags of interest, e.g. holes
    introduced by a sensor failure; each is flagged at both +lag and -lag
    with a dashed marker line.
    """
    left, right, top, bottom = 60, 20, 40, 50
    plot_w = width - left - right
    plot_h = height - top - bottom
    L = wt.aperture
    max_w = max(int(wt.counts.max()), 1)

    def x_of(lag: float) -> float:
        return left + (lag + L) / (2 * L if L else 1) * plot_w

    def y_of(w: float) -> float:
        return top + plot_h - (w / (max_w * 1.08)) * plot_h

    parts = _svg_open(width, height)
    parts.append(
        f'<text x="{width / 2:.0f}" y="20" text-anchor="middle" '
        f'font-size="14">{title}</text>'
    )

    xticks = sorted(
        {t for t in range(-L, L + 1) if t % TICK_SPACING_LAGS == 0} | {-L, 0, L}
    )
    y_step = max(1, round(max_w / 8))
    yticks = list(range(0, max_w + 1, y_step))

    for t in yticks:
        y = y_of(t)
        parts.append(
            f'<line x1="{left}" y1="{_fmt(y)}" x2="{left + plot_w}" '
            f'y2="{_fmt(y)}" stroke="#dddddd" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{left - 8}" y="{_fmt(y + 4)}" text-anchor="end">{t}</text>'
        )
    for t in xticks:
        x = x_of(t)
        parts.append(
            f'<line x1="{_fmt(x)}" y1="{top}" x2="{_fmt(x)}" '
            f'y2="{top + plot_h}" stroke="#eeeeee" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_fmt(x)}" y="{top + plot_h + 18}" '
            f'text-anchor="middle">{t}</text>'
        )

    baseline = y_of(0)
    for lag in highlight_lags:
        for signed in {lag, -lag}:
            x = x_of(signed)
            parts.append(
                f'<line x1="{_fmt(x)}" y1="{top}" x2="{_fmt(x)}" '
                f'y2="{top + plot_h}" stroke="#d1495b" stroke-width="1.5" '
                f'stroke-dasharray="5,4"/>'
            )

    for lag, w in zip(wt.lags(), wt.counts):
        if w == 0:
            continue
        x = x_of(int(lag))
        y = y_of(int(w))
        parts.append(
            f'<line class="stem" x1="{_fmt(x)}" y1="{_fmt(baseline)}" '
            f'x2="{_fmt(x)}" y2="{_fmt(y)}" stroke="#1f6fb2" stroke-width="1.5"/>'
        )
        parts.append(
            f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="#1f6fb2"/>'
        )

    parts.append(
        f'<line x1="{left}" y1="{_fmt(baseline)}" x2="{left + plot_w}" '
        f'y2="{_fmt(baseline)}" stroke="#333333" stroke-width="1"/>'
    )
    parts.append(
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{top + plot_h}" '
        f'stroke="#333333" stroke-width="1"/>'
    )
    parts.append(
        f'<text x="{width / 2:.0f}" y="{height - 12}" '
        f'text-anchor="middle">Spatial lag</text>'
    )
    parts.append(
        f'<text x="16" y="{height / 2:.0f}" text-anchor="middle" '
        f'transform="rotate(-90 16 {height / 2:.0f})">Weight</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts)


def svg_spectra_overlay(
    series: list[tuple[str, np.ndarray, np.ndarray]],
    true_angles_deg: tuple[float, ...] = (),
    title: str = "Coarray MUSIC pseudospectra",
    width: int = 880,
    height: int = 460,
) -> str:
    """Overlay of normalized pseudospectra with true-angle markers.

    Each series is (label, grid_deg, spectrum_db); spectra are clipped at
    :data:`SPECTRUM_FLOOR_DB` for display.
    """
    left, right, top, bottom = 60, 20, 40, 50
    plot_w = width - left - right
    plot_h = height - top - bottom

    def x_of(angle: float) -> float:
        return left + (angle + 90.0) / 180.0 * plot_w

    def y_of(db: float) -> float:
        clipped = max(db, SPECTRUM_FLOOR_DB)
        return top + (0.0 - clipped) / (0.0 - SPECTRUM_FLOOR_DB) * plot_h

    parts = _svg_open(width, height)
    parts.append(
        f'<text x="{width / 2:.0f}" y="20" text-anchor="middle" '
        f'font-size="14">{title}</text>'
    )
    for t in range(-80, 81, 20):
        x = x_of(t)
        parts.append(
            f'<line x1="{_fmt(x)}" y1="{top}" x2="{_fmt(x)}" '
            f'y2="{top + plot_h}" stroke="#eeeeee" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_fmt(x)}" y="{top + plot_h + 18}" '
            f'text-anchor="middle">{t}</text>'
        )
    for db in range(0, int(SPECTRUM_FLOOR_DB) - 1, -10):
        y = y_of(db)
        parts.append(
            f'<line x1="{left}" y1="{_fmt(y)}" x2="{left + plot_w}" '
            f'y2="{_fmt(y)}" stroke="#dddddd" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{left - 8}" y="{_fmt(y + 4)}" text-anchor="end">{db}</text>'
        )

    for angle in true_angles_deg:
        x = x_of(float(angle))
        parts.append(
            f'<line class="truth" x1="{_fmt(x)}" y1="{top}" x2="{_fmt(x)}" '
            f'y2="{top + plot_h}" stroke="#999999" stroke-width="1" '
            f'stroke-dasharray="3,4"/>'
        )

    for i, (label, grid, spectrum_db) in enumerate(series):
        color = _SERIES_COLORS[i % len(_SERIES_COLORS)]
        points = " ".join(
            f"{_fmt(x_of(float(a)))},{_fmt(y_of(float(v))) }"
            for a, v in zip(grid, spectrum_db)
        )
        parts.append(
            f'<polyline class="series" fill="none" stroke="{color}" '
            f'stroke-width="1.5" points="{points}"/>'
        )
        ly = top + 16 + 16 * i
        parts.append(
            f'<line x1="{left + plot_w - 150}" y1="{ly - 4}" '
            f'x2="{left + plot_w - 120}" y2="{ly - 4}" stroke="{color}" '
            f'stroke-width="2"/>'
        )
        parts.append(f'<text x="{left + plot_w - 112}" y="{ly}">{label}</text>')

    parts.append(
        f'<line x1="{left}" y1="{top + plot_h}" x2="{left + plot_w}" '
        f'y2="{top + plot_h}" stroke="#333333" stroke-width="1"/>'
    )
    parts.append(
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{top + plot_h}" '
        f'stroke="#333333" stroke-width="1"/>'
    )
    parts.append(
        f'<text x="{width / 2:.0f}" y="{height - 12}" '
        f'text-anchor="middle">Angle (degrees)</text>'
    )
    parts.append(
        f'<text x="16" y="{height / 2:.0f}" text-anchor="middle" '
        f'transform="rotate(-90 16 {height / 2:.0f})">Normalized power (dB)</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts)
