"""Minimal deterministic SVG line plots.

Hand-rolled polylines instead of a plotting library so repeated runs with
the same inputs produce byte-identical files.  CSV output remains the
artifact of record; these plots are a quick visual check only.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

__all__ = ["write_line_plot"]

WIDTH, HEIGHT = 720, 480
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 72, 24, 36, 56
PALETTE = ["#0072b2", "#d55e00", "#009e73", "#cc79a7", "#e69f00", "#56b4e9", "#949494"]
N_TICKS = 5


def _ticks(lo: float, hi: float) -> np.ndarray:
    if hi == lo:
        hi = lo + 1.0
    return np.linspace(lo, hi, N_TICKS)


def write_line_plot(
    path: str,
    x: Sequence[float],
    series: Sequence[Sequence[float]],
    labels: Sequence[str],
    title: str,
    xlabel: str,
    ylabel: str,
) -> None:
    """Write one SVG with a shared x axis and one polyline per series."""
    x = np.asarray(x, dtype=float)
    ys = [np.asarray(s, dtype=float) for s in series]
    x_lo, x_hi = float(x.min()), float(x.max())
    y_lo = min(float(s.min()) for s in ys)
    y_hi = max(float(s.max()) for s in ys)
    if y_hi == y_lo:
        y_lo, y_hi = y_lo - 0.5, y_hi + 0.5
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    pad = 0.05 * (y_hi - y_lo)
    y_lo, y_hi = y_lo - pad, y_hi + pad

    inner_w = WIDTH - MARGIN_L - MARGIN_R
    inner_h = HEIGHT - MARGIN_T - MARGIN_B

    def px(v: float) -> float:
        return MARGIN_L + (v - x_lo) / (x_hi - x_lo) * inner_w

    def py(v: float) -> float:
        return MARGIN_T + (y_hi - v) / (y_hi - y_lo) * inner_h

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.1f}" y="22" text-anchor="middle" '
        f'font-family="sans-serif" font-size="15">{title}</text>',
    ]
    axis_color = "#333333"
    out.append(
        f'<rect x="{MARGIN_L}" y="{MARGIN_T}" width="{inner_w}" height="{inner_h}" '
        f'fill="none" stroke="{axis_color}" stroke-width="1"/>'
    )
    for tick in _ticks(x_lo, x_hi):
        tx = px(tick)
        out.append(
            f'<line x1="{tx:.2f}" y1="{MARGIN_T + inner_h}" x2="{tx:.2f}" '
            f'y2="{MARGIN_T + inner_h + 5}" stroke="{axis_color}" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{tx:.2f}" y="{MARGIN_T + inner_h + 20}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{tick:.4g}</text>'
        )
    for tick in _ticks(y_lo, y_hi):
        ty = py(tick)
        out.append(
            f'<line x1="{MARGIN_L - 5}" y1="{ty:.2f}" x2="{MARGIN_L}" y2="{ty:.2f}" '
            f'stroke="{axis_color}" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{MARGIN_L - 9}" y="{ty + 4:.2f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{tick:.4g}</text>'
        )
    out.append(
        f'<text x="{MARGIN_L + inner_w / 2:.1f}" y="{HEIGHT - 16}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13">{xlabel}</text>'
    )
    out.append(
        f'<text x="18" y="{MARGIN_T + inner_h / 2:.1f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13" '
        f'transform="rotate(-90 18 {MARGIN_T + inner_h / 2:.1f})">{ylabel}</text>'
    )
    for i, (y, label) in enumerate(zip(ys, labels)):
        color = PALETTE[i % len(PALETTE)]
        points = " ".join(f"{px(a):.2f},{py(b):.2f}" for a, b in zip(x, y))
        out.append(
            f'<polyline points="{points}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
        ly = MARGIN_T + 14 + 16 * i
        lx = MARGIN_L + inner_w - 150
        out.append(
            f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 22}" y2="{ly - 4}" '
            f'stroke="{color}" stroke-width="1.5"/>'
        )
        out.append(
            f'<text x="{lx + 28}" y="{ly}" font-family="sans-serif" font-size="11">{label}</text>'
        )
    out.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(out) + "\n")
