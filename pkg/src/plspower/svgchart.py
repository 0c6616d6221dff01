"""Self-contained SVG rendering of trade-off curves, plus CSV export.

Colors come from the Okabe-Ito colorblind-safe palette (Okabe & Ito,
2008): blue #0072B2 for the curve, vermillion #D55E00 for the dashed
reference lines, black text.
"""

from __future__ import annotations

from .core import CurveSeries

__all__ = [
    "CURVE_COLOR",
    "REFERENCE_COLOR",
    "TEXT_COLOR",
    "WIDTH",
    "HEIGHT",
    "PLOT_BOX",
    "axis_bounds",
    "data_to_px",
    "curve_to_svg",
    "curve_to_csv",
]

CURVE_COLOR = "#0072B2"
REFERENCE_COLOR = "#D55E00"
TEXT_COLOR = "#000000"

WIDTH, HEIGHT = 720, 480
# left, top, right, bottom pixel edges of the data area
PLOT_BOX = (80.0, 24.0, 700.0, 420.0)

_AXIS_LABELS = {
    "a_priori": ("MDES", "Sample size N"),
    "sensitivity": ("Sample size N", "MDES"),
}


def _fmt(value: float) -> str:
    return f"{value:g}"


def axis_bounds(series: CurveSeries) -> tuple[float, float, float, float]:
    """(xmin, xmax, ymin, ymax) covering the points and the reference."""
    xs = [p[0] for p in series.points] + [series.reference[0]]
    ys = [p[1] for p in series.points] + [series.reference[1]]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    if xmin == xmax:
        xmin, xmax = xmin - 0.5, xmax + 0.5
    if ymin == ymax:
        ymin, ymax = ymin - 0.5, ymax + 0.5
    return xmin, xmax, ymin, ymax


def data_to_px(series: CurveSeries, x: float, y: float) -> tuple[float, float]:
    """Map a data point into pixel coordinates (y axis points up)."""
    xmin, xmax, ymin, ymax = axis_bounds(series)
    left, top, right, bottom = PLOT_BOX
    px = left + (x - xmin) / (xmax - xmin) * (right - left)
    py = bottom - (y - ymin) / (ymax - ymin) * (bottom - top)
    return px, py


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    return [lo + i * (hi - lo) / (count - 1) for i in range(count)]


def curve_to_svg(series: CurveSeries, title: str | None = None) -> str:
    xmin, xmax, ymin, ymax = axis_bounds(series)
    left, top, right, bottom = PLOT_BOX
    xlabel, ylabel = _AXIS_LABELS[series.mode]
    ref_x, ref_y = series.reference
    ref_px, ref_py = data_to_px(series, ref_x, ref_y)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="#FFFFFF"/>',
    ]
    if title:
        parts.append(
            f'<text x="{(left + right) / 2:g}" y="16" text-anchor="middle" '
            f'font-family="sans-serif" font-size="14" '
            f'fill="{TEXT_COLOR}">{title}</text>')

    # frame
    parts.append(
        f'<rect x="{left:g}" y="{top:g}" width="{right - left:g}" '
        f'height="{bottom - top:g}" fill="none" stroke="{TEXT_COLOR}"/>')

    # ticks and labels
    for tx in _ticks(xmin, xmax):
        px, _ = data_to_px(series, tx, ymin)
        parts.append(
            f'<line x1="{px:.2f}" y1="{bottom:g}" x2="{px:.2f}" '
            f'y2="{bottom + 6:g}" stroke="{TEXT_COLOR}"/>')
        parts.append(
            f'<text x="{px:.2f}" y="{bottom + 20:g}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12" '
            f'fill="{TEXT_COLOR}">{_fmt(tx)}</text>')
    for ty in _ticks(ymin, ymax):
        _, py = data_to_px(series, xmin, ty)
        parts.append(
            f'<line x1="{left - 6:g}" y1="{py:.2f}" x2="{left:g}" '
            f'y2="{py:.2f}" stroke="{TEXT_COLOR}"/>')
        parts.append(
            f'<text x="{left - 10:g}" y="{py:.2f}" text-anchor="end" '
            f'dominant-baseline="middle" font-family="sans-serif" '
            f'font-size="12" fill="{TEXT_COLOR}">{_fmt(ty)}</text>')

    # axis titles
    parts.append(
        f'<text x="{(left + right) / 2:g}" y="{HEIGHT - 14}" '
        f'text-anchor="middle" font-family="sans-serif" font-size="13" '
        f'fill="{TEXT_COLOR}">{xlabel}</text>')
    parts.append(
        f'<text x="22" y="{(top + bottom) / 2:g}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13" fill="{TEXT_COLOR}" '
        f'transform="rotate(-90 22 {(top + bottom) / 2:g})">{ylabel}</text>')

    # dashed reference lines meeting at the user's point
    parts.append(
        f'<line x1="{ref_px:.2f}" y1="{bottom:g}" x2="{ref_px:.2f}" '
        f'y2="{ref_py:.2f}" stroke="{REFERENCE_COLOR}" stroke-width="1.5" '
        f'stroke-dasharray="6 4" class="reference-v"/>')
    parts.append(
        f'<line x1="{left:g}" y1="{ref_py:.2f}" x2="{ref_px:.2f}" '
        f'y2="{ref_py:.2f}" stroke="{REFERENCE_COLOR}" stroke-width="1.5" '
        f'stroke-dasharray="6 4" class="reference-h"/>')

    # the curve itself
    coords = " ".join(
        f"{px:.2f},{py:.2f}"
        for px, py in (data_to_px(series, x, y) for x, y in series.points))
    parts.append(
        f'<polyline points="{coords}" fill="none" stroke="{CURVE_COLOR}" '
        f'stroke-width="2"/>')

    parts.append(
        f'<circle cx="{ref_px:.2f}" cy="{ref_py:.2f}" r="4" '
        f'fill="{REFERENCE_COLOR}"/>')
    parts.append(
        f'<text x="{ref_px + 8:.2f}" y="{ref_py - 8:.2f}" '
        f'font-family="sans-serif" font-size="12" fill="{TEXT_COLOR}">'
        f'({_fmt(ref_x)}, {_fmt(ref_y)})</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def curve_to_csv(series: CurveSeries) -> str:
    """Header `x,y` then one full-precision row per curve point."""
    lines = ["x,y"]
    for x, y in series.points:
        xs = repr(float(x))
        ys = str(y) if isinstance(y, int) else repr(float(y))
        lines.append(f"{xs},{ys}")
    return "\n".join(lines) + "\n"
