"""Minimal self-contained SVG line plots (no plotting dependency).

Produces a fixed-size 2x2 panel figure with axes, tick labels and one
curve per panel.  All coordinates are formatted with a fixed precision so
repeated renders of the same data are byte-identical.
"""

from __future__ import annotations

import math

__all__ = ["svg_panels"]

_PANEL_W = 430
_PANEL_H = 320
_MARGIN_L = 62
_MARGIN_R = 16
_MARGIN_T = 34
_MARGIN_B = 44


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _ticks(lo: float, hi: float, n: int = 5):
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / (n - 1)
    mag = 10.0 ** math.floor(math.log10(raw))
    for mult in (1.0, 2.0, 2.5, 5.0, 10.0):
        if raw <= mult * mag:
            step = mult * mag
            break
    start = math.ceil(lo / step) * step
    ticks = []
    t = start
    while t <= hi + 1e-12 * abs(step):
        ticks.append(0.0 if abs(t) < 1e-12 * abs(step) else t)
        t += step
    return ticks


def _panel(x, y, title, ox, oy):
    """Render one panel (axes, ticks, polyline) at canvas offset (ox, oy)."""
    x_lo, x_hi = min(x), max(x)
    y_lo, y_hi = min(y), max(y)
    if y_hi == y_lo:
        y_lo, y_hi = y_lo - 1.0, y_hi + 1.0
    pad = 0.05 * (y_hi - y_lo)
    y_lo, y_hi = y_lo - pad, y_hi + pad
    inner_w = _PANEL_W - _MARGIN_L - _MARGIN_R
    inner_h = _PANEL_H - _MARGIN_T - _MARGIN_B

    def sx(v):
        return ox + _MARGIN_L + inner_w * (v - x_lo) / (x_hi - x_lo)

    def sy(v):
        return oy + _MARGIN_T + inner_h * (1.0 - (v - y_lo) / (y_hi - y_lo))

    parts = []
    parts.append(
        f'<rect x="{_fmt(ox + _MARGIN_L)}" y="{_fmt(oy + _MARGIN_T)}" '
        f'width="{_fmt(inner_w)}" height="{_fmt(inner_h)}" '
        'fill="none" stroke="#444444" stroke-width="1"/>'
    )
    parts.append(
        f'<text x="{_fmt(ox + _PANEL_W / 2)}" y="{_fmt(oy + 20)}" '
        'font-family="monospace" font-size="13" text-anchor="middle">'
        f"{title}</text>"
    )
    for t in _ticks(x_lo, x_hi):
        px = sx(t)
        y0 = oy + _PANEL_H - _MARGIN_B
        parts.append(
            f'<line x1="{_fmt(px)}" y1="{_fmt(y0)}" x2="{_fmt(px)}" '
            f'y2="{_fmt(y0 + 4)}" stroke="#444444" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_fmt(px)}" y="{_fmt(y0 + 17)}" font-family="monospace" '
            f'font-size="10" text-anchor="middle">{t:g}</text>'
        )
    for t in _ticks(y_lo, y_hi):
        py = sy(t)
        x0 = ox + _MARGIN_L
        parts.append(
            f'<line x1="{_fmt(x0 - 4)}" y1="{_fmt(py)}" x2="{_fmt(x0)}" '
            f'y2="{_fmt(py)}" stroke="#444444" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_fmt(x0 - 7)}" y="{_fmt(py + 3)}" font-family="monospace" '
            f'font-size="10" text-anchor="end">{t:g}</text>'
        )
    pts = " ".join(f"{_fmt(sx(a))},{_fmt(sy(b))}" for a, b in zip(x, y))
    parts.append(
        f'<polyline points="{pts}" fill="none" stroke="#1f5fa8" stroke-width="1.5"/>'
    )
    return "\n".join(parts)


def svg_panels(panels, caption="") -> str:
    """Render up to four (x, y, title) triples as a self-contained 2x2 SVG."""
    if not panels or len(panels) > 4:
        raise ValueError("svg_panels needs between 1 and 4 panels")
    width = _PANEL_W * 2
    height = _PANEL_H * 2 + (22 if caption else 0)
    body = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    for i, (x, y, title) in enumerate(panels):
        ox = (i % 2) * _PANEL_W
        oy = (i // 2) * _PANEL_H
        body.append(_panel(list(map(float, x)), list(map(float, y)), title, ox, oy))
    if caption:
        body.append(
            f'<text x="{width / 2:.2f}" y="{height - 8:.2f}" font-family="monospace" '
            f'font-size="12" text-anchor="middle">{caption}</text>'
        )
    body.append("</svg>")
    return "\n".join(body) + "\n"
