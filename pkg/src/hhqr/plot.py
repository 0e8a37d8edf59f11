"""Log-log scatter of a delta sweep written as a standalone SVG string."""
from __future__ import annotations

import math

WIDTH, HEIGHT = 800, 600
LEFT, RIGHT, TOP, BOTTOM = 90, 30, 40, 70
X_DECADES = (-16, -1)
Y_DECADES = (-17, -6)
# binary32 errors sit roughly nine decades higher.
Y_DECADES_BINARY32 = (-9, -2)

PLOT_W = WIDTH - LEFT - RIGHT
PLOT_H = HEIGHT - TOP - BOTTOM


def x_to_px(delta: float) -> float:
    lo, hi = X_DECADES
    return LEFT + (math.log10(delta) - lo) / (hi - lo) * PLOT_W


def y_to_px(err: float, y_decades=Y_DECADES) -> float:
    lo, hi = y_decades
    e = min(max(err, 10.0**lo), 10.0**hi)
    return TOP + (hi - math.log10(e)) / (hi - lo) * PLOT_H


def px_to_x(px: float) -> float:
    lo, hi = X_DECADES
    return 10 ** (lo + (px - LEFT) / PLOT_W * (hi - lo))


def px_to_y(py: float, y_decades=Y_DECADES) -> float:
    lo, hi = y_decades
    return 10 ** (hi - (py - TOP) / PLOT_H * (hi - lo))


def _f(v: float) -> str:
    return f"{v:.6f}"


def sweep_svg(records, title: str = "Householder QR backward error",
              y_decades=Y_DECADES) -> str:
    """Stable errors as circles, wrong-sign errors as asterisks, against delta.

    Errors outside ``y_decades`` are clamped onto the nearest horizontal axis.
    """
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" xmlns:xlink="http://www.w3.org/1999/xlink" '
        f'width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        "<defs>",
        '<g id="asterisk" stroke="#d62728" stroke-width="1.5">'
        '<path d="M-6,0H6M0,-6V6M-4.2,-4.2L4.2,4.2M-4.2,4.2L4.2,-4.2"/></g>',
        "</defs>",
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2}" y="24" text-anchor="middle" font-size="16">{title}</text>',
        '<g class="grid" stroke="#dddddd" stroke-width="1">',
    ]
    for d in range(X_DECADES[0], X_DECADES[1] + 1):
        x = x_to_px(10.0**d)
        out.append(f'<line x1="{_f(x)}" y1="{TOP}" x2="{_f(x)}" y2="{TOP + PLOT_H}"/>')
    for d in range(y_decades[0], y_decades[1] + 1):
        y = y_to_px(10.0**d, y_decades)
        out.append(f'<line x1="{LEFT}" y1="{_f(y)}" x2="{LEFT + PLOT_W}" y2="{_f(y)}"/>')
    out.append("</g>")
    out.append(
        f'<rect x="{LEFT}" y="{TOP}" width="{PLOT_W}" height="{PLOT_H}" fill="none" stroke="black"/>'
    )
    out.append('<g class="ticks" font-size="11">')
    for d in range(X_DECADES[0], X_DECADES[1] + 1):
        x = x_to_px(10.0**d)
        out.append(f'<text x="{_f(x)}" y="{TOP + PLOT_H + 18}" text-anchor="middle">1e{d}</text>')
    for d in range(y_decades[0], y_decades[1] + 1):
        y = y_to_px(10.0**d, y_decades)
        out.append(f'<text x="{LEFT - 8}" y="{_f(y + 4)}" text-anchor="end">1e{d}</text>')
    out.append("</g>")
    out.append(
        f'<text x="{LEFT + PLOT_W / 2}" y="{HEIGHT - 20}" text-anchor="middle" font-size="14">'
        "delta</text>"
    )
    out.append(
        f'<text x="20" y="{TOP + PLOT_H / 2}" text-anchor="middle" font-size="14" '
        f'transform="rotate(-90 20 {TOP + PLOT_H / 2})">||A - QR||_2</text>'
    )

    out.append('<g class="series stable" fill="none" stroke="#1f77b4" stroke-width="1.5">')
    for r in records:
        out.append(
            f'<circle class="marker stable" cx="{_f(x_to_px(r.delta))}" '
            f'cy="{_f(y_to_px(r.err_stable, y_decades))}" r="5"/>'
        )
    out.append("</g>")
    out.append('<g class="series wrong">')
    for r in records:
        out.append(
            f'<use class="marker wrong" xlink:href="#asterisk" '
            f'x="{_f(x_to_px(r.delta))}" y="{_f(y_to_px(r.err_wrong, y_decades))}"/>'
        )
    out.append("</g>")

    lx, ly = LEFT + 20, TOP + 20
    out += [
        '<g class="legend" font-size="12">',
        f'<circle cx="{lx}" cy="{ly}" r="5" fill="none" stroke="#1f77b4" stroke-width="1.5"/>',
        f'<text x="{lx + 14}" y="{ly + 4}">stable sign, sigma = -sgn(x1)</text>',
        f'<use xlink:href="#asterisk" x="{lx}" y="{ly + 20}"/>',
        f'<text x="{lx + 14}" y="{ly + 24}">wrong sign, sigma = +sgn(x1)</text>',
        f'<text x="{lx - 6}" y="{ly + 44}" fill="#555555">'
        f"errors at or below 1e{y_decades[0]} are drawn on the bottom axis</text>",
        "</g>",
        "</svg>",
    ]
    return "\n".join(out) + "\n"
