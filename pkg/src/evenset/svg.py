"""Static circle diagrams: the c-gon with a subset's vertices joined."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .core import PitchClassSet

SIZE = 240
RADIUS = 96


def vertex(k: int, c: int) -> tuple[float, float]:
    # vertex k sits at 90 - 360 k / c degrees, y axis pointing down in SVG
    theta = math.radians(90.0 - 360.0 * k / c)
    return (
        round(SIZE / 2 + RADIUS * math.cos(theta), 3),
        round(SIZE / 2 - RADIUS * math.sin(theta), 3),
    )


def emit_svg_polygon(A: PitchClassSet, title: str | None = None, labels: bool = True) -> str:
    c = A.c
    pts = [vertex(k, c) for k in range(c)]
    fmt = lambda p: f"{p[0]:g},{p[1]:g}"
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f"<title>{escape(title or str(A))}</title>",
        f'<polygon class="universe" points="{" ".join(fmt(p) for p in pts)}" '
        'fill="none" stroke="#bbbbbb" stroke-width="1"/>',
    ]
    if len(A) >= 2:
        inner = " ".join(fmt(pts[a]) for a in A)
        lines.append(
            f'<polygon class="subset" points="{inner}" fill="#4a7bd0" fill-opacity="0.2" '
            'stroke="#1f4e9c" stroke-width="2"/>'
        )
    for k, (x, y) in enumerate(pts):
        on = k in A
        lines.append(
            f'<circle cx="{x:g}" cy="{y:g}" r="{5 if on else 3}" '
            f'fill="{"#1f4e9c" if on else "#ffffff"}" stroke="#333333" stroke-width="1"/>'
        )
        if labels:
            lx, ly = vertex(k, c)
            lx = SIZE / 2 + (lx - SIZE / 2) * 1.15
            ly = SIZE / 2 + (ly - SIZE / 2) * 1.15
            lines.append(
                f'<text x="{lx:.3f}" y="{ly + 4:.3f}" font-size="10" '
                f'text-anchor="middle">{k}</text>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
