"""SVG rendering of scenes.

This is the only place where rationals are approximated: coordinates are
written with 9 significant digits and never read back into the geometry.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exceptions import ViewportError
from .geometry import Line
from .model import Guard, Polygon

PRECISION = 9
LAYERS = ("polygon", "cones", "cells", "witnesses")
_PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
            "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")


def fmt(value) -> str:
    text = f"{float(value):.{PRECISION}g}"
    return "0" if text == "-0" else text


@dataclass(frozen=True)
class RenderSpec:
    viewport: tuple          # (xmin, ymin, xmax, ymax), exact
    layers: tuple = ("polygon", "cones")
    width: int = 900

    def __post_init__(self):
        unknown = set(self.layers) - set(LAYERS)
        if unknown:
            raise ValueError(f"unknown layers: {', '.join(sorted(unknown))}")
        x0, y0, x1, y1 = self.viewport
        if not (x0 < x1 and y0 < y1):
            raise ViewportError("viewport must have positive width and height")

    @classmethod
    def around(cls, P: Polygon, layers=("polygon", "cones"), pad=Fraction(1, 10)) -> "RenderSpec":
        x0, y0, x1, y1 = P.bbox()
        dx, dy = (x1 - x0) * pad, (y1 - y0) * pad
        return cls((x0 - dx, y0 - dy, x1 + dx, y1 + dy), tuple(layers))


def _wedge_points(g: Guard, radius: float) -> list[tuple[float, float]]:
    ax, ay = float(g.apex.x), float(g.apex.y)
    a1 = math.atan2(float(g.d1.dy), float(g.d1.dx))
    a2 = math.atan2(float(g.d2.dy), float(g.d2.dx))
    sweep = (a2 - a1) % (2 * math.pi)
    if sweep == 0:
        sweep = 2 * math.pi
    steps = max(2, int(math.ceil(sweep / (math.pi / 8))) + 1)
    pts = [(ax, ay)]
    for s in range(steps):
        ang = a1 + sweep * s / (steps - 1)
        pts.append((ax + radius * math.cos(ang), ay + radius * math.sin(ang)))
    return pts


def _line_segment(line: Line, box) -> Optional[tuple]:
    x0, y0, x1, y1 = (float(v) for v in box)
    a, b, c = line.a, line.b, line.c
    pts = []
    if b != 0:
        for x in (x0, x1):
            pts.append((x, (c - a * x) / b))
    if a != 0:
        for y in (y0, y1):
            pts.append(((c - b * y) / a, y))
    inside = [p for p in pts if x0 - 1e-9 <= p[0] <= x1 + 1e-9 and y0 - 1e-9 <= p[1] <= y1 + 1e-9]
    if len(inside) < 2:
        return None
    inside.sort()
    return inside[0], inside[-1]


def render_svg(P: Polygon, guards: Sequence[Guard] = (), spec: Optional[RenderSpec] = None,
               witnesses: Sequence[tuple] = (), lines: Sequence[Line] = ()) -> bytes:
    """Deterministic SVG for a scene.

    ``witnesses`` is a sequence of point pairs; each pair is drawn as two
    markers joined by a segment.
    """
    spec = spec or RenderSpec.around(P)
    x0, y0, x1, y1 = spec.viewport
    px0, py0, px1, py1 = P.bbox()
    if px0 < x0 or py0 < y0 or px1 > x1 or py1 > y1:
        raise ViewportError("viewport does not contain the polygon")
    vw, vh = float(x1 - x0), float(y1 - y0)
    height = max(1, int(round(spec.width * vh / vw)))
    stroke = fmt(max(vw, vh) / 600)
    marker = fmt(max(vw, vh) / 150)
    # flip y so the picture reads like a plot
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" height="{height}" '
        f'viewBox="{fmt(x0)} {fmt(-y1)} {fmt(vw)} {fmt(vh)}">',
        '<defs><clipPath id="viewport">'
        f'<rect x="{fmt(x0)}" y="{fmt(-y1)}" width="{fmt(vw)}" height="{fmt(vh)}"/>'
        '</clipPath></defs>',
        '<g>',
    ]

    def xy(p) -> str:
        return f"{fmt(p[0])},{fmt(-p[1])}"

    if "cones" in spec.layers:
        cx, cy = float(x0 + x1) / 2, float(y0 + y1) / 2
        diag = math.hypot(vw, vh)
        out.append('<g class="cones" clip-path="url(#viewport)">')
        for k, g in enumerate(guards):
            far = math.hypot(float(g.apex.x) - cx, float(g.apex.y) - cy)
            pts = _wedge_points(g, 4 * (diag + far))
            colour = _PALETTE[k % len(_PALETTE)]
            out.append(f'<polygon class="wedge" data-key="{g.key}" points="{" ".join(xy(p) for p in pts)}" '
                       f'fill="{colour}" fill-opacity="0.18" stroke="{colour}" stroke-width="{stroke}"/>')
        out.append('</g>')
    if "cells" in spec.layers:
        out.append('<g class="cells" stroke="#999" stroke-dasharray="4,3" '
                   f'stroke-width="{stroke}">')
        for line in lines:
            seg = _line_segment(line, spec.viewport)
            if seg is not None:
                out.append(f'<line x1="{fmt(seg[0][0])}" y1="{fmt(-seg[0][1])}" '
                           f'x2="{fmt(seg[1][0])}" y2="{fmt(-seg[1][1])}"/>')
        out.append('</g>')
    if "polygon" in spec.layers:
        d = "M " + " L ".join(xy(p) for p in P.vertices) + " Z"
        out.append(f'<path class="polygon" d="{d}" fill="none" stroke="black" '
                   f'stroke-width="{fmt(2 * float(stroke))}"/>')
    if "witnesses" in spec.layers:
        out.append('<g class="witnesses">')
        for a, b in witnesses:
            out.append(f'<line class="witness-link" x1="{fmt(a[0])}" y1="{fmt(-a[1])}" '
                       f'x2="{fmt(b[0])}" y2="{fmt(-b[1])}" stroke="#d62728" stroke-width="{stroke}"/>')
            out.append(f'<circle class="witness" cx="{fmt(a[0])}" cy="{fmt(-a[1])}" r="{marker}" fill="#d62728"/>')
            out.append(f'<rect class="witness" x="{fmt(float(b[0]) - float(marker))}" '
                       f'y="{fmt(-float(b[1]) - float(marker))}" width="{fmt(2 * float(marker))}" '
                       f'height="{fmt(2 * float(marker))}" fill="#1f77b4"/>')
        out.append('</g>')
    out.append('</g>')
    out.append('</svg>')
    return ("\n".join(out) + "\n").encode("utf-8")
