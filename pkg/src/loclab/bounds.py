"""Quantities of the spike lower-bound argument, evaluated exactly.

A candidate ray helps separate the ambiguous A/B regions beside the natural
tip guard at t_i only where its supporting line crosses that guard's cone.
Its *contribution* is the vertical extent between the points where the line
meets the two boundary rays of the cone.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .geometry import (IDENTICAL, Line, Point, Ray, as_scalar, format_scalar,
                       intersect_lines, ray_contains, side_of_line)
from .model import cone_contains
from .spike import SpikePolygon

FIVE_HALVES = Fraction(5, 2)


@dataclass(frozen=True)
class ContributionReport:
    ray: Ray
    left_hit: Optional[Point]
    right_hit: Optional[Point]
    value: Fraction

    def to_json(self) -> dict:
        def pt(p):
            return None if p is None else [format_scalar(p.x), format_scalar(p.y)]
        return {
            "origin": pt(self.ray.origin),
            "through": pt(self.ray.origin + self.ray.dir),
            "leftHit": pt(self.left_hit),
            "rightHit": pt(self.right_hit),
            "value": format_scalar(self.value),
        }


def _check_spike(sp: SpikePolygon, i: int, interior: bool = False) -> None:
    lo, hi = (2, sp.m - 1) if interior else (1, sp.m)
    if not lo <= i <= hi:
        raise IndexError(f"spike index {i} outside {lo}..{hi} for m={sp.m}")


def boundary_rays(sp: SpikePolygon, i: int) -> tuple[Ray, Ray]:
    """Left (through l_i) and right (through r_i) boundary rays of the tip cone at t_i."""
    t = sp.t(i)
    return Ray.toward(t, sp.l(i)), Ray.toward(t, sp.r(i))


def _hit(line: Line, boundary: Ray) -> Optional[Point]:
    x = intersect_lines(line, boundary.line)
    if x == IDENTICAL:
        return boundary.origin
    if isinstance(x, Point) and ray_contains(boundary, x):
        return x
    return None


def contribution(ray: Ray, sp: SpikePolygon, i: int) -> ContributionReport:
    _check_spike(sp, i)
    left, right = boundary_rays(sp, i)
    line = ray.line
    lh, rh = _hit(line, left), _hit(line, right)
    value = abs(lh.y - rh.y) if lh is not None and rh is not None else Fraction(0)
    return ContributionReport(ray, lh, rh, value)


def band_contribution(ray: Ray, sp: SpikePolygon, i: int) -> Fraction:
    """Measure of heights in [y(l_i), y(r_i)] where the ray's line splits the
    horizontal chord across the tip cone, i.e. where it can separate an a-b pair.
    """
    _check_spike(sp, i)
    l, t = sp.l(i), sp.t(i)
    lo, hi = l.y, sp.r(i).y
    line = ray.line
    if line.a == 0:
        return Fraction(0)
    # x on the cone's left boundary and on the line, both affine in y
    left_slope = (t.x - l.x) / (t.y - l.y)
    # conditions: x_line(y) - x_left(y) > 0 and t.x - x_line(y) > 0
    # x_line(y) = (c - b*y)/a
    conds = [
        (Fraction(-line.b, line.a) - left_slope,
         Fraction(line.c, line.a) - (l.x - left_slope * l.y)),
        (Fraction(line.b, line.a), t.x - Fraction(line.c, line.a)),
    ]
    for slope, const in conds:   # slope*y + const > 0
        if slope == 0:
            if const <= 0:
                return Fraction(0)
            continue
        root = -const / slope
        if slope > 0:
            lo = max(lo, root)
        else:
            hi = min(hi, root)
    return max(hi - lo, Fraction(0))


def r_p_targets(p: Point, sp: SpikePolygon, i: int) -> list[Point]:
    """Vertices defining the four rays that bound the double cone at p."""
    upper = Line.through(sp.l(i + 1), sp.r(sp.m))
    above = side_of_line(upper, p) * (1 if upper.b > 0 else -1) >= 0
    fourth = sp.l(i + 1) if above else sp.r(sp.m)
    return [sp.t(i - 1), sp.l(i - 1), sp.t(i + 1), fourth]


def max_contribution_from(p: Point, sp: SpikePolygon, i: int) -> tuple[Fraction, Ray]:
    _check_spike(sp, i, interior=True)
    if not cone_contains(sp.tip_guard(i), p):
        raise ValueError(f"{p} is not in the tip cone of spike {i}")
    best: Optional[tuple[Fraction, Ray]] = None
    for target in r_p_targets(p, sp, i):
        ray = Ray.toward(p, target)
        value = contribution(ray, sp, i).value
        if best is None or value > best[0]:
            best = (value, ray)
    return best


def cone_separation_max(sp: SpikePolygon, i: int) -> Fraction:
    return max_contribution_from(sp.l(i), sp, i)[0]


def contribution_formula(h, delta, w) -> Fraction:
    """Closed form 2.5*h*delta/(delta + w) of the largest single contribution."""
    h, delta, w = as_scalar(h), as_scalar(delta), as_scalar(w)
    return FIVE_HALVES * h * delta / (delta + w)


def separator_threshold(sp: SpikePolygon, i: int) -> Fraction:
    """(h - delta)(delta + w) / (2.5 h delta): the sum needed over the best single ray."""
    p = sp.params
    return (p.h - p.delta) / cone_separation_max(sp, i)


def min_separators(sp: SpikePolygon, i: int) -> int:
    """Smallest k strictly above the threshold."""
    threshold = separator_threshold(sp, i)
    return int(threshold // 1) + 1


def ledger(n: int, n0: int) -> int:
    """Guard count n0 + (n0 - 1) + (2n/3 - 2 n0); n0 = 0 falls back to 2n/3."""
    if n % 3:
        raise ValueError("n must be a multiple of 3")
    if not 0 <= n0 <= n // 3:
        raise ValueError(f"n0 must lie in 0..{n // 3}")
    if n0 == 0:
        return 2 * n // 3
    return n0 + (n0 - 1) + (2 * n // 3 - 2 * n0)


def vertex_guard_lower_bound(n: int) -> int:
    if n < 6:
        raise ValueError("the bound is stated for n >= 6")
    return (2 * n) // 3 - 1


def bounds_report(sp: SpikePolygon, i: int) -> dict:
    value, ray = max_contribution_from(sp.l(i), sp, i)
    threshold = separator_threshold(sp, i)
    return {
        "m": sp.m,
        "n": sp.params.n,
        "spike": i,
        "contribution": format_scalar(value),
        "formula": format_scalar(contribution_formula(sp.params.h, sp.params.delta, sp.params.w)),
        "ray": contribution(ray, sp, i).to_json(),
        "threshold": format_scalar(threshold),
        "k": min_separators(sp, i),
        "twoThirdsN": format_scalar(Fraction(2 * sp.params.n, 3)),
        "vertexGuardLowerBound": vertex_guard_lower_bound(sp.params.n),
    }
