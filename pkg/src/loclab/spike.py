"""The m-spike lower-bound polygon and its A/B ambiguity samples.

Vertex order is l_1, t_1, r_1, ..., l_m, t_m, r_m with

    t_i = ((i-1)w,      (i-1)h + h/2)
    l_i = ((i-1)w - d,  (i-2)h)
    r_i = ((i-1)w,      (i-1)h)        for i < m
    r_m = ((m-1)w,      (m-2)h)

so every spike but the last has a vertical edge of height h/2, the last one
1.5h, and the edge r_m l_1 closes the polygon from below.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exceptions import InvalidParamsError
from .geometry import Line, Point, Segment, as_scalar
from .model import Guard, Polygon, general_position_report, natural_guard


@dataclass(frozen=True)
class SpikeParams:
    m: int
    w: Fraction
    h: Fraction
    delta: Fraction

    def __post_init__(self):
        for name in ("w", "h", "delta"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))
        if not isinstance(self.m, int) or self.m < 2:
            raise InvalidParamsError(f"need m >= 2, got m={self.m}")
        if not self.delta > 0:
            raise InvalidParamsError(f"need 0 < delta, got delta={self.delta}")
        if not self.delta < self.h:
            raise InvalidParamsError(f"need delta < h, got delta={self.delta}, h={self.h}")
        if not self.h < self.w:
            raise InvalidParamsError(f"need h < w, got h={self.h}, w={self.w}")

    @property
    def n(self) -> int:
        return 3 * self.m

    @classmethod
    def reference_instance(cls, m: int, h=2) -> "SpikeParams":
        """delta = h/2 and w = 5nh/3, the instantiation used for the separator count."""
        h = as_scalar(h)
        return cls(m, 5 * (3 * m) * h / 3, h, h / 2)


@dataclass(frozen=True)
class SpikePolygon:
    params: SpikeParams
    polygon: Polygon
    roles: tuple

    @property
    def m(self) -> int:
        return self.params.m

    def index(self, role: str) -> int:
        return self.roles.index(role)

    def vertex(self, role: str) -> Point:
        return self.polygon.vertices[self.roles.index(role)]

    def l(self, i: int) -> Point:
        return self.vertex(f"l{i}")

    def t(self, i: int) -> Point:
        return self.vertex(f"t{i}")

    def r(self, i: int) -> Point:
        return self.vertex(f"r{i}")

    def tip_guard(self, i: int, key: str | None = None) -> Guard:
        """Natural internal guard at t_i."""
        return natural_guard(self.polygon, self.index(f"t{i}"), "internal", key or f"T{i}")

    @property
    def closing_edge(self) -> Segment:
        return Segment(self.r(self.m), self.l(1))


def spike_vertices(p: SpikeParams) -> list[tuple[str, Point]]:
    w, h, d = p.w, p.h, p.delta
    out = []
    for i in range(1, p.m + 1):
        x = (i - 1) * w
        out.append((f"l{i}", Point(x - d, (i - 2) * h)))
        out.append((f"t{i}", Point(x, (i - 1) * h + h / 2)))
        ry = (i - 1) * h if i < p.m else (i - 2) * h
        out.append((f"r{i}", Point(x, ry)))
    return out


def build_spike_polygon(params: SpikeParams) -> SpikePolygon:
    verts = spike_vertices(params)
    poly = Polygon([p for _, p in verts])
    return SpikePolygon(params, poly, tuple(r for r, _ in verts))


def spike_edges(sp: SpikePolygon) -> list[Segment]:
    """The 2m edges incident to a tip vertex, in boundary order."""
    return [e for k, e in enumerate(sp.polygon.edges)
            if sp.roles[k].startswith("t") or sp.roles[(k + 1) % len(sp.roles)].startswith("t")]


def metric_violations(sp: SpikePolygon) -> list[str]:
    """Every stated metric constraint of the construction that fails (empty when sound)."""
    p, m = sp.params, sp.m
    bad = []
    for i in range(1, m + 1):
        t, r, l = sp.t(i), sp.r(i), sp.l(i)
        height = Fraction(3, 2) * p.h if i == m else p.h / 2
        if t.x != r.x or t.y - r.y != height:
            bad.append(f"t{i}r{i} is not vertical of height {height}")
        if i < m:
            if r.y - l.y != p.h:
                bad.append(f"vertical distance l{i}-r{i} != h")
            if r.x - l.x != p.delta:
                bad.append(f"horizontal distance l{i}-r{i} != delta")
            if r.y != sp.l(i + 1).y:
                bad.append(f"r{i}l{i + 1} is not horizontal")
            if sp.r(i + 1).x - r.x != p.w:
                bad.append(f"x(r{i + 1}) - x(r{i}) != w")
    closing = sp.closing_edge.line
    for i in range(2, m + 1):
        gap = sp.l(i).y - closing.y_at(sp.l(i).x)
        if not 0 < gap < p.delta:
            bad.append(f"closing edge cut below l{i} is {gap}, not in (0, delta)")
    if not closing.contains(sp.l(1)):
        bad.append("closing edge does not end at l1")
    if general_position_report(sp.polygon, spike_edges(sp)):
        bad.append("spike edges not in general position")
    return bad


def sample_ab_pair(sp: SpikePolygon, i: int, offset) -> tuple[Point, Point]:
    """Representative points of the A (exterior) and B (interior) regions of spike i.

    Both sit at mid-height between l_i and r_i, just outside the natural tip
    guard's cone: ``a`` to the left of its left boundary, ``b`` right of x = x(t_i).
    """
    offset = as_scalar(offset)
    if not 1 <= i < sp.m:
        raise IndexError(f"spike index {i} outside 1..{sp.m - 1}")
    if not 0 < offset < sp.params.delta / 4:
        raise ValueError("offset must lie in (0, delta/4)")
    l, t, r = sp.l(i), sp.t(i), sp.r(i)
    y = (l.y + r.y) / 2
    left = Line.through(l, t)
    x_left = (left.c - left.b * y) / left.a
    return Point(x_left - offset, y), Point(r.x + offset, y)
