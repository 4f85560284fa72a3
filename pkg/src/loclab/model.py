"""Polygons, broadcast guards, monotone key formulas and the covering relation."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .exceptions import InvalidGuardError, NonSimplePolygonError
from .geometry import (Direction, Line, Point, Segment, as_scalar, cross, dot,
                       on_segment, orient, segments_intersect)

INSIDE = "inside"
OUTSIDE = "outside"
BOUNDARY = "boundary"


def _point(p) -> Point:
    if isinstance(p, Point):
        return p
    x, y = p
    return Point(as_scalar(x), as_scalar(y))


def _direction(d) -> Direction:
    dx, dy = d
    return Direction.of(dx, dy)


class Polygon:
    """Simple polygon given by its vertices in boundary order (either orientation)."""

    def __init__(self, vertices: Iterable, validate: bool = True):
        self.vertices: tuple[Point, ...] = tuple(_point(v) for v in vertices)
        if validate:
            check_simple(self.vertices)
        n = len(self.vertices)
        twice = sum(cross(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n))
        self.signed_area: Fraction = twice / 2

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"Polygon({len(self.vertices)} vertices)"

    @property
    def is_ccw(self) -> bool:
        return self.signed_area > 0

    @property
    def edges(self) -> list[Segment]:
        n = len(self.vertices)
        return [Segment(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def neighbors(self, v: int) -> tuple[Point, Point]:
        n = len(self.vertices)
        return self.vertices[(v - 1) % n], self.vertices[(v + 1) % n]

    def bbox(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)


def check_simple(vertices: Sequence[Point]) -> None:
    """Raise NonSimplePolygonError unless ``vertices`` bound a simple polygon."""
    n = len(vertices)
    if n < 3:
        raise NonSimplePolygonError(f"non-simple polygon: needs at least 3 vertices, got {n}")
    if len(set(vertices)) != n:
        raise NonSimplePolygonError("non-simple polygon: repeated vertex")
    for i in range(n):
        if orient(vertices[i - 1], vertices[i], vertices[(i + 1) % n]) == 0:
            raise NonSimplePolygonError(
                f"non-simple polygon: vertices {(i - 1) % n}, {i}, {(i + 1) % n} are collinear")
    edges = [Segment(vertices[i], vertices[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue  # adjacent; shared endpoint only, guaranteed by the collinearity check
            if segments_intersect(edges[i], edges[j]):
                raise NonSimplePolygonError(f"non-simple polygon: edges {i} and {j} intersect")


@dataclass(frozen=True)
class Guard:
    """Broadcast cone swept counterclockwise from ``d1`` to ``d2``.

    ``reflex`` marks an angular width in (pi, 2*pi). A half-plane (width pi)
    is written with ``d2 == -d1`` and ``reflex=False``.
    """

    apex: Point
    d1: Direction
    d2: Direction
    reflex: bool
    key: str

    def __post_init__(self):
        object.__setattr__(self, "apex", _point(self.apex))
        object.__setattr__(self, "d1", _direction(self.d1))
        object.__setattr__(self, "d2", _direction(self.d2))
        if not isinstance(self.key, str) or not self.key:
            raise InvalidGuardError("guard key must be a nonempty string")
        c = cross(self.d1, self.d2)
        if c == 0:
            if dot(self.d1, self.d2) > 0:
                raise InvalidGuardError(f"guard {self.key}: d1 and d2 point the same way")
            if self.reflex:
                raise InvalidGuardError(f"guard {self.key}: a half-plane cone is not reflex")
        elif (c < 0) != self.reflex:
            raise InvalidGuardError(
                f"guard {self.key}: reflex={self.reflex} contradicts the sweep from d1 to d2")

    @property
    def boundary_lines(self) -> tuple[Line, Line]:
        return Line.from_anchor(self.apex, self.d1), Line.from_anchor(self.apex, self.d2)

    def with_key(self, key: str) -> "Guard":
        return Guard(self.apex, self.d1, self.d2, self.reflex, key)

    def canonical(self) -> tuple:
        """Key-free identity: apex plus primitive boundary directions."""
        return (self.apex, self.d1.normalized(), self.d2.normalized(), self.reflex)


def cone_contains(g: Guard, p: Point) -> bool:
    """Closed cone membership; the apex itself is contained."""
    vx, vy = p.x - g.apex.x, p.y - g.apex.y
    if vx == 0 and vy == 0:
        return True
    d1, d2 = g.d1, g.d2
    left_of_d1 = d1.dx * vy - d1.dy * vx      # cross(d1, v)
    right_of_d2 = vx * d2.dy - vy * d2.dx     # cross(v, d2)
    if not g.reflex:
        return left_of_d1 >= 0 and right_of_d2 >= 0
    # complement of the open convex sector from d2 to d1
    return not (left_of_d1 < 0 and right_of_d2 < 0)


def natural_guard(P: Polygon, v: int, side: str = "internal", key: str | None = None) -> Guard:
    """Guard at vertex ``v`` broadcasting over its full internal or external angle."""
    if side not in ("internal", "external"):
        raise ValueError("side must be 'internal' or 'external'")
    apex = P.vertices[v]
    prev, nxt = P.neighbors(v)
    to_next, to_prev = nxt - apex, prev - apex
    # ccw polygon: interior lies counterclockwise from the outgoing edge
    d1, d2 = (to_next, to_prev) if P.is_ccw else (to_prev, to_next)
    if side == "external":
        d1, d2 = d2, d1
    reflex = cross(d1, d2) < 0
    return Guard(apex, d1, d2, reflex, key or f"{side[0]}{v}")


# --- monotone formulas -----------------------------------------------------

@dataclass(frozen=True)
class Key:
    name: str


@dataclass(frozen=True)
class And:
    children: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if not self.children:
            raise ValueError("and() needs at least one operand")


@dataclass(frozen=True)
class Or:
    children: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if not self.children:
            raise ValueError("or() needs at least one operand")


Formula = Union[Key, And, Or]


def evaluate_formula(f: Formula, keys) -> bool:
    if isinstance(f, Key):
        return f.name in keys
    if isinstance(f, And):
        return all(evaluate_formula(c, keys) for c in f.children)
    if isinstance(f, Or):
        return any(evaluate_formula(c, keys) for c in f.children)
    raise TypeError(f"not a formula node: {f!r}")


def formula_keys(f: Formula) -> set[str]:
    if isinstance(f, Key):
        return {f.name}
    out: set[str] = set()
    for c in f.children:
        out |= formula_keys(c)
    return out


def key_set_at(guards: Sequence[Guard], p: Point) -> frozenset[str]:
    return frozenset(g.key for g in guards if cone_contains(g, p))


# --- polygon predicates ----------------------------------------------------

def point_in_polygon(P: Polygon, p: Point) -> str:
    """Exact inside/outside/boundary classification by crossing parity."""
    p = _point(p)
    inside = False
    verts = P.vertices
    n = len(verts)
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        if on_segment(Segment(a, b), p):
            return BOUNDARY
        # half-open rule on y so vertices are counted once
        if (a.y > p.y) != (b.y > p.y):
            o = orient(a, b, p)
            if (o > 0) == (b.y > a.y):
                inside = not inside
    return INSIDE if inside else OUTSIDE


def covers_edge(g: Guard, e: Segment) -> bool:
    """True iff ``e`` lies on one of the guard's boundary lines."""
    return e.line in g.boundary_lines


@dataclass
class GeneralPositionReport:
    vertex_violations: list = field(default_factory=list)   # (vertex index, spike edge)
    collinear_pairs: list = field(default_factory=list)     # (spike edge, spike edge)

    @property
    def ok(self) -> bool:
        return not self.vertex_violations and not self.collinear_pairs

    def __bool__(self) -> bool:
        return not self.ok

    def __len__(self) -> int:
        return len(self.vertex_violations) + len(self.collinear_pairs)


def general_position_report(P: Polygon, spike_edges: Sequence[Segment]) -> GeneralPositionReport:
    report = GeneralPositionReport()
    lines = [e.line for e in spike_edges]
    for e, line in zip(spike_edges, lines):
        for idx, v in enumerate(P.vertices):
            if v != e.a and v != e.b and line.contains(v):
                report.vertex_violations.append((idx, e))
    for i in range(len(spike_edges)):
        for j in range(i + 1, len(spike_edges)):
            if lines[i] == lines[j]:
                report.collinear_pairs.append((spike_edges[i], spike_edges[j]))
    return report
