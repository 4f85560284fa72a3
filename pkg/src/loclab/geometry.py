"""Exact rational geometry kernel.

Every coordinate is a :class:`fractions.Fraction`; no predicate ever rounds.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import NamedTuple, Union

Scalar = Fraction
ScalarLike = Union[Fraction, int, str]


def as_scalar(value: ScalarLike) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: they would smuggle rounding into the kernel.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def parse_scalar(text: str) -> Fraction:
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not an exact rational: {text!r}") from None
    if d == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def format_scalar(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def sign(value) -> int:
    return (value > 0) - (value < 0)


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x: ScalarLike, y: ScalarLike) -> "Point":
        return cls(as_scalar(x), as_scalar(y))

    def __add__(self, d: "Direction") -> "Point":  # type: ignore[override]
        return Point(self.x + d[0], self.y + d[1])

    def __sub__(self, other: "Point") -> "Direction":
        return Direction(self.x - other.x, self.y - other.y)


class Direction(NamedTuple):
    dx: Fraction
    dy: Fraction

    @classmethod
    def of(cls, dx: ScalarLike, dy: ScalarLike) -> "Direction":
        d = cls(as_scalar(dx), as_scalar(dy))
        if d.dx == 0 and d.dy == 0:
            raise ValueError("zero direction")
        return d

    def __neg__(self) -> "Direction":
        return Direction(-self.dx, -self.dy)

    def scaled(self, t) -> "Direction":
        return Direction(self.dx * t, self.dy * t)

    def normalized(self) -> "Direction":
        """Primitive integer representative of the positive ray class."""
        num_x, den_x = self.dx.numerator, self.dx.denominator
        num_y, den_y = self.dy.numerator, self.dy.denominator
        ix = num_x * den_y
        iy = num_y * den_x
        g = gcd(ix, iy)
        return Direction(Fraction(ix // g), Fraction(iy // g))

    def same_way(self, other: "Direction") -> bool:
        """True iff ``other`` is a positive multiple of ``self``."""
        return cross(self, other) == 0 and dot(self, other) > 0


def cross(u, v) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def dot(u, v) -> Fraction:
    return u[0] * v[0] + u[1] * v[1]


def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of (b - a) x (c - a): +1 counterclockwise, 0 collinear, -1 clockwise."""
    return sign((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x))


class Line:
    """Line ``a*x + b*y = c`` stored with coprime integer coefficients.

    The first nonzero of (a, b) is positive, so two Line objects compare equal
    exactly when they describe the same point set.
    """

    __slots__ = ("a", "b", "c")

    def __init__(self, a: int, b: int, c: int):
        self.a, self.b, self.c = a, b, c

    @classmethod
    def from_coefficients(cls, a: ScalarLike, b: ScalarLike, c: ScalarLike) -> "Line":
        a, b, c = as_scalar(a), as_scalar(b), as_scalar(c)
        if a == 0 and b == 0:
            raise ValueError("degenerate line: a = b = 0")
        den = a.denominator * b.denominator * c.denominator
        ia, ib, ic = int(a * den), int(b * den), int(c * den)
        g = gcd(gcd(ia, ib), ic)
        ia, ib, ic = ia // g, ib // g, ic // g
        if ia < 0 or (ia == 0 and ib < 0):
            ia, ib, ic = -ia, -ib, -ic
        return cls(ia, ib, ic)

    @classmethod
    def through(cls, p: Point, q: Point) -> "Line":
        if p == q:
            raise ValueError("a line needs two distinct points")
        return cls.from_anchor(p, q - p)

    @classmethod
    def from_anchor(cls, anchor: Point, direction) -> "Line":
        dx, dy = direction[0], direction[1]
        if dx == 0 and dy == 0:
            raise ValueError("zero direction")
        # normal (dy, -dx)
        return cls.from_coefficients(dy, -dx, dy * anchor.x - dx * anchor.y)

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __eq__(self, other) -> bool:
        return isinstance(other, Line) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __lt__(self, other: "Line") -> bool:
        return self.key < other.key

    def __repr__(self) -> str:
        return f"Line({self.a}x + {self.b}y = {self.c})"

    @property
    def direction(self) -> Direction:
        return Direction(Fraction(-self.b), Fraction(self.a))

    @property
    def is_vertical(self) -> bool:
        return self.b == 0

    def value(self, p) -> Fraction:
        return self.a * p[0] + self.b * p[1] - self.c

    def y_at(self, x: Fraction) -> Fraction:
        return (self.c - self.a * x) / self.b

    def contains(self, p) -> bool:
        return self.value(p) == 0


def side_of_line(line: Line, p: Point) -> int:
    """Sign of ``a*x + b*y - c`` under the line's canonical coefficients."""
    x, y = p
    # integer-only evaluation: denominators are positive so the sign survives
    xn, xd = x.numerator, x.denominator
    yn, yd = y.numerator, y.denominator
    return sign(line.a * xn * yd + line.b * yn * xd - line.c * xd * yd)


PARALLEL = "parallel"
IDENTICAL = "identical"


def intersect_lines(l1: Line, l2: Line):
    """Return the crossing Point, or the string ``"parallel"``/``"identical"``."""
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return IDENTICAL if l1 == l2 else PARALLEL
    x = Fraction(l1.c * l2.b - l2.c * l1.b, det)
    y = Fraction(l1.a * l2.c - l2.a * l1.c, det)
    return Point(x, y)


class _RayFields(NamedTuple):
    origin: Point
    dir: Direction


class Ray(_RayFields):
    __slots__ = ()

    def __new__(cls, origin: Point, dir: Direction):
        if dir[0] == 0 and dir[1] == 0:
            raise ValueError("ray direction must be nonzero")
        return super().__new__(cls, origin, dir)

    @classmethod
    def toward(cls, origin: Point, target: Point) -> "Ray":
        if origin == target:
            raise ValueError("ray needs a target distinct from its origin")
        return cls(origin, target - origin)

    @property
    def line(self) -> Line:
        return Line.from_anchor(self.origin, self.dir)


def ray_contains(r: Ray, p: Point) -> bool:
    v = p - r.origin
    return cross(r.dir, v) == 0 and dot(r.dir, v) >= 0


class _SegmentFields(NamedTuple):
    a: Point
    b: Point


class Segment(_SegmentFields):
    __slots__ = ()

    def __new__(cls, a: Point, b: Point):
        if a == b:
            raise ValueError("segment endpoints must differ")
        return super().__new__(cls, a, b)

    @property
    def line(self) -> Line:
        return Line.through(self.a, self.b)

    def reversed(self) -> "Segment":
        return Segment(self.b, self.a)


def on_segment(s: Segment, p: Point) -> bool:
    if orient(s.a, s.b, p) != 0:
        return False
    return (min(s.a.x, s.b.x) <= p.x <= max(s.a.x, s.b.x)
            and min(s.a.y, s.b.y) <= p.y <= max(s.a.y, s.b.y))


def segments_intersect(s: Segment, t: Segment) -> bool:
    """Closed-segment intersection test."""
    d1 = orient(t.a, t.b, s.a)
    d2 = orient(t.a, t.b, s.b)
    d3 = orient(s.a, s.b, t.a)
    d4 = orient(s.a, s.b, t.b)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return ((d1 == 0 and on_segment(t, s.a)) or (d2 == 0 and on_segment(t, s.b))
            or (d3 == 0 and on_segment(s, t.a)) or (d4 == 0 and on_segment(s, t.b)))
