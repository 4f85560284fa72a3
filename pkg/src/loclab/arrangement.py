"""Exact localization checks over the cells of a line arrangement.

All edges and guard boundary rays lie on the collected lines, so key sets and
inside/outside status are constant on every open cell. Checking one
representative per cell therefore decides localization for the whole plane
(boundary points excluded).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .exceptions import NotLocalizableError
from .geometry import Line, Point, format_scalar, intersect_lines
from .model import (INSIDE, OUTSIDE, And, Formula, Guard, Key, Or, Polygon,
                    evaluate_formula, key_set_at, point_in_polygon)


def collect_lines(P: Polygon, guards: Sequence[Guard] = ()) -> list[Line]:
    """Deduplicated canonical supporting lines of all edges and guard boundaries."""
    lines = {e.line for e in P.edges}
    for g in guards:
        lines.update(g.boundary_lines)
    return sorted(lines)


@dataclass(frozen=True)
class Cell:
    sign_vector: tuple
    representative: Point


def _between(lo: Fraction, hi: Fraction) -> Fraction:
    return (lo + hi) / 2


def enumerate_cells(lines: Sequence[Line]) -> list[Cell]:
    """One cell per open face of the arrangement, ordered by sign vector.

    Slab sweep: every face's x-projection is a union of slabs between
    consecutive critical abscissae, so one sample abscissa per slab plus one
    sample ordinate per gap between consecutive lines reaches every face.
    """
    lines = list(lines)
    if not lines:
        raise ValueError("enumerate_cells needs at least one line")
    critical = set()
    for i, l1 in enumerate(lines):
        if l1.is_vertical:
            critical.add(Fraction(l1.c, l1.a))
        for l2 in lines[i + 1:]:
            hit = intersect_lines(l1, l2)
            if isinstance(hit, Point):
                critical.add(hit.x)
    xs = sorted(critical)
    if xs:
        samples = [xs[0] - 1] + [_between(a, b) for a, b in zip(xs, xs[1:])] + [xs[-1] + 1]
    else:
        samples = [Fraction(0)]

    vertical = [i for i, l in enumerate(lines) if l.is_vertical]
    sloped = [i for i, l in enumerate(lines) if not l.is_vertical]
    seen: dict[tuple, Point] = {}
    for x in samples:
        signs = [0] * len(lines)
        for i in vertical:
            signs[i] = 1 if lines[i].a * x - lines[i].c > 0 else -1
        heights = sorted((lines[i].y_at(x), i) for i in sloped)
        # start below every sloped line: sign of b*y - (c - a*x) with y -> -inf
        for i in sloped:
            signs[i] = -1 if lines[i].b > 0 else 1
        if heights:
            ys = [h for h, _ in heights]
            probes = [ys[0] - 1] + [_between(a, b) for a, b in zip(ys, ys[1:])] + [ys[-1] + 1]
        else:
            probes = [Fraction(0)]
        for k, y in enumerate(probes):
            if k > 0:
                i = heights[k - 1][1]
                signs[i] = -signs[i]
            sv = tuple(signs)
            if sv not in seen:
                seen[sv] = Point(x, y)
    return [Cell(sv, seen[sv]) for sv in sorted(seen)]


@dataclass(frozen=True)
class LabeledCell:
    cell: Cell
    key_set: frozenset
    inside: bool

    @property
    def representative(self) -> Point:
        return self.cell.representative

    def to_json(self) -> dict:
        p = self.cell.representative
        return {
            "representative": [format_scalar(p.x), format_scalar(p.y)],
            "keySet": sorted(self.key_set),
            "inside": self.inside,
        }


@dataclass
class CellLabeling:
    cells: list
    lines: list = field(default_factory=list)

    def __iter__(self):
        return iter(self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def inside_cells(self) -> list:
        return [c for c in self.cells if c.inside]

    @property
    def outside_cells(self) -> list:
        return [c for c in self.cells if not c.inside]


def label_cells(P: Polygon, guards: Sequence[Guard], cells: Sequence[Cell],
                lines: Sequence[Line] = ()) -> CellLabeling:
    labeled = []
    for cell in cells:
        status = point_in_polygon(P, cell.representative)
        if status not in (INSIDE, OUTSIDE):
            raise RuntimeError(f"cell representative {cell.representative} lies on the boundary")
        labeled.append(LabeledCell(cell, key_set_at(guards, cell.representative), status == INSIDE))
    return CellLabeling(labeled, list(lines))


def labeling_for(P: Polygon, guards: Sequence[Guard]) -> CellLabeling:
    lines = collect_lines(P, guards)
    return label_cells(P, guards, enumerate_cells(lines), lines)


@dataclass
class Verdict:
    """Outcome of a localization check.

    ``witness`` is a dict for formula checks (cell, expected, actual) and a
    pair of cells (inside, outside) for localizability decisions.
    """

    ok: bool
    witness: Optional[object] = None

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        if self.witness is None:
            return {"ok": self.ok, "witness": None}
        if isinstance(self.witness, tuple):
            inside, outside = self.witness
            w = {"inside": inside.to_json(), "outside": outside.to_json()}
        else:
            cell = self.witness["cell"]
            w = cell.to_json()
            w["expected"] = self.witness["expected"]
            w["actual"] = self.witness["actual"]
        return {"ok": self.ok, "witness": w}


def check_formula(labeling: CellLabeling, f: Formula) -> Verdict:
    for cell in labeling:
        actual = evaluate_formula(f, cell.key_set)
        if actual != cell.inside:
            return Verdict(False, {"cell": cell, "expected": cell.inside, "actual": actual})
    return Verdict(True)


def verify_localization(P: Polygon, guards: Sequence[Guard], f: Formula) -> Verdict:
    """ok iff ``f`` evaluates to "inside" exactly on the interior cells."""
    return check_formula(labeling_for(P, guards), f)


def find_violation(labeling: CellLabeling):
    """First (inside, outside) pair whose inside key set is a subset of the outside one."""
    outside = {}
    for c in labeling.outside_cells:
        outside.setdefault(c.key_set, c)
    for c in labeling.inside_cells:
        for ks, o in outside.items():
            if c.key_set <= ks:
                return c, o
    return None


def decide(labeling: CellLabeling) -> Verdict:
    pair = find_violation(labeling)
    return Verdict(pair is None, pair)


def decide_localizable(P: Polygon, guards: Sequence[Guard]) -> Verdict:
    """Monotone localizability: no inside key set contained in an outside key set."""
    return decide(labeling_for(P, guards))


def dnf_from_terms(terms) -> Formula:
    clauses = []
    for term in terms:
        keys = [Key(k) for k in sorted(term)]
        clauses.append(keys[0] if len(keys) == 1 else And(tuple(keys)))
    return clauses[0] if len(clauses) == 1 else Or(tuple(clauses))


def minimal_terms(key_sets) -> list[frozenset]:
    distinct = sorted(set(key_sets), key=lambda s: (len(s), sorted(s)))
    kept: list[frozenset] = []
    for s in distinct:
        if not any(k <= s for k in kept):
            kept.append(s)
    return sorted(kept, key=sorted)


def synthesize_dnf(labeling: CellLabeling) -> Formula:
    """OR over the subset-minimal inside key sets of the AND of their keys."""
    pair = find_violation(labeling)
    if pair is not None:
        raise NotLocalizableError("scene is not monotone-localizable", witness=pair)
    terms = minimal_terms(c.key_set for c in labeling.inside_cells)
    if not terms or any(not t for t in terms):
        # an empty conjunction would be "always true"; unreachable for bounded polygons
        raise NotLocalizableError("interior cell carries no key", witness=pair)
    return dnf_from_terms(terms)
