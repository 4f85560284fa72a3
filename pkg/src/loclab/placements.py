"""Verified guard placements for the spike polygon and a small exact search.

The constructions below are built from half-plane *literals* on edge lines.
With C the half-plane above the closing edge, the polygon satisfies

    P = C and R(A_1) and L(B_m) and AND_i ( L(B_i) or below(H_i) or R(A_{i+1}) )

where A_i, B_i are the left/right edge lines of spike i, H_i is the level of
r_i, R/L mean right/left. A guard whose cone is the AND (convex wedge) or OR
(reflex wedge) of two literals sits at the crossing of their lines, so each
guard can spend its two boundary rays on two different edges.
"""
from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .arrangement import (collect_lines, decide, enumerate_cells, label_cells,
                          labeling_for, synthesize_dnf, verify_localization)
from .exceptions import VerificationError
from .geometry import Direction, Line, Point, intersect_lines, side_of_line, sign
from .model import Formula, Guard, Polygon, cone_contains, covers_edge
from .spike import SpikePolygon

VERTEX = "vertex"
GENERAL = "general"


@dataclass
class Solution:
    guards: list
    formula: Formula
    kind: str

    @property
    def size(self) -> int:
        return len(self.guards)

    def __len__(self) -> int:
        return len(self.guards)


def uncovered_edges(P: Polygon, guards: Sequence[Guard]) -> list[int]:
    """Indices of edges whose supporting line is no guard's boundary line."""
    return [k for k, e in enumerate(P.edges) if not any(covers_edge(g, e) for g in guards)]


def _finish(P: Polygon, guards: list, kind: str) -> Solution:
    labeling = labeling_for(P, guards)
    verdict = decide(labeling)
    if not verdict.ok:
        raise VerificationError("constructed guards do not localize the polygon", verdict)
    formula = synthesize_dnf(labeling)
    verdict = verify_localization(P, guards, formula)
    if not verdict.ok:
        raise VerificationError("synthesized formula failed verification", verdict)
    missing = uncovered_edges(P, guards)
    if missing:
        raise VerificationError(f"edges {missing} are not covered by any guard")
    if kind == VERTEX and any(g.apex not in P.vertices for g in guards):
        raise VerificationError("vertex solution with a non-vertex apex")
    return Solution(guards, formula, kind)


# --- literal-built cones ---------------------------------------------------

@dataclass(frozen=True)
class Literal:
    """Closed half-plane of ``line`` on the side of ``toward``."""

    line: Line
    side: int

    @classmethod
    def toward(cls, line: Line, point: Point) -> "Literal":
        s = side_of_line(line, point)
        if s == 0:
            raise ValueError("reference point lies on the line")
        return cls(line, s)

    def inward_along(self, other: Line) -> Direction:
        """Direction along ``other`` pointing into this half-plane."""
        d = other.direction
        drift = sign(self.line.a * d.dx + self.line.b * d.dy)
        if drift == 0:
            raise ValueError("lines are parallel")
        return d if drift == self.side else -d

    def negated(self) -> "Literal":
        return Literal(self.line, -self.side)


def half_plane_guard(lit: Literal, anchor: Point, key: str) -> Guard:
    if not lit.line.contains(anchor):
        raise ValueError("anchor must lie on the literal's line")
    d = lit.line.direction
    # counterclockwise from d1 to -d1 sweeps the left side of d1
    probe = Point(anchor.x - d.dy, anchor.y + d.dx)
    left = side_of_line(lit.line, probe)
    d1 = d if left == lit.side else -d
    return Guard(anchor, d1, -d1, False, key)


def wedge_guard(first: Literal, second: Literal, union: bool, key: str) -> Guard:
    """Guard at the crossing of two literal lines: their AND, or (reflex) their OR."""
    apex = intersect_lines(first.line, second.line)
    if not isinstance(apex, Point):
        raise ValueError("literal lines must cross")
    if union:
        inner = wedge_guard(first.negated(), second.negated(), False, key)
        return Guard(apex, inner.d2, inner.d1, True, key)
    u = second.inward_along(first.line)    # along first line, inside second
    v = first.inward_along(second.line)    # along second line, inside first
    if u.dx * v.dy - u.dy * v.dx > 0:
        return Guard(apex, u, v, False, key)
    return Guard(apex, v, u, False, key)


class SpikeLiterals:
    """Named half-plane literals of a spike polygon."""

    def __init__(self, sp: SpikePolygon):
        self.sp = sp

    def a(self, i: int) -> Literal:          # right of the left edge of spike i
        sp = self.sp
        return Literal.toward(Line.through(sp.l(i), sp.t(i)), sp.r(i))

    def b(self, i: int) -> Literal:          # left of x = x(t_i)
        sp = self.sp
        return Literal.toward(Line.through(sp.t(i), sp.r(i)), sp.l(i))

    def h(self, i: int) -> Literal:          # below the level of r_i
        sp = self.sp
        return Literal.toward(Line.through(sp.r(i), sp.l(i + 1)), sp.l(1))

    def c(self) -> Literal:                  # above the closing edge
        sp = self.sp
        return Literal.toward(sp.closing_edge.line, sp.t(1))


def vertex_solution(sp: SpikePolygon) -> Solution:
    """Natural tip guards, a quarter-plane base guard at each r_i (i < m) and
    the half-plane above the closing edge anchored at l_1: 2m guards.
    """
    m = sp.m
    guards = [sp.tip_guard(i) for i in range(1, m + 1)]
    for i in range(1, m):
        # one ray down t_i r_i, one along r_i l_{i+1}
        guards.append(Guard(sp.r(i), sp.r(i) - sp.t(i), sp.l(i + 1) - sp.r(i), False, f"Q{i}"))
    guards.append(half_plane_guard(SpikeLiterals(sp).c(), sp.l(1), "C"))
    return _finish(sp.polygon, guards, VERTEX)


def tight_vertex_solution(sp: SpikePolygon) -> Solution:
    """2m - 1 vertex guards: natural guard at l_1, reflex guards at r_i,
    half-planes right of the left spike edges and the natural tip at t_m.
    """
    m = sp.m
    lit = SpikeLiterals(sp)
    guards = [wedge_guard(lit.a(1), lit.c(), False, "W")]
    guards += [wedge_guard(lit.b(i), lit.h(i), True, f"U{i}") for i in range(1, m)]
    guards += [half_plane_guard(lit.a(i), sp.l(i), f"R{i}") for i in range(2, m)]
    guards.append(sp.tip_guard(m))
    return _finish(sp.polygon, guards, VERTEX)


def general_solution(sp: SpikePolygon) -> Solution:
    """ceil(3m/2) guards with apexes at crossings of edge lines.

    Clause i of the conjunction above is (L(B_i) or below(H_i) or R(A_{i+1})).
    Because L(B_i) and below(H_i) grow with i while R(A_i) shrinks, a reflex
    guard OR-ing a literal of clause i with R(A_{j+1}) (j > i) serves both
    clauses. Clauses are handled in pairs (i, i+1):

        L(B_i) or R(A_{i+1}),  below(H_i) or R(A_{i+2}),  L(B_{i+1}) or below(H_{i+1})

    Three guards per six edges; with m odd one clause keeps a lone half-plane.
    """
    m = sp.m
    lit = SpikeLiterals(sp)
    guards = [wedge_guard(lit.a(1), lit.c(), False, "W"), sp.tip_guard(m, "T")]
    i = 1
    while i <= m - 2:
        if i + 1 <= m - 2:
            guards.append(wedge_guard(lit.b(i), lit.a(i + 1), True, f"G{i}a"))
            guards.append(wedge_guard(lit.h(i), lit.a(i + 2), True, f"G{i}b"))
            guards.append(wedge_guard(lit.b(i + 1), lit.h(i + 1), True, f"G{i}c"))
            i += 2
        else:
            guards.append(wedge_guard(lit.b(i), lit.h(i), True, f"G{i}a"))
            guards.append(half_plane_guard(lit.a(i + 1), sp.l(i + 1), f"G{i}b"))
            i += 1
    guards.append(wedge_guard(lit.b(m - 1), lit.h(m - 1), True, f"G{m - 1}c"))
    return _finish(sp.polygon, guards, GENERAL)


# --- exhaustive search over canonical vertex guards --------------------------

def candidate_directions(P: Polygon, v: int) -> list[Direction]:
    apex = P.vertices[v]
    prev, nxt = P.neighbors(v)
    raw = [q - apex for k, q in enumerate(P.vertices) if k != v]
    raw += [apex - prev, apex - nxt]           # outward continuations of incident edges
    seen, out = set(), []
    for d in raw:
        key = d.normalized()
        if key not in seen:
            seen.add(key)
            out.append(key)
    return sorted(out)


def enumerate_canonical_guards(P: Polygon) -> list[Guard]:
    """Vertex guards whose boundary rays point at vertices or along incident edges."""
    out = []
    for v, apex in enumerate(P.vertices):
        dirs = candidate_directions(P, v)
        n = 0
        for d1, d2 in itertools.permutations(dirs, 2):
            c = d1.dx * d2.dy - d1.dy * d2.dx
            for reflex in (False, True):
                if c == 0 and reflex:
                    continue
                if c != 0 and (c < 0) != reflex:
                    continue
                out.append(Guard(apex, d1, d2, reflex, f"v{v}.{n}"))
                n += 1
    return out


class GuardTable:
    """Cone membership of every candidate over one common arrangement.

    That arrangement refines the arrangement of any candidate subset, so the
    subset-localizability test over its cells matches decide_localizable.
    """

    def __init__(self, P: Polygon, candidates: Sequence[Guard]):
        self.P = P
        self.candidates = list(candidates)
        lines = collect_lines(P, self.candidates)
        cells = label_cells(P, (), enumerate_cells(lines), lines)
        self.inside = [c.inside for c in cells]
        self.cell_bits = []
        for c in cells:
            bits = 0
            for j, g in enumerate(self.candidates):
                if cone_contains(g, c.representative):
                    bits |= 1 << j
            self.cell_bits.append(bits)
        edges = P.edges
        self.covers = [[j for j, g in enumerate(self.candidates) if covers_edge(g, e)] for e in edges]

    def localizes(self, subset_mask: int) -> bool:
        ins, outs = set(), set()
        for bits, inside in zip(self.cell_bits, self.inside):
            (ins if inside else outs).add(bits & subset_mask)
        for a in ins:
            for b in outs:
                if a & ~b == 0:
                    return False
        return True


@dataclass
class SearchReport:
    kmax: int
    best_found: Optional[Solution]
    infeasible_sizes: list
    candidate_count: int
    exhaustive: bool
    subsets_checked: int = 0
    elapsed: float = 0.0
    chosen: list = field(default_factory=list)


class _Budget(Exception):
    pass


def _covering_subsets(table: GuardTable, k: int, first_range, deadline):
    """k-subsets (increasing index) whose guards cover every edge."""
    n = len(table.candidates)
    edge_count = len(table.covers)
    covers_of = [0] * n
    for e, js in enumerate(table.covers):
        for j in js:
            covers_of[j] |= 1 << e
    max_cover = max((bin(c).count("1") for c in covers_of), default=0)
    full = (1 << edge_count) - 1
    last_cover = [max(js) if js else -1 for js in table.covers]
    counter = [0]

    def rec(start, chosen, covered):
        r = k - len(chosen)
        missing = full & ~covered
        if r == 0:
            if not missing:
                yield chosen
            return
        if bin(missing).count("1") > r * max_cover:
            return
        e = 0
        while missing >> e:
            if missing >> e & 1 and last_cover[e] < start:
                return
            e += 1
        stop = n - r + 1
        rng = range(start, stop) if chosen else [j for j in first_range if j < stop]
        for j in rng:
            counter[0] += 1
            if deadline is not None and counter[0] % 512 == 0 and time.monotonic() > deadline:
                raise _Budget
            yield from rec(j + 1, chosen + [j], covered | covers_of[j])

    return rec(0, [], 0)


def _search_size(table: GuardTable, k: int, first_range, deadline):
    checked = 0
    for subset in _covering_subsets(table, k, first_range, deadline):
        checked += 1
        mask = 0
        for j in subset:
            mask |= 1 << j
        if table.localizes(mask):
            return subset, checked
    return None, checked


def _worker(args):
    table, k, first_range, deadline = args
    try:
        found, checked = _search_size(table, k, first_range, deadline)
        return found, checked, False
    except _Budget:
        return None, 0, True


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("LOCLAB_THREADS", "1")))
    except ValueError:
        return 1


def min_vertex_guards(P: Polygon, kmax: int, budget: Optional[float] = None,
                      workers: Optional[int] = None) -> SearchReport:
    """Smallest canonical vertex-guard set that localizes P, sizes 1..kmax.

    Subsets that leave an edge uncovered are never tested: every edge must lie
    on some guard's boundary line. ``budget`` is in seconds.
    """
    t0 = time.monotonic()
    deadline = None if budget is None else t0 + budget
    candidates = enumerate_canonical_guards(P)
    table = GuardTable(P, candidates)
    workers = workers or worker_count()
    report = SearchReport(kmax, None, [], len(candidates), True)
    n = len(candidates)
    for k in range(1, kmax + 1):
        try:
            if workers > 1 and n > 1:
                chunks = [range(w, n, workers) for w in range(workers)]
                with ProcessPoolExecutor(workers) as pool:
                    results = list(pool.map(_worker, [(table, k, c, deadline) for c in chunks]))
                hits = [r[0] for r in results if r[0] is not None]
                report.subsets_checked += sum(r[1] for r in results)
                if any(r[2] for r in results) and not hits:
                    raise _Budget
                found = min(hits) if hits else None
            else:
                found, checked = _search_size(table, k, range(n), deadline)
                report.subsets_checked += checked
        except _Budget:
            report.exhaustive = False
            break
        if found is None:
            report.infeasible_sizes.append(k)
            continue
        guards = [candidates[j] for j in found]
        report.chosen = list(found)
        report.best_found = _finish(P, guards, VERTEX)
        break
    report.elapsed = time.monotonic() - t0
    return report
