import random
from fractions import Fraction

import pytest

from loclab.arrangement import collect_lines
from loclab.exceptions import InvalidGuardError, NonSimplePolygonError
from loclab.geometry import Direction, Point, cross, intersect_lines
from loclab.model import Guard, Polygon, natural_guard
from loclab.spike import SpikeParams, build_spike_polygon

F = Fraction


def pts(*coords):
    return [Point.of(x, y) for x, y in coords]


@pytest.fixture
def square():
    return Polygon(pts((0, 0), (1, 0), (1, 1), (0, 1)))


@pytest.fixture
def square_guards(square):
    return [natural_guard(square, 0, "internal", "k1"), natural_guard(square, 2, "internal", "k2")]


@pytest.fixture(scope="session")
def spike2():
    return build_spike_polygon(SpikeParams(2, 40, 2, 1))


@pytest.fixture(scope="session")
def spike4():
    return build_spike_polygon(SpikeParams(4, 40, 2, 1))


_DIRS = [(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (-1, 1), (1, -1), (-1, -1),
         (2, 1), (1, 2), (-2, 1), (1, -2)]


def random_scene(rng: random.Random, max_lines=8, extent=None):
    """Small integer polygon (3 or 4 vertices) plus guards, at most ``max_lines`` lines.

    Some scenes are triangles with natural internal corner guards so that
    localizable instances are common. With ``extent`` set, scenes whose line
    crossings fall outside [-extent, 6 + extent] are redrawn.
    """
    while True:
        P, guards = _draw_scene(rng, max_lines)
        if extent is None or _crossings_within(P, guards, -extent, 6 + extent):
            return P, guards


def _crossings_within(P, guards, lo, hi):
    lines = collect_lines(P, guards)
    for i, a in enumerate(lines):
        for b in lines[i + 1:]:
            p = intersect_lines(a, b)
            if isinstance(p, Point) and not (lo <= p.x <= hi and lo <= p.y <= hi):
                return False
    return True


def _draw_scene(rng, max_lines):
    if rng.random() < 0.3:
        while True:
            try:
                P = Polygon(pts(*[(rng.randint(0, 6), rng.randint(0, 6)) for _ in range(3)]))
                break
            except NonSimplePolygonError:
                pass
        corners = rng.sample(range(3), rng.choice((2, 3)))
        return P, [natural_guard(P, v, "internal", f"g{k}") for k, v in enumerate(corners)]
    while True:
        k = rng.choice((3, 4))
        verts = [(rng.randint(0, 6), rng.randint(0, 6)) for _ in range(k)]
        try:
            P = Polygon(pts(*verts))
        except NonSimplePolygonError:
            continue
        guards = []
        budget = max_lines - len(P)
        tries = 0
        while budget >= 2 and len(guards) < 3 and tries < 20:
            tries += 1
            key = f"g{len(guards)}"
            if rng.random() < 0.5:
                g = natural_guard(P, rng.randrange(len(P)), rng.choice(("internal", "external")), key)
            else:
                apex = Point.of(rng.randint(0, 6), rng.randint(0, 6))
                d1 = Direction.of(*rng.choice(_DIRS))
                d2 = Direction.of(*rng.choice(_DIRS))
                if rng.random() < 0.15:
                    d2 = -d1
                try:
                    g = Guard(apex, d1, d2, cross(d1, d2) < 0, key)
                except InvalidGuardError:
                    continue
            if len(collect_lines(P, guards + [g])) > max_lines:
                continue
            guards.append(g)
            budget = max_lines - len(collect_lines(P, guards))
        if rng.random() < 0.1:
            guards = guards[:1]
        return P, guards


def as_oracle_guard(g):
    return ((g.apex.x, g.apex.y), (g.d1.dx, g.d1.dy), (g.d2.dx, g.d2.dy), g.reflex)


# acceptance lines are collected here and echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
