"""Scene JSON: polygon, optional vertex roles, guards and an optional formula.

    {"polygon": [[x, y], ...], "roles": [...],
     "guards": [{"apex": [x, y], "d1": [dx, dy], "d2": [dx, dy],
                 "reflex": false, "key": "k1"}],
     "formula": ["and", "k1", ["or", "k2", "k3"]]}

Scalars are written as integer strings or "p/q" strings; JSON integers are
accepted on input. Floats are rejected.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .exceptions import (DuplicateKeyError, InvalidGuardError, SceneFormatError,
                         UnknownKeyError)
from .geometry import Direction, Point, format_scalar, parse_scalar
from .model import And, Formula, Guard, Key, Or, Polygon, formula_keys
from .spike import SpikeParams, SpikePolygon


@dataclass
class Scene:
    polygon: Polygon
    guards: list = field(default_factory=list)
    roles: Optional[list] = None
    formula: Optional[Formula] = None
    params: Optional[SpikeParams] = None

    def __post_init__(self):
        keys = [g.key for g in self.guards]
        dupes = sorted({k for k in keys if keys.count(k) > 1})
        if dupes:
            raise DuplicateKeyError(f"duplicate guard keys: {', '.join(dupes)}")
        if self.formula is not None:
            unknown = sorted(formula_keys(self.formula) - set(keys))
            if unknown:
                raise UnknownKeyError(f"formula references unknown keys: {', '.join(unknown)}")
        if self.roles is not None and len(self.roles) != len(self.polygon):
            raise SceneFormatError("roles must name every polygon vertex")

    @classmethod
    def from_spike(cls, sp: SpikePolygon, guards=(), formula=None) -> "Scene":
        return cls(sp.polygon, list(guards), list(sp.roles), formula, sp.params)

    def spike(self) -> SpikePolygon:
        if self.params is None or self.roles is None:
            raise SceneFormatError("scene carries no spike parameters (generate it with `gen`)")
        return SpikePolygon(self.params, self.polygon, tuple(self.roles))


def _scalar(value, where: str):
    if isinstance(value, bool) or isinstance(value, float):
        raise SceneFormatError(f"{where}: expected an exact scalar, got {value!r}")
    if isinstance(value, int):
        return parse_scalar(str(value))
    if isinstance(value, str):
        try:
            return parse_scalar(value)
        except ValueError as exc:
            raise SceneFormatError(f"{where}: {exc}") from None
    raise SceneFormatError(f"{where}: expected an exact scalar, got {value!r}")


def _pair(value, where: str):
    if not isinstance(value, list) or len(value) != 2:
        raise SceneFormatError(f"{where}: expected a pair [x, y]")
    return _scalar(value[0], where), _scalar(value[1], where)


def formula_from_json(node, where: str = "formula") -> Formula:
    if isinstance(node, str):
        if not node:
            raise SceneFormatError(f"{where}: empty key")
        return Key(node)
    if isinstance(node, list) and node and node[0] in ("and", "or"):
        if len(node) < 2:
            raise SceneFormatError(f"{where}: '{node[0]}' needs operands")
        kids = tuple(formula_from_json(c, where) for c in node[1:])
        return And(kids) if node[0] == "and" else Or(kids)
    raise SceneFormatError(f"{where}: expected a key or [\"and\"|\"or\", ...], got {node!r}")


def formula_to_json(f: Formula):
    if isinstance(f, Key):
        return f.name
    op = "and" if isinstance(f, And) else "or"
    return [op] + [formula_to_json(c) for c in f.children]


def guard_from_json(obj, where: str) -> Guard:
    if not isinstance(obj, dict):
        raise SceneFormatError(f"{where}: expected an object")
    missing = [k for k in ("apex", "d1", "d2", "key") if k not in obj]
    if missing:
        raise SceneFormatError(f"{where}: missing {', '.join(missing)}")
    reflex = obj.get("reflex", False)
    if not isinstance(reflex, bool):
        raise SceneFormatError(f"{where}: reflex must be a boolean")
    try:
        return Guard(Point(*_pair(obj["apex"], where)),
                     Direction.of(*_pair(obj["d1"], where)),
                     Direction.of(*_pair(obj["d2"], where)),
                     reflex, obj["key"])
    except (InvalidGuardError, ValueError) as exc:
        if isinstance(exc, SceneFormatError):
            raise
        raise SceneFormatError(f"{where}: {exc}") from None


def guard_to_json(g: Guard) -> dict:
    return {
        "apex": [format_scalar(g.apex.x), format_scalar(g.apex.y)],
        "d1": [format_scalar(g.d1.dx), format_scalar(g.d1.dy)],
        "d2": [format_scalar(g.d2.dx), format_scalar(g.d2.dy)],
        "reflex": g.reflex,
        "key": g.key,
    }


def scene_from_dict(data) -> Scene:
    if not isinstance(data, dict):
        raise SceneFormatError("scene must be a JSON object")
    if "polygon" not in data:
        raise SceneFormatError("scene has no polygon")
    if not isinstance(data["polygon"], list):
        raise SceneFormatError("polygon must be a list of [x, y] pairs")
    verts = [Point(*_pair(v, f"polygon[{k}]")) for k, v in enumerate(data["polygon"])]
    polygon = Polygon(verts)   # NonSimplePolygonError propagates as its own diagnostic
    guards = [guard_from_json(g, f"guards[{k}]") for k, g in enumerate(data.get("guards", []))]
    formula = formula_from_json(data["formula"]) if data.get("formula") is not None else None
    roles = data.get("roles")
    params = None
    if data.get("params") is not None:
        p = data["params"]
        try:
            params = SpikeParams(int(p["m"]), _scalar(p["w"], "params.w"),
                                 _scalar(p["h"], "params.h"), _scalar(p["delta"], "params.delta"))
        except (KeyError, TypeError) as exc:
            raise SceneFormatError(f"params: {exc}") from None
    return Scene(polygon, guards, roles, formula, params)


def scene_to_dict(scene: Scene) -> dict:
    out = {"polygon": [[format_scalar(p.x), format_scalar(p.y)] for p in scene.polygon.vertices]}
    if scene.roles is not None:
        out["roles"] = list(scene.roles)
    if scene.params is not None:
        p = scene.params
        out["params"] = {"m": p.m, "w": format_scalar(p.w), "h": format_scalar(p.h),
                         "delta": format_scalar(p.delta)}
    out["guards"] = [guard_to_json(g) for g in scene.guards]
    if scene.formula is not None:
        out["formula"] = formula_to_json(scene.formula)
    return out


def parse_scene(text) -> Scene:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneFormatError(f"malformed JSON: {exc}") from None
    return scene_from_dict(data)


def dump_scene(scene: Scene) -> str:
    return json.dumps(scene_to_dict(scene), indent=2) + "\n"
