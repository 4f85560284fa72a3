"""Input checks shared by the estimators and the CLI."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .exceptions import DuplicateKeyError
from .geometry import Point, as_scalar
from .model import Guard


def check_points(X) -> list[Point]:
    """Coerce an iterable of (x, y) pairs to exact Points.

    Accepts Points, pairs of ints/Fractions/"p/q" strings, and object arrays
    holding those. Float input is refused rather than silently rounded.
    """
    if isinstance(X, np.ndarray):
        if X.dtype.kind == "f":
            raise TypeError("float arrays are not accepted; pass Fractions or 'p/q' strings")
        X = X.tolist()
    points = []
    for k, p in enumerate(X):
        if isinstance(p, Point):
            points.append(p)
            continue
        try:
            x, y = p
        except (TypeError, ValueError):
            raise ValueError(f"sample {k} is not an (x, y) pair") from None
        points.append(Point(as_scalar(x), as_scalar(y)))
    return points


def check_guards(guards: Iterable[Guard]) -> list[Guard]:
    guards = list(guards)
    for g in guards:
        if not isinstance(g, Guard):
            raise TypeError(f"expected Guard, got {type(g).__name__}")
    keys = [g.key for g in guards]
    if len(set(keys)) != len(keys):
        dupes = sorted({k for k in keys if keys.count(k) > 1})
        raise DuplicateKeyError(f"duplicate guard keys: {', '.join(dupes)}")
    return guards


def check_key_matrix(X, keys: Sequence[str] | None = None):
    """Return (indicator matrix, key names) from a 0/1 matrix or a list of key sets."""
    if isinstance(X, np.ndarray) and X.ndim == 2:
        M = X.astype(bool)
        if keys is None:
            keys = [f"k{j}" for j in range(M.shape[1])]
        if len(keys) != M.shape[1]:
            raise ValueError(f"{M.shape[1]} columns but {len(keys)} key names")
        return M, list(keys)
    sets = [frozenset(s) for s in X]
    if keys is None:
        keys = sorted(set().union(*sets)) if sets else []
    index = {k: j for j, k in enumerate(keys)}
    M = np.zeros((len(sets), len(keys)), dtype=bool)
    for i, s in enumerate(sets):
        for k in s:
            if k not in index:
                raise ValueError(f"sample {i} uses unknown key {k!r}")
            M[i, index[k]] = True
    return M, list(keys)


def check_labels(y, n: int) -> np.ndarray:
    y = np.asarray(y)
    if y.shape != (n,):
        raise ValueError(f"expected {n} labels, got shape {y.shape}")
    values = set(np.unique(y).tolist())
    if not values <= {0, 1, True, False}:
        raise ValueError("labels must be boolean inside/outside flags")
    return y.astype(bool)


def is_exact(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)
