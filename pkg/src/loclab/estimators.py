"""scikit-learn style wrappers.

``KeySetEncoder`` turns points into key-membership features, and
``MonotoneDNFClassifier`` learns the subset-minimal monotone DNF from labeled
key sets. Chained in a Pipeline and fitted on one representative per
arrangement cell, they reproduce ``synthesize_dnf`` exactly.
``ArrangementLocalizer`` does the whole job for a polygon in one estimator.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.pipeline import Pipeline
from sklearn.utils.validation import check_is_fitted

from .arrangement import (check_formula, collect_lines, decide, dnf_from_terms,
                          enumerate_cells, label_cells, minimal_terms, synthesize_dnf)
from .exceptions import NotLocalizableError
from .model import Polygon, cone_contains, evaluate_formula, key_set_at
from .validation import check_guards, check_key_matrix, check_labels, check_points


class KeySetEncoder(TransformerMixin, BaseEstimator):
    """Map points to a boolean matrix: column j is "inside guard j's cone"."""

    def __init__(self, guards=()):
        self.guards = guards

    def fit(self, X=None, y=None):
        self.guards_ = check_guards(self.guards)
        self.keys_ = [g.key for g in self.guards_]
        self.n_features_in_ = 2
        return self

    def transform(self, X):
        check_is_fitted(self, "guards_")
        pts = check_points(X)
        out = np.zeros((len(pts), len(self.guards_)), dtype=bool)
        for i, p in enumerate(pts):
            for j, g in enumerate(self.guards_):
                out[i, j] = cone_contains(g, p)
        return out

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "keys_")
        return np.asarray(self.keys_, dtype=object)


def _first_violation(pos: np.ndarray, neg: np.ndarray):
    """Indices (i, j) with pos[i] <= neg[j] componentwise, or None."""
    if len(pos) == 0 or len(neg) == 0:
        return None
    covered = ~(pos[:, None, :] & ~neg[None, :, :]).any(axis=2)
    hits = np.argwhere(covered)
    return tuple(int(v) for v in hits[0]) if len(hits) else None


class MonotoneDNFClassifier(ClassifierMixin, BaseEstimator):
    """Consistent monotone DNF for labeled key sets.

    ``fit`` raises NotLocalizableError when some positive sample's key set is
    contained in a negative one's: then no monotone formula fits the data.
    """

    def __init__(self, keys=None):
        self.keys = keys

    def fit(self, X, y):
        M, keys = check_key_matrix(X, self.keys)
        y = check_labels(y, M.shape[0])
        pos_rows, neg_rows = np.flatnonzero(y), np.flatnonzero(~y)
        pos, neg = M[pos_rows], M[neg_rows]
        hit = _first_violation(pos, neg)
        if hit is not None:
            raise NotLocalizableError(
                "no monotone formula separates the samples",
                witness=(int(pos_rows[hit[0]]), int(neg_rows[hit[1]])))
        if len(pos_rows) == 0:
            raise ValueError("need at least one positive sample")
        sets = [frozenset(keys[j] for j in np.flatnonzero(row)) for row in pos]
        self.terms_ = minimal_terms(sets)
        if any(not t for t in self.terms_):
            raise NotLocalizableError("a positive sample carries no key; the formula would be constant")
        self.keys_ = keys
        self.formula_ = dnf_from_terms(self.terms_)
        self.classes_ = np.array([False, True])
        self.n_features_in_ = len(keys)
        return self

    def predict(self, X):
        check_is_fitted(self, "formula_")
        M, _ = check_key_matrix(X, self.keys_)
        out = np.zeros(M.shape[0], dtype=bool)
        for i, row in enumerate(M):
            present = {self.keys_[j] for j in np.flatnonzero(row)}
            out[i] = evaluate_formula(self.formula_, present)
        return out


def cell_samples(P: Polygon, guards):
    """One representative point per arrangement cell with its inside flag."""
    lines = collect_lines(P, guards)
    labeling = label_cells(P, guards, enumerate_cells(lines), lines)
    return ([c.representative for c in labeling],
            np.array([c.inside for c in labeling], dtype=bool))


def make_localizer(guards) -> Pipeline:
    guards = check_guards(guards)
    keys = [g.key for g in guards]
    return Pipeline([("keys", KeySetEncoder(guards)), ("dnf", MonotoneDNFClassifier(keys=keys))])


class ArrangementLocalizer(ClassifierMixin, BaseEstimator):
    """Exact localizer for one polygon.

    ``fit(P)`` labels every arrangement cell. With ``formula=None`` it
    synthesizes the canonical DNF (raising if the guards cannot localize P);
    otherwise it checks the given formula and records the verdict.
    ``predict(points)`` evaluates the formula on each point's key set.
    """

    def __init__(self, guards=(), formula=None):
        self.guards = guards
        self.formula = formula

    def fit(self, X, y=None):
        if not isinstance(X, Polygon):
            X = Polygon(X)
        guards = check_guards(self.guards)
        lines = collect_lines(X, guards)
        self.labeling_ = label_cells(X, guards, enumerate_cells(lines), lines)
        self.lines_ = lines
        self.polygon_ = X
        self.guards_ = guards
        self.localizable_ = decide(self.labeling_)
        if self.formula is None:
            self.formula_ = synthesize_dnf(self.labeling_)
        else:
            self.formula_ = self.formula
        self.verdict_ = check_formula(self.labeling_, self.formula_)
        self.classes_ = np.array([False, True])
        return self

    def predict(self, X):
        check_is_fitted(self, "formula_")
        pts = check_points(X)
        return np.array([evaluate_formula(self.formula_, key_set_at(self.guards_, p)) for p in pts],
                        dtype=bool)
