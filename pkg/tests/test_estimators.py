from fractions import Fraction as F

import numpy as np
import pytest
from sklearn.base import clone

from conftest import pts
from loclab.arrangement import labeling_for, synthesize_dnf
from loclab.estimators import (ArrangementLocalizer, KeySetEncoder, MonotoneDNFClassifier,
                               cell_samples, make_localizer)
from loclab.exceptions import NotLocalizableError
from loclab.model import Key
from loclab.placements import tight_vertex_solution


def test_pipeline_reproduces_synthesis(square, square_guards):
    X, y = cell_samples(square, square_guards)
    pipe = make_localizer(square_guards).fit(X, y)
    assert pipe.named_steps["dnf"].formula_ == synthesize_dnf(labeling_for(square, square_guards))
    assert (pipe.predict(X) == y).all()


def test_pipeline_on_spike(spike2):
    sol = tight_vertex_solution(spike2)
    X, y = cell_samples(spike2.polygon, sol.guards)
    pipe = make_localizer(sol.guards).fit(X, y)
    assert pipe.named_steps["dnf"].formula_ == sol.formula
    assert (pipe.predict(X) == y).all()


def test_encoder(square_guards):
    enc = KeySetEncoder(square_guards).fit()
    M = enc.transform(pts((F(1, 2), F(1, 2)), (2, -1), (-1, -1)))
    assert M.tolist() == [[True, True], [False, False], [False, True]]
    assert list(enc.get_feature_names_out()) == ["k1", "k2"]


def test_classifier_refuses_non_monotone():
    X = np.array([[True, False], [True, True]])
    with pytest.raises(NotLocalizableError) as info:
        MonotoneDNFClassifier(keys=["a", "b"]).fit(X, np.array([True, False]))
    assert info.value.witness == (0, 1)


def test_classifier_learns_minimal_terms():
    X = np.array([[1, 0, 1], [1, 1, 1], [0, 1, 0], [0, 0, 1]], dtype=bool)
    y = np.array([True, True, False, False])
    clf = MonotoneDNFClassifier(keys=["a", "b", "c"]).fit(X, y)
    assert clf.terms_ == [frozenset({"a", "c"})]
    assert clf.predict(X).tolist() == y.tolist()


def test_params_and_clone(square_guards):
    est = ArrangementLocalizer(guards=square_guards)
    assert set(est.get_params()) == {"guards", "formula"}
    assert clone(est).get_params()["guards"] == square_guards
    assert clone(MonotoneDNFClassifier(keys=["a"])).keys == ["a"]


def test_localizer(square, square_guards):
    est = ArrangementLocalizer(square_guards).fit(square)
    assert est.localizable_.ok and est.verdict_.ok
    assert est.predict(pts((F(1, 2), F(1, 2)), (2, 2))).tolist() == [True, False]


def test_localizer_bad_formula(square, square_guards):
    est = ArrangementLocalizer(square_guards, formula=Key("k1")).fit(square)
    assert not est.verdict_.ok


def test_localizer_not_localizable(spike2):
    with pytest.raises(NotLocalizableError):
        ArrangementLocalizer([spike2.tip_guard(1)]).fit(spike2.polygon)


def test_rejects_floats(square_guards):
    enc = KeySetEncoder(square_guards).fit()
    with pytest.raises((TypeError, ValueError)):
        enc.transform([(0.5, 0.5)])
