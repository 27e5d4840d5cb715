import numpy as np
from sklearn.base import clone
from sklearn.pipeline import make_pipeline

from pinchband.diagram import torus_2n_diagram
from pinchband.estimators import KnotInvariantTransformer, RealizabilityClassifier


def test_transformer_features():
    X = ["PD[]", torus_2n_diagram(5), "PD[X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)]"]
    t = KnotInvariantTransformer()
    out = t.fit_transform(X)
    assert out.shape == (3, 4)
    assert out[1].tolist() == [5, 5, -4, 5]
    assert out[0].tolist() == [0, 0, 0, 1]
    sub = KnotInvariantTransformer(features=("sigma",)).fit(X)
    assert sub.transform(X).ravel().tolist() == [0, -4, -2]
    assert list(sub.get_feature_names_out()) == ["sigma"]


def test_transformer_params_and_clone():
    t = KnotInvariantTransformer(features=("writhe",))
    assert t.get_params() == {"features": ("writhe",)}
    assert clone(t).features == ("writhe",)
    try:
        KnotInvariantTransformer(features=("bogus",)).fit([])
    except ValueError:
        pass
    else:
        raise AssertionError("unknown feature accepted")


def test_classifier():
    X = np.array([[5, -6, 1], [5, -7, 1], [5, -10, 1], [13, -22, 1]])
    post = RealizabilityClassifier().fit(X)
    assert post.predict(X).tolist() == ["Realizable", "NotRealizable", "Realizable", "Unknown"]
    before = RealizabilityClassifier(post=False).fit(X)
    assert before.predict(X)[0] == "Unknown"
    assert post.score(X, ["Realizable", "NotRealizable", "Realizable", "Unknown"]) == 1.0
    assert set(post.classes_) == {"Realizable", "Unknown", "NotRealizable"}
    assert clone(before).get_params() == {"post": False}


def test_pipeline():
    pipe = make_pipeline(KnotInvariantTransformer(features=("sigma", "determinant")))
    assert pipe.fit_transform(["PD[]"]).tolist() == [[0, 1]]
