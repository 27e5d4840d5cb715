"""scikit-learn style wrappers for batch work.

Both estimators are stateless: ``fit`` only validates and records shapes.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin

from .diagram import Diagram, orient, parse_pd
from .goeritz import knot_signature
from .realizability import Verdict, status_allen, status_post

__all__ = ["KnotInvariantTransformer", "RealizabilityClassifier"]


def _as_diagram(x) -> Diagram:
    return x if isinstance(x, Diagram) else parse_pd(str(x))


class KnotInvariantTransformer(TransformerMixin, BaseEstimator):
    """Map PD codes (or diagrams) to rows of integer invariants.

    ``features`` picks columns from ``crossings``, ``writhe``, ``sigma``
    and ``determinant``.
    """

    FEATURES = ("crossings", "writhe", "sigma", "determinant")

    def __init__(self, features=FEATURES):
        self.features = features

    def fit(self, X, y=None):
        unknown = set(self.features) - set(self.FEATURES)
        if unknown:
            raise ValueError(f"unknown features: {sorted(unknown)}")
        self.n_features_out_ = len(self.features)
        return self

    def transform(self, X):
        rows = []
        for x in X:
            d = _as_diagram(x)
            rep = knot_signature(d)
            values = {
                "crossings": len(d),
                "writhe": orient(d).writhe,
                "sigma": rep.sigma,
                "determinant": rep.determinant,
            }
            rows.append([values[f] for f in self.features])
        return np.asarray(rows, dtype=np.int64).reshape(len(rows), len(self.features))

    def get_feature_names_out(self, input_features=None):
        return np.asarray(self.features, dtype=object)


class RealizabilityClassifier(ClassifierMixin, BaseEstimator):
    """Predict the verdict for rows ``(n, e, h)``; the rules are fixed."""

    def __init__(self, post: bool = True):
        self.post = post

    def fit(self, X, y=None):
        X = np.asarray(X, dtype=np.int64)
        if X.ndim != 2 or X.shape[1] != 3:
            raise ValueError("X must have shape (n_samples, 3) with columns n, e, h")
        self.classes_ = np.asarray([v.value for v in Verdict], dtype=object)
        self.n_features_in_ = 3
        return self

    def predict(self, X):
        status = status_post if self.post else status_allen
        X = np.asarray(X, dtype=np.int64)
        return np.asarray(
            [status(int(n), int(e), int(h)).verdict.value for n, e, h in X], dtype=object
        )
