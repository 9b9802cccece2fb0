"""Estimator-style wrappers so brick decisions slot into scikit-learn pipelines.

Nothing is learned: ``fit`` only checks the algebra and records it.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .correspondence import is_brick, w_ba
from .morphisms import oracle_is_brick
from .traced_poset import build_traced_poset
from .validation import check_bands, check_presentation


class BandBrickClassifier(ClassifierMixin, BaseEstimator):
    """Predict whether length-one band modules are bricks.

    Parameters
    ----------
    presentation : Presentation, path or bundled name, optional
        Needed when ``X`` holds band text rather than :class:`Band` objects.
    method : {"crowns", "oracle"}
        Crown criterion over the traced poset, or brute-force morphism search.
    l : int
        Multiplicity shared by every module.
    """

    def __init__(self, presentation=None, method="crowns", l=1):
        self.presentation = presentation
        self.method = method
        self.l = l

    def fit(self, X, y=None):
        if self.method not in ("crowns", "oracle"):
            raise ValueError("method must be 'crowns' or 'oracle'")
        p, _ = check_bands(X, self.presentation)
        acyclic = self.method == "crowns"
        self.presentation_ = check_presentation(p, acyclic=acyclic)
        if acyclic:
            build_traced_poset(self.presentation_)
        self.classes_ = np.array([False, True])
        return self

    def predict(self, X):
        check_is_fitted(self, "presentation_")
        _, bands = check_bands(X, self.presentation_)
        if self.method == "crowns":
            out = [is_brick(b, self.l) for b in bands]
        else:
            out = [oracle_is_brick(b, self.l) for b in bands]
        return np.array(out, dtype=bool)


class CrownTransformer(TransformerMixin, BaseEstimator):
    """Map bands to the letter tuples of their crowns."""

    def __init__(self, presentation=None):
        self.presentation = presentation

    def fit(self, X, y=None):
        p, _ = check_bands(X, self.presentation)
        self.presentation_ = check_presentation(p, acyclic=True)
        return self

    def transform(self, X):
        check_is_fitted(self, "presentation_")
        _, bands = check_bands(X, self.presentation_)
        out = np.empty(len(bands), dtype=object)
        for i, b in enumerate(bands):
            out[i] = w_ba(b).letters
        return out
