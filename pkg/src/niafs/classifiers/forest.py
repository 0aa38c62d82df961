"""Bagged CART forests with optional class balancing."""

import numpy as np

from ..errors import ValidationError
from ..rng import RngStream, as_stream
from ._common import Classifier, check_query, check_xy
from .tree import DecisionTreeClassifier

RF_MODES = ("neutral", "balanced", "balanced_subsample")


def balanced_weights(y):
    """``n / (2 * n_c)`` per class; a class absent from ``y`` gets weight 0."""
    counts = np.bincount(y, minlength=2).astype(float)
    return np.where(counts > 0, y.size / (2.0 * np.maximum(counts, 1.0)), 0.0)


class RandomForestClassifier(Classifier):
    """Each tree sees a bootstrap of the training set and ``sqrt(d)`` features per split.

    ``neutral`` uses unit weights, ``balanced`` inverse class frequencies of the
    whole training set, and ``balanced_subsample`` recomputes them on every
    bootstrap sample.
    """

    kind = "RandomForest"

    def __init__(self, n_trees=100, mode="neutral", max_depth=None, min_samples_split=2,
                 max_features="sqrt"):
        if int(n_trees) != n_trees or n_trees < 1:
            raise ValidationError(f"n_trees must be a positive integer, got {n_trees}")
        if mode not in RF_MODES:
            raise ValidationError(f"mode must be one of {RF_MODES}, got {mode!r}")
        self.n_trees = int(n_trees)
        self.mode = mode
        self.max_depth = max_depth
        self.min_samples_split = min_samples_split
        self.max_features = max_features

    def fit(self, X, y, rng=None):
        X, y = check_xy(X, y)
        rng = as_stream(0 if rng is None else rng)
        n = X.shape[0]
        full_weights = balanced_weights(y)
        trees = []
        for t in range(self.n_trees):
            tree_rng = rng.derive(t)
            idx = tree_rng.integers(0, n, size=n)
            yb = y[idx]
            if self.mode == "neutral":
                w = np.ones(n)
            elif self.mode == "balanced":
                w = full_weights[yb]
            else:
                w = balanced_weights(yb)[yb]
            tree = DecisionTreeClassifier(self.max_depth, self.min_samples_split, self.max_features)
            trees.append(tree.fit(X[idx], yb, rng=tree_rng, sample_weight=w))
        self.trees_ = tuple(trees)
        self.n_features_ = X.shape[1]
        return self

    def _votes(self, X):
        X = check_query(X, self.n_features_)
        return np.mean([t.predict(X) for t in self.trees_], axis=0)

    def predict_scores(self, X):
        return self._votes(X)

    def predict(self, X):
        # majority vote, a split vote goes to label 0
        return (self._votes(X) > 0.5).astype(np.int64)


def fit_random_forest(train, n_trees=100, mode="neutral", rng=None):
    if isinstance(rng, int) or rng is None:
        rng = RngStream(0 if rng is None else rng)
    return RandomForestClassifier(n_trees, mode).fit(train.features, train.labels, rng)
