"""CART decision trees grown on weighted Gini impurity."""

from __future__ import annotations

from typing import NamedTuple, Optional

import numpy as np

from .. import kernels
from ..errors import ValidationError
from ._common import Classifier, check_query, check_xy, freeze


def gini_impurity(labels) -> float:
    y = np.asarray(labels)
    if y.size == 0:
        raise ValidationError("Gini impurity of an empty set is undefined")
    _, counts = np.unique(y, return_counts=True)
    p = counts / y.size
    return float(1.0 - np.sum(p * p))


class Split(NamedTuple):
    feature: int
    threshold: float
    gain: float

    @property
    def found(self) -> bool:
        return self.feature >= 0


NO_SPLIT = Split(-1, float("nan"), 0.0)


def best_split(X, y, feature_subset=None, sample_weight=None) -> Split:
    """Exhaustive midpoint scan maximising the weighted Gini decrease.

    Ties go to the lowest feature index, then the lowest threshold. Returns
    :data:`NO_SPLIT` when every candidate feature is constant.
    """
    X = np.ascontiguousarray(X, dtype=float)
    y = np.asarray(y).astype(np.int64)
    w = np.ones(y.size) if sample_weight is None else np.ascontiguousarray(sample_weight, dtype=float)
    feats = np.arange(X.shape[1]) if feature_subset is None else np.sort(np.asarray(feature_subset))
    f, thr, gain = kernels.split_scan(X, y, w, feats.astype(np.int64))
    if f < 0:
        return NO_SPLIT
    return Split(int(f), float(thr), float(gain))


class DecisionTreeClassifier(Classifier):
    kind = "DecisionTree"

    def __init__(self, max_depth: Optional[int] = None, min_samples_split: int = 2, max_features=None):
        if max_depth is not None and max_depth < 0:
            raise ValidationError(f"max_depth must be >= 0 or None, got {max_depth}")
        if min_samples_split < 2:
            raise ValidationError(f"min_samples_split must be >= 2, got {min_samples_split}")
        self.max_depth = max_depth
        self.min_samples_split = int(min_samples_split)
        self.max_features = max_features

    def _n_candidates(self, d):
        mf = self.max_features
        if mf is None:
            return d
        if mf == "sqrt":
            return max(1, int(np.sqrt(d)))
        return max(1, min(d, int(mf)))

    def fit(self, X, y, rng=None, sample_weight=None):
        X, y = check_xy(X, y)
        n, d = X.shape
        w = np.ones(n) if sample_weight is None else np.asarray(sample_weight, dtype=float)
        m = self._n_candidates(d)
        if m < d and rng is None:
            raise ValidationError("feature subsampling needs an rng")
        feature, threshold, left, right, prob = [], [], [], [], []

        def new_node(rows):
            w1 = w[rows][y[rows] == 1].sum()
            w0 = w[rows][y[rows] == 0].sum()
            feature.append(-1)
            threshold.append(np.nan)
            left.append(-1)
            right.append(-1)
            prob.append(w1 / (w0 + w1) if w0 + w1 > 0 else 0.0)
            return len(feature) - 1, w0, w1

        root, w0, w1 = new_node(np.arange(n))
        stack = [(root, np.arange(n), 0, w0, w1)]
        while stack:
            node, rows, depth, w0, w1 = stack.pop()
            if w0 == 0 or w1 == 0 or rows.size < self.min_samples_split:
                continue
            if self.max_depth is not None and depth >= self.max_depth:
                continue
            Xn, yn, wn = X[rows], y[rows], w[rows]
            if m < d:
                order = rng.permutation(d)
                split = best_split(Xn, yn, order[:m], wn)
                if not split.found:
                    split = best_split(Xn, yn, order[m:], wn)
            else:
                split = best_split(Xn, yn, None, wn)
            if not split.found:
                continue
            go_left = Xn[:, split.feature] <= split.threshold
            feature[node] = split.feature
            threshold[node] = split.threshold
            lid, lw0, lw1 = new_node(rows[go_left])
            rid, rw0, rw1 = new_node(rows[~go_left])
            left[node], right[node] = lid, rid
            # right pushed first so the left subtree is numbered first
            stack.append((rid, rows[~go_left], depth + 1, rw0, rw1))
            stack.append((lid, rows[go_left], depth + 1, lw0, lw1))

        self.feature_ = np.array(feature, dtype=np.int64)
        self.threshold_ = np.array(threshold, dtype=float)
        self.left_ = np.array(left, dtype=np.int64)
        self.right_ = np.array(right, dtype=np.int64)
        self.prob_ = np.array(prob, dtype=float)
        self.n_features_ = d
        freeze(self.feature_, self.threshold_, self.left_, self.right_, self.prob_)
        return self

    @property
    def depth(self) -> int:
        def walk(i):
            if self.feature_[i] < 0:
                return 0
            return 1 + max(walk(self.left_[i]), walk(self.right_[i]))

        return walk(0)

    @property
    def n_nodes(self) -> int:
        return self.feature_.size

    def _leaves(self, X):
        X = check_query(X, self.n_features_)
        node = np.zeros(X.shape[0], dtype=np.int64)
        while True:
            f = self.feature_[node]
            inner = f >= 0
            if not inner.any():
                return node
            rows = np.flatnonzero(inner)
            goes_left = X[rows, f[rows]] <= self.threshold_[node[rows]]
            node[rows] = np.where(goes_left, self.left_[node[rows]], self.right_[node[rows]])

    def predict_scores(self, X):
        return self.prob_[self._leaves(X)]

    def predict(self, X):
        # weighted majority; an exact tie goes to label 0
        return (self.predict_scores(X) > 0.5).astype(np.int64)


def fit_decision_tree(train, max_depth=None, min_samples_split=2):
    return DecisionTreeClassifier(max_depth, min_samples_split).fit(train.features, train.labels)
