"""Train/test partitioning, stratified folds and min-max scaling."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ValidationError
from .dataset import Dataset


def _round_half_up(x):
    return int(np.floor(x + 0.5))


def split_indices(labels, train_fraction, stratified, rng):
    y = np.asarray(labels)
    n = y.size
    n_train = _round_half_up(train_fraction * n)
    if not stratified:
        perm = rng.permutation(n)
        return np.sort(perm[:n_train]), np.sort(perm[n_train:])
    classes = np.unique(y)
    per_class = {c: rng.permutation(np.flatnonzero(y == c)) for c in classes}
    quota = {c: _round_half_up(train_fraction * per_class[c].size) for c in classes}
    # settle rounding so the train size is exact; the largest classes absorb it
    by_size = sorted(classes, key=lambda c: (-per_class[c].size, c))
    diff = n_train - sum(quota.values())
    k = 0
    while diff != 0:
        c = by_size[k % len(by_size)]
        step = 1 if diff > 0 else -1
        if 0 <= quota[c] + step <= per_class[c].size:
            quota[c] += step
            diff -= step
        k += 1
    train = np.concatenate([per_class[c][: quota[c]] for c in classes])
    test = np.concatenate([per_class[c][quota[c]:] for c in classes])
    return np.sort(train), np.sort(test)


def split_train_test(data: Dataset, rng, ratio=(4, 1), stratified: bool = True):
    """Seeded 4:1 (by default) partition; ``|train| = round(0.8 n)``."""
    if data.n_rows < 5:
        raise ValidationError(f"need at least 5 rows to split, got {data.n_rows}")
    a, b = ratio
    if stratified and np.any(data.class_counts() == 0):
        raise ValidationError("stratified split needs both classes present")
    tr, te = split_indices(data.labels, a / (a + b), stratified, rng)
    return data.rows(tr), data.rows(te)


def stratified_folds(labels, k, rng):
    """Assign each row to one of ``k`` folds, dealing each class round-robin."""
    y = np.asarray(labels)
    if k < 2:
        raise ValidationError(f"need at least 2 folds, got {k}")
    fold = np.empty(y.size, dtype=np.int64)
    offset = 0
    for c in np.unique(y):
        idx = rng.permutation(np.flatnonzero(y == c))
        fold[idx] = (np.arange(idx.size) + offset) % k
        offset += idx.size
    return [(np.flatnonzero(fold != i), np.flatnonzero(fold == i)) for i in range(k)]


@dataclass(frozen=True)
class MinMaxScaler:
    minimum: np.ndarray
    scale: np.ndarray  # 0 marks a constant column

    @classmethod
    def fit(cls, X) -> "MinMaxScaler":
        X = np.asarray(X, dtype=float)
        lo = X.min(axis=0)
        rng_ = X.max(axis=0) - lo
        return cls(lo, rng_)

    def transform(self, X) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        safe = np.where(self.scale > 0, self.scale, 1.0)
        out = (X - self.minimum) / safe
        out = np.where(self.scale > 0, out, 0.0)
        return np.clip(out, 0.0, 1.0)


def scale_features(train, test):
    """Min-max scale to [0, 1] fitted on ``train``; returns ``(train', test', scaler)``.

    Accepts arrays or :class:`Dataset` objects.
    """
    def _x(d):
        return d.features if isinstance(d, Dataset) else np.asarray(d, dtype=float)

    Xtr = _x(train)
    if Xtr.shape[0] == 0:
        raise ValidationError("cannot fit a scaler on an empty training set")
    scaler = MinMaxScaler.fit(Xtr)

    def _apply(d):
        Z = scaler.transform(_x(d))
        if isinstance(d, Dataset):
            return Dataset(Z, d.labels, d.feature_names, d.encodings)
        return Z

    return _apply(train), _apply(test), scaler
