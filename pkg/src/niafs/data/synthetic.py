"""Synthetic datasets with known informative features, used by tests and benchmarks."""

from __future__ import annotations

import numpy as np

from ..errors import ValidationError
from ..rng import as_stream
from .dataset import Dataset


def _named(X, y, kind, informative):
    enc = {f"x{i}": {"type": "numeric", "informative": i in informative, "fixture": kind}
           for i in range(X.shape[1])}
    return Dataset(X, y, tuple(enc), enc)


def planted_dataset(n=1000, d=20, informative=(0, 1, 2, 3, 4), seed=0) -> Dataset:
    """Uniform features; the label is 1 when the informative features sum past their mean.

    The rule is a hyperplane, so it is separable using exactly the informative
    columns and each of them carries signal on its own.
    """
    informative = tuple(int(i) for i in informative)
    if not informative or max(informative) >= d or len(set(informative)) != len(informative):
        raise ValidationError(f"informative indices {informative} invalid for d={d}")
    rng = as_stream(seed)
    X = rng.random((n, d))
    y = (X[:, informative].sum(axis=1) > 0.5 * len(informative)).astype(np.int64)
    return _named(X, y, "planted", informative)


def interaction_dataset(n=500, d=6, pair=(0, 3), seed=0) -> Dataset:
    """Label = XOR of two thresholded features; neither feature predicts it alone."""
    a, b = pair
    rng = as_stream(seed)
    X = rng.random((n, d))
    y = ((X[:, a] > 0.5) ^ (X[:, b] > 0.5)).astype(np.int64)
    return _named(X, y, "interaction", pair)


def separable_dataset(n=200, d=4, feature=0, gap=0.2, seed=0) -> Dataset:
    """One feature splits the classes with a margin; the rest are noise."""
    rng = as_stream(seed)
    X = rng.random((n, d))
    y = np.arange(n) % 2
    y = y[rng.permutation(n)]
    half = (1.0 - gap) / 2
    X[:, feature] = np.where(y == 1, 1.0 - half * rng.random(n), half * rng.random(n))
    return _named(X, y.astype(np.int64), "separable", (feature,))


def noise_dataset(n=200, d=20, seed=0) -> Dataset:
    """Features independent of a balanced, shuffled label vector."""
    rng = as_stream(seed)
    X = rng.random((n, d))
    y = (np.arange(n) % 2)[rng.permutation(n)]
    return _named(X, y.astype(np.int64), "noise", ())


def mixed_dataset(n=300, d=8, informative=(1, 5, 6), noise_rate=0.05, seed=0) -> Dataset:
    """Planted rule with label noise; a small-d fixture for exhaustive comparison."""
    rng = as_stream(seed)
    base = planted_dataset(n, d, informative, seed=rng.integers(2**63))
    flip = rng.random(n) < noise_rate
    y = np.where(flip, 1 - base.labels, base.labels)
    return _named(np.array(base.features), y.astype(np.int64), "mixed", tuple(informative))
