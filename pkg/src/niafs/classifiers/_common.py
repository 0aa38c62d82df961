import numpy as np

from ..errors import DimensionError, ValidationError


def check_xy(X, y):
    X = np.ascontiguousarray(X, dtype=float)
    y = np.asarray(y).astype(np.int64)
    if X.ndim != 2 or y.ndim != 1 or X.shape[0] != y.shape[0]:
        raise DimensionError(f"X {X.shape} and y {y.shape} do not align")
    if X.shape[0] == 0:
        raise ValidationError("empty training set")
    if not np.all((y == 0) | (y == 1)):
        raise ValidationError("labels must be binary 0/1")
    return X, y


def check_query(X, n_features):
    X = np.ascontiguousarray(np.atleast_2d(np.asarray(X, dtype=float)))
    if X.shape[1] != n_features:
        raise DimensionError(f"model was fitted on {n_features} features, got {X.shape[1]}")
    return X


def freeze(*arrays):
    for a in arrays:
        if isinstance(a, np.ndarray):
            a.setflags(write=False)


class Classifier:
    """Fit/predict protocol shared by every classifier."""

    kind = ""

    def fit(self, X, y, rng=None):  # pragma: no cover - interface
        raise NotImplementedError

    def predict(self, X):  # pragma: no cover - interface
        raise NotImplementedError

    def predict_scores(self, X):  # pragma: no cover - interface
        raise NotImplementedError
