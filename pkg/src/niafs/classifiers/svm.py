"""Support vector machine trained by simplified SMO."""

import numpy as np

from .. import kernels
from ..errors import ValidationError
from ..rng import as_stream
from ._common import Classifier, check_query, check_xy, freeze


def kernel_matrix(A, B, kind, gamma):
    if kind == "linear":
        return A @ B.T
    return np.exp(-gamma * kernels.sq_distances(A, B))


class SVMClassifier(Classifier):
    """Soft-margin SVM on the dual, pair updates chosen as in simplified SMO.

    Examples violating the KKT conditions by more than ``tol`` are visited in
    order and paired with a random second index. Training stops after
    ``max_passes`` consecutive sweeps with no update, or after ``max_iter``
    sweeps, in which case :attr:`converged_` is False.
    """

    kind = "SVM"

    def __init__(self, C=1.0, kernel="rbf", gamma="scale", tol=1e-3, max_passes=5, max_iter=1000):
        if C <= 0:
            raise ValidationError(f"C must be positive, got {C}")
        if kernel not in ("rbf", "linear"):
            raise ValidationError(f"kernel must be 'rbf' or 'linear', got {kernel!r}")
        self.C = float(C)
        self.kernel = kernel
        self.gamma = gamma
        self.tol = float(tol)
        self.max_passes = int(max_passes)
        self.max_iter = int(max_iter)

    def _gamma(self, X):
        if self.gamma == "scale":
            var = X.var()
            return 1.0 / (X.shape[1] * var) if var > 0 else 1.0
        return float(self.gamma)

    def fit(self, X, y, rng=None):
        X, y = check_xy(X, y)
        rng = as_stream(0 if rng is None else rng)
        self.n_features_ = X.shape[1]
        self.gamma_ = self._gamma(X)
        classes = np.unique(y)
        if classes.size == 1:
            self.constant_ = int(classes[0])
            self.converged_ = True
            return self
        self.constant_ = None
        ys = np.where(y == 1, 1.0, -1.0)
        K = np.ascontiguousarray(kernel_matrix(X, X, self.kernel, self.gamma_))
        rand_u = rng.random(max(4096, 16 * X.shape[0]))
        alpha, b, converged = kernels.smo_solve(K, ys, self.C, self.tol, self.max_passes, self.max_iter, rand_u)
        sv = alpha > 1e-8
        self.support_vectors_ = X[sv].copy()
        self.dual_coef_ = (alpha * ys)[sv]
        self.intercept_ = float(b)
        self.converged_ = bool(converged)
        freeze(self.support_vectors_, self.dual_coef_)
        return self

    def decision_function(self, X):
        X = check_query(X, self.n_features_)
        if self.constant_ is not None:
            return np.full(X.shape[0], 1.0 if self.constant_ == 1 else -1.0)
        if self.support_vectors_.shape[0] == 0:
            return np.full(X.shape[0], self.intercept_)
        K = kernel_matrix(X, self.support_vectors_, self.kernel, self.gamma_)
        return K @ self.dual_coef_ + self.intercept_

    def predict_scores(self, X):
        return self.decision_function(X)

    def predict(self, X):
        return (self.decision_function(X) > 0).astype(np.int64)


def fit_svm_smo(train, C=1.0, kernel="rbf", gamma="scale", tol=1e-3, max_passes=5, rng=None):
    return SVMClassifier(C, kernel, gamma, tol, max_passes).fit(train.features, train.labels, rng)
