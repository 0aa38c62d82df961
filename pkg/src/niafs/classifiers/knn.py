"""k-nearest-neighbour classification by Euclidean distance."""

import numpy as np

from .. import kernels
from ..errors import ValidationError
from ._common import Classifier, check_query, check_xy, freeze


class KNNClassifier(Classifier):
    """Majority vote among the ``k`` nearest training rows.

    Equidistant neighbours are ranked by training-row order. A tied vote goes
    to the class with the smaller summed distance, then to label 0.
    """

    kind = "KNN"

    def __init__(self, k=5):
        if int(k) != k or k < 1:
            raise ValidationError(f"k must be a positive integer, got {k}")
        self.k = int(k)

    def fit(self, X, y, rng=None):
        X, y = check_xy(X, y)
        if self.k > X.shape[0]:
            raise ValidationError(f"k={self.k} exceeds the training size {X.shape[0]}")
        self.X_, self.y_ = X.copy(), y.copy()
        freeze(self.X_, self.y_)
        return self

    def _vote(self, X):
        X = check_query(X, self.X_.shape[1])
        D = kernels.sq_distances(X, self.X_)
        return kernels.knn_vote(D, self.y_, self.k)

    def predict(self, X):
        return self._vote(X)[0]

    def predict_scores(self, X):
        return self._vote(X)[1]


def knn_classify(train, test_row, k):
    return int(KNNClassifier(k).fit(train.features, train.labels).predict(test_row)[0])
