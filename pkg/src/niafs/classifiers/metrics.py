"""Binary classification metrics."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

from ..errors import DimensionError, ValidationError


def _pair(predicted, actual):
    p = np.asarray(predicted)
    a = np.asarray(actual)
    if p.shape != a.shape:
        raise DimensionError(f"predicted {p.shape} and actual {a.shape} differ in length")
    return p, a


def metric_accuracy(predicted, actual) -> float:
    p, a = _pair(predicted, actual)
    if a.size == 0:
        raise ValidationError("accuracy of an empty evaluation set is undefined")
    return float(np.count_nonzero(p == a)) / a.size


def confusion_matrix(predicted, actual) -> np.ndarray:
    """``[[TN, FP], [FN, TP]]`` with rows indexed by the actual label."""
    p, a = _pair(predicted, actual)
    out = np.zeros((2, 2), dtype=np.int64)
    for i in (0, 1):
        for j in (0, 1):
            out[i, j] = np.count_nonzero((a == i) & (p == j))
    return out


def metric_f1(predicted, actual, positive_label=1) -> float:
    p, a = _pair(predicted, actual)
    tp = np.count_nonzero((p == positive_label) & (a == positive_label))
    fp = np.count_nonzero((p == positive_label) & (a != positive_label))
    fn = np.count_nonzero((p != positive_label) & (a == positive_label))
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    if precision + recall == 0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def metric_auc(scores, actual) -> float:
    """Mann-Whitney AUC; tied scores count one half."""
    s, a = _pair(scores, actual)
    n_pos = int(np.count_nonzero(a == 1))
    n_neg = int(np.count_nonzero(a == 0))
    if n_pos == 0 or n_neg == 0:
        raise ValidationError("AUC is undefined when only one class is present")
    ranks = rankdata(s, method="average")
    u = ranks[a == 1].sum() - n_pos * (n_pos + 1) / 2.0
    return float(u / (n_pos * n_neg))


@dataclass(frozen=True)
class Metrics:
    accuracy: float
    f1: float
    auc: float
    confusion: np.ndarray

    @classmethod
    def compute(cls, predicted, scores, actual) -> "Metrics":
        a = np.asarray(actual)
        try:
            auc = metric_auc(scores, a)
        except ValidationError:
            auc = float("nan")
        return cls(
            accuracy=metric_accuracy(predicted, a),
            f1=metric_f1(predicted, a, 1),
            auc=auc,
            confusion=confusion_matrix(predicted, a),
        )
