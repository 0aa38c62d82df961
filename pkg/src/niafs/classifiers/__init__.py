"""Classifiers and metrics, addressed by the names used in run configurations."""

from ..errors import ValidationError
from .forest import RF_MODES, RandomForestClassifier, balanced_weights, fit_random_forest
from .knn import KNNClassifier, knn_classify
from .metrics import Metrics, confusion_matrix, metric_accuracy, metric_auc, metric_f1
from .mlp import MLPClassifier, fit_mlp
from .svm import SVMClassifier, fit_svm_smo
from .tree import NO_SPLIT, DecisionTreeClassifier, Split, best_split, fit_decision_tree, gini_impurity

# grid column name -> (class, fixed keyword arguments)
CLASSIFIERS = {
    "SVM": (SVMClassifier, {}),
    "RF_neutral": (RandomForestClassifier, {"mode": "neutral"}),
    "RF_balanced": (RandomForestClassifier, {"mode": "balanced"}),
    "RF_balanced_subsample": (RandomForestClassifier, {"mode": "balanced_subsample"}),
    "KNN": (KNNClassifier, {}),
    "DecisionTree": (DecisionTreeClassifier, {}),
    "MLP": (MLPClassifier, {}),
}
DEFAULT_CLASSIFIERS = tuple(CLASSIFIERS)


def make_classifier(name, **params):
    if name not in CLASSIFIERS:
        raise ValidationError(f"unknown classifier {name!r}; expected one of {sorted(CLASSIFIERS)}")
    cls, fixed = CLASSIFIERS[name]
    kwargs = dict(fixed)
    kwargs.update(params)
    try:
        return cls(**kwargs)
    except TypeError as exc:
        raise ValidationError(f"bad parameters for {name}: {exc}") from None


__all__ = [
    "CLASSIFIERS",
    "DEFAULT_CLASSIFIERS",
    "DecisionTreeClassifier",
    "KNNClassifier",
    "MLPClassifier",
    "Metrics",
    "NO_SPLIT",
    "RF_MODES",
    "RandomForestClassifier",
    "SVMClassifier",
    "Split",
    "balanced_weights",
    "best_split",
    "confusion_matrix",
    "fit_decision_tree",
    "fit_mlp",
    "fit_random_forest",
    "fit_svm_smo",
    "gini_impurity",
    "knn_classify",
    "make_classifier",
    "metric_accuracy",
    "metric_auc",
    "metric_f1",
]
