"""Wrapper feature selection driven by the continuous optimizers.

An optimizer searches ``[0, 1]^d``; a position is turned into a feature mask
by thresholding and the mask is scored by training the wrapped classifier.
The fitness minimised is ``alpha * (1 - accuracy) + (1 - alpha) * selected / d``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .classifiers import make_classifier
from .classifiers.metrics import metric_accuracy
from .data.dataset import Dataset
from .data.split import MinMaxScaler, split_indices, stratified_folds
from .errors import EvaluationError, ValidationError
from .optimize.core import Objective, OptimizeResult, OptimizerSpec, SearchSpace, run_optimizer
from .rng import RngStream, as_stream

PROTOCOLS = ("paper_faithful", "leakage_safe")
EMPTY_MASK_FITNESS = 1.0


@dataclass(frozen=True)
class FeatureMask:
    included: np.ndarray
    source_position: np.ndarray

    @property
    def count(self) -> int:
        return int(np.count_nonzero(self.included))

    @property
    def indices(self) -> tuple:
        return tuple(int(i) for i in np.flatnonzero(self.included))

    def key(self) -> bytes:
        return np.packbits(self.included).tobytes() + bytes([self.included.size % 8])


@dataclass(frozen=True)
class FitnessSpec:
    classifier: str = "KNN"
    classifier_params: dict = field(default_factory=lambda: {"k": 5})
    alpha: float = 0.99
    protocol: str = "paper_faithful"
    inner_folds: int = 3
    threshold: float = 0.5
    scale: bool = True

    def __post_init__(self):
        if not 0.0 < self.alpha <= 1.0:
            raise ValidationError(f"alpha must lie in (0, 1], got {self.alpha}")
        if not 0.0 < self.threshold < 1.0:
            raise ValidationError(f"threshold must lie in (0, 1), got {self.threshold}")
        if self.protocol not in PROTOCOLS:
            raise ValidationError(f"protocol must be one of {PROTOCOLS}, got {self.protocol!r}")
        if int(self.inner_folds) != self.inner_folds or self.inner_folds < 2:
            raise ValidationError(f"inner_folds must be an integer >= 2, got {self.inner_folds}")
        make_classifier(self.classifier, **self.classifier_params)  # validates name and params


@dataclass
class SelectionResult:
    mask: FeatureMask
    wrapper_fitness: float
    selected_count: int
    optimizer_trace: OptimizeResult
    fell_back: bool = False


def binarize_position(position, threshold=0.5) -> FeatureMask:
    p = np.asarray(position, dtype=float)
    if p.ndim != 1:
        raise ValidationError(f"position must be a vector, got shape {p.shape}")
    if not np.all(np.isfinite(p)):
        raise ValidationError("position has non-finite components")
    if not 0.0 < threshold < 1.0:
        raise ValidationError(f"threshold must lie in (0, 1), got {threshold}")
    return FeatureMask(p >= threshold, p.copy())


def mask_from_indices(indices, d) -> FeatureMask:
    inc = np.zeros(d, dtype=bool)
    inc[list(indices)] = True
    return FeatureMask(inc, inc.astype(float))


class MaskFitness:
    """Memoised wrapper fitness over fixed evaluation splits.

    Splits are drawn once from ``evaluation_rng`` and the classifier is fitted
    with the same rewound stream for every mask, so the fitness is a pure
    function of the mask and caching it is safe.
    """

    def __init__(self, data: Dataset, spec: FitnessSpec, evaluation_rng):
        counts = data.class_counts()
        if data.n_features < 1:
            raise ValidationError("dataset has no features")
        if np.any(counts == 0):
            raise ValidationError("feature selection needs both classes present")
        self.data = data
        self.spec = spec
        rng = as_stream(evaluation_rng)
        split_rng, self._fit_rng = rng.derive(0), rng.derive(1)
        if spec.protocol == "paper_faithful":
            folds = [split_indices(data.labels, 0.8, True, split_rng)]
        else:
            if spec.inner_folds > counts.min():
                raise ValidationError(
                    f"inner_folds={spec.inner_folds} exceeds the minority class size {counts.min()}"
                )
            folds = stratified_folds(data.labels, spec.inner_folds, split_rng)
        self.folds = []
        X = data.features
        for tr, va in folds:
            if spec.scale:
                scaler = MinMaxScaler.fit(X[tr])
                Xtr, Xva = scaler.transform(X[tr]), scaler.transform(X[va])
            else:
                Xtr, Xva = X[tr], X[va]
            self.folds.append((Xtr, data.labels[tr], Xva, data.labels[va]))
        self.cache = {}
        self.classifier_calls = 0

    @property
    def d(self) -> int:
        return self.data.n_features

    def accuracy(self, mask: FeatureMask) -> float:
        cols = np.flatnonzero(mask.included)
        accs = []
        for Xtr, ytr, Xva, yva in self.folds:
            model = make_classifier(self.spec.classifier, **self.spec.classifier_params)
            model.fit(Xtr[:, cols], ytr, rng=self._fit_rng.fresh())
            accs.append(metric_accuracy(model.predict(Xva[:, cols]), yva))
        self.classifier_calls += 1
        return float(np.mean(accs))

    def score(self, mask: FeatureMask) -> float:
        if mask.included.size != self.d:
            raise ValidationError(f"mask has length {mask.included.size}, dataset has {self.d} features")
        key = mask.key()
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        if mask.count == 0:
            value = EMPTY_MASK_FITNESS
        else:
            try:
                acc = self.accuracy(mask)
            except Exception as exc:
                raise EvaluationError(
                    f"{self.spec.classifier} failed on mask {list(mask.indices)}: {exc}",
                    position=mask.source_position,
                ) from exc
            a = self.spec.alpha
            value = a * (1.0 - acc) + (1.0 - a) * mask.count / self.d
        self.cache[key] = value
        return value

    def score_positions(self, X) -> np.ndarray:
        X = np.atleast_2d(X)
        return np.array([self.score(binarize_position(x, self.spec.threshold)) for x in X])

    def objective(self) -> Objective:
        return Objective(lambda x: self.score_positions(x)[0], name=f"wrapper[{self.spec.classifier}]",
                         batch=self.score_positions, dimension=self.d)


def fitness_of_mask(mask: FeatureMask, data: Dataset, spec: FitnessSpec, rng) -> float:
    return MaskFitness(data, spec, rng).score(mask)


def select_features(data: Dataset, optimizer: OptimizerSpec, spec: FitnessSpec, rng,
                    evaluation_rng=None, fitness: MaskFitness = None) -> SelectionResult:
    """Search feature masks with ``optimizer`` and return the best one found.

    ``rng`` drives the optimizer. The evaluation splits come from
    ``evaluation_rng`` (default: a child of ``rng``); pass the same stream, or
    a prebuilt ``fitness``, to compare several optimizers on identical splits.
    """
    rng = as_stream(rng)
    if fitness is None:
        fitness = MaskFitness(data, spec, rng.derive(0) if evaluation_rng is None else evaluation_rng)
    space = SearchSpace.box(data.n_features, 0.0, 1.0)
    trace = run_optimizer(fitness.objective(), space, optimizer, rng.derive(1), record_history=True)
    mask = binarize_position(trace.best_position, spec.threshold)
    fell_back = mask.count == 0
    if fell_back:
        inc = np.zeros(data.n_features, dtype=bool)
        inc[int(np.argmax(trace.best_position))] = True
        mask = FeatureMask(inc, mask.source_position)
    return SelectionResult(mask, fitness.score(mask), mask.count, trace, fell_back)


def exhaustive_oracle(data: Dataset, spec: FitnessSpec, max_d: int = 12, rng=None,
                      fitness: MaskFitness = None):
    """Score every non-empty mask; ties go to the lexicographically smallest index tuple."""
    d = data.n_features
    if d > max_d:
        raise ValidationError(f"exhaustive search limited to d <= {max_d}, dataset has d={d}")
    if fitness is None:
        fitness = MaskFitness(data, spec, RngStream(0) if rng is None else rng)
    best, best_f = None, np.inf
    for size in range(1, d + 1):
        # combinations() yields index tuples in lexicographic order within a size
        for idx in itertools.combinations(range(d), size):
            f = fitness.score(mask_from_indices(idx, d))
            if f < best_f or (f == best_f and idx < best):
                best, best_f = idx, f
    return mask_from_indices(best, d), best_f
