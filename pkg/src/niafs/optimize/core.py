"""Bounded continuous minimisation framework.

Every algorithm receives an :class:`Evaluator`, the single place where the
objective is called. It owns the evaluation budget, the bound check and the
incumbent history, so the budget and monotone-history guarantees hold for
every algorithm without each one re-implementing them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from ..errors import DimensionError, EvaluationError, ValidationError
from ..rng import RngStream

ALGORITHMS = (
    "PSO",
    "ABC",
    "Bat",
    "Firefly",
    "CatSwarm",
    "BFO",
    "CuckooSearch",
    "GravitationalSearch",
    "ForestOptimization",
    "MonarchButterfly",
    "MonkeyKingEvolution",
)


@dataclass(frozen=True)
class SearchSpace:
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.atleast_1d(np.asarray(self.lower, dtype=float))
        upper = np.atleast_1d(np.asarray(self.upper, dtype=float))
        if lower.ndim != 1 or lower.shape != upper.shape:
            raise DimensionError(f"bounds must be equal-length vectors, got {lower.shape} and {upper.shape}")
        if lower.size == 0:
            raise ValidationError("search space needs at least one dimension")
        if not np.all(np.isfinite(lower)) or not np.all(np.isfinite(upper)):
            raise ValidationError("bounds must be finite")
        if np.any(lower >= upper):
            bad = int(np.flatnonzero(lower >= upper)[0])
            raise ValidationError(f"lower[{bad}]={lower[bad]} is not below upper[{bad}]={upper[bad]}")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def box(cls, dimension: int, low: float, high: float) -> "SearchSpace":
        if dimension < 1:
            raise ValidationError(f"dimension must be positive, got {dimension}")
        return cls(np.full(dimension, float(low)), np.full(dimension, float(high)))

    @property
    def dimension(self) -> int:
        return self.lower.size

    @property
    def span(self) -> np.ndarray:
        return self.upper - self.lower

    def contains(self, X) -> bool:
        X = np.asarray(X)
        return bool(np.all(X >= self.lower) and np.all(X <= self.upper))


class Objective:
    """A pure scalar function to be minimised.

    ``batch`` may be supplied as a vectorised version taking an ``(n, d)``
    array; otherwise rows are evaluated one at a time.
    """

    def __init__(self, func: Callable, name: str = "objective", batch: Optional[Callable] = None,
                 dimension: Optional[int] = None):
        self.func = func
        self.name = name
        self._batch = batch
        self.dimension = dimension

    def __call__(self, x) -> float:
        return float(self.func(np.asarray(x, dtype=float)))

    def evaluate_batch(self, X: np.ndarray) -> np.ndarray:
        if self._batch is not None:
            return np.asarray(self._batch(X), dtype=float)
        return np.array([self.func(row) for row in X], dtype=float)

    def __repr__(self):
        return f"Objective({self.name!r})"


@dataclass
class OptimizerSpec:
    algorithm: str
    population_size: int = 30
    max_evaluations: int = 15000
    params: dict = field(default_factory=dict)

    def validate(self) -> dict:
        """Validate this optimizer setup and return its params merged over the defaults."""
        from ..algorithms import DEFAULT_PARAMS

        if self.algorithm not in ALGORITHMS:
            raise ValidationError(f"algorithm: unknown algorithm {self.algorithm!r}; expected one of {ALGORITHMS}")
        if int(self.population_size) != self.population_size or self.population_size < 2:
            raise ValidationError(f"population_size: must be an integer >= 2, got {self.population_size}")
        if int(self.max_evaluations) != self.max_evaluations or self.max_evaluations < self.population_size:
            raise ValidationError(
                f"max_evaluations: must be an integer >= population_size ({self.population_size}), "
                f"got {self.max_evaluations}"
            )
        defaults = DEFAULT_PARAMS[self.algorithm]
        unknown = sorted(set(self.params) - set(defaults))
        if unknown:
            raise ValidationError(
                f"params: unknown key(s) {unknown} for {self.algorithm}; allowed: {sorted(defaults)}"
            )
        merged = dict(defaults)
        for key, value in self.params.items():
            value = float(value) if not isinstance(value, (bool, np.bool_)) else value
            if not np.isfinite(value):
                raise ValidationError(f"params.{key}: must be finite, got {value}")
            merged[key] = value
        return merged


@dataclass
class OptimizeResult:
    best_position: np.ndarray
    best_fitness: float
    evaluations_used: int
    history: list = field(default_factory=list)
    budget_exhausted: bool = False
    algorithm: str = ""


def clamp_to_bounds(position, space: SearchSpace) -> np.ndarray:
    x = np.asarray(position, dtype=float)
    if x.shape[-1] != space.dimension:
        raise DimensionError(f"position has length {x.shape[-1]}, search space has dimension {space.dimension}")
    return np.clip(x, space.lower, space.upper)


def initialize_population(space: SearchSpace, n: int, rng: RngStream) -> np.ndarray:
    if int(n) != n or n < 1:
        raise ValidationError(f"population size must be a positive integer, got {n}")
    u = rng.random((int(n), space.dimension))
    return space.lower + u * space.span


class Evaluator:
    """Budgeted, bound-checked objective evaluation.

    Rows requested after the budget is spent are not evaluated; they get
    ``inf`` fitness and :attr:`exhausted` is set, so a generation that runs
    past the budget completes as a partial step.
    """

    def __init__(self, objective: Objective, space: SearchSpace, max_evaluations: int,
                 record_history: bool = True):
        if objective.dimension is not None and objective.dimension != space.dimension:
            raise DimensionError(
                f"objective {objective.name!r} has dimension {objective.dimension}, "
                f"search space has {space.dimension}"
            )
        self.objective = objective
        self.space = space
        self.max_evaluations = int(max_evaluations)
        self.used = 0
        self.exhausted = False
        self.best_position = None
        self.best_fitness = np.inf
        self.history = [] if record_history else None

    @property
    def remaining(self) -> int:
        return self.max_evaluations - self.used

    @property
    def progress(self) -> float:
        return self.used / self.max_evaluations

    def __call__(self, X) -> np.ndarray:
        X = np.atleast_2d(np.asarray(X, dtype=float))
        if X.shape[1] != self.space.dimension:
            raise DimensionError(f"candidates have dimension {X.shape[1]}, expected {self.space.dimension}")
        if not self.space.contains(X):
            raise AssertionError("candidate outside the search space reached the objective")
        n_take = min(X.shape[0], self.remaining)
        out = np.full(X.shape[0], np.inf)
        if n_take < X.shape[0]:
            self.exhausted = True
        if n_take == 0:
            return out
        try:
            fit = self.objective.evaluate_batch(X[:n_take])
        except Exception as exc:
            raise EvaluationError(
                f"objective {self.objective.name!r} failed within evaluations "
                f"{self.used + 1}..{self.used + n_take}: {exc}",
                position=X[:n_take].copy(),
                evaluation=self.used + 1,
            ) from exc
        if fit.shape != (n_take,):
            raise DimensionError(f"objective returned shape {fit.shape} for {n_take} candidates")
        fit = np.where(np.isnan(fit), np.inf, fit)
        out[:n_take] = fit
        for i in range(n_take):
            if fit[i] < self.best_fitness or self.best_position is None:
                self.best_fitness = float(fit[i])
                self.best_position = X[i].copy()
                if self.history is not None:
                    self.history.append((self.used + i + 1, self.best_fitness))
        self.used += n_take
        if self.used >= self.max_evaluations:
            self.exhausted = True
        return out

    def evaluate_one(self, x) -> float:
        return float(self(x)[0])


def run_optimizer(objective: Objective, space: SearchSpace, spec: OptimizerSpec, rng: RngStream,
                  record_history: bool = True) -> OptimizeResult:
    """Minimise ``objective`` over ``space`` with the algorithm named in ``spec``."""
    from ..algorithms import get_algorithm

    params = spec.validate()
    algo = get_algorithm(spec.algorithm)
    evaluator = Evaluator(objective, space, spec.max_evaluations, record_history=record_history)
    state = algo.init(evaluator, spec.population_size, params, rng)
    while not evaluator.exhausted:
        before = evaluator.used
        state = algo.step(state, evaluator, params, rng)
        if evaluator.used == before:
            raise RuntimeError(f"{spec.algorithm} step consumed no evaluations")
    if evaluator.history is not None and evaluator.history:
        if evaluator.history[-1][0] != evaluator.used:
            evaluator.history.append((evaluator.used, evaluator.best_fitness))
    return OptimizeResult(
        best_position=evaluator.best_position.copy(),
        best_fitness=evaluator.best_fitness,
        evaluations_used=evaluator.used,
        history=evaluator.history or [],
        budget_exhausted=evaluator.exhausted,
        algorithm=spec.algorithm,
    )


def random_search(objective: Objective, space: SearchSpace, max_evaluations: int, rng: RngStream,
                  batch: int = 1000) -> OptimizeResult:
    """Uniform sampling of the box with the same budget accounting as the optimizers."""
    evaluator = Evaluator(objective, space, max_evaluations)
    while not evaluator.exhausted:
        evaluator(initialize_population(space, min(batch, evaluator.remaining), rng))
    return OptimizeResult(evaluator.best_position.copy(), evaluator.best_fitness, evaluator.used,
                          evaluator.history, evaluator.exhausted, "RandomSearch")
