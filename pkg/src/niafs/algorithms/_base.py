"""Population state shared by the algorithm implementations."""

from __future__ import annotations

import copy
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..optimize.core import Evaluator, initialize_population


@dataclass
class AlgorithmState:
    positions: np.ndarray
    fitnesses: np.ndarray
    best_position: np.ndarray
    best_fitness: float
    generation: int = 0
    velocities: Optional[np.ndarray] = None
    personal_best: Optional[np.ndarray] = None
    personal_best_fitness: Optional[np.ndarray] = None
    scratch: dict = field(default_factory=dict)
    budget_exhausted: bool = False

    def copy(self) -> "AlgorithmState":
        return copy.deepcopy(self)

    def track(self, X: np.ndarray, f: np.ndarray) -> None:
        """Fold freshly evaluated candidates into the incumbent."""
        if f.size == 0:
            return
        i = int(np.argmin(f))
        if f[i] < self.best_fitness:
            self.best_fitness = float(f[i])
            self.best_position = X[i].copy()


def random_state(evaluator: Evaluator, n: int, rng) -> AlgorithmState:
    X = initialize_population(evaluator.space, n, rng)
    f = evaluator(X)
    i = int(np.argmin(f))
    return AlgorithmState(positions=X, fitnesses=f, best_position=X[i].copy(), best_fitness=float(f[i]))


def clip(X, space):
    return np.clip(X, space.lower, space.upper)
