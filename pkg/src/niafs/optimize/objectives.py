"""Standard test functions with their canonical bounds."""

import numpy as np

from ..errors import ValidationError
from .core import Objective, SearchSpace


def _sphere(X):
    return np.sum(X * X, axis=-1)


def _rastrigin(X):
    d = X.shape[-1]
    return 10.0 * d + np.sum(X * X - 10.0 * np.cos(2.0 * np.pi * X), axis=-1)


def _rosenbrock(X):
    if X.shape[-1] == 1:
        return (1.0 - X[..., 0]) ** 2
    a = X[..., 1:] - X[..., :-1] ** 2
    b = 1.0 - X[..., :-1]
    return np.sum(100.0 * a * a + b * b, axis=-1)


def _ackley(X):
    d = X.shape[-1]
    s1 = np.sum(X * X, axis=-1) / d
    s2 = np.sum(np.cos(2.0 * np.pi * X), axis=-1) / d
    val = -20.0 * np.exp(-0.2 * np.sqrt(s1)) - np.exp(s2) + 20.0 + np.e
    # exact zero at the origin instead of a 4e-16 rounding residue
    return np.where(s1 == 0.0, 0.0, val)


_CATALOGUE = {
    "sphere": (_sphere, 5.12),
    "rastrigin": (_rastrigin, 5.12),
    "rosenbrock": (_rosenbrock, 2.048),
    "ackley": (_ackley, 32.768),
}


def builtin_objective(name: str, dimension: int):
    """Return ``(objective, space)`` for one of sphere, rastrigin, rosenbrock, ackley."""
    if name not in _CATALOGUE:
        raise ValidationError(f"unknown objective {name!r}; expected one of {sorted(_CATALOGUE)}")
    if int(dimension) != dimension or dimension < 1:
        raise ValidationError(f"dimension must be a positive integer, got {dimension}")
    func, half = _CATALOGUE[name]
    objective = Objective(lambda x: float(func(x[None, :])[0]), name=name, batch=func, dimension=int(dimension))
    return objective, SearchSpace.box(int(dimension), -half, half)
