"""Firefly algorithm with decaying randomisation.

Attraction distances are measured in units of the box span, so the default
``gamma`` behaves the same on any search space.
"""

import numpy as np

from .. import kernels
from ..errors import DimensionError, ValidationError
from ._base import clip, random_state

DEFAULTS = {"beta0": 1.0, "gamma": 1.0, "alpha": 0.2, "alpha_decay": 0.97}


def firefly_move(xi, xj, beta0, gamma, alpha, noise):
    """Move ``xi`` toward the brighter ``xj``: ``xi + beta0*exp(-gamma*r^2)*(xj - xi) + alpha*noise``."""
    xi, xj, noise = (np.asarray(a, dtype=float) for a in (xi, xj, noise))
    if not (xi.shape == xj.shape == noise.shape):
        raise DimensionError(f"shapes differ: {xi.shape}, {xj.shape}, {noise.shape}")
    if gamma < 0:
        raise ValidationError(f"gamma must be non-negative, got {gamma}")
    r2 = float(np.sum((xi - xj) ** 2))
    return xi + beta0 * np.exp(-gamma * r2) * (xj - xi) + alpha * noise


def init(evaluator, n, params, rng):
    state = random_state(evaluator, n, rng)
    state.scratch["alpha"] = float(params["alpha"])
    return state


def step(state, evaluator, params, rng):
    space = evaluator.space
    X, f = state.positions, state.fitnesses
    n, d = X.shape
    alpha = state.scratch["alpha"]
    noise = rng.random((n, n, d)) - 0.5
    X_new = kernels.firefly_sweep(X, f, float(params["beta0"]), float(params["gamma"]), alpha, noise,
                                  space.span)
    X_new = clip(X_new, space)
    f_new = evaluator(X_new)
    state.positions, state.fitnesses = X_new, f_new
    state.scratch["alpha"] = alpha * params["alpha_decay"]
    state.track(X_new, f_new)
    return state
