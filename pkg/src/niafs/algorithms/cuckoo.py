"""Cuckoo search with Mantegna-sampled Levy flights."""

import math

import numpy as np

from ..errors import ValidationError
from ._base import clip, random_state

DEFAULTS = {"pa": 0.25, "beta": 1.5, "step_scale": 0.01}


def mantegna_sigma(beta: float) -> float:
    num = math.gamma(1.0 + beta) * math.sin(math.pi * beta / 2.0)
    den = math.gamma((1.0 + beta) / 2.0) * beta * 2.0 ** ((beta - 1.0) / 2.0)
    return (num / den) ** (1.0 / beta)


def levy_flight_step(beta, scale, rng, dimension):
    """``scale * u / |t|**(1/beta)`` with ``u ~ N(0, sigma_u^2)``, ``t ~ N(0, 1)``.

    ``dimension`` may be an int or a shape tuple.
    """
    if not 1.0 < beta <= 2.0:
        raise ValidationError(f"beta must lie in (1, 2], got {beta}")
    if scale <= 0:
        raise ValidationError(f"scale must be positive, got {scale}")
    sigma = mantegna_sigma(beta)
    u = rng.normal(0.0, sigma, size=dimension)
    t = rng.normal(0.0, 1.0, size=dimension)
    return scale * u / np.abs(t) ** (1.0 / beta)


def init(evaluator, n, params, rng):
    return random_state(evaluator, n, rng)


def step(state, evaluator, params, rng):
    space = evaluator.space
    X, f = state.positions, state.fitnesses
    n, d = X.shape

    # Levy flights relative to the best nest
    L = levy_flight_step(params["beta"], 1.0, rng, (n, d))
    X_new = clip(X + params["step_scale"] * L * (X - state.best_position) * rng.normal(size=(n, d)), space)
    f_new = evaluator(X_new)
    better = f_new < f
    X[better] = X_new[better]
    f[better] = f_new[better]
    state.track(X_new, f_new)
    if evaluator.exhausted:
        return state

    # discovery: random walk between two shuffled nests on the coordinates drawn above pa
    K = rng.random((n, d)) > params["pa"]
    stepsize = rng.random() * (X[rng.permutation(n)] - X[rng.permutation(n)])
    X_new = clip(X + stepsize * K, space)
    f_new = evaluator(X_new)
    better = f_new < f
    X[better] = X_new[better]
    f[better] = f_new[better]
    state.track(X_new, f_new)
    return state
