"""Particle swarm optimisation, inertia-weight variant."""

import numpy as np

from ..errors import DimensionError
from ._base import clip, random_state

DEFAULTS = {"w": 0.7, "c1": 1.5, "c2": 1.5}


def pso_velocity_update(v, x, pbest, gbest, w, c1, c2, r1, r2):
    """``w*v + c1*r1*(pbest - x) + c2*r2*(gbest - x)``, elementwise.

    No clamping happens here; the position update projects onto the bounds.
    """
    v, x, pbest, gbest, r1, r2 = (np.asarray(a, dtype=float) for a in (v, x, pbest, gbest, r1, r2))
    if not (v.shape == x.shape == pbest.shape):
        raise DimensionError(f"v, x, pbest shapes differ: {v.shape}, {x.shape}, {pbest.shape}")
    if gbest.shape[-1:] != x.shape[-1:]:
        raise DimensionError(f"gbest length {gbest.shape[-1:]} does not match {x.shape[-1:]}")
    return w * v + c1 * r1 * (pbest - x) + c2 * r2 * (gbest - x)


def init(evaluator, n, params, rng):
    state = random_state(evaluator, n, rng)
    state.velocities = np.zeros_like(state.positions)
    state.personal_best = state.positions.copy()
    state.personal_best_fitness = state.fitnesses.copy()
    return state


def step(state, evaluator, params, rng):
    X, V = state.positions, state.velocities
    r1 = rng.random(X.shape)
    r2 = rng.random(X.shape)
    V = pso_velocity_update(V, X, state.personal_best, state.best_position,
                            params["w"], params["c1"], params["c2"], r1, r2)
    X = clip(X + V, evaluator.space)
    f = evaluator(X)
    better = f < state.personal_best_fitness
    state.personal_best[better] = X[better]
    state.personal_best_fitness[better] = f[better]
    state.positions, state.velocities, state.fitnesses = X, V, f
    state.track(X, f)
    return state
