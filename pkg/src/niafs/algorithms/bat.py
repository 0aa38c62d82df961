"""Bat algorithm with frequency tuning, loudness and pulse emission."""

import numpy as np

from ..errors import DimensionError, ValidationError
from ._base import clip, random_state

DEFAULTS = {
    "f_min": 0.0,
    "f_max": 2.0,
    "loudness": 0.95,
    "pulse_rate": 0.5,
    "alpha": 0.9,
    "gamma": 0.9,
    "local_scale": 0.01,  # local-walk radius, fraction of the box span
}


def bat_update(x, v, gbest, f_min, f_max, rand_f, loudness=0.0, pulse_rate=1.0, rng=None,
               local_scale=0.01, span=1.0):
    """One bat move. Returns ``(x_new, v_new, frequency)``.

    ``frequency = f_min + (f_max - f_min) * rand_f``, ``v_new = v + (x - gbest) * frequency``
    and ``x_new = x + v_new``. When ``rng`` is given and its draw exceeds
    ``pulse_rate`` the position is replaced by a local walk around ``gbest``
    scaled by ``loudness``.
    """
    x, v, gbest = (np.asarray(a, dtype=float) for a in (x, v, gbest))
    if not (x.shape == v.shape) or gbest.shape[-1:] != x.shape[-1:]:
        raise DimensionError(f"x, v, gbest shapes differ: {x.shape}, {v.shape}, {gbest.shape}")
    if np.any((np.asarray(rand_f) < 0) | (np.asarray(rand_f) > 1)):
        raise ValidationError("rand_f must lie in [0, 1]")
    freq = f_min + (f_max - f_min) * np.asarray(rand_f, dtype=float)
    v_new = v + (x - gbest) * freq
    x_new = x + v_new
    if rng is not None and rng.random() > pulse_rate:
        eps = rng.uniform(-1.0, 1.0, size=x.shape)
        x_new = gbest + local_scale * span * eps * loudness
    return x_new, v_new, freq


def init(evaluator, n, params, rng):
    state = random_state(evaluator, n, rng)
    state.velocities = np.zeros_like(state.positions)
    state.scratch["loudness"] = np.full(n, params["loudness"])
    state.scratch["pulse"] = np.full(n, params["pulse_rate"])
    return state


def step(state, evaluator, params, rng):
    space = evaluator.space
    X, V, f = state.positions, state.velocities, state.fitnesses
    A, r = state.scratch["loudness"], state.scratch["pulse"]
    n, d = X.shape
    t = state.generation + 1

    beta = rng.random((n, 1))
    X_new, V, _ = bat_update(X, V, state.best_position, params["f_min"], params["f_max"], beta)
    local = rng.random(n) > r
    if local.any():
        eps = rng.uniform(-1.0, 1.0, size=(int(local.sum()), d))
        X_new[local] = state.best_position + params["local_scale"] * space.span * eps * A.mean()
    X_new = clip(X_new, space)
    f_new = evaluator(X_new)

    accept = (f_new <= f) & (rng.random(n) < A)
    X[accept] = X_new[accept]
    f[accept] = f_new[accept]
    A[accept] *= params["alpha"]
    r[accept] = params["pulse_rate"] * (1.0 - np.exp(-params["gamma"] * t))
    state.velocities = V
    state.track(X_new, f_new)
    return state
