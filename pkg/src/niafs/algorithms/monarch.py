"""Monarch butterfly optimisation with migration and butterfly adjusting."""

import math

import numpy as np

from ._base import clip, random_state

DEFAULTS = {
    "partition": 5.0 / 12.0,
    "period": 1.2,
    "adjusting_rate": 5.0 / 12.0,
    "max_step": 1.0,
    "n_elites": 2,
}


def levy_walk(step_sizes, dimension, rng):
    """Sum of ``step_size`` standard Cauchy draws per coordinate.

    A sum of k standard Cauchy variables is k times a standard Cauchy, so the
    walk is drawn in one shot per butterfly.
    """
    step_sizes = np.asarray(step_sizes, dtype=float)
    return step_sizes[:, None] * rng.standard_cauchy((step_sizes.size, dimension))


def init(evaluator, n, params, rng):
    return random_state(evaluator, n, rng)


def step(state, evaluator, params, rng):
    space = evaluator.space
    X, f = state.positions, state.fitnesses
    n, d = X.shape
    p = params["partition"]
    t = state.generation + 1

    order = np.argsort(f, kind="stable")
    X, f = X[order], f[order]
    n_elites = min(int(params["n_elites"]), n)
    elites, f_elites = X[:n_elites].copy(), f[:n_elites].copy()
    n1 = min(n - 1, max(1, int(math.ceil(p * n))))
    land1, land2 = X[:n1], X[n1:]
    n2 = land2.shape[0]

    # migration operator for land 1
    r = rng.random((n1, d)) * params["period"]
    from1 = land1[rng.integers(0, n1, size=(n1, d)), np.arange(d)]
    from2 = land2[rng.integers(0, n2, size=(n1, d)), np.arange(d)]
    new1 = np.where(r <= p, from1, from2)

    # butterfly adjusting operator for land 2
    alpha = params["max_step"] / t**2
    toward_best = rng.random((n2, d)) <= p
    from2 = land2[rng.integers(0, n2, size=(n2, d)), np.arange(d)]
    new2 = np.where(toward_best, state.best_position, from2)
    walk = (~toward_best) & (rng.random((n2, d)) > params["adjusting_rate"])
    max_gen = max(1.0, evaluator.max_evaluations / n)
    dx = levy_walk(np.ceil(rng.exponential(2.0 * max_gen, size=n2)), d, rng)
    new2 = np.where(walk, new2 + alpha * (dx - 0.5), new2)

    X_new = clip(np.vstack([new1, new2]), space)
    f_new = evaluator(X_new)
    state.track(X_new, f_new)

    # elitism: the worst offspring are replaced by last generation's elites
    worst = np.argsort(f_new, kind="stable")[::-1][:n_elites]
    X_new[worst] = elites
    f_new[worst] = f_elites
    state.positions, state.fitnesses = X_new, f_new
    return state
