"""Monkey King Evolution, version 1."""

import numpy as np

from ._base import clip, random_state

DEFAULTS = {"fluctuation": 0.7, "particle_rate": 0.5, "king_group": 3}


def init(evaluator, n, params, rng):
    state = random_state(evaluator, n, rng)
    state.personal_best = state.positions.copy()
    state.personal_best_fitness = state.fitnesses.copy()
    return state


def step(state, evaluator, params, rng):
    space = evaluator.space
    X, f = state.positions, state.fitnesses
    P, fP = state.personal_best, state.personal_best_fitness
    n, d = X.shape
    fc = params["fluctuation"]
    n_kings = int(round(params["particle_rate"] * n))
    kings = np.zeros(n, dtype=bool)
    kings[rng.choice(n, size=n_kings, replace=False)] = True
    group = max(1, int(round(params["king_group"] * d)))

    # ordinary particles: pulled from their personal best toward the global best
    idx = np.flatnonzero(~kings)
    if idx.size:
        moved = clip(P[idx] + fc * rng.random((idx.size, d)) * (state.best_position - X[idx]), space)
        fm = evaluator(moved)
        X[idx], f[idx] = moved, fm
        state.track(moved, fm)

    # monkey kings: transform into a group of small monkeys, keep the best one
    for i in np.flatnonzero(kings):
        if evaluator.exhausted:
            break
        r1 = rng.integers(0, n, size=group)
        r2 = rng.integers(0, n, size=group)
        monkeys = clip(X[i] + fc * rng.random((group, d)) * (X[r1] - X[r2]), space)
        fm = evaluator(monkeys)
        state.track(monkeys, fm)
        b = int(np.argmin(fm))
        X[i], f[i] = monkeys[b], fm[b]

    better = f < fP
    P[better] = X[better]
    fP[better] = f[better]
    return state
