"""Artificial bee colony: employed, onlooker and scout phases."""

import numpy as np

from ..errors import ValidationError
from ._base import clip, random_state

DEFAULTS = {"limit": 50}


def abc_neighbor_search(x, partner, dim_index, phi):
    """Perturb one coordinate: ``x_j + phi * (x_j - partner_j)``."""
    x = np.asarray(x, dtype=float)
    partner = np.asarray(partner, dtype=float)
    if not 0 <= dim_index < x.size:
        raise ValidationError(f"dim_index {dim_index} out of range for dimension {x.size}")
    if not -1.0 <= phi <= 1.0:
        raise ValidationError(f"phi must lie in [-1, 1], got {phi}")
    out = x.copy()
    out[dim_index] = x[dim_index] + phi * (x[dim_index] - partner[dim_index])
    return out


def _quality(f):
    # larger is better; the usual 1/(1+f) with the negative branch
    return np.where(f >= 0, 1.0 / (1.0 + f), 1.0 + np.abs(f))


def _candidates(X, sources, rng):
    n, d = X.shape
    m = sources.size
    partners = rng.integers(0, n - 1, size=m)
    partners = partners + (partners >= sources)
    dims = rng.integers(0, d, size=m)
    phis = rng.uniform(-1.0, 1.0, size=m)
    V = X[sources].copy()
    rows = np.arange(m)
    V[rows, dims] = X[sources, dims] + phis * (X[sources, dims] - X[partners, dims])
    return V


def _greedy(state, sources, V, fV):
    X, f, trials = state.positions, state.fitnesses, state.scratch["trials"]
    for t, s in enumerate(sources):
        if fV[t] < f[s]:
            X[s] = V[t]
            f[s] = fV[t]
            trials[s] = 0
        else:
            trials[s] += 1


def init(evaluator, n, params, rng):
    state = random_state(evaluator, n, rng)
    state.scratch["trials"] = np.zeros(n, dtype=np.int64)
    return state


def step(state, evaluator, params, rng):
    space = evaluator.space
    n = state.positions.shape[0]

    employed = np.arange(n)
    V = clip(_candidates(state.positions, employed, rng), space)
    fV = evaluator(V)
    _greedy(state, employed, V, fV)
    state.track(V, fV)
    if evaluator.exhausted:
        return state

    q = _quality(state.fitnesses)
    total = q.sum()
    p = q / total if np.isfinite(total) and total > 0 else np.full(n, 1.0 / n)
    onlookers = rng.choice(n, size=n, p=p)
    V = clip(_candidates(state.positions, onlookers, rng), space)
    fV = evaluator(V)
    _greedy(state, onlookers, V, fV)
    state.track(V, fV)
    if evaluator.exhausted:
        return state

    trials = state.scratch["trials"]
    worst = int(np.argmax(trials))
    if trials[worst] > params["limit"]:
        x = space.lower + rng.random(space.dimension) * space.span
        fx = evaluator(x[None, :])
        state.positions[worst] = x
        state.fitnesses[worst] = fx[0]
        trials[worst] = 0
        state.track(x[None, :], fx)
    return state
