"""Cat swarm optimisation: seeking and tracing modes."""

import numpy as np

from ._base import clip, random_state

DEFAULTS = {
    "mixture_ratio": 0.3,  # fraction of cats in seeking mode each generation
    "smp": 5,
    "srd": 0.2,
    "cdc": 0.8,
    "c": 2.05,
    "w": 0.7,
    "v_max": 0.2,  # fraction of the box span
}


def _seek(X, f, smp, srd, cdc, space, rng):
    """Clone each seeking cat ``smp`` times, mutate CDC dims by +/- SRD of their value."""
    m, d = X.shape
    n_dims = max(1, int(round(cdc * d)))
    copies = np.repeat(X[:, None, :], smp, axis=1)
    keys = rng.random((m, smp, d))
    chosen = np.argsort(keys, axis=2, kind="stable")[:, :, :n_dims]
    mask = np.zeros((m, smp, d), dtype=bool)
    np.put_along_axis(mask, chosen, True, axis=2)
    factor = 1.0 + srd * rng.uniform(-1.0, 1.0, size=(m, smp, d))
    copies = np.where(mask, copies * factor, copies)
    return clip(copies, space)


def init(evaluator, n, params, rng):
    state = random_state(evaluator, n, rng)
    state.velocities = np.zeros_like(state.positions)
    return state


def step(state, evaluator, params, rng):
    space = evaluator.space
    X, V, f = state.positions, state.velocities, state.fitnesses
    n, d = X.shape
    seeking = rng.random(n) < params["mixture_ratio"]
    smp = int(params["smp"])

    idx = np.flatnonzero(seeking)
    if idx.size:
        copies = _seek(X[idx], f[idx], smp, params["srd"], params["cdc"], space, rng)
        fc = evaluator(copies.reshape(-1, d)).reshape(idx.size, smp)
        state.track(copies.reshape(-1, d), fc.ravel())
        # the current position stays a candidate (self-position consideration)
        cand = np.concatenate([copies, X[idx][:, None, :]], axis=1)
        fcand = np.concatenate([fc, f[idx][:, None]], axis=1)
        u = rng.random(idx.size)
        for row, i in enumerate(idx):
            fs = fcand[row]
            finite = np.isfinite(fs)
            lo, hi = fs[finite].min(), fs[finite].max()
            if hi > lo:
                p = np.where(finite, (hi - fs) / (hi - lo), 0.0)
            else:
                p = finite.astype(float)
            cdf = np.cumsum(p / p.sum())
            k = min(int(np.searchsorted(cdf, u[row], side="right")), cdf.size - 1)
            X[i] = cand[row, k]
            f[i] = fcand[row, k]

    idx = np.flatnonzero(~seeking)
    if idx.size and not evaluator.exhausted:
        r = rng.random((idx.size, d))
        vmax = params["v_max"] * space.span
        V[idx] = np.clip(params["w"] * V[idx] + r * params["c"] * (state.best_position - X[idx]), -vmax, vmax)
        X[idx] = clip(X[idx] + V[idx], space)
        f[idx] = evaluator(X[idx])
        state.track(X[idx], f[idx])
    return state
