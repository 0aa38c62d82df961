"""Forest optimisation: local seeding, population limiting, global seeding.

The forest holds at most ``population_size`` trees (the area limit).
"""

import numpy as np

from ._base import clip, random_state

DEFAULTS = {
    "lsc": 2,
    "gsc": 1,
    "life_time": 6,
    "transfer_rate": 0.1,
    "local_step": 0.1,  # local-seeding perturbation, fraction of the box span
}


def init(evaluator, n, params, rng):
    state = random_state(evaluator, n, rng)
    state.scratch["age"] = np.zeros(n, dtype=np.int64)
    state.scratch["area_limit"] = n
    return state


def step(state, evaluator, params, rng):
    space = evaluator.space
    X, f, age = state.positions, state.fitnesses, state.scratch["age"]
    d = X.shape[1]
    lsc, gsc = int(params["lsc"]), int(params["gsc"])

    # local seeding from the zero-age trees
    parents = np.flatnonzero(age == 0)
    children = np.repeat(X[parents], lsc, axis=0)
    rows = np.arange(children.shape[0])
    dims = rng.integers(0, d, size=rows.size)
    dx = params["local_step"] * space.span[dims]
    children[rows, dims] += rng.uniform(-1.0, 1.0, size=rows.size) * dx
    children = clip(children, space)
    f_children = evaluator(children)
    state.track(children, f_children)
    age = age + 1
    X = np.vstack([X, children])
    f = np.concatenate([f, f_children])
    age = np.concatenate([age, np.zeros(rows.size, dtype=np.int64)])

    # population limiting
    alive = age <= params["life_time"]
    order = np.flatnonzero(alive)[np.argsort(f[alive], kind="stable")]
    keep = order[: state.scratch["area_limit"]]
    dropped = np.setdiff1d(np.arange(f.size), keep)
    if keep.size == 0:
        keep = np.array([int(np.argmin(f))])
        dropped = np.setdiff1d(dropped, keep)

    # global seeding from the candidate population
    n_transfer = int(round(params["transfer_rate"] * dropped.size))
    seeds = np.empty((0, d))
    if n_transfer > 0 and not evaluator.exhausted:
        picked = rng.choice(dropped, size=n_transfer, replace=False)
        seeds = X[picked].copy()
        for row in seeds:
            dd = rng.choice(d, size=min(gsc, d), replace=False)
            row[dd] = space.lower[dd] + rng.random(dd.size) * space.span[dd]
    X_next, f_next, age_next = X[keep], f[keep], age[keep]
    if seeds.shape[0]:
        f_seeds = evaluator(seeds)
        state.track(seeds, f_seeds)
        X_next = np.vstack([X_next, seeds])
        f_next = np.concatenate([f_next, f_seeds])
        age_next = np.concatenate([age_next, np.zeros(seeds.shape[0], dtype=np.int64)])
        # keep the area limit after the seeds join
        order = np.argsort(f_next, kind="stable")[: state.scratch["area_limit"]]
        X_next, f_next, age_next = X_next[order], f_next[order], age_next[order]

    age_next[int(np.argmin(f_next))] = 0
    state.positions, state.fitnesses = X_next, f_next
    state.scratch["age"] = age_next
    return state
