"""Bacterial foraging optimisation.

The chemotaxis / reproduction / elimination-dispersal loops are flattened:
one step is one chemotactic step for the whole colony, and the outer-loop
counters live in ``scratch``. When the elimination-dispersal loop finishes
the cycle starts over, so the run is bounded only by the evaluation budget.
"""

import numpy as np

from ._base import clip, random_state

DEFAULTS = {
    "n_chemotactic": 20,
    "swim_length": 4,
    "n_reproduction": 4,
    "n_elimination": 2,
    "p_elimination": 0.25,
    "step_size": 0.1,  # fraction of the box span
    "step_size_final": 0.001,  # geometric decay target over the budget
}


def _step_length(params, progress):
    c0, c1 = params["step_size"], params["step_size_final"]
    if c1 <= 0 or c1 >= c0:
        return c0
    return c0 * (c1 / c0) ** progress


def init(evaluator, n, params, rng):
    state = random_state(evaluator, n, rng)
    state.scratch.update(chem=0, repro=0, elim=0, health=np.zeros(n))
    return state


def step(state, evaluator, params, rng):
    space = evaluator.space
    X, J = state.positions, state.fitnesses
    n, d = X.shape
    sc = state.scratch
    C = _step_length(params, evaluator.progress) * space.span

    delta = rng.uniform(-1.0, 1.0, size=(n, d))
    direction = delta / np.linalg.norm(delta, axis=1, keepdims=True)
    X_new = clip(X + C * direction, space)
    J_new = evaluator(X_new)
    state.track(X_new, J_new)
    J_last = J.copy()
    X[:] = X_new
    J[:] = J_new
    active = J_new < J_last
    for _ in range(int(params["swim_length"])):
        if not active.any() or evaluator.exhausted:
            break
        idx = np.flatnonzero(active)
        J_last[idx] = J[idx]
        trial = clip(X[idx] + C * direction[idx], space)
        J_trial = evaluator(trial)
        state.track(trial, J_trial)
        X[idx] = trial
        J[idx] = J_trial
        active[idx] = J_trial < J_last[idx]
    sc["health"] += np.where(np.isfinite(J), J, 0.0)

    sc["chem"] += 1
    if sc["chem"] >= params["n_chemotactic"]:
        sc["chem"] = 0
        order = np.argsort(sc["health"], kind="stable")
        half = n // 2
        keep = order[: n - half]
        X[order[n - half:]] = X[keep[:half]]
        J[order[n - half:]] = J[keep[:half]]
        sc["health"] = np.zeros(n)
        sc["repro"] += 1
        if sc["repro"] >= params["n_reproduction"]:
            sc["repro"] = 0
            disperse = rng.random(n) < params["p_elimination"]
            if disperse.any() and not evaluator.exhausted:
                fresh = space.lower + rng.random((int(disperse.sum()), d)) * space.span
                X[disperse] = fresh
                J[disperse] = evaluator(fresh)
                state.track(fresh, J[disperse])
            sc["elim"] += 1
            if sc["elim"] >= params["n_elimination"]:
                sc["elim"] = 0
    return state
