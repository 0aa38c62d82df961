"""Gravitational search algorithm."""

import numpy as np

from .. import kernels
from ..errors import ValidationError
from ._base import clip, random_state

DEFAULTS = {"G0": 100.0, "alpha": 20.0, "epsilon": 1e-10}


def gsa_masses(fitnesses):
    """Normalised masses ``m_i / sum(m)`` with ``m_i = (f_i - worst) / (best - worst)``.

    All-equal fitnesses give uniform masses.
    """
    f = np.asarray(fitnesses, dtype=float)
    finite = np.isfinite(f)
    if not finite.any():
        return np.full(f.size, 1.0 / f.size)
    best = f[finite].min()
    worst = f[finite].max()
    if best == worst:
        m = np.where(finite, 1.0, 0.0)
    else:
        m = np.where(finite, (f - worst) / (best - worst), 0.0)
    total = m.sum()
    if total <= 0:
        return np.full(f.size, 1.0 / f.size)
    return m / total


def gsa_accelerations(positions, masses, G, epsilon, weights, kbest=None):
    """Accelerations ``sum_j w_ij * G * M_j * (x_j - x_i) / (|x_j - x_i| + eps)`` over ``kbest``."""
    X = np.ascontiguousarray(positions, dtype=float)
    if X.ndim != 2 or X.shape[0] < 2:
        raise ValidationError("gsa needs at least two agents as an (n, d) array")
    if epsilon <= 0:
        raise ValidationError(f"epsilon must be positive, got {epsilon}")
    masses = np.ascontiguousarray(masses, dtype=float)
    weights = np.ascontiguousarray(weights, dtype=float)
    if kbest is None:
        kbest = np.arange(X.shape[0])
    kbest = np.ascontiguousarray(kbest, dtype=np.int64)
    return kernels.gsa_accel(X, masses, kbest, float(G), float(epsilon), weights)


def gsa_forces(positions, fitnesses, G, epsilon, rng_weights, kbest=None):
    """Accelerations from raw fitness values (masses derived by :func:`gsa_masses`)."""
    return gsa_accelerations(positions, gsa_masses(fitnesses), G, epsilon, rng_weights, kbest)


def init(evaluator, n, params, rng):
    state = random_state(evaluator, n, rng)
    state.velocities = np.zeros_like(state.positions)
    return state


def step(state, evaluator, params, rng):
    space = evaluator.space
    X, V, f = state.positions, state.velocities, state.fitnesses
    n, d = X.shape
    progress = evaluator.progress
    G = params["G0"] * np.exp(-params["alpha"] * progress)
    k = max(1, int(round(n - (n - 1) * progress)))
    kbest = np.argsort(f, kind="stable")[:k]
    masses = gsa_masses(f)
    acc = gsa_accelerations(X, masses, G, params["epsilon"], rng.random((n, n)), kbest)
    V = rng.random((n, d)) * V + acc
    X = clip(X + V, space)
    f = evaluator(X)
    state.positions, state.velocities, state.fitnesses = X, V, f
    state.track(X, f)
    return state
