"""The nature-inspired optimisers, dispatched by name."""

from types import SimpleNamespace

from ..errors import ValidationError
from ..optimize.core import ALGORITHMS
from . import (bat, bee_colony, bfo, cat_swarm, cuckoo, firefly, forest, gsa, monarch,
               monkey_king, pso)
from ._base import AlgorithmState
from .bat import bat_update
from .bee_colony import abc_neighbor_search
from .cuckoo import levy_flight_step, mantegna_sigma
from .firefly import firefly_move
from .gsa import gsa_accelerations, gsa_forces, gsa_masses
from .pso import pso_velocity_update
from .transfer import binarize_probability

_MODULES = {
    "PSO": pso,
    "ABC": bee_colony,
    "Bat": bat,
    "Firefly": firefly,
    "CatSwarm": cat_swarm,
    "BFO": bfo,
    "CuckooSearch": cuckoo,
    "GravitationalSearch": gsa,
    "ForestOptimization": forest,
    "MonarchButterfly": monarch,
    "MonkeyKingEvolution": monkey_king,
}
assert tuple(_MODULES) == ALGORITHMS

DEFAULT_PARAMS = {name: dict(mod.DEFAULTS) for name, mod in _MODULES.items()}


def _checked_step(name, module):
    def step(state, evaluator, params, rng):
        before = state.best_fitness
        new = module.step(state.copy(), evaluator, params, rng)
        new.generation = state.generation + 1
        new.budget_exhausted = evaluator.exhausted
        if new.best_fitness > before:  # pragma: no cover - guarded by the tests
            raise AssertionError(f"{name} lost its incumbent")
        return new

    return step


def get_algorithm(name):
    if name not in _MODULES:
        raise ValidationError(f"unknown algorithm {name!r}; expected one of {ALGORITHMS}")
    module = _MODULES[name]
    return SimpleNamespace(name=name, defaults=DEFAULT_PARAMS[name], init=module.init,
                           step=_checked_step(name, module))


def step_algorithm(algorithm, state, evaluator, rng, params=None):
    """Advance ``state`` by one generation; the input state is left untouched."""
    algo = get_algorithm(algorithm)
    merged = dict(algo.defaults)
    merged.update(params or {})
    return algo.step(state, evaluator, merged, rng)


def init_algorithm(algorithm, evaluator, population_size, rng, params=None):
    algo = get_algorithm(algorithm)
    merged = dict(algo.defaults)
    merged.update(params or {})
    return algo.init(evaluator, population_size, merged, rng)


__all__ = [
    "ALGORITHMS",
    "AlgorithmState",
    "DEFAULT_PARAMS",
    "abc_neighbor_search",
    "bat_update",
    "binarize_probability",
    "firefly_move",
    "get_algorithm",
    "gsa_accelerations",
    "gsa_forces",
    "gsa_masses",
    "init_algorithm",
    "levy_flight_step",
    "mantegna_sigma",
    "pso_velocity_update",
    "step_algorithm",
]
