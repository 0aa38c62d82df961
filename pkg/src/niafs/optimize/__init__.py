from .core import (
    ALGORITHMS,
    Evaluator,
    Objective,
    OptimizeResult,
    OptimizerSpec,
    SearchSpace,
    clamp_to_bounds,
    initialize_population,
    random_search,
    run_optimizer,
)
from .objectives import builtin_objective

__all__ = [
    "ALGORITHMS",
    "Evaluator",
    "Objective",
    "OptimizeResult",
    "OptimizerSpec",
    "SearchSpace",
    "builtin_objective",
    "clamp_to_bounds",
    "initialize_population",
    "random_search",
    "run_optimizer",
]
