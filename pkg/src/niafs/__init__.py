"""Nature-inspired wrapper feature selection for student-outcome prediction."""

from .optimize import ALGORITHMS, OptimizerSpec, SearchSpace, run_optimizer
from .rng import RngStream
from .selection import FeatureMask, FitnessSpec, SelectionResult, exhaustive_oracle, select_features

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "FeatureMask",
    "FitnessSpec",
    "OptimizerSpec",
    "RngStream",
    "SearchSpace",
    "SelectionResult",
    "exhaustive_oracle",
    "run_optimizer",
    "select_features",
]
