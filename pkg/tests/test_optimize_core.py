import numpy as np
import pytest

from niafs.errors import DimensionError, EvaluationError, ValidationError
from niafs.optimize import (ALGORITHMS, Evaluator, Objective, OptimizerSpec, SearchSpace, builtin_objective,
                            clamp_to_bounds, initialize_population, run_optimizer)
from niafs.rng import RngStream


def test_clamp_identity_inside():
    assert np.array_equal(clamp_to_bounds([0.5], SearchSpace.box(1, 0, 1)), [0.5])


def test_clamp_projects():
    assert np.array_equal(clamp_to_bounds([1.7, -0.3], SearchSpace.box(2, 0, 1)), [1.0, 0.0])
    assert np.array_equal(clamp_to_bounds([-6, 6], SearchSpace.box(2, -5.12, 5.12)), [-5.12, 5.12])


def test_clamp_length_mismatch():
    with pytest.raises(DimensionError):
        clamp_to_bounds([1, 2, 3], SearchSpace.box(2, 0, 1))


def test_search_space_validation():
    with pytest.raises(ValidationError):
        SearchSpace([0.0, 1.0], [1.0, 1.0])
    with pytest.raises(DimensionError):
        SearchSpace([0.0], [1.0, 2.0])


@pytest.mark.parametrize("name,point", [("sphere", 0.0), ("rastrigin", 0.0), ("rosenbrock", 1.0), ("ackley", 0.0)])
def test_builtin_minimum(name, point):
    obj, space = builtin_objective(name, 4)
    assert obj(np.full(4, point)) == pytest.approx(0.0, abs=1e-12)
    assert space.dimension == 4


def test_builtin_bounds():
    assert builtin_objective("sphere", 2)[1].upper[0] == 5.12
    assert builtin_objective("rosenbrock", 2)[1].upper[0] == 2.048
    assert builtin_objective("ackley", 2)[1].lower[0] == -32.768


def test_builtin_unknown():
    with pytest.raises(ValidationError):
        builtin_objective("griewank", 2)


def test_initialize_population_deterministic_and_bounded():
    space = SearchSpace.box(1, 0, 1)
    a = initialize_population(space, 3, RngStream(5))
    b = initialize_population(space, 3, RngStream(5))
    assert np.array_equal(a, b) and a.shape == (3, 1)
    big = initialize_population(SearchSpace([-2, 3], [-1, 9]), 500, RngStream(1))
    assert np.all(big >= [-2, 3]) and np.all(big <= [-1, 9])


def test_initialize_population_rejects_zero():
    with pytest.raises(ValidationError):
        initialize_population(SearchSpace.box(1, 0, 1), 0, RngStream(1))


def test_spec_validation_names_field():
    with pytest.raises(ValidationError, match="algorithm"):
        OptimizerSpec("Simplex").validate()
    with pytest.raises(ValidationError, match="population_size"):
        OptimizerSpec("PSO", population_size=1).validate()
    with pytest.raises(ValidationError, match="max_evaluations"):
        OptimizerSpec("PSO", population_size=30, max_evaluations=10).validate()
    with pytest.raises(ValidationError, match="params"):
        OptimizerSpec("PSO", params={"inertia": 0.5}).validate()
    with pytest.raises(ValidationError, match="params.w"):
        OptimizerSpec("PSO", params={"w": float("nan")}).validate()


def test_spec_defaults():
    spec = OptimizerSpec("PSO")
    assert spec.population_size == 30 and spec.max_evaluations == 15000
    assert spec.validate() == {"w": 0.7, "c1": 1.5, "c2": 1.5}


@pytest.mark.parametrize("algo", ALGORITHMS)
def test_constant_objective(algo):
    obj = Objective(lambda x: 3.0, "const", batch=lambda X: np.full(len(X), 3.0))
    res = run_optimizer(obj, SearchSpace.box(3, -1, 1), OptimizerSpec(algo, 10, 300), RngStream(1))
    assert res.best_fitness == 3.0


@pytest.mark.parametrize("algo", ALGORITHMS)
def test_budget_bounds_and_history(algo):
    obj, space = builtin_objective("rastrigin", 3)
    calls = []

    def batch(X):
        assert space.contains(X)
        calls.append(len(X))
        return obj.evaluate_batch(X)

    wrapped = Objective(obj.func, "r", batch=batch)
    res = run_optimizer(wrapped, space, OptimizerSpec(algo, 12, 777), RngStream(4))
    assert res.evaluations_used == sum(calls) <= 777
    assert res.budget_exhausted
    assert space.contains(res.best_position)
    assert res.best_fitness == pytest.approx(obj(res.best_position), abs=0)
    best = [b for _, b in res.history]
    assert all(b2 <= b1 for b1, b2 in zip(best, best[1:]))
    counts = [c for c, _ in res.history]
    assert counts == sorted(counts) and counts[-1] == res.evaluations_used


@pytest.mark.parametrize("algo", ALGORITHMS)
def test_run_is_deterministic(algo):
    obj, space = builtin_objective("sphere", 4)
    a = run_optimizer(obj, space, OptimizerSpec(algo, 10, 500), RngStream(9))
    b = run_optimizer(obj, space, OptimizerSpec(algo, 10, 500), RngStream(9))
    assert np.array_equal(a.best_position, b.best_position) and a.history == b.history


def test_quadratic_1d_pso():
    obj = Objective(lambda x: float((x[0] - 2.0) ** 2), "q", batch=lambda X: (X[:, 0] - 2.0) ** 2)
    res = run_optimizer(obj, SearchSpace.box(1, 0, 4), OptimizerSpec("PSO", 30, 5000), RngStream(42))
    assert abs(res.best_position[0] - 2.0) <= 0.05


def test_sphere_5d_cuckoo():
    obj, space = builtin_objective("sphere", 5)
    res = run_optimizer(obj, space, OptimizerSpec("CuckooSearch", 30, 15000), RngStream(7))
    assert res.best_fitness <= 1e-2


def test_evaluator_partial_batch_past_budget():
    obj, space = builtin_objective("sphere", 2)
    ev = Evaluator(obj, space, 5)
    out = ev(np.zeros((8, 2)))
    assert ev.used == 5 and ev.exhausted
    assert np.all(out[:5] == 0) and np.all(np.isinf(out[5:]))


def test_evaluator_rejects_out_of_bounds():
    obj, space = builtin_objective("sphere", 2)
    with pytest.raises(AssertionError):
        Evaluator(obj, space, 10)(np.array([[6.0, 0.0]]))


def test_objective_error_carries_context():
    def boom(X):
        raise ArithmeticError("domain")

    ev = Evaluator(Objective(lambda x: 0.0, "boom", batch=boom), SearchSpace.box(1, 0, 1), 10)
    with pytest.raises(EvaluationError) as info:
        ev(np.array([[0.25]]))
    assert info.value.evaluation == 1 and "boom" in str(info.value)


def test_objective_dimension_mismatch():
    obj, _ = builtin_objective("sphere", 3)
    with pytest.raises(DimensionError):
        Evaluator(obj, SearchSpace.box(2, 0, 1), 10)


def test_random_search_budget_and_determinism():
    from niafs.optimize import builtin_objective, random_search

    obj, space = builtin_objective("sphere", 3)
    a = random_search(obj, space, 2500, RngStream(1))
    b = random_search(obj, space, 2500, RngStream(1))
    assert a.evaluations_used == 2500 and a.budget_exhausted
    assert a.best_fitness == b.best_fitness and space.contains(a.best_position[None, :])
