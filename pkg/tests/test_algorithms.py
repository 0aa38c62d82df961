import math

import numpy as np
import pytest

from niafs.algorithms import (abc_neighbor_search, bat_update, binarize_probability, firefly_move, get_algorithm,
                              gsa_accelerations, gsa_forces, gsa_masses, init_algorithm, levy_flight_step,
                              mantegna_sigma, pso_velocity_update, step_algorithm)
from niafs.algorithms.monarch import levy_walk
from niafs.errors import DimensionError, ValidationError
from niafs.optimize import ALGORITHMS, Evaluator, Objective, OptimizerSpec, SearchSpace, builtin_objective
from niafs.rng import RngStream

REL = 1e-12


# --- PSO -------------------------------------------------------------------

def test_pso_identity_case():
    v = np.array([0.3, -2.0])
    out = pso_velocity_update(v, [1, 1], [5, 5], [9, 9], 1.0, 0.0, 0.0, [0.5, 0.5], [0.5, 0.5])
    assert np.array_equal(out, v)


def test_pso_hand_value():
    out = pso_velocity_update([0.0], [1.0], [2.0], [3.0], 0.7, 1.5, 1.5, [1.0], [1.0])
    assert out[0] == pytest.approx(4.5, rel=REL)


def test_pso_no_attraction():
    out = pso_velocity_update([2.0, -1.0], [1, 1], [1, 1], [1, 1], 0.4, 1.5, 1.5, [0.3, 0.9], [0.1, 0.2])
    assert np.allclose(out, [0.8, -0.4], rtol=REL, atol=0)


def test_pso_shape_mismatch():
    with pytest.raises(DimensionError):
        pso_velocity_update([0, 0], [1], [1], [1], 0.7, 1.5, 1.5, [1], [1])


# --- Cuckoo / Levy ------------------------------------------------------------

def test_mantegna_sigma_value():
    expected = (math.gamma(2.5) * math.sin(math.pi * 0.75) / (math.gamma(1.25) * 1.5 * 2 ** 0.25)) ** (1 / 1.5)
    assert mantegna_sigma(1.5) == pytest.approx(0.6966, abs=5e-5)
    assert mantegna_sigma(1.5) == pytest.approx(expected, rel=REL)


def test_levy_deterministic():
    a = levy_flight_step(1.5, 0.01, RngStream(3), 6)
    b = levy_flight_step(1.5, 0.01, RngStream(3), 6)
    assert np.array_equal(a, b) and a.shape == (6,)


def test_levy_heavy_tailed():
    x = levy_flight_step(1.5, 1.0, RngStream(0), 100_000)
    z = (x - x.mean()) / x.std()
    assert np.mean(z ** 4) > 10.0


@pytest.mark.parametrize("beta", [1.0, 2.5, 0.5])
def test_levy_beta_range(beta):
    with pytest.raises(ValidationError):
        levy_flight_step(beta, 1.0, RngStream(0), 3)


def test_levy_scale_positive():
    with pytest.raises(ValidationError):
        levy_flight_step(1.5, 0.0, RngStream(0), 3)


# --- Firefly ------------------------------------------------------------------

def test_firefly_same_point():
    assert np.array_equal(firefly_move([0.4, 0.2], [0.4, 0.2], 1.0, 1.0, 0.0, [0.3, 0.3]), [0.4, 0.2])


def test_firefly_full_attraction():
    assert np.allclose(firefly_move([0.0, 3.0], [1.0, -2.0], 1.0, 0.0, 0.0, [0.1, 0.1]), [1.0, -2.0], rtol=REL)


def test_firefly_hand_value():
    out = firefly_move([0.0], [1.0], 1.0, 1.0, 0.0, [0.0])
    assert out[0] == pytest.approx(math.exp(-1), rel=REL)


def test_firefly_dimension_check():
    with pytest.raises(DimensionError):
        firefly_move([0.0], [1.0, 2.0], 1.0, 1.0, 0.0, [0.0])


# --- Bat ----------------------------------------------------------------------

def test_bat_at_gbest():
    x, v, f = bat_update([0.5, 0.5], [0.1, -0.2], [0.5, 0.5], 0.0, 2.0, 0.3)
    assert np.array_equal(v, [0.1, -0.2]) and np.allclose(x, [0.6, 0.3], rtol=REL)


def test_bat_frequency_bounds():
    assert bat_update([1.0], [0.0], [0.0], 0.25, 2.0, 0.0)[2] == 0.25
    assert bat_update([1.0], [0.0], [0.0], 0.25, 2.0, 1.0)[2] == 2.0


def test_bat_hand_value():
    x, v, f = bat_update([1.0], [0.0], [0.0], 0.0, 1.0, 0.5)
    assert f == 0.5 and v[0] == pytest.approx(0.5, rel=REL) and x[0] == pytest.approx(1.5, rel=REL)


def test_bat_dimension_check():
    with pytest.raises(DimensionError):
        bat_update([1.0, 2.0], [0.0], [0.0, 0.0], 0.0, 1.0, 0.5)


# --- ABC ----------------------------------------------------------------------

def test_abc_phi_zero():
    assert np.array_equal(abc_neighbor_search([1.0, 2.0], [5.0, 7.0], 1, 0.0), [1.0, 2.0])


def test_abc_hand_value():
    assert np.allclose(abc_neighbor_search([1.0, 1.0], [0.0, 3.0], 1, 0.5), [1.0, 0.0], rtol=REL)


def test_abc_same_partner():
    assert np.array_equal(abc_neighbor_search([0.3, 0.4], [0.3, 0.4], 0, -0.9), [0.3, 0.4])


def test_abc_index_and_phi_checked():
    with pytest.raises(ValidationError):
        abc_neighbor_search([1.0, 1.0], [0.0, 0.0], 2, 0.5)
    with pytest.raises(ValidationError):
        abc_neighbor_search([1.0, 1.0], [0.0, 0.0], 0, 1.5)


# --- GSA ----------------------------------------------------------------------

def test_gsa_identical_positions():
    acc = gsa_forces([[0.3], [0.3]], [1.0, 2.0], 1.0, 1e-9, np.ones((2, 2)))
    assert np.array_equal(acc, np.zeros((2, 1)))


def test_gsa_uniform_masses():
    assert np.allclose(gsa_masses([4.0, 4.0, 4.0, 4.0]), 0.25)


def test_gsa_hand_value():
    acc = gsa_accelerations([[0.0], [1.0]], [0.25, 0.75], 1.0, 1e-9, np.ones((2, 2)))
    assert acc[0, 0] == pytest.approx(0.75 / (1 + 1e-9), rel=REL)
    assert acc[0, 0] == pytest.approx(0.75, rel=1e-8)
    assert acc[1, 0] == pytest.approx(-0.25 / (1 + 1e-9), rel=REL)


def test_gsa_masses_formula():
    m = gsa_masses([1.0, 3.0, 2.0])  # best 1, worst 3 -> raw [1, 0, 0.5]
    assert np.allclose(m, [2 / 3, 0.0, 1 / 3], rtol=REL)


def test_gsa_needs_two_agents():
    with pytest.raises(ValidationError):
        gsa_forces([[0.0]], [1.0], 1.0, 1e-9, np.ones((1, 1)))


# --- transfer and Monarch ---------------------------------------------------------

def test_binarize_probability():
    assert binarize_probability(0.0) == 0.5
    assert binarize_probability(2.0) == pytest.approx(0.8807970779778823, rel=REL)
    assert binarize_probability(1e6) == 1.0
    assert binarize_probability(-1e6) == 0.0


def test_levy_walk_shape():
    assert levy_walk(np.array([2.0, 3.0]), 4, RngStream(1)).shape == (2, 4)


# --- step semantics -------------------------------------------------------------

def _evaluator(name="sphere", d=2, budget=10**7):
    obj, space = builtin_objective(name, d)
    return Evaluator(obj, space, budget, record_history=False)


@pytest.mark.parametrize("algo", ALGORITHMS)
def test_elitism_over_many_steps(algo):
    ev = _evaluator("rastrigin", 2)
    rng = RngStream(2024, (ALGORITHMS.index(algo),))
    state = init_algorithm(algo, ev, 8, rng)
    best = state.best_fitness
    for _ in range(1000):
        state = step_algorithm(algo, state, ev, rng)
        assert state.best_fitness <= best
        assert ev.space.contains(state.positions)
        best = state.best_fitness
    assert state.generation == 1000


@pytest.mark.parametrize("algo", ALGORITHMS)
def test_step_leaves_input_untouched(algo):
    ev = _evaluator()
    rng = RngStream(3)
    state = init_algorithm(algo, ev, 6, rng)
    snapshot = state.copy()
    step_algorithm(algo, state, ev, rng)
    assert np.array_equal(state.positions, snapshot.positions) and state.best_fitness == snapshot.best_fitness


@pytest.mark.parametrize("algo", ALGORITHMS)
def test_trajectories_identical(algo):
    def trajectory():
        ev = _evaluator("rosenbrock", 3)
        rng = RngStream(17)
        st = init_algorithm(algo, ev, 7, rng)
        out = []
        for _ in range(15):
            st = step_algorithm(algo, st, ev, rng)
            out.append(st.positions.copy())
        return np.array(out)

    assert np.array_equal(trajectory(), trajectory())


@pytest.mark.parametrize("algo", ALGORITHMS)
def test_step_on_constant_keeps_best(algo):
    ev = Evaluator(Objective(lambda x: 1.0, "c", batch=lambda X: np.ones(len(X))), SearchSpace.box(2, 0, 1), 10**6)
    rng = RngStream(8)
    st = init_algorithm(algo, ev, 5, rng)
    pos = st.best_position.copy()
    st2 = step_algorithm(algo, st, ev, rng)
    assert st2.best_fitness == 1.0 and np.array_equal(st2.best_position, pos)


@pytest.mark.parametrize("algo", ALGORITHMS)
def test_partial_step_flagged(algo):
    ev = _evaluator(budget=9)
    rng = RngStream(1)
    st = init_algorithm(algo, ev, 6, rng)
    st = step_algorithm(algo, st, ev, rng)
    assert ev.used == 9 and st.budget_exhausted


def test_pso_step_elitism_example():
    ev = _evaluator("sphere", 2)
    rng = RngStream(5)
    st = init_algorithm("PSO", ev, 30, rng)
    assert step_algorithm("PSO", st, ev, rng, {"w": 0.7, "c1": 1.5, "c2": 1.5}).best_fitness <= st.best_fitness


def test_cuckoo_hundred_steps():
    ev = _evaluator("sphere", 2)
    rng = RngStream(3)
    st = init_algorithm("CuckooSearch", ev, 20, rng)
    for _ in range(100):
        st = step_algorithm("CuckooSearch", st, ev, rng)
    assert st.best_fitness <= 0.1


def test_unknown_algorithm():
    with pytest.raises(ValidationError):
        get_algorithm("HillClimb")


def test_params_override_reaches_step():
    ev = _evaluator()
    rng = RngStream(1)
    st = init_algorithm("PSO", ev, 5, rng)
    frozen = step_algorithm("PSO", st, ev, RngStream(2), {"w": 0.0, "c1": 0.0, "c2": 0.0})
    assert np.array_equal(frozen.positions, st.positions)
