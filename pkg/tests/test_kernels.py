"""The numba kernels and their numpy fallbacks must agree bit for bit."""

import os
import subprocess
import sys

import numpy as np
import pytest

from niafs import _accel, kernels
from niafs.classifiers.svm import kernel_matrix


def _inputs(seed):
    g = np.random.default_rng(seed)
    A, B = g.random((13, 4)), g.random((29, 4))
    D = kernels.sq_distances_np(A, B)
    D[:, 3] = D[:, 5]  # force distance ties
    X = np.round(g.random((40, 5)), 1)  # repeated values exercise threshold ties
    y = g.integers(0, 2, 40)
    Xk = g.random((25, 3))
    ys = np.where(Xk[:, 0] > 0.5, 1.0, -1.0)
    P = g.random((9, 3))
    fit = g.random(9)
    return {
        "sq_distances": (A, B),
        "knn_vote": (D, g.integers(0, 2, 29), 5),
        "split_scan": (X, y, g.random(40) + 0.5, np.array([4, 0, 2], dtype=np.int64)),
        "smo_solve": (kernel_matrix(Xk, Xk, "rbf", 2.0), ys, 1.0, 1e-3, 5, 500, g.random(400)),
        "gsa_accel": (P, fit / fit.sum(), np.arange(5, dtype=np.int64), 3.0, 1e-10, g.random((9, 9))),
        "firefly_sweep": (P, fit, 1.0, 1.0, 0.2, g.random((9, 9, 3)) - 0.5, np.array([1.0, 2.0, 0.5])),
    }


@pytest.mark.skipif(not _accel.NUMBA_AVAILABLE, reason="numba not installed")
@pytest.mark.parametrize("seed", [0, 1, 2])
@pytest.mark.parametrize("name", ["sq_distances", "knn_vote", "split_scan", "smo_solve", "gsa_accel", "firefly_sweep"])
def test_backends_bit_identical(name, seed):
    nb, npf = kernels.implementations(name)
    args = _inputs(seed)[name]
    a, b = nb(*args), npf(*args)
    a = a if isinstance(a, tuple) else (a,)
    b = b if isinstance(b, tuple) else (b,)
    for x, y in zip(a, b):
        assert np.array_equal(np.asarray(x), np.asarray(y))


def test_knn_vote_matches_stable_sort_on_ties():
    D = np.array([[1.0, 0.0, 0.0, 1.0, 0.0]])
    y = np.array([1, 0, 1, 0, 0])
    for fn in kernels.implementations("knn_vote"):
        pred, frac = fn(D, y, 3)  # nearest by (distance, index): rows 1, 2, 4
        assert pred[0] == 0 and frac[0] == pytest.approx(1 / 3)


def test_disable_flag_selects_numpy():
    code = "from niafs import _accel, kernels; print(_accel.USE_NUMBA, kernels.sq_distances is kernels.sq_distances_np)"
    env = dict(os.environ, NIAFS_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["False", "True"]
