"""Time each numba kernel against its numpy fallback on representative inputs.

    python benchmarks/bench_kernels.py [--repeat 5]

Both variants are imported directly, so the NIAFS_DISABLE_NUMBA flag does
not matter here. The first numba call (compilation or cache load) is excluded.
"""

import argparse
import time

import numpy as np

from niafs import kernels
from niafs.classifiers.svm import kernel_matrix


def cases(rng):
    A, B = rng.random((200, 10)), rng.random((800, 10))
    D = kernels.sq_distances_np(A, B)
    y800 = rng.integers(0, 2, 800)
    Xs, ys = rng.random((500, 20)), rng.integers(0, 2, 500)
    Xk = rng.random((150, 5))
    ysvm = np.where(Xk[:, 0] + Xk[:, 1] > 1, 1.0, -1.0)
    K = kernel_matrix(Xk, Xk, "rbf", 1.0)
    P = rng.random((30, 10))
    fit = rng.random(30)
    masses = fit / fit.sum()
    return {
        "sq_distances": (A, B),
        "knn_vote": (D, y800, 5),
        "split_scan": (Xs, ys, np.ones(500), np.arange(20)),
        "smo_solve": (K, ysvm, 1.0, 1e-3, 5, 1000, rng.random(4096)),
        "gsa_accel": (P, masses, np.arange(30), 10.0, 1e-10, rng.random((30, 30))),
        "firefly_sweep": (P, fit, 1.0, 1.0, 0.2, rng.random((30, 30, 10)) - 0.5, np.ones(10)),
    }


def best_time(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    print(f"{'kernel':<15}{'numba ms':>12}{'numpy ms':>12}{'speedup':>10}")
    for name, inputs in cases(rng).items():
        nb, npf = kernels.implementations(name)
        nb(*inputs)  # compile / load cache
        t_nb = best_time(nb, inputs, args.repeat)
        t_np = best_time(npf, inputs, args.repeat)
        print(f"{name:<15}{t_nb * 1e3:>12.3f}{t_np * 1e3:>12.3f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
