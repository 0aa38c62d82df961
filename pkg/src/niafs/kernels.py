"""Hot numeric kernels, each with a numba and a pure-numpy implementation.

The public names at the bottom dispatch on ``niafs._accel.USE_NUMBA``. The
``*_nb`` and ``*_np`` variants are exported for equivalence tests and the
benchmark script. Both variants accumulate in the same order so that, with
numba's default (non-fastmath) floating point, they agree bit for bit on the
cases the test-suite checks.
"""

import math

import numpy as np

from . import _accel
from ._accel import njit

# ---------------------------------------------------------------------------
# squared Euclidean distances
# ---------------------------------------------------------------------------


@njit(cache=True)
def sq_distances_nb(A, B):
    n, d = A.shape
    m = B.shape[0]
    out = np.zeros((n, m))
    for i in range(n):
        for j in range(m):
            acc = 0.0
            for f in range(d):
                diff = A[i, f] - B[j, f]
                acc += diff * diff
            out[i, j] = acc
    return out


def sq_distances_np(A, B):
    n, d = A.shape
    out = np.zeros((n, B.shape[0]))
    for f in range(d):
        diff = A[:, f][:, None] - B[:, f][None, :]
        out += diff * diff
    return out


# ---------------------------------------------------------------------------
# k-nearest-neighbour vote
# ---------------------------------------------------------------------------


@njit(cache=True)
def knn_vote_nb(D, y, k):
    # stable top-k by (distance, index) via insertion; matches a mergesort argsort prefix
    n_query, n_train = D.shape
    pred = np.zeros(n_query, dtype=np.int64)
    frac = np.zeros(n_query)
    top_d = np.empty(k)
    top_i = np.empty(k, dtype=np.int64)
    for q in range(n_query):
        m = 0
        for j in range(n_train):
            dj = D[q, j]
            if m == k and dj >= top_d[k - 1]:
                continue
            pos = m if m < k else k - 1
            while pos > 0 and top_d[pos - 1] > dj:
                if pos < k:
                    top_d[pos] = top_d[pos - 1]
                    top_i[pos] = top_i[pos - 1]
                pos -= 1
            top_d[pos] = dj
            top_i[pos] = j
            if m < k:
                m += 1
        c0 = 0
        c1 = 0
        s0 = 0.0
        s1 = 0.0
        for t in range(k):
            idx = top_i[t]
            if y[idx] == 1:
                c1 += 1
                s1 += D[q, idx]
            else:
                c0 += 1
                s0 += D[q, idx]
        if c1 > c0 or (c1 == c0 and s1 < s0):
            pred[q] = 1
        frac[q] = c1 / k
    return pred, frac


def knn_vote_np(D, y, k):
    order = np.argsort(D, axis=1, kind="stable")[:, :k]
    near_y = y[order]
    near_d = np.take_along_axis(D, order, axis=1)
    c1 = (near_y == 1).sum(axis=1)
    c0 = k - c1
    s1 = np.zeros(D.shape[0])
    s0 = np.zeros(D.shape[0])
    for t in range(k):
        s1 += np.where(near_y[:, t] == 1, near_d[:, t], 0.0)
        s0 += np.where(near_y[:, t] == 1, 0.0, near_d[:, t])
    pred = ((c1 > c0) | ((c1 == c0) & (s1 < s0))).astype(np.int64)
    return pred, c1 / k


# ---------------------------------------------------------------------------
# best Gini split over a candidate feature set
# ---------------------------------------------------------------------------


@njit(cache=True)
def _gini2_nb(a, b):
    s = a + b
    return 1.0 - (a * a + b * b) / (s * s)


@njit(cache=True)
def split_scan_nb(X, y, w, features):
    n = X.shape[0]
    w0 = np.zeros(n)
    w1 = np.zeros(n)
    W0 = 0.0
    W1 = 0.0
    for i in range(n):
        if y[i] == 1:
            w1[i] = w[i]
        else:
            w0[i] = w[i]
        W0 += w0[i]
        W1 += w1[i]
    W = W0 + W1
    parent = _gini2_nb(W0, W1)
    best_f = -1
    best_thr = np.nan
    best_gain = -np.inf
    for fi in range(features.shape[0]):
        f = features[fi]
        col = X[:, f].copy()
        order = np.argsort(col, kind="mergesort")
        L0 = 0.0
        L1 = 0.0
        for t in range(n - 1):
            o = order[t]
            L0 += w0[o]
            L1 += w1[o]
            a = col[o]
            b = col[order[t + 1]]
            if a < b:
                R0 = W0 - L0
                R1 = W1 - L1
                WL = L0 + L1
                WR = R0 + R1
                child = (WL * _gini2_nb(L0, L1) + WR * _gini2_nb(R0, R1)) / W
                gain = parent - child
                if gain > best_gain:
                    best_gain = gain
                    best_f = f
                    thr = 0.5 * (a + b)
                    if thr >= b:
                        thr = a
                    best_thr = thr
    return best_f, best_thr, best_gain


def _gini2_np(a, b):
    s = a + b
    return 1.0 - (a * a + b * b) / (s * s)


def split_scan_np(X, y, w, features):
    w0 = np.where(y == 1, 0.0, w)
    w1 = np.where(y == 1, w, 0.0)
    W0 = np.cumsum(w0)[-1]
    W1 = np.cumsum(w1)[-1]
    W = W0 + W1
    parent = _gini2_np(W0, W1)
    best_f, best_thr, best_gain = -1, np.nan, -np.inf
    for f in features:
        col = X[:, f]
        order = np.argsort(col, kind="stable")
        xs = col[order]
        L0 = np.cumsum(w0[order])[:-1]
        L1 = np.cumsum(w1[order])[:-1]
        valid = xs[:-1] < xs[1:]
        if not valid.any():
            continue
        R0 = W0 - L0
        R1 = W1 - L1
        WL = L0 + L1
        WR = R0 + R1
        with np.errstate(invalid="ignore", divide="ignore"):
            child = (WL * _gini2_np(L0, L1) + WR * _gini2_np(R0, R1)) / W
        gain = np.where(valid, parent - child, -np.inf)
        t = int(np.argmax(gain))
        if gain[t] > best_gain:
            best_gain = float(gain[t])
            best_f = int(f)
            a, b = xs[t], xs[t + 1]
            thr = 0.5 * (a + b)
            best_thr = float(a if thr >= b else thr)
    return best_f, best_thr, best_gain


# ---------------------------------------------------------------------------
# simplified SMO
# ---------------------------------------------------------------------------


@njit(cache=True)
def smo_solve_nb(K, y, C, tol, max_passes, max_iter, rand_u):
    n = K.shape[0]
    alpha = np.zeros(n)
    b = 0.0
    passes = 0
    it = 0
    draw = 0
    n_draws = rand_u.shape[0]
    while passes < max_passes and it < max_iter:
        changed = 0
        for i in range(n):
            Ei = np.dot(alpha * y, K[i]) + b - y[i]
            if (y[i] * Ei < -tol and alpha[i] < C) or (y[i] * Ei > tol and alpha[i] > 0):
                j = int(rand_u[draw % n_draws] * (n - 1))
                draw += 1
                if j >= i:
                    j += 1
                Ej = np.dot(alpha * y, K[j]) + b - y[j]
                ai_old = alpha[i]
                aj_old = alpha[j]
                if y[i] != y[j]:
                    L = max(0.0, aj_old - ai_old)
                    H = min(C, C + aj_old - ai_old)
                else:
                    L = max(0.0, ai_old + aj_old - C)
                    H = min(C, ai_old + aj_old)
                if L == H:
                    continue
                eta = 2.0 * K[i, j] - K[i, i] - K[j, j]
                if eta >= 0.0:
                    continue
                aj = aj_old - y[j] * (Ei - Ej) / eta
                if aj > H:
                    aj = H
                elif aj < L:
                    aj = L
                if abs(aj - aj_old) < 1e-5:
                    continue
                ai = ai_old + y[i] * y[j] * (aj_old - aj)
                alpha[i] = ai
                alpha[j] = aj
                b1 = b - Ei - y[i] * (ai - ai_old) * K[i, i] - y[j] * (aj - aj_old) * K[i, j]
                b2 = b - Ej - y[i] * (ai - ai_old) * K[i, j] - y[j] * (aj - aj_old) * K[j, j]
                if 0.0 < ai < C:
                    b = b1
                elif 0.0 < aj < C:
                    b = b2
                else:
                    b = 0.5 * (b1 + b2)
                changed += 1
        it += 1
        if changed == 0:
            passes += 1
        else:
            passes = 0
    return alpha, b, passes >= max_passes


def smo_solve_np(K, y, C, tol, max_passes, max_iter, rand_u):
    n = K.shape[0]
    alpha = np.zeros(n)
    b = 0.0
    passes = it = draw = 0
    n_draws = rand_u.shape[0]
    while passes < max_passes and it < max_iter:
        changed = 0
        for i in range(n):
            Ei = np.dot(alpha * y, K[i]) + b - y[i]
            if not ((y[i] * Ei < -tol and alpha[i] < C) or (y[i] * Ei > tol and alpha[i] > 0)):
                continue
            j = int(rand_u[draw % n_draws] * (n - 1))
            draw += 1
            if j >= i:
                j += 1
            Ej = np.dot(alpha * y, K[j]) + b - y[j]
            ai_old, aj_old = alpha[i], alpha[j]
            if y[i] != y[j]:
                L, H = max(0.0, aj_old - ai_old), min(C, C + aj_old - ai_old)
            else:
                L, H = max(0.0, ai_old + aj_old - C), min(C, ai_old + aj_old)
            if L == H:
                continue
            eta = 2.0 * K[i, j] - K[i, i] - K[j, j]
            if eta >= 0.0:
                continue
            aj = min(H, max(L, aj_old - y[j] * (Ei - Ej) / eta))
            if abs(aj - aj_old) < 1e-5:
                continue
            ai = ai_old + y[i] * y[j] * (aj_old - aj)
            alpha[i], alpha[j] = ai, aj
            b1 = b - Ei - y[i] * (ai - ai_old) * K[i, i] - y[j] * (aj - aj_old) * K[i, j]
            b2 = b - Ej - y[i] * (ai - ai_old) * K[i, j] - y[j] * (aj - aj_old) * K[j, j]
            if 0.0 < ai < C:
                b = b1
            elif 0.0 < aj < C:
                b = b2
            else:
                b = 0.5 * (b1 + b2)
            changed += 1
        it += 1
        passes = passes + 1 if changed == 0 else 0
    return alpha, b, passes >= max_passes


# ---------------------------------------------------------------------------
# gravitational accelerations
# ---------------------------------------------------------------------------


@njit(cache=True)
def gsa_accel_nb(X, masses, kbest, G, eps, weights):
    n, d = X.shape
    acc = np.zeros((n, d))
    for i in range(n):
        for t in range(kbest.shape[0]):
            j = kbest[t]
            if j == i:
                continue
            r2 = 0.0
            for f in range(d):
                diff = X[j, f] - X[i, f]
                r2 += diff * diff
            scale = weights[i, j] * G * masses[j] / (np.sqrt(r2) + eps)
            for f in range(d):
                acc[i, f] += scale * (X[j, f] - X[i, f])
    return acc


def gsa_accel_np(X, masses, kbest, G, eps, weights):
    n, d = X.shape
    acc = np.zeros((n, d))
    for j in kbest:
        diff = X[j][None, :] - X
        r2 = np.zeros(n)
        for f in range(d):
            r2 += diff[:, f] * diff[:, f]
        scale = weights[:, j] * G * masses[j] / (np.sqrt(r2) + eps)
        scale[j] = 0.0
        acc += scale[:, None] * diff
    return acc


# ---------------------------------------------------------------------------
# firefly attraction sweep
# ---------------------------------------------------------------------------


@njit(cache=True)
def firefly_sweep_nb(X, fit, beta0, gamma, alpha, noise, span):
    n, d = X.shape
    out = X.copy()
    for i in range(n):
        moved = False
        for j in range(n):
            if fit[j] < fit[i]:
                r2 = 0.0
                for f in range(d):
                    diff = (out[i, f] - X[j, f]) / span[f]
                    r2 += diff * diff
                beta = beta0 * np.exp(-gamma * r2)
                for f in range(d):
                    out[i, f] = out[i, f] + beta * (X[j, f] - out[i, f]) + alpha * noise[i, j, f] * span[f]
                moved = True
        if not moved:
            for f in range(d):
                out[i, f] = out[i, f] + alpha * noise[i, i, f] * span[f]
    return out


def firefly_sweep_np(X, fit, beta0, gamma, alpha, noise, span):
    out = X.copy()
    n = X.shape[0]
    for i in range(n):
        brighter = np.flatnonzero(fit < fit[i])
        for j in brighter:
            diff = (out[i] - X[j]) / span
            r2 = 0.0
            for v in diff:
                r2 += v * v
            beta = beta0 * math.exp(-gamma * r2)
            out[i] = out[i] + beta * (X[j] - out[i]) + alpha * noise[i, j] * span
        if brighter.size == 0:
            out[i] = out[i] + alpha * noise[i, i] * span
    return out


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

_PAIRS = {
    "sq_distances": (sq_distances_nb, sq_distances_np),
    "knn_vote": (knn_vote_nb, knn_vote_np),
    "split_scan": (split_scan_nb, split_scan_np),
    "smo_solve": (smo_solve_nb, smo_solve_np),
    "gsa_accel": (gsa_accel_nb, gsa_accel_np),
    "firefly_sweep": (firefly_sweep_nb, firefly_sweep_np),
}


def implementations(name):
    """Return ``(numba_impl, numpy_impl)`` for a kernel name."""
    return _PAIRS[name]


def _pick(name):
    nb, np_ = _PAIRS[name]
    return nb if _accel.USE_NUMBA else np_


sq_distances = _pick("sq_distances")
knn_vote = _pick("knn_vote")
split_scan = _pick("split_scan")
smo_solve = _pick("smo_solve")
gsa_accel = _pick("gsa_accel")
firefly_sweep = _pick("firefly_sweep")
