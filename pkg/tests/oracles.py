"""Reference implementations used as test oracles.

These deliberately avoid the package's own eigendecomposition code: matrix
functions go through scipy's Schur/Pade routines, and the high precision
oracles use mpmath.
"""

import warnings
from itertools import combinations

import mpmath
import numpy as np
import scipy.linalg as sl


def random_spd(rng, m, cond=100.0):
    lam = np.exp(rng.uniform(0, np.log(cond), m))
    Q, _ = np.linalg.qr(rng.standard_normal((m, m)))
    A = (Q * lam) @ Q.T
    return (A + A.T) / 2


def commuting_tuple(rng, m, n, cond=100.0):
    """Matrices ``Q diag(lam_j) Q^T`` sharing one eigenbasis ``Q``."""
    Q, _ = np.linalg.qr(rng.standard_normal((m, m)))
    lams = [np.exp(rng.uniform(0, np.log(cond), m)) for _ in range(n)]
    mats = [(Q * lam) @ Q.T for lam in lams]
    return Q, lams, [(A + A.T) / 2 for A in mats]


def rel(X, Y):
    return np.linalg.norm(X - Y) / max(np.linalg.norm(Y), 1e-300)


def power(A, r):
    return np.real(sl.fractional_matrix_power(A, r))


def sqrtm(A):
    return np.real(sl.sqrtm(A))


def logm(A):
    # scipy warns about its own error estimate near 1e-13; not a concern here
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        return np.real(sl.logm(A))


def expm(A):
    return sl.expm(A)


def geodesic(A, B, s):
    ah = sqrtm(A)
    aih = np.linalg.inv(ah)
    return ah @ power(aih @ B @ aih, s) @ ah


def riemannian(A, B):
    aih = np.linalg.inv(sqrtm(A))
    return np.linalg.norm(logm(aih @ B @ aih))


def bures(A, B):
    ah = sqrtm(A)
    return np.sqrt(max(np.trace(A + B) / 2 - np.trace(sqrtm(ah @ B @ ah)), 0.0))


def fixed_point_map(mats, w, t, X):
    """``sum_j w_j (X^{1/2} A_j^p X^{1/2})^t`` in double precision."""
    p = (1 - t) / t
    xh = sqrtm(X)
    return sum(wj * power(xh @ power(A, p) @ xh, t) for wj, A in zip(w, mats))


def _mp_fn(M, f):
    E, Q = mpmath.eigsy(M)
    D = mpmath.diag([f(E[i]) for i in range(M.rows)])
    return Q * D * Q.T


def mp_fixed_point_residual(mats, w, t, X, dps=60):
    """``||X - H(X)||_F / ||X||_F`` evaluated in high precision."""
    with mpmath.workdps(dps):
        t = mpmath.mpf(t)
        p = (1 - t) / t
        Xm = mpmath.matrix(X.tolist())
        xh = _mp_fn(Xm, mpmath.sqrt)
        H = mpmath.zeros(Xm.rows)
        for wj, A in zip(w, mats):
            Ap = _mp_fn(mpmath.matrix(A.tolist()), lambda x: x**p)
            S = xh * Ap * xh
            S = (S + S.T) / 2
            H += mpmath.mpf(wj) * _mp_fn(S, lambda x: x**t)
        return float(mpmath.mnorm(Xm - H, "f") / mpmath.mnorm(Xm, "f"))


def mp_entropy(A, X, t, dps=60):
    """``tr(A^{(1-t)/2t} X A^{(1-t)/2t})^t`` in high precision."""
    with mpmath.workdps(dps):
        t = mpmath.mpf(t)
        q = (1 - t) / (2 * t)
        Ah = _mp_fn(mpmath.matrix(A.tolist()), lambda x: x**q)
        S = Ah * mpmath.matrix(X.tolist()) * Ah
        S = (S + S.T) / 2
        E, _ = mpmath.eigsy(S)
        return float(sum(E[i] ** t for i in range(S.rows)))


def compound_by_minors(A, k):
    """k-th compound from explicit minors, one determinant per entry."""
    m = A.shape[0]
    idx = list(combinations(range(m), k))
    C = np.empty((len(idx), len(idx)))
    for i, a in enumerate(idx):
        for j, b in enumerate(idx):
            C[i, j] = np.linalg.det(A[np.ix_(a, b)])
    return C


def scalar_omega(a, w, t):
    """Closed form for commuting (scalar) data."""
    a = np.asarray(a, dtype=float)
    return float(np.sum(np.asarray(w) * a ** (1 - t)) ** (1 / (1 - t)))
