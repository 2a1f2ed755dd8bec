"""Numba-jitted hot kernels: cyclic Jacobi eigensolver and Cholesky routines.

Kernels never raise; they hand back status codes so the wrappers in
``linalg`` can raise the package's exception types.  The pure-numpy twin of
this module is ``_kernels_numpy``; both apply the same elementwise update
formulas so results agree to floating-point roundoff.
"""

import math

import numpy as np
from numba import njit

BACKEND_NAME = "numba"


@njit(cache=True)
def jacobi_eigen(a, tol, max_sweeps):
    """Cyclic Jacobi rotations on a symmetric matrix ``a`` (destroyed).

    Returns (eigenvalues unsorted, accumulated rotations V, sweeps used);
    sweeps is -1 when the off-diagonal norm failed to drop below
    ``tol * ||a||_F`` within ``max_sweeps`` full sweeps.
    """
    d = a.shape[0]
    v = np.eye(d)
    norm_a = 0.0
    for i in range(d):
        for j in range(d):
            norm_a += a[i, j] * a[i, j]
    norm_a = math.sqrt(norm_a)

    cp = np.empty(d)
    cq = np.empty(d)
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for i in range(d):
            for j in range(i + 1, d):
                off += 2.0 * a[i, j] * a[i, j]
        if math.sqrt(off) <= tol * norm_a:
            return np.diag(a).copy(), v, sweep
        if sweep == max_sweeps:
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < abs(diff) * 1e-36:
                    t = apq / diff
                else:
                    phi = diff / (2.0 * apq)
                    t = 1.0 / (abs(phi) + math.sqrt(phi * phi + 1.0))
                    if phi < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                for i in range(d):
                    cp[i] = a[i, p]
                    cq[i] = a[i, q]
                for i in range(d):
                    a[i, p] = cp[i] - s * (cq[i] + tau * cp[i])
                    a[i, q] = cq[i] + s * (cp[i] - tau * cq[i])
                for i in range(d):
                    a[p, i] = a[i, p]
                    a[q, i] = a[i, q]
                a[p, p] = cp[p] - t * apq
                a[q, q] = cq[q] + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for i in range(d):
                    vp = v[i, p]
                    vq = v[i, q]
                    v[i, p] = vp - s * (vq + tau * vp)
                    v[i, q] = vq + s * (vp - tau * vq)
    return np.diag(a).copy(), v, -1


@njit(cache=True)
def cholesky_factor(a):
    """Lower-triangular L with L L^T = a; status -1 on success, else the
    index of the first failing pivot.  Pivots at or below 1e-14 of the
    original diagonal entry count as failures: rank deficiency shows up as
    a pivot of either sign at roundoff scale."""
    d = a.shape[0]
    lo = np.zeros((d, d))
    for j in range(d):
        s = a[j, j]
        for k in range(j):
            s -= lo[j, k] * lo[j, k]
        if s <= 1e-14 * abs(a[j, j]):
            return lo, j
        ljj = math.sqrt(s)
        lo[j, j] = ljj
        for i in range(j + 1, d):
            s = a[i, j]
            for k in range(j):
                s -= lo[i, k] * lo[j, k]
            lo[i, j] = s / ljj
    return lo, -1


@njit(cache=True)
def solve_lower(lo, b):
    d = lo.shape[0]
    y = np.empty(d)
    for i in range(d):
        s = b[i]
        for k in range(i):
            s -= lo[i, k] * y[k]
        y[i] = s / lo[i, i]
    return y


@njit(cache=True)
def solve_lower_transpose(lo, y):
    d = lo.shape[0]
    x = np.empty(d)
    for i in range(d - 1, -1, -1):
        s = y[i]
        for k in range(i + 1, d):
            s -= lo[k, i] * x[k]
        x[i] = s / lo[i, i]
    return x
