"""Pure-numpy fallback for the hot kernels in ``_kernels_numba``.

Same algorithms, same per-element update formulas; rotations are applied
with vectorized row/column operations instead of jitted scalar loops.
Selected via ``SPLITCS_BACKEND=numpy`` (see ``kernels``).
"""

import math

import numpy as np

BACKEND_NAME = "numpy"


def jacobi_eigen(a, tol, max_sweeps):
    d = a.shape[0]
    v = np.eye(d)
    norm_a = math.sqrt(float(np.sum(a * a)))
    upper = np.triu_indices(d, 1)

    for sweep in range(max_sweeps + 1):
        off2 = 2.0 * float(np.sum(a[upper] ** 2))
        if math.sqrt(off2) <= tol * norm_a:
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
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = cp - s * (cq + tau * cp)
                a[:, q] = cq + s * (cp - tau * cq)
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = cp[p] - t * apq
                a[q, q] = cq[q] + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = vp - s * (vq + tau * vp)
                v[:, q] = vq + s * (vp - tau * vq)
    return np.diag(a).copy(), v, -1


def cholesky_factor(a):
    d = a.shape[0]
    lo = np.zeros((d, d))
    for j in range(d):
        s = a[j, j] - float(lo[j, :j] @ lo[j, :j])
        if s <= 1e-14 * abs(a[j, j]):
            return lo, j
        ljj = math.sqrt(s)
        lo[j, j] = ljj
        if j + 1 < d:
            lo[j + 1 :, j] = (a[j + 1 :, j] - lo[j + 1 :, :j] @ lo[j, :j]) / ljj
    return lo, -1


def solve_lower(lo, b):
    d = lo.shape[0]
    y = np.empty(d)
    for i in range(d):
        y[i] = (b[i] - lo[i, :i] @ y[:i]) / lo[i, i]
    return y


def solve_lower_transpose(lo, y):
    d = lo.shape[0]
    x = np.empty(d)
    for i in range(d - 1, -1, -1):
        x[i] = (y[i] - lo[i + 1 :, i] @ x[i + 1 :]) / lo[i, i]
    return x
