"""Pure-NumPy projected-gradient inner loop.

Fallback used when the compiled kernel in _pgd_cy is not available.  Both
kernels implement the same iteration and the same stopping rule; only the
floating-point summation order differs.
"""

import numpy as np

from . import projections


def pgd_loop(H, B0, s, t, tol, max_iter, metzler, record_iterates=False):
    """Iterate B <- P(B - (2/t) H B) until the step norm drops to tol.

    B0 must already be feasible; validation and the initial projection happen
    in the caller.  Returns (B, objective_history, residual_history,
    converged, iterates, overflow_iter) where overflow_iter is -1 unless a
    non-finite iterate appeared.
    """
    B = np.array(B0, dtype=float, copy=True)
    c = 2.0 / t
    obj = np.empty(max_iter + 1)
    res = np.empty(max_iter)
    iterates = [B.copy()] if record_iterates else None
    converged = False
    k = 0
    while k < max_iter:
        HB = H @ B
        obj[k] = np.sum(HB * B)
        Y = B - c * HB
        if not np.isfinite(Y).all():
            return B, obj[: k + 1].copy(), res[:k].copy(), False, iterates, k
        if metzler:
            Bn = projections.project_problem2(Y, s)
        else:
            Bn = projections.project_problem1(Y, s)
        r = float(np.linalg.norm(Bn - B))
        res[k] = r
        B = Bn
        k += 1
        if record_iterates:
            iterates.append(B.copy())
        if r <= tol:
            converged = True
            break
    HB = H @ B
    obj[k] = np.sum(HB * B)
    return B, obj[: k + 1].copy(), res[:k].copy(), converged, iterates, -1
