"""Dense linear-algebra kernels shared by the objective and the diagnostics.

Everything here works on plain float64 ndarrays.  The two Gramian routines
evaluate their integrals with a single block matrix exponential instead of
quadrature: for a block-triangular

    C = [[F, G], [0, K]]

the top-right block of e^{CT} is the integral of e^{F(T-tau)} G e^{K tau},
which yields both integrals below after one extra matrix product.
"""

import numpy as np
import scipy.linalg

from .errors import DimensionError, NumericOverflowError


def _as_matrix(M, name="matrix"):
    M = np.asarray(M, dtype=float)
    if M.ndim != 2:
        raise DimensionError("%s must be 2-D, got ndim=%d" % (name, M.ndim))
    if M.shape[0] < 1 or M.shape[1] < 1:
        raise DimensionError("%s must be nonempty, got shape %r" % (name, M.shape))
    if not np.isfinite(M).all():
        raise ValueError("%s contains non-finite entries" % name)
    return M


def _as_square(A, name="A"):
    A = _as_matrix(A, name)
    if A.shape[0] != A.shape[1]:
        raise DimensionError("%s must be square, got shape %r" % (name, A.shape))
    return A


def _check_horizon(T):
    T = float(T)
    if not np.isfinite(T) or T <= 0.0:
        raise ValueError("horizon T must be positive and finite, got %r" % T)
    return T


def expm(A):
    """Matrix exponential e^A (scaling-and-squaring with a Pade approximant).

    Raises DimensionError for non-square input and NumericOverflowError when
    the result overflows to non-finite entries.
    """
    A = _as_square(A)
    E = scipy.linalg.expm(A)
    if not np.isfinite(E).all():
        raise NumericOverflowError(
            "matrix exponential overflowed to non-finite entries "
            "(input 1-norm %.6g, max|a_ij| %.6g)"
            % (np.linalg.norm(A, 1), np.abs(A).max())
        )
    return E


def gramian_H(A, T):
    """Input-energy Gramian H(A, T) = -int_0^T e^{A' tau} e^{A tau} dtau.

    H is symmetric negative definite.  Computed from the exponential of the
    2n x 2n block matrix [[-A', I], [0, A]] scaled by T: with G the top-right
    block of that exponential, H = -(e^{AT})' G.
    """
    A = _as_square(A)
    T = _check_horizon(T)
    n = A.shape[0]
    blk = np.zeros((2 * n, 2 * n))
    blk[:n, :n] = -A.T
    blk[:n, n:] = np.eye(n)
    blk[n:, n:] = A
    E = expm(blk * T)
    G = E[:n, n:]
    eAT = E[n:, n:]
    H = -(eAT.T @ G)
    if not np.isfinite(H).all():
        raise NumericOverflowError(
            "Gramian overflowed to non-finite entries (e^{AT} Frobenius norm %.6g)"
            % np.linalg.norm(eAT)
        )
    return 0.5 * (H + H.T)


def lipschitz_L(H):
    """Gradient Lipschitz constant L = -2 tr(H) for the trace objective.

    H must be the (negative definite) input-energy Gramian; a non-negative
    trace is rejected.
    """
    H = _as_square(H, "H")
    tr = float(np.trace(H))
    if tr >= 0.0:
        raise ValueError(
            "H must have negative trace (negative definite Gramian), got tr = %g" % tr
        )
    return -2.0 * tr


def controllability_gramian(A, B, T):
    """Finite-horizon controllability Gramian int_0^T e^{A tau} B B' e^{A' tau} dtau.

    Uses the exponential of [[-A, BB'], [0, A']] scaled by T: with G its
    top-right block, the Gramian is e^{AT} G.
    """
    A = _as_square(A)
    B = _as_matrix(B, "B")
    T = _check_horizon(T)
    n = A.shape[0]
    if B.shape[0] != n:
        raise DimensionError(
            "B must have %d rows to match A, got shape %r" % (n, B.shape)
        )
    blk = np.zeros((2 * n, 2 * n))
    blk[:n, :n] = -A
    blk[:n, n:] = B @ B.T
    blk[n:, n:] = A.T
    E = expm(blk * T)
    G = E[:n, n:]
    eAT = E[n:, n:].T
    C = eAT @ G
    if not np.isfinite(C).all():
        raise NumericOverflowError(
            "controllability Gramian overflowed to non-finite entries "
            "(e^{AT} Frobenius norm %.6g)" % np.linalg.norm(eAT)
        )
    return 0.5 * (C + C.T)


def numerical_rank(M, rel_tol=1e-9):
    """Number of singular values above rel_tol times the largest one.

    The zero matrix has rank 0.  rel_tol must lie in (0, 1).
    """
    M = _as_matrix(M, "M")
    rel_tol = float(rel_tol)
    if not 0.0 < rel_tol < 1.0:
        raise ValueError("rel_tol must lie in (0, 1), got %r" % rel_tol)
    sv = np.linalg.svd(M, compute_uv=False)
    if sv[0] == 0.0:
        return 0
    return int(np.count_nonzero(sv > rel_tol * sv[0]))
