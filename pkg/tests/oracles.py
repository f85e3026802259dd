"""Independent oracles used by the test suite.

Each routine here deliberately avoids the code path it checks: the Gramians
are integrated by composite Simpson quadrature instead of a block
exponential, the sparse projection enumerates every support, the gradient
comes from central differences, and the reference PGD loop uses its own
argsort-based threshold.
"""

import math
from itertools import combinations

import numpy as np
import scipy.linalg


def _simpson_weights(panels, T):
    # nodes 0..2*panels with spacing T/(2*panels); weights delta/3 * (1,4,2,...,4,1)
    nodes = 2 * panels + 1
    delta = T / (2.0 * panels)
    w = np.full(nodes, 2.0)
    w[1::2] = 4.0
    w[0] = w[-1] = 1.0
    return w * (delta / 3.0), nodes, delta


def simpson_gramians(A, T, B=None, panels=10_000):
    """Quadrature values of the two Gramian integrals.

    Returns (H, C) where H = -int_0^T e^{A't} e^{At} dt and, if B is given,
    C = int_0^T e^{At} B B' e^{A't} dt (else None).  The integrand is walked
    with a single precomputed step exponential e^{A delta}.
    """
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    w, nodes, delta = _simpson_weights(panels, T)
    step = scipy.linalg.expm(A * delta)
    E = np.eye(n)
    accH = np.zeros((n, n))
    accC = np.zeros((n, n)) if B is not None else None
    for j in range(nodes):
        accH += w[j] * (E.T @ E)
        if B is not None:
            EB = E @ B
            accC += w[j] * (EB @ EB.T)
        if j < nodes - 1:
            E = step @ E
    return -accH, accC


def simpson_lipschitz(A, T, panels=10_000):
    """Quadrature value of 2 int_0^T ||e^{At}||_F^2 dt."""
    A = np.asarray(A, dtype=float)
    w, nodes, delta = _simpson_weights(panels, T)
    step = scipy.linalg.expm(A * delta)
    E = np.eye(A.shape[0])
    acc = 0.0
    for j in range(nodes):
        acc += w[j] * float(np.sum(E * E))
        if j < nodes - 1:
            E = step @ E
    return 2.0 * acc


def brute_force_project(B, s, lo, hi):
    """Exhaustive projection onto {||X||_0 <= s, lo <= x_ij <= hi}.

    Enumerates every support of size min(s, B.size) and clamps on it.
    Returns (X, dist2) for one optimal support; when projections tie only
    dist2 is meaningful.  Intended for B.size <= 12.
    """
    flat = np.asarray(B, dtype=float).ravel()
    nm = flat.size
    k = min(int(s), nm)
    clamped = np.clip(flat, lo, hi)
    # dropping a coordinate from the support costs flat^2, keeping it costs
    # (clamped-flat)^2; gain is the difference
    gain = (flat ** 2 - (clamped - flat) ** 2).tolist()
    base = float(np.sum(flat ** 2))
    best_d2 = math.inf
    best_S = None
    for S in combinations(range(nm), k):
        d2 = base - sum(gain[i] for i in S)
        if d2 < best_d2:
            best_d2 = d2
            best_S = S
    X = np.zeros(nm)
    for i in best_S:
        X[i] = clamped[i]
    return X.reshape(np.asarray(B).shape), best_d2


def fd_gradient(f, B, step=1e-6):
    """Central finite-difference gradient of a scalar function of a matrix."""
    B = np.asarray(B, dtype=float)
    G = np.zeros_like(B)
    it = np.nditer(B, flags=["multi_index"])
    while not it.finished:
        idx = it.multi_index
        Bp = B.copy()
        Bm = B.copy()
        Bp[idx] += step
        Bm[idx] -= step
        G[idx] = (f(Bp) - f(Bm)) / (2.0 * step)
        it.iternext()
    return G


def reference_pgd(H, B0, s, t, tol, max_iter, metzler):
    """Independently coded single-loop PGD with an argsort-based threshold.

    Same tie rule as the package (stable sort on descending magnitude keeps
    the smallest flat index) but a different implementation.  Returns
    (B, iterations).
    """
    H = np.asarray(H, dtype=float)

    def proj(Y):
        if metzler:
            Y = np.maximum(Y, 0.0)
        flat = np.abs(Y).ravel()
        order = np.argsort(-flat, kind="stable")
        keep = np.zeros(flat.size, dtype=bool)
        keep[order[:s]] = True
        Z = np.where(keep.reshape(Y.shape), Y, 0.0)
        if metzler:
            return np.minimum(Z, 1.0)
        return np.clip(Z, -1.0, 1.0)

    B = proj(np.asarray(B0, dtype=float))
    for k in range(max_iter):
        Y = B - (2.0 / t) * (H @ B)
        Bn = proj(Y)
        r = float(np.linalg.norm(Bn - B))
        B = Bn
        if r <= tol:
            return B, k + 1
    return B, max_iter


def restricted_norm_sq(X, flat_idx):
    """Squared Frobenius norm of X restricted to the given flat indices."""
    x = np.asarray(X, dtype=float).ravel()
    return float(np.sum(x[np.asarray(flat_idx, dtype=int)] ** 2))


def complement_indices(size, flat_idx):
    """Flat indices not in flat_idx."""
    mask = np.ones(size, dtype=bool)
    mask[np.asarray(flat_idx, dtype=int)] = False
    return np.flatnonzero(mask)


def geometric_envelope(residuals, tail=20):
    """Fit r_k ~ c * rho^k on the positive tail of a residual history.

    Returns (c, rho) or None when fewer than 3 positive points remain
    (finite-time exact convergence shows up as trailing zeros).
    """
    r = np.asarray(residuals, dtype=float)
    r = r[-tail:]
    pos = r > 0
    if int(np.count_nonzero(pos)) < 3:
        return None
    k = np.flatnonzero(pos)
    y = np.log(r[pos])
    slope, intercept = np.polyfit(k, y, 1)
    return float(np.exp(intercept)), float(np.exp(slope))
