"""Problem instances and the trace objective.

The cost being minimized is h(B) = -tr(C_T(B)) where C_T is the finite
horizon controllability Gramian of (A, B).  It collapses to the quadratic
form h(B) = tr(B B' H) with H = gramian_H(A, T), so an instance caches H and
the gradient Lipschitz constant L once and every objective or gradient
evaluation is a single matrix product.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import linops
from .errors import DimensionError, MetzlerViolationError


class Mode(str, Enum):
    """Which constraint family the instance is solved under.

    GENERAL uses the symmetric box [-1, 1]; METZLER uses the box [0, 1] and
    requires A to have nonnegative off-diagonal entries.
    """

    GENERAL = "general"
    METZLER = "metzler"


@dataclass(frozen=True)
class ProblemInstance:
    """Immutable bundle of dynamics, horizon, mode, and cached Gramian data.

    Built by make_instance, which guarantees H == gramian_H(A, T) and
    L == -2 tr(H).
    """

    A: np.ndarray
    T: float
    mode: Mode
    H: np.ndarray
    L: float

    @property
    def n(self):
        return self.A.shape[0]


@dataclass(frozen=True)
class GramianSpectrum:
    """Eigenvalue summary of the controllability Gramian at some B."""

    lambda_min: float
    lambda_max: float
    trace: float
    rank: int


def validate_metzler(A):
    """Raise MetzlerViolationError at the first negative off-diagonal entry.

    Entries are scanned in row-major order; the error carries the (row, col)
    index and the offending value.
    """
    A = np.asarray(A, dtype=float)
    off = A.copy()
    np.fill_diagonal(off, 0.0)
    bad = np.argwhere(off < 0.0)
    if bad.size:
        i, j = int(bad[0][0]), int(bad[0][1])
        raise MetzlerViolationError((i, j), float(A[i, j]))


def make_instance(A, T, mode):
    """Validate (A, T, mode) and precompute the Gramian H and constant L."""
    A = linops._as_square(A)
    mode = Mode(mode)
    if mode is Mode.METZLER:
        validate_metzler(A)
    H = linops.gramian_H(A, T)
    L = linops.lipschitz_L(H)
    A = A.copy()
    A.setflags(write=False)
    H.setflags(write=False)
    return ProblemInstance(A=A, T=float(T), mode=mode, H=H, L=L)


def _check_B(inst, B):
    B = np.asarray(B, dtype=float)
    if B.ndim != 2 or B.shape[0] != inst.n or B.shape[1] < 1:
        raise DimensionError(
            "B must have shape (%d, m) with m >= 1, got %r" % (inst.n, B.shape)
        )
    if not np.isfinite(B).all():
        raise ValueError("B contains non-finite entries")
    return B


def h_value(inst, B):
    """Objective h(B) = tr(B B' H).  Always <= 0, and 0 only at B = 0."""
    B = _check_B(inst, B)
    return float(np.sum((inst.H @ B) * B))


def h_gradient(inst, B):
    """Gradient of h at B, which is 2 H B."""
    B = _check_B(inst, B)
    return 2.0 * (inst.H @ B)


def gramian_spectrum(inst, B, rel_tol=1e-9):
    """Eigenvalue summary of C_T(B): extremes, trace, and numerical rank.

    Roundoff can push tiny eigenvalues of the positive semidefinite Gramian
    slightly negative; those are clipped to 0 before summarizing.
    """
    B = _check_B(inst, B)
    C = linops.controllability_gramian(inst.A, B, inst.T)
    w = np.clip(np.linalg.eigvalsh(C), 0.0, None)
    rank = linops.numerical_rank(C, rel_tol)
    return GramianSpectrum(
        lambda_min=float(w[0]),
        lambda_max=float(w[-1]),
        trace=float(np.sum(w)),
        rank=rank,
    )
