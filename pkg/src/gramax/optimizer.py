"""Projected gradient solver for the constrained trace-maximization problems.

The iteration is B <- P(B - (1/t) grad h(B)) with fixed t = step_factor * L,
step_factor > 1.  Because h is concave quadratic with gradient Lipschitz
constant L, every step decreases h by at least ((t - L)/2) ||step||^2, so the
objective history is non-increasing and the step norms are summable.  The
loop stops once the step norm reaches tol (a fixed point of the projected
map), not when the raw gradient is small: at a constrained stationary point
the gradient need not vanish.
"""

from dataclasses import dataclass, field

import numpy as np

from . import projections
from ._backend import DEFAULT_BACKEND, get_pgd_loop
from .errors import ConfigError, DimensionError, NumericOverflowError
from .objective import Mode

_INITS = ("random", "ones", "given")


@dataclass(frozen=True)
class OptimizerConfig:
    """Step, stopping, and initialization settings for pgd_solve."""

    step_factor: float = 1.1
    tol: float = 1e-8
    max_iter: int = 100_000
    init: str = "random"
    seed: int = 0
    record_iterates: bool = False

    def __post_init__(self):
        if not self.step_factor > 1.0:
            raise ConfigError(
                "step_factor must exceed 1 (got %r); t <= L loses the descent "
                "guarantee" % self.step_factor
            )
        if not self.tol > 0.0:
            raise ConfigError("tol must be positive, got %r" % self.tol)
        if int(self.max_iter) < 1:
            raise ConfigError("max_iter must be at least 1, got %r" % self.max_iter)
        if self.init not in _INITS:
            raise ConfigError(
                "init must be one of %s, got %r" % ("/".join(_INITS), self.init)
            )


@dataclass
class RunTrace:
    """Per-run history.

    objective_history[k] is h at iterate k (length iterations + 1) and
    residual_history[k] is the Frobenius norm of step k (length iterations).
    converged means the last residual reached tol.  iterates holds full
    snapshots only when requested in the config.
    """

    objective_history: np.ndarray
    residual_history: np.ndarray
    iterations: int
    converged: bool
    iterates: list = field(default=None)


def init_B(n, m, mode, init="random", seed=0, given=None):
    """Build a starting matrix.

    "random" draws uniformly from the mode's box ([-1, 1] or [0, 1]),
    redrawing in the measure-zero all-zeros event; "ones" is the all-ones
    matrix; "given" validates a caller-supplied matrix.  Zero starts are
    rejected: B = 0 is a fixed point of the iteration with h = 0.
    """
    n = int(n)
    m = int(m)
    if n < 1 or m < 1:
        raise DimensionError("B dimensions must be positive, got (%d, %d)" % (n, m))
    mode = Mode(mode)
    if init == "ones":
        return np.ones((n, m))
    if init == "given":
        if given is None:
            raise ConfigError("init='given' requires a matrix")
        G = np.asarray(given, dtype=float)
        if G.shape != (n, m):
            raise DimensionError(
                "given B0 must have shape (%d, %d), got %r" % (n, m, G.shape)
            )
        if not np.isfinite(G).all():
            raise ValueError("given B0 contains non-finite entries")
        if not np.any(G):
            raise ConfigError("initial B must be nonzero: B = 0 is a fixed point")
        return G.copy()
    if init == "random":
        rng = np.random.default_rng(seed)
        lo = 0.0 if mode is Mode.METZLER else -1.0
        while True:
            B = rng.uniform(lo, 1.0, size=(n, m))
            if np.any(B):
                return B
    raise ConfigError("unknown init %r" % (init,))


def pgd_solve(inst, s, B0, cfg, backend=None):
    """Run the projected gradient method from B0.

    B0 is projected onto the mode's s-feasible set to form iterate 0, so one
    dense starting matrix can be shared across a whole sparsity sweep.
    Returns (B, RunTrace).  Raises NumericOverflowError if an iterate went
    non-finite, ConfigError for an invalid budget, DimensionError for shape
    mismatches.
    """
    B0 = np.asarray(B0, dtype=float)
    if B0.ndim != 2 or B0.shape[0] != inst.n or B0.shape[1] < 1:
        raise DimensionError(
            "B0 must have shape (%d, m) with m >= 1, got %r" % (inst.n, B0.shape)
        )
    if not np.isfinite(B0).all():
        raise ValueError("B0 contains non-finite entries")
    if not np.any(B0):
        raise ConfigError("initial B must be nonzero: B = 0 is a fixed point")
    s = projections._validate_budget(s, B0.size)
    metzler = inst.mode is Mode.METZLER
    if metzler:
        Bstart = projections.project_problem2(B0, s)
    else:
        Bstart = projections.project_problem1(B0, s)
    t = float(cfg.step_factor) * float(inst.L)
    if cfg.record_iterates:
        loop = get_pgd_loop("python")
    else:
        loop = get_pgd_loop(backend)
    B, obj, res, converged, iterates, overflow_iter = loop(
        np.ascontiguousarray(inst.H),
        np.ascontiguousarray(Bstart),
        int(s),
        t,
        float(cfg.tol),
        int(cfg.max_iter),
        metzler,
        cfg.record_iterates,
    )
    if overflow_iter >= 0:
        raise NumericOverflowError(
            "projected gradient step produced non-finite values at iteration %d"
            % overflow_iter
        )
    trace = RunTrace(
        objective_history=obj,
        residual_history=res,
        iterations=len(res),
        converged=bool(converged),
        iterates=iterates,
    )
    return B, trace
