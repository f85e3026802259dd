"""gramax: sparse input-matrix design for linear network dynamics.

Given dynamics x' = A x + B u, choose B with at most s nonzero entries and
box-bounded magnitudes so that the trace of the finite-horizon
controllability Gramian C_T(B) is as large as possible.  The solver is a
projected gradient method on h(B) = -tr(C_T(B)) with exact projections onto
the sparsity-plus-box feasible sets.
"""

from ._backend import DEFAULT_BACKEND, available_backends
from .errors import (
    ConfigError,
    DimensionError,
    GramaxError,
    MetzlerViolationError,
    NumericOverflowError,
)
from .linops import (
    controllability_gramian,
    expm,
    gramian_H,
    lipschitz_L,
    numerical_rank,
)
from .networks import (
    NetworkSpec,
    gen_sparse_normal,
    gen_sparse_uniform,
    gen_watts_strogatz,
)
from .objective import (
    GramianSpectrum,
    Mode,
    ProblemInstance,
    gramian_spectrum,
    h_gradient,
    h_value,
    make_instance,
    validate_metzler,
)
from .optimizer import OptimizerConfig, RunTrace, init_B, pgd_solve
from .projections import (
    project_box_sym,
    project_le_one,
    project_nonneg,
    project_problem1,
    project_problem2,
    project_sparse,
    top_s_indices,
)
from .sweep import SweepResult, SweepRow, default_s_grid, run_sweep, sweep_from_csv_text

__version__ = "0.1.0"


def kernel_backend():
    """Name of the inner-loop kernel selected at import time."""
    return DEFAULT_BACKEND
