"""Sparsity sweep: solve the same instance across a grid of budgets s.

One starting matrix B0 is generated once and shared by every budget (each
solve projects it onto its own s-feasible set), so curves across s differ
only in the constraint.  Rows are ordered by s regardless of how the solves
were scheduled.
"""

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import linops
from .errors import ConfigError
from .objective import h_value
from .optimizer import init_B, pgd_solve

CSV_HEADER = ("s", "neg_h", "iterations", "final_residual", "gramian_rank", "nnz")


@dataclass(frozen=True)
class SweepRow:
    """One solved budget: objective, effort, and diagnostics."""

    s: int
    neg_h: float
    iterations: int
    final_residual: float
    gramian_rank: int
    nnz: int


@dataclass
class SweepResult:
    """All rows of one sweep, ordered by s."""

    rows: list

    def to_csv_text(self):
        """Render as CSV; floats use repr so parsing recovers them exactly."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in self.rows:
            w.writerow(
                [r.s, repr(r.neg_h), r.iterations, repr(r.final_residual),
                 r.gramian_rank, r.nnz]
            )
        return buf.getvalue()


def sweep_from_csv_text(text):
    """Parse CSV produced by SweepResult.to_csv_text back into a SweepResult."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = tuple(next(reader))
    except StopIteration:
        raise ValueError("empty CSV") from None
    if header != CSV_HEADER:
        raise ValueError("unexpected CSV header %r" % (header,))
    rows = []
    for rec in reader:
        if not rec:
            continue
        if len(rec) != len(CSV_HEADER):
            raise ValueError("CSV row has %d fields, expected %d" % (len(rec), len(CSV_HEADER)))
        rows.append(
            SweepRow(
                s=int(rec[0]),
                neg_h=float(rec[1]),
                iterations=int(rec[2]),
                final_residual=float(rec[3]),
                gramian_rank=int(rec[4]),
                nnz=int(rec[5]),
            )
        )
    return SweepResult(rows=rows)


def default_s_grid(size, count=20):
    """Up to count evenly spaced integer budgets covering 1..size."""
    size = int(size)
    if size < 1:
        raise ConfigError("size must be at least 1, got %d" % size)
    count = min(int(count), size)
    if count < 1:
        raise ConfigError("count must be at least 1, got %d" % count)
    grid = np.unique(np.round(np.linspace(1, size, num=count)).astype(int))
    return [int(v) for v in grid]


def run_sweep(inst, m, s_values, cfg, threads=1, B0=None, rank_tol=1e-9,
              backend=None):
    """Solve inst for every budget in s_values and collect SweepRows.

    B0 defaults to init_B under cfg's init/seed and is shared across budgets.
    threads > 1 runs the independent solves concurrently; the result does not
    depend on scheduling.
    """
    m = int(m)
    if m < 1:
        raise ConfigError("m must be at least 1, got %d" % m)
    s_values = sorted({int(s) for s in s_values})
    if not s_values:
        raise ConfigError("s_values must be nonempty")
    size = inst.n * m
    for s in s_values:
        if not 1 <= s <= size:
            raise ConfigError(
                "sparsity budget s=%d outside the valid range 1..%d" % (s, size)
            )
    if B0 is None:
        B0 = init_B(inst.n, m, inst.mode, init=cfg.init, seed=cfg.seed)

    def solve_one(s):
        B, trace = pgd_solve(inst, s, B0, cfg, backend=backend)
        C = linops.controllability_gramian(inst.A, B, inst.T)
        return SweepRow(
            s=s,
            neg_h=float(-h_value(inst, B)),
            iterations=trace.iterations,
            final_residual=float(trace.residual_history[-1]),
            gramian_rank=linops.numerical_rank(C, rank_tol),
            nnz=int(np.count_nonzero(B)),
        )

    threads = int(threads)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(solve_one, s_values))
    else:
        rows = [solve_one(s) for s in s_values]
    return SweepResult(rows=rows)
