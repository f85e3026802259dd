"""Command line interface.

Three subcommands: generate writes a random dynamics matrix, solve runs the
projected gradient method for one sparsity budget, sweep runs it across a
grid of budgets and emits CSV (optionally an SVG plot).

Exit codes: 0 success, 2 usage or configuration error, 3 constraint
violation (Metzler mode on a non-Metzler matrix), 4 numeric failure.
The --seed flag falls back to the GRAMAX_SEED environment variable, then 0.
"""

import argparse
import os
import sys

import numpy as np

from . import fileio, svgplot
from .errors import (
    ConfigError,
    DimensionError,
    GramaxError,
    MetzlerViolationError,
    NumericOverflowError,
)
from .networks import NetworkSpec
from .objective import Mode, gramian_spectrum, h_value, make_instance
from .optimizer import OptimizerConfig, init_B, pgd_solve
from .sweep import default_s_grid, run_sweep

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CONSTRAINT = 3
EXIT_NUMERIC = 4


def _resolve_seed(value):
    if value is not None:
        return value
    env = os.environ.get("GRAMAX_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ConfigError(
                "GRAMAX_SEED must be an integer, got %r" % env
            ) from None
    return 0


def _add_solver_flags(p):
    p.add_argument("--T", type=float, default=10.0, help="time horizon (default 10)")
    p.add_argument("--m", type=int, default=1, help="number of input columns (default 1)")
    p.add_argument("--step-factor", type=float, default=1.1,
                   help="t = step_factor * L, must exceed 1 (default 1.1)")
    p.add_argument("--tol", type=float, default=1e-8,
                   help="stop when the step norm reaches this (default 1e-8)")
    p.add_argument("--max-iter", type=int, default=100_000,
                   help="iteration cap (default 100000)")
    p.add_argument("--seed", type=int, default=None,
                   help="RNG seed (default: GRAMAX_SEED env var, then 0)")
    p.add_argument("--init", choices=("random", "ones", "file"), default="random",
                   help="starting matrix (default random)")
    p.add_argument("--init-file", metavar="PATH",
                   help="matrix file for --init file")
    p.add_argument("--rescale-a", type=float, default=1.0, metavar="FACTOR",
                   help="multiply A by FACTOR after loading (default 1)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gramax",
        description="Sparse input-matrix design maximizing the trace of the "
                    "finite-horizon controllability Gramian.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="generate a random dynamics matrix")
    g.add_argument("--kind", required=True,
                   choices=("sparse-normal", "sparse-uniform", "ws"))
    g.add_argument("--n", type=int, required=True, help="matrix dimension")
    g.add_argument("--density", type=float, default=0.1,
                   help="fill probability for the sparse kinds (default 0.1)")
    g.add_argument("--avg-degree", type=int, default=6,
                   help="Watts-Strogatz average degree, even (default 6)")
    g.add_argument("--rewire-p", type=float, default=0.05,
                   help="Watts-Strogatz rewiring probability (default 0.05)")
    g.add_argument("--weights", choices=("normal", "uniform01"), default="normal",
                   help="edge weight distribution (default normal)")
    g.add_argument("--asymmetric", action="store_true",
                   help="draw the two directions of each edge independently")
    g.add_argument("--seed", type=int, default=None,
                   help="RNG seed (default: GRAMAX_SEED env var, then 0)")
    g.add_argument("-o", "--output", required=True, help="output matrix file")
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("solve", help="solve one sparsity budget")
    s.add_argument("matrix", help="dynamics matrix file")
    s.add_argument("--mode", choices=("general", "metzler"), required=True)
    s.add_argument("--s", type=int, required=True, dest="s",
                   help="sparsity budget, 1..n*m")
    _add_solver_flags(s)
    s.add_argument("--beta", type=float, default=1.0,
                   help="rescale the solution by beta; beta*B* solves the same "
                        "problem with the box scaled by beta (default 1)")
    s.add_argument("-o", "--output", help="write the solved B to this file")
    s.set_defaults(func=cmd_solve)

    w = sub.add_parser("sweep", help="solve a grid of sparsity budgets")
    w.add_argument("matrix", help="dynamics matrix file")
    w.add_argument("--mode", choices=("general", "metzler"), required=True)
    w.add_argument("--s", dest="s_list", metavar="LIST",
                   help="comma-separated budgets, e.g. 5,10,25")
    w.add_argument("--s-count", type=int, default=20,
                   help="number of evenly spaced budgets when --s is absent "
                        "(default 20)")
    _add_solver_flags(w)
    w.add_argument("--threads", type=int, default=1,
                   help="run budgets concurrently (default 1)")
    w.add_argument("-o", "--output", help="CSV output file (default stdout)")
    w.add_argument("--plot", metavar="SVG", help="write an SVG of -h versus s")
    w.set_defaults(func=cmd_sweep)
    return parser


def _print_matrix(B):
    for row in B:
        print("  [" + "  ".join("%.12g" % v for v in row) + "]")


def _load_instance(args):
    A = fileio.load_matrix(args.matrix)
    if args.rescale_a != 1.0:
        A = args.rescale_a * A
    return make_instance(A, args.T, args.mode)


def _make_config(args, seed):
    init = "given" if args.init == "file" else args.init
    return OptimizerConfig(
        step_factor=args.step_factor,
        tol=args.tol,
        max_iter=args.max_iter,
        init=init,
        seed=seed,
    )


def _make_B0(inst, args, cfg):
    given = None
    if args.init == "file":
        if not args.init_file:
            raise ConfigError("--init file requires --init-file PATH")
        given = fileio.load_matrix(args.init_file)
    return init_B(inst.n, args.m, inst.mode, init=cfg.init, seed=cfg.seed, given=given)


def cmd_generate(args):
    seed = _resolve_seed(args.seed)
    spec = NetworkSpec(
        kind=args.kind,
        n=args.n,
        density=args.density,
        avg_degree=args.avg_degree,
        rewire_p=args.rewire_p,
        weight_mode=args.weights,
        symmetric=not args.asymmetric,
        seed=seed,
    )
    A = spec.build()
    fileio.save_matrix(args.output, A)
    off = A.copy()
    np.fill_diagonal(off, 0.0)
    metzler = bool((off >= 0.0).all())
    print("wrote %s: n=%d nnz=%d metzler=%s"
          % (args.output, A.shape[0], int(np.count_nonzero(A)), "yes" if metzler else "no"))


def cmd_solve(args):
    seed = _resolve_seed(args.seed)
    inst = _load_instance(args)
    cfg = _make_config(args, seed)
    B0 = _make_B0(inst, args, cfg)
    B, trace = pgd_solve(inst, args.s, B0, cfg)
    if args.beta != 1.0:
        if args.beta <= 0:
            raise ConfigError("--beta must be positive, got %r" % args.beta)
        B = args.beta * B
        box = "[0, %g]" % args.beta if inst.mode is Mode.METZLER else "[-%g, %g]" % (args.beta, args.beta)
        print("note: solution rescaled by beta=%g; it solves the same problem "
              "over the box %s" % (args.beta, box))
    spec = gramian_spectrum(inst, B)
    print("n=%d m=%d T=%g mode=%s s=%d" % (inst.n, args.m, inst.T, inst.mode.value, args.s))
    print("-h(B*) = %r" % (-h_value(inst, B)))
    print("iterations = %d (%s)" % (trace.iterations,
                                    "converged" if trace.converged else "hit max-iter"))
    print("final residual = %.6g" % trace.residual_history[-1])
    print("rank(C_T) = %d  lambda_min = %.6g  lambda_max = %.6g"
          % (spec.rank, spec.lambda_min, spec.lambda_max))
    if B.size <= 12:
        print("B* =")
        _print_matrix(B)
    if args.output:
        fileio.save_matrix(args.output, B)
        print("wrote %s" % args.output)


def cmd_sweep(args):
    seed = _resolve_seed(args.seed)
    inst = _load_instance(args)
    cfg = _make_config(args, seed)
    B0 = _make_B0(inst, args, cfg)
    size = inst.n * args.m
    if args.s_list:
        try:
            s_values = [int(tok) for tok in args.s_list.split(",") if tok.strip()]
        except ValueError:
            raise ConfigError("--s must be a comma-separated list of integers, "
                              "got %r" % args.s_list) from None
        if not s_values:
            raise ConfigError("--s produced an empty budget list")
    else:
        s_values = default_s_grid(size, args.s_count)
    result = run_sweep(inst, args.m, s_values, cfg, threads=args.threads, B0=B0)
    text = result.to_csv_text()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        print("wrote %s (%d rows)" % (args.output, len(result.rows)))
    else:
        sys.stdout.write(text)
    if inst.mode is Mode.METZLER:
        vals = [r.neg_h for r in result.rows]
        drops = [(result.rows[i].s, result.rows[i + 1].s)
                 for i in range(len(vals) - 1) if vals[i + 1] < vals[i]]
        for a, b in drops:
            print("note: -h decreased between s=%d and s=%d" % (a, b), file=sys.stderr)
    if args.plot:
        svgplot.save_line_chart(
            args.plot,
            [r.s for r in result.rows],
            [r.neg_h for r in result.rows],
            title="trace of the controllability Gramian vs sparsity budget",
            xlabel="s",
            ylabel="-h(B*)",
        )
        print("wrote %s" % args.plot)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except MetzlerViolationError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_CONSTRAINT
    except NumericOverflowError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_NUMERIC
    except (ConfigError, DimensionError, GramaxError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
