"""Benchmark the compiled PGD kernel against the pure-NumPy fallback.

Times a fixed number of projected-gradient iterations on synthetic
negative-definite H matrices of increasing size, once per available
backend, and prints per-iteration cost and the speedup.  Run from the
repository root:

    python benchmarks/bench_pgd.py
    python benchmarks/bench_pgd.py --sizes 50,100,200 --iters 2000 --repeat 5
"""

import argparse
import time

import numpy as np

from gramax._backend import available_backends, get_pgd_loop


def synth_problem(n, m, seed):
    rng = np.random.default_rng(seed)
    Q = rng.standard_normal((n, n)) / np.sqrt(n)
    H = -(Q @ Q.T + 0.05 * np.eye(n))
    L = -2.0 * float(np.trace(H))
    B0 = rng.uniform(-1.0, 1.0, size=(n, m))
    s = max(1, (n * m) // 2)
    return H, B0, s, 1.1 * L


def time_backend(name, H, B0, s, t, iters, repeat):
    loop = get_pgd_loop(name)
    # tol < 0 disables early exit so every run does exactly `iters` steps
    best = min(
        _timed(loop, H, B0, s, t, iters) for _ in range(repeat)
    )
    return best / iters


def _timed(loop, H, B0, s, t, iters):
    start = time.perf_counter()
    loop(H, B0, s, t, -1.0, iters, False)
    return time.perf_counter() - start


def cross_check(H, B0, s, t):
    results = {}
    for name in available_backends():
        loop = get_pgd_loop(name)
        B, obj, res, converged, _, _ = loop(H, B0, s, t, 1e-10, 100_000, False)
        results[name] = (B, obj[-1], converged)
    if len(results) < 2:
        return "single backend, nothing to compare"
    (na, (Ba, ha, ca)), (nb, (Bb, hb, cb)) = results.items()
    same_support = np.array_equal(Ba != 0.0, Bb != 0.0)
    close = np.allclose(Ba, Bb, atol=1e-8) and np.isclose(ha, hb, rtol=1e-10)
    status = "agree" if (same_support and close and ca and cb) else "DISAGREE"
    return "%s vs %s: %s" % (na, nb, status)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="50,100,200,300",
                    help="comma-separated n values (default 50,100,200,300)")
    ap.add_argument("--m", type=int, default=1, help="input columns (default 1)")
    ap.add_argument("--iters", type=int, default=1000,
                    help="iterations per timing run (default 1000)")
    ap.add_argument("--repeat", type=int, default=3,
                    help="timing repetitions, best is kept (default 3)")
    args = ap.parse_args()

    backends = available_backends()
    sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]
    print("backends: %s" % ", ".join(backends))
    if "cython" not in backends:
        print("note: compiled kernel unavailable, timing the fallback only")

    header = "%6s %4s" + " %14s" * len(backends)
    row = "%6d %4d" + " %11.2f us" * len(backends)
    print(header % (("n", "m") + tuple("%s/iter" % b for b in backends)))
    for n in sizes:
        H, B0, s, t = synth_problem(n, args.m, seed=n)
        per_iter = [time_backend(b, H, B0, s, t, args.iters, args.repeat)
                    for b in backends]
        print(row % ((n, args.m) + tuple(1e6 * v for v in per_iter)))
        if len(per_iter) == 2:
            fast, slow = sorted(zip(per_iter, backends))
            print("%11s  %s is %.1fx faster than %s"
                  % ("", fast[1], slow[0] / fast[0], slow[1]))

    H, B0, s, t = synth_problem(sizes[0], args.m, seed=7)
    print("cross-check (%d x %d, tol 1e-10): %s"
          % (sizes[0], args.m, cross_check(H, B0, s, t)))


if __name__ == "__main__":
    main()
