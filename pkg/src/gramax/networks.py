"""Random dynamics generators.

Three families: dense-storage sparse random matrices with normal or
uniform(0, 1) weights, and weighted Watts-Strogatz small-world graphs.  All
draws go through one numpy Generator per call, so equal seeds give bitwise
equal matrices.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError

KINDS = ("sparse-normal", "sparse-uniform", "ws")
WEIGHT_MODES = ("normal", "uniform01")


def _check_density(density):
    density = float(density)
    if not 0.0 < density <= 1.0:
        raise ConfigError("density must lie in (0, 1], got %r" % density)
    return density


def gen_sparse_normal(n, density, seed=0):
    """n x n matrix with ~density*n^2 standard-normal entries, rest zero.

    Each position is filled independently with probability density.
    """
    n = int(n)
    if n < 1:
        raise ConfigError("n must be at least 1, got %d" % n)
    density = _check_density(density)
    rng = np.random.default_rng(seed)
    mask = rng.random((n, n)) < density
    vals = rng.standard_normal((n, n))
    return np.where(mask, vals, 0.0)


def gen_sparse_uniform(n, density, seed=0):
    """Like gen_sparse_normal but with uniform [0, 1) weights.

    All entries are nonnegative, so the result is Metzler.
    """
    n = int(n)
    if n < 1:
        raise ConfigError("n must be at least 1, got %d" % n)
    density = _check_density(density)
    rng = np.random.default_rng(seed)
    mask = rng.random((n, n)) < density
    vals = rng.random((n, n))
    return np.where(mask, vals, 0.0)


def gen_watts_strogatz(n, avg_degree, rewire_p, weight_mode="normal", seed=0,
                       symmetric=True):
    """Weighted Watts-Strogatz graph as a dense n x n matrix.

    Ring lattice with avg_degree/2 neighbors on each side, then each ring
    edge is rewired with probability rewire_p to a uniformly drawn target.
    A rewiring draw that would create a self-loop or duplicate edge is
    retried up to n times, after which the edge stays in place; the edge
    count n*avg_degree/2 is therefore preserved exactly.  The diagonal is
    zero.  Weights are standard normal or uniform(0, 1) per undirected edge;
    with symmetric=False the two directions get independent draws.
    """
    n = int(n)
    avg_degree = int(avg_degree)
    rewire_p = float(rewire_p)
    if n < 3:
        raise ConfigError("Watts-Strogatz needs n >= 3, got %d" % n)
    if avg_degree < 2 or avg_degree % 2 != 0:
        raise ConfigError("avg_degree must be a positive even integer, got %d" % avg_degree)
    if avg_degree >= n:
        raise ConfigError("avg_degree must be below n, got %d >= %d" % (avg_degree, n))
    if not 0.0 <= rewire_p <= 1.0:
        raise ConfigError("rewire_p must lie in [0, 1], got %r" % rewire_p)
    if weight_mode not in WEIGHT_MODES:
        raise ConfigError(
            "weight_mode must be one of %s, got %r" % ("/".join(WEIGHT_MODES), weight_mode)
        )
    rng = np.random.default_rng(seed)
    half = avg_degree // 2
    neighbors = [set() for _ in range(n)]
    for i in range(n):
        for d in range(1, half + 1):
            j = (i + d) % n
            neighbors[i].add(j)
            neighbors[j].add(i)
    for d in range(1, half + 1):
        for i in range(n):
            j = (i + d) % n
            if j not in neighbors[i]:
                continue
            if rng.random() < rewire_p:
                for _ in range(n):
                    cand = int(rng.integers(n))
                    if cand != i and cand not in neighbors[i]:
                        neighbors[i].discard(j)
                        neighbors[j].discard(i)
                        neighbors[i].add(cand)
                        neighbors[cand].add(i)
                        break
    A = np.zeros((n, n))
    for i in range(n):
        for j in sorted(neighbors[i]):
            if j <= i:
                continue
            if weight_mode == "normal":
                w = rng.standard_normal()
            else:
                w = rng.random()
            A[i, j] = w
            if symmetric:
                A[j, i] = w
            else:
                A[j, i] = rng.standard_normal() if weight_mode == "normal" else rng.random()
    return A


@dataclass(frozen=True)
class NetworkSpec:
    """Declarative description of one generator call (used by the CLI)."""

    kind: str
    n: int
    density: float = 0.1
    avg_degree: int = 6
    rewire_p: float = 0.05
    weight_mode: str = "normal"
    symmetric: bool = True
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError(
                "kind must be one of %s, got %r" % ("/".join(KINDS), self.kind)
            )

    def build(self):
        """Generate the matrix this spec describes."""
        if self.kind == "sparse-normal":
            return gen_sparse_normal(self.n, self.density, self.seed)
        if self.kind == "sparse-uniform":
            return gen_sparse_uniform(self.n, self.density, self.seed)
        return gen_watts_strogatz(
            self.n,
            self.avg_degree,
            self.rewire_p,
            weight_mode=self.weight_mode,
            seed=self.seed,
            symmetric=self.symmetric,
        )
