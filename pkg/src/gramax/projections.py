"""Euclidean projections onto the sparsity and box constraint sets.

The feasible sets are intersections of a sparsity level ||B||_0 <= s with a
box.  Neither composition order is an accident: projecting onto the
intersection factors as clamp-after-threshold for the symmetric box and as
clamp-above o threshold o clamp-below for the [0, 1] box, and swapping the
order gives strictly larger distances on some inputs.
"""

import numpy as np

from .errors import ConfigError


def _validate_budget(s, size):
    s = int(s)
    if not 1 <= s <= size:
        raise ConfigError(
            "sparsity budget s=%d outside the valid range 1..%d" % (s, size)
        )
    return s


def top_s_indices(B, s):
    """Flat row-major indices of the s entries of largest magnitude.

    Ties at the selection threshold keep the smallest flat index, so the
    support is a deterministic function of the input.  The returned indices
    are sorted ascending.
    """
    B = np.asarray(B, dtype=float)
    s = _validate_budget(s, B.size)
    flat = np.abs(B).ravel()
    nm = flat.size
    if s == nm:
        return np.arange(nm)
    pivot = np.partition(flat, nm - s)[nm - s]
    keep = flat > pivot
    need = s - int(np.count_nonzero(keep))
    if need > 0:
        keep[np.flatnonzero(flat == pivot)[:need]] = True
    return np.flatnonzero(keep)


def project_sparse(B, s):
    """Hard threshold: keep the s largest-magnitude entries, zero the rest."""
    B = np.asarray(B, dtype=float)
    idx = top_s_indices(B, s)
    out = np.zeros_like(B)
    out.ravel()[idx] = B.ravel()[idx]
    return out


def project_box_sym(B):
    """Clamp every entry into [-1, 1]."""
    return np.clip(np.asarray(B, dtype=float), -1.0, 1.0)


def project_nonneg(B):
    """Clamp every entry below at 0."""
    return np.maximum(np.asarray(B, dtype=float), 0.0)


def project_le_one(B):
    """Clamp every entry above at 1."""
    return np.minimum(np.asarray(B, dtype=float), 1.0)


def project_problem1(B, s):
    """Projection onto {||B||_0 <= s} intersected with the box [-1, 1]^(n x m).

    The threshold must run first; clamping first can change which entries
    survive and yields a non-optimal point.
    """
    return project_box_sym(project_sparse(B, s))


def project_problem2(B, s):
    """Projection onto {||B||_0 <= s} intersected with the box [0, 1]^(n x m).

    Composition order is clamp-below, threshold, clamp-above.
    """
    return project_le_one(project_sparse(project_nonneg(B), s))
