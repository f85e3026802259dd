"""Plain-text matrix files.

Format: first line "rows cols", then one whitespace-separated row per line.
Values are written with 17 significant digits, which round-trips float64
exactly.
"""

from pathlib import Path

import numpy as np

from .errors import DimensionError


def save_matrix(path, M):
    """Write M to path in the text format above."""
    M = np.asarray(M, dtype=float)
    if M.ndim != 2:
        raise DimensionError("can only save 2-D matrices, got ndim=%d" % M.ndim)
    lines = ["%d %d" % M.shape]
    for row in M:
        lines.append(" ".join("%.17g" % v for v in row))
    Path(path).write_text("\n".join(lines) + "\n")


def load_matrix(path):
    """Read a matrix written by save_matrix; malformed files raise ValueError."""
    path = Path(path)
    text = path.read_text()
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("%s: empty matrix file" % path)
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("%s: first line must be 'rows cols', got %r" % (path, lines[0]))
    try:
        rows, cols = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError("%s: non-integer dimensions %r" % (path, lines[0])) from None
    if rows < 1 or cols < 1:
        raise ValueError("%s: dimensions must be positive, got %d x %d" % (path, rows, cols))
    if len(lines) - 1 != rows:
        raise ValueError(
            "%s: expected %d data rows, found %d" % (path, rows, len(lines) - 1)
        )
    out = np.empty((rows, cols))
    for i, ln in enumerate(lines[1:]):
        parts = ln.split()
        if len(parts) != cols:
            raise ValueError(
                "%s: row %d has %d entries, expected %d" % (path, i, len(parts), cols)
            )
        try:
            out[i] = [float(p) for p in parts]
        except ValueError:
            raise ValueError("%s: row %d contains a non-numeric token" % (path, i)) from None
    if not np.isfinite(out).all():
        raise ValueError("%s: matrix contains non-finite entries" % path)
    return out
