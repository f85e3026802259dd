"""Inner-loop kernel selection.

The compiled kernel is preferred when its extension module imported cleanly;
otherwise the pure-NumPy loop takes over.  The choice is made once at import
time so repeated runs of the same install behave identically.
"""

from . import _pgd_py
from .errors import ConfigError

try:
    from . import _pgd_cy
except ImportError:
    _pgd_cy = None

DEFAULT_BACKEND = "cython" if _pgd_cy is not None else "python"


def available_backends():
    """Names of the kernels importable in this install."""
    if _pgd_cy is not None:
        return ("cython", "python")
    return ("python",)


def get_pgd_loop(backend=None):
    """Return the pgd_loop callable for the requested (or default) backend."""
    name = DEFAULT_BACKEND if backend is None else str(backend)
    if name == "cython":
        if _pgd_cy is None:
            raise ConfigError("the compiled kernel is not available in this install")
        return _pgd_cy.pgd_loop
    if name == "python":
        return _pgd_py.pgd_loop
    raise ConfigError("unknown backend %r (expected 'cython' or 'python')" % name)
