"""Build the optional compiled inner-loop kernel.

The package works without it: gramax._backend falls back to the pure-NumPy
loop when the extension failed to build or is missing from the install.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [Extension("gramax._pgd_cy", ["src/gramax/_pgd_cy.pyx"])],
        language_level="3",
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
