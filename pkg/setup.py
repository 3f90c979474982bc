"""Build script: compiles the optional Cython kernel.

The package works without the compiled extension (a pure-Python kernel is
selected at import time), so any failure here degrades gracefully.  Set
GSPIN_LAB_NO_EXT=1 to skip the extension build entirely.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("GSPIN_LAB_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/gspinlab/_kernel/products_cy.pyx"],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
