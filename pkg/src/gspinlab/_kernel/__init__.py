"""Kernel dispatch: compiled geometric product when available, else pure Python.

Set GSPIN_LAB_PURE_PYTHON=1 to force the fallback (used by the benchmark to
compare both implementations).
"""

import os

if os.environ.get("GSPIN_LAB_PURE_PYTHON"):
    from .products import mul_terms

    IMPLEMENTATION = "python"
else:
    try:
        from .products_cy import mul_terms  # type: ignore[no-redef]

        IMPLEMENTATION = "cython"
    except ImportError:
        from .products import mul_terms  # type: ignore[no-redef]

        IMPLEMENTATION = "python"

__all__ = ["mul_terms", "IMPLEMENTATION"]
