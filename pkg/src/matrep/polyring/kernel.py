"""Selects the compiled term kernel when available, else the pure-Python one.

Set ``MATREP_PURE_PYTHON=1`` to force the fallback.
"""

import os

BACKEND = "python"

if not os.environ.get("MATREP_PURE_PYTHON"):
    try:
        from ._ckernel import combine, find_divisor, mul, nf_field, nf_fraction_free, nf_strong

        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._pykernel import combine, find_divisor, mul, nf_field, nf_fraction_free, nf_strong

__all__ = ["BACKEND", "combine", "find_divisor", "mul", "nf_field", "nf_fraction_free", "nf_strong"]
