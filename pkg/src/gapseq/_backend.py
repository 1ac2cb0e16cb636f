"""Selects the compiled counting kernel when available."""

import os

if os.environ.get("GAPSEQ_PURE_PYTHON"):
    from ._pykernels import count_levels
    BACKEND = "python"
else:
    try:
        from ._kernels import count_levels
        BACKEND = "cython"
    except ImportError:
        from ._pykernels import count_levels
        BACKEND = "python"

__all__ = ["count_levels", "BACKEND"]
