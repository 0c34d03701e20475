"""Kernel backend selection.

The compiled Cython kernels are preferred; the pure-Python twin is used
when the extension is missing or when ``PARKRES_BACKEND=python`` is set in
the environment.  Both expose the same functions with identical results.
"""

from __future__ import annotations

import os

if os.environ.get("PARKRES_BACKEND", "").lower() in {"py", "python", "pure"}:
    from . import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "python"
