"""Kernel backend selection, done once at import.

Prefers the compiled extension; falls back to the pure-Python twins when
the extension is absent or NEWTPROFILE_PURE_PYTHON is set in the
environment.
"""

from __future__ import annotations

import os

if os.environ.get("NEWTPROFILE_PURE_PYTHON"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

BACKEND: str = kernels.BACKEND
