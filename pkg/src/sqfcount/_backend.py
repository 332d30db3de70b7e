"""Kernel backend selection: compiled extension if available, else pure.

Set SQFCOUNT_PURE=1 to force the pure-Python kernels even when the
compiled extension is installed (used by the benchmark and the tests).
"""

import os

if os.environ.get("SQFCOUNT_PURE"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # compiled extension
    except ImportError:
        from . import _kernels_py as kernels

BACKEND = kernels.BACKEND_NAME
