"""Pick the kernel implementation at import time.

The compiled extension is used when it was built; ``HRC_PURE_PYTHON=1`` in
the environment forces the pure-Python fallback.
"""
import logging
import os

from . import _kernels_py

log = logging.getLogger(__name__)

kernels = _kernels_py
if os.environ.get("HRC_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        log.debug("compiled kernels unavailable, using pure Python")
        kernels = _kernels_py

BACKEND = kernels.BACKEND
