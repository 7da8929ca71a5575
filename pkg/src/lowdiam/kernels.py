"""Backend selection for the hot loops.

The compiled Cython module is used when it imports; otherwise the numpy
fallback takes over. Set ``LOWDIAM_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from lowdiam import _fallback as fallback

try:
    from lowdiam import _kernels as compiled
except ImportError:  # extension not built
    compiled = None

if compiled is not None and os.environ.get("LOWDIAM_PURE_PYTHON", "") in ("", "0"):
    _impl = compiled
    BACKEND = "cython"
else:
    _impl = fallback
    BACKEND = "python"

subset_expansion = _impl.subset_expansion
bfs_eccentricities = _impl.bfs_eccentricities

__all__ = ["BACKEND", "bfs_eccentricities", "compiled", "fallback", "subset_expansion"]
