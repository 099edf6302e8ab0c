"""Kernel selection.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python module takes over.  Set ``PREPEA_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("PREPEA_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        pass
    else:
        _impl = _compiled
        BACKEND = "cython"

assoc_scan = _impl.assoc_scan
residuation_scan = _impl.residuation_scan
min_encoding = _impl.min_encoding

assoc_ok = _kernels_py.assoc_ok
residuation_ok = _kernels_py.residuation_ok

__all__ = ["BACKEND", "assoc_scan", "residuation_scan", "min_encoding", "assoc_ok", "residuation_ok"]
