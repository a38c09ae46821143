"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module stands in.  Set ``GTURAN_PURE_PYTHON=1`` to
force the fallback.
"""
from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("GTURAN_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND: str = _impl.BACKEND
clique_count = _impl.clique_count
clique_profile = _impl.clique_profile
is_canonical = _impl.is_canonical

BACKENDS = {"python": _pykernels}
try:
    from . import _ckernels

    BACKENDS["cython"] = _ckernels
except ImportError:
    pass
