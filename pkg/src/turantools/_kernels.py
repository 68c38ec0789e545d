"""Select the bit-kernel backend at import time.

The compiled extension ``turantools._core`` is preferred; the
pure-Python twin ``turantools._core_py`` is used when the extension is
missing or when ``TURANTOOLS_PURE_PYTHON`` is set (the benchmark uses
the env var to compare both).
"""

from __future__ import annotations

import os

if os.environ.get("TURANTOOLS_PURE_PYTHON"):
    from . import _core_py as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _core_py as _impl

BACKEND: str = _impl.BACKEND

canonical_labeling = _impl.canonical_labeling
canonical_bytes = _impl.canonical_bytes
contains_subgraph = _impl.contains_subgraph
contains_subgraph_anchored = _impl.contains_subgraph_anchored
augment_children = _impl.augment_children
