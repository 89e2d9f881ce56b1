"""Pick the compiled kernels when importable, else the pure-Python ones.

Set ``RAINBOWJ_PURE=1`` to force the fallback (tests run both).
"""

from __future__ import annotations

import os

from . import _kernels_py

BACKEND = "python"
kernels = _kernels_py

if os.environ.get("RAINBOWJ_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        pass
    else:
        kernels = _compiled
        BACKEND = "compiled"

FOUND = _kernels_py.FOUND
NONE = _kernels_py.NONE
BUDGET = _kernels_py.BUDGET


def csr(adjacency) -> tuple[list[int], list[int]]:
    """Flatten an adjacency tuple into ``(offsets, nbrs)``."""
    offsets = [0]
    nbrs: list[int] = []
    for a in adjacency:
        nbrs.extend(a)
        offsets.append(len(nbrs))
    return offsets, nbrs
