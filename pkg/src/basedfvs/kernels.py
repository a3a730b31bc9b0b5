"""Backend selection for the oracle kernels.

The compiled extension is used when it was built; otherwise, or when
``BASEDFVS_PURE_PYTHON`` is set, the pure-Python module is used.
"""

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if not os.environ.get("BASEDFVS_PURE_PYTHON"):
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

MAX_COMPILED_VERTICES = 63


def backend_for(n: int):
    """Module able to handle an ``n``-vertex instance."""
    if _impl is not _kernels_py and n > MAX_COMPILED_VERTICES:
        return _kernels_py
    return _impl


simple_cycles = _impl.simple_cycles
min_fvs = _impl.min_fvs
max_packing = _impl.max_packing
is_forest = _impl.is_forest
