"""Backend selection for the hot loops.

The compiled extension is used when it imports; setting ``UCOXETER_PURE=1``
forces the pure-Python fallback.  ``BACKEND`` names the active one.
"""

import os

from . import _pykernels

_compiled = None
if os.environ.get("UCOXETER_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

_impl = _compiled if _compiled is not None else _pykernels
BACKEND = "cython" if _compiled is not None else "python"

reduce_letters = _impl.reduce_letters
concat_reduce = _impl.concat_reduce
fold = _impl.fold
trace = _impl.trace
bfs_order = _impl.bfs_order
bfs_code = _impl.bfs_code
min_code = _impl.min_code


def backends():
    """Return the available kernel modules keyed by name."""
    out = {"python": _pykernels}
    if _compiled is not None:
        out["cython"] = _compiled
    return out
