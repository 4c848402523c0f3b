"""Numeric kernel backends.

The compiled Cython backend is used when available; the pure-Python
reference implementation is the fallback. ``EQUICOH_BACKEND`` forces the
choice ("compiled", "pure", default "auto"). Both backends expose the same
functions and produce identical results.
"""

import os

from . import pure

try:
    from . import _fast as compiled
except ImportError:
    compiled = None

_requested = os.environ.get("EQUICOH_BACKEND", "auto").lower()
if _requested == "pure":
    active = pure
elif _requested == "compiled":
    if compiled is None:
        raise ImportError(
            "EQUICOH_BACKEND=compiled but equicoh._kernels._fast is not built"
        )
    active = compiled
else:
    active = compiled if compiled is not None else pure


def backend_name():
    return active.NAME


matmul = active.matmul
gram = active.gram
quad_forms = active.quad_forms
transform_stats = active.transform_stats
eigh_jacobi = active.eigh_jacobi
fib_candidates = active.fib_candidates
