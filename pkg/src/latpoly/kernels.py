"""Backend selection for the integer hot loops.

The compiled ``_ckernels`` extension is used when it imports and the
inputs fit in 64-bit words; otherwise the pure-Python ``_pykernels``
twin runs. Set ``LATPOLY_PURE_PYTHON=1`` to force the fallback.
"""

import math
import os

from latpoly import _pykernels

_LIMIT = 1 << 61

try:
    if os.environ.get("LATPOLY_PURE_PYTHON"):
        raise ImportError("pure-Python backend requested")
    from latpoly import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"


def det(rows):
    """Exact determinant of a square integer matrix."""
    if _ckernels is not None and rows:
        bound = math.prod(sum(x * x for x in r) for r in rows)
        if bound < _LIMIT:
            return _ckernels.det(rows)
    return _pykernels.det(rows)


def box_points(A, b, lo, hi, strict=False, limit=0):
    """Integer points of the box [lo, hi] satisfying A x >= b (or A x > b).

    All of A, b, lo, hi are integers. Returns tuples in lexicographic order;
    ``limit`` > 0 truncates the result.
    """
    if strict:
        b = [bi + 1 for bi in b]
    if _ckernels is not None:
        span = [max(abs(l), abs(h)) for l, h in zip(lo, hi)]
        worst = max((sum(abs(a) * s for a, s in zip(row, span)) + abs(bi)
                     for row, bi in zip(A, b)), default=0)
        if worst < _LIMIT and max(span, default=0) < _LIMIT:
            return _ckernels.box_points(A, b, lo, hi, limit)
    return _pykernels.box_points(A, b, lo, hi, limit)


def tight_sets(A, b, points):
    """For each point, the row indices of A x >= b holding with equality."""
    if _ckernels is not None and A and points:
        pmax = max(abs(x) for p in points for x in p) if points[0] else 0
        worst = max(sum(abs(a) for a in row) * pmax + abs(bi)
                    for row, bi in zip(A, b))
        if worst < _LIMIT:
            return _ckernels.tight_sets(A, b, points)
    return _pykernels.tight_sets(A, b, points)
