"""Kernel selection.

The hot kernels (blowup matching, GF(2^64) determinants) exist twice: a
Cython extension (_core) and a pure-Python twin (pure).  The compiled one is
picked at import when present; FACTORFORGE_PURE=1 forces the fallback.
Both expose identical semantics, and the benchmark suite compares them.
"""

from __future__ import annotations

import os
from itertools import chain

from . import pure

if os.environ.get("FACTORFORGE_PURE", "0") != "1":
    try:
        from . import _core
    except ImportError:
        _core = None
else:
    _core = None

HAVE_COMPILED = _core is not None


def backend_name() -> str:
    return "compiled" if HAVE_COMPILED else "pure"


def gf64_det(rows) -> int:
    """Determinant of a matrix over GF(2^64) (fixed modulus); entries are
    ints below 2^64.  Accepts a list of rows or a numpy array."""
    if HAVE_COMPILED:
        import numpy as np

        mat = np.array(rows, dtype=np.uint64)
        if mat.size == 0:
            return 1
        return int(_core.gf64_det(mat))
    if hasattr(rows, "tolist"):
        rows = rows.tolist()
    return pure.gf64_det(rows)


def gfk_det(rows, field) -> int:
    """Determinant over an arbitrary GF2Field; routes the standard 64-bit
    field through the fast path."""
    from ..gf2 import GF64_BITS, GF64_MODULUS

    if field.bits == GF64_BITS and field.modulus == GF64_MODULUS:
        return gf64_det(rows)
    if hasattr(rows, "tolist"):
        rows = rows.tolist()
    return pure.gfk_det(rows, field)


def maximum_matching(n: int, adj: list[list[int]]) -> list[int]:
    """Maximum cardinality matching on a general graph given as adjacency
    lists.  Returns the mate array (-1 for unmatched)."""
    if HAVE_COMPILED and n > 64:
        import numpy as np

        total = sum(len(a) for a in adj)
        indptr = np.zeros(n + 1, dtype=np.int32)
        np.cumsum(np.fromiter(map(len, adj), dtype=np.int32, count=n), out=indptr[1:])
        indices = np.fromiter(chain.from_iterable(adj), dtype=np.int32, count=total)
        return _core.maximum_matching(n, indptr, indices).tolist()
    return pure.maximum_matching(n, adj)
