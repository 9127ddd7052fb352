# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernels: GF(2^64) determinant and blossom maximum matching.

Semantics mirror factorforge._kernels.pure exactly; the test suite checks
the two implementations against each other.
"""

from libc.stdint cimport int32_t, uint8_t, uint64_t
from libc.string cimport memset

import numpy as np


cdef extern from "gf64.h":
    uint64_t ff_gf64_mul_soft(uint64_t a, uint64_t b) nogil
    uint64_t ff_gf64_mul_clmul(uint64_t a, uint64_t b) nogil
    int ff_gf64_have_clmul() nogil


cdef bint _USE_CLMUL = ff_gf64_have_clmul() != 0


def uses_clmul():
    return bool(_USE_CLMUL)


cdef inline uint64_t _mul(uint64_t a, uint64_t b) nogil:
    if _USE_CLMUL:
        return ff_gf64_mul_clmul(a, b)
    return ff_gf64_mul_soft(a, b)


cdef uint64_t _inv(uint64_t a) nogil:
    # a^(2^64 - 2): bit 0 of the exponent is 0, bits 1..63 are 1
    cdef uint64_t result = 1
    cdef uint64_t base = _mul(a, a)
    cdef int i
    for i in range(63):
        result = _mul(result, base)
        base = _mul(base, base)
    return result


def gf64_mul(a, b):
    """Exposed for the kernel-equivalence tests and benchmarks."""
    return int(_mul(<uint64_t> a, <uint64_t> b))


def gf64_inv(a):
    if a == 0:
        raise ZeroDivisionError("0 has no inverse")
    return int(_inv(<uint64_t> a))


def gf64_det(mat):
    """Determinant over GF(2^64) with the fixed modulus.  The input matrix
    is consumed (eliminated in place after an internal copy if needed)."""
    arr = np.ascontiguousarray(mat, dtype=np.uint64)
    if arr.size == 0:
        return 1
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("square matrix required")
    cdef uint64_t[:, ::1] m = arr
    cdef Py_ssize_t n = m.shape[0]
    if n == 0:
        return 1
    cdef uint64_t det = 1
    cdef Py_ssize_t col, r, piv, j
    cdef uint64_t pivval, ipiv, c, x
    with nogil:
        for col in range(n):
            piv = -1
            for r in range(col, n):
                if m[r, col] != 0:
                    piv = r
                    break
            if piv < 0:
                det = 0
                break
            if piv != col:
                for j in range(col, n):
                    x = m[col, j]
                    m[col, j] = m[piv, j]
                    m[piv, j] = x
            pivval = m[col, col]
            det = _mul(det, pivval)
            ipiv = _inv(pivval)
            for r in range(col + 1, n):
                x = m[r, col]
                if x != 0:
                    c = _mul(x, ipiv)
                    for j in range(col, n):
                        if m[col, j] != 0:
                            m[r, j] ^= _mul(c, m[col, j])
    return int(det)


# ---------------------------------------------------------------------------
# blossom maximum matching on CSR adjacency


cdef int _lca(int a, int b, int32_t[::1] mate, int32_t[::1] parent,
              int32_t[::1] base, uint8_t[::1] seen, Py_ssize_t n) nogil:
    memset(&seen[0], 0, n)
    while True:
        a = base[a]
        seen[a] = 1
        if mate[a] < 0:
            break
        a = parent[mate[a]]
    while True:
        b = base[b]
        if seen[b]:
            return b
        b = parent[mate[b]]


cdef void _mark_path(int v, int b, int child, int32_t[::1] mate,
                     int32_t[::1] parent, int32_t[::1] base,
                     uint8_t[::1] inb) nogil:
    while base[v] != b:
        inb[base[v]] = 1
        inb[base[mate[v]]] = 1
        parent[v] = child
        child = mate[v]
        v = parent[mate[v]]


cdef bint _find_path(int root, Py_ssize_t n, int32_t[::1] indptr,
                     int32_t[::1] indices, int32_t[::1] mate,
                     int32_t[::1] parent, int32_t[::1] base,
                     uint8_t[::1] inq, uint8_t[::1] inb, uint8_t[::1] seen,
                     int32_t[::1] queue) nogil:
    cdef Py_ssize_t i, k
    cdef int head = 0, tail = 0
    cdef int v, to, cur, pv, ppv
    for i in range(n):
        parent[i] = -1
        base[i] = <int32_t> i
    memset(&inq[0], 0, n)
    inq[root] = 1
    queue[tail] = root
    tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        for k in range(indptr[v], indptr[v + 1]):
            to = indices[k]
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] >= 0 and parent[mate[to]] >= 0):
                cur = _lca(v, to, mate, parent, base, seen, n)
                memset(&inb[0], 0, n)
                _mark_path(v, cur, to, mate, parent, base, inb)
                _mark_path(to, cur, v, mate, parent, base, inb)
                for i in range(n):
                    if inb[base[i]]:
                        base[i] = cur
                        if not inq[i]:
                            inq[i] = 1
                            queue[tail] = <int32_t> i
                            tail += 1
            elif parent[to] < 0:
                parent[to] = v
                if mate[to] < 0:
                    while to >= 0:
                        pv = parent[to]
                        ppv = mate[pv]
                        mate[to] = pv
                        mate[pv] = to
                        to = ppv
                    return True
                inq[mate[to]] = 1
                queue[tail] = mate[to]
                tail += 1
    return False


def maximum_matching(n, indptr_arr, indices_arr):
    """Maximum matching; returns the mate array (int32, -1 = unmatched)."""
    cdef Py_ssize_t nn = n
    mate_arr = np.full(nn, -1, dtype=np.int32)
    if nn == 0:
        return mate_arr
    parent_arr = np.empty(nn, dtype=np.int32)
    base_arr = np.empty(nn, dtype=np.int32)
    queue_arr = np.empty(nn, dtype=np.int32)
    inq_arr = np.zeros(nn, dtype=np.uint8)
    inb_arr = np.zeros(nn, dtype=np.uint8)
    seen_arr = np.zeros(nn, dtype=np.uint8)
    cdef int32_t[::1] indptr = np.ascontiguousarray(indptr_arr, dtype=np.int32)
    cdef int32_t[::1] indices = np.ascontiguousarray(indices_arr, dtype=np.int32)
    cdef int32_t[::1] mate = mate_arr
    cdef int32_t[::1] parent = parent_arr
    cdef int32_t[::1] base = base_arr
    cdef int32_t[::1] queue = queue_arr
    cdef uint8_t[::1] inq = inq_arr
    cdef uint8_t[::1] inb = inb_arr
    cdef uint8_t[::1] seen = seen_arr
    cdef Py_ssize_t v
    cdef Py_ssize_t k
    cdef int w
    with nogil:
        for v in range(nn):  # greedy seed
            if mate[v] < 0:
                for k in range(indptr[v], indptr[v + 1]):
                    w = indices[k]
                    if mate[w] < 0:
                        mate[v] = w
                        mate[w] = <int32_t> v
                        break
        for v in range(nn):
            if mate[v] < 0:
                _find_path(<int> v, nn, indptr, indices, mate, parent, base,
                           inq, inb, seen, queue)
    return mate_arr
