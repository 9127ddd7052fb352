"""Pure-Python kernels: general-graph maximum matching and GF(2^k)
determinants.

These mirror the compiled kernels in _core.pyx.  The matching routine is the
classic blossom-contraction search (alternating BFS tree, bases collapsed at
each odd cycle); the determinant is plain Gaussian elimination, which is
basis enough because the determinant value does not depend on pivot choices.
"""

from __future__ import annotations

from collections import deque

from ..gf2 import GF64_MODULUS


def maximum_matching(n: int, adj: list[list[int]]) -> list[int]:
    """Maximum cardinality matching.  adj[v] lists neighbors of v.
    Returns mate[v] = partner of v, or -1 if v is unmatched."""
    mate = [-1] * n
    # cheap greedy seed keeps the number of BFS phases small
    for v in range(n):
        if mate[v] == -1:
            for w in adj[v]:
                if mate[w] == -1:
                    mate[v] = w
                    mate[w] = v
                    break
    parent = [-1] * n
    base = list(range(n))
    inq = bytearray(n)

    def lca(a: int, b: int) -> int:
        used = bytearray(n)
        while True:
            a = base[a]
            used[a] = 1
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if used[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, inb: bytearray) -> None:
        while base[v] != b:
            inb[base[v]] = 1
            inb[base[mate[v]]] = 1
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def find_path(root: int) -> bool:
        for i in range(n):
            parent[i] = -1
            base[i] = i
        inq[:] = bytes(n)
        inq[root] = 1
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    # odd cycle: contract the blossom down to its base
                    cur = lca(v, to)
                    inb = bytearray(n)
                    mark_path(v, cur, to, inb)
                    mark_path(to, cur, v, inb)
                    for i in range(n):
                        if inb[base[i]]:
                            base[i] = cur
                            if not inq[i]:
                                inq[i] = 1
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        while to != -1:
                            pv = parent[to]
                            ppv = mate[pv]
                            mate[to] = pv
                            mate[pv] = to
                            to = ppv
                        return True
                    inq[mate[to]] = 1
                    queue.append(mate[to])
        return False

    for v in range(n):
        if mate[v] == -1:
            find_path(v)
    return mate


def gf64_mul(x: int, y: int) -> int:
    """Product over GF(2^64) with the package's fixed modulus."""
    mod_low = GF64_MODULUS & ((1 << 64) - 1)
    mask = (1 << 64) - 1
    top = 1 << 63
    r = 0
    while y:
        if y & 1:
            r ^= x
        y >>= 1
        if x & top:
            x = ((x << 1) & mask) ^ mod_low
        else:
            x <<= 1
    return r


def gf64_det(rows: list[list[int]]) -> int:
    """Determinant over GF(2^64) with the package's fixed modulus.
    Empty matrices have determinant 1."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    mod_low = GF64_MODULUS & ((1 << 64) - 1)
    mask = (1 << 64) - 1
    top = 1 << 63

    def mul(x: int, y: int) -> int:
        r = 0
        while y:
            if y & 1:
                r ^= x
            y >>= 1
            if x & top:
                x = ((x << 1) & mask) ^ mod_low
            else:
                x <<= 1
        return r

    def inv(x: int) -> int:
        # extended Euclid over GF(2)[x]
        r0, s0 = GF64_MODULUS, 0
        r1, s1 = x, 1
        while r1:
            q = 0
            d1 = r1.bit_length()
            rr = r0
            while rr.bit_length() >= d1:
                sh = rr.bit_length() - d1
                q ^= 1 << sh
                rr ^= r1 << sh
            r0, r1 = r1, rr
            t = 0
            ss = s1
            while q:
                if q & 1:
                    t ^= ss
                ss <<= 1
                q >>= 1
            s0, s1 = s1, s0 ^ t
        # reduce s0 mod the modulus
        d = GF64_MODULUS.bit_length()
        while s0.bit_length() >= d:
            s0 ^= GF64_MODULUS << (s0.bit_length() - d)
        return s0

    det = 1
    for col in range(n):
        piv = -1
        for r in range(col, n):
            if a[r][col]:
                piv = r
                break
        if piv < 0:
            return 0
        if piv != col:  # row swap; char 2, no sign change
            a[col], a[piv] = a[piv], a[col]
        pivval = a[col][col]
        det = mul(det, pivval)
        ipiv = inv(pivval)
        arow = a[col]
        for r in range(col + 1, n):
            x = a[r][col]
            if x:
                c = mul(x, ipiv)
                row = a[r]
                for j in range(col, n):
                    if arow[j]:
                        row[j] ^= mul(c, arow[j])
    return det


def gfk_det(rows: list[list[int]], field) -> int:
    """Determinant over an arbitrary GF2Field (used for widths other than
    the fixed 64-bit field)."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    mul = field.mul
    det = 1
    for col in range(n):
        piv = -1
        for r in range(col, n):
            if a[r][col]:
                piv = r
                break
        if piv < 0:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
        pivval = a[col][col]
        det = mul(det, pivval)
        ipiv = field.inv(pivval)
        arow = a[col]
        for r in range(col + 1, n):
            x = a[r][col]
            if x:
                c = mul(x, ipiv)
                row = a[r]
                for j in range(col, n):
                    if arow[j]:
                        row[j] ^= mul(c, arow[j])
    return det
