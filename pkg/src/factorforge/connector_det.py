"""Deterministic partition-connector search.

A factor H connects a partition Q exactly when the edges of H crossing
between parts contain a spanning tree of the part-quotient.  So: enumerate
the (|Q|-1)-subsets of cross edges that form such a tree, in lexicographic
edge-id order, and ask the factor engine for an f-factor forced to contain
each candidate tree.  The first hit is returned.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Optional, Sequence

from .blowup import find_f_factor, find_f_factor_containing
from .graphs import (
    FactorSubgraph,
    Partition,
    active_edge_ids,
    as_demand,
    host_of,
    quotient,
)


def enumerate_quotient_spanning_trees(g, q: Partition) -> Iterator[tuple[int, ...]]:
    """Yield each set of |q|-1 edge ids whose parts form a spanning tree of
    the quotient, as a sorted tuple, in lexicographic order.  A trivial
    partition yields exactly the empty tree."""
    host = host_of(g)
    k = len(q)
    if k == 1:
        yield ()
        return
    cross = [
        eid
        for eid in sorted(active_edge_ids(g))
        if q.part_of[host.endpoints(eid)[0]] != q.part_of[host.endpoints(eid)[1]]
    ]
    for combo in combinations(cross, k - 1):
        parent = list(range(k))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for eid in combo:
            u, v = host.endpoints(eid)
            ru, rv = find(q.part_of[u]), find(q.part_of[v])
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            yield combo


def pc_deterministic(g, f, q: Partition) -> Optional[FactorSubgraph]:
    """First f-factor of g that connects q, or None when none exists.

    Exhaustive over quotient spanning trees, so a None answer is a proof.
    Worst case tries every (|q|-1)-subset of the cross edges.
    """
    demand = as_demand(g, f)
    if len(q) == 1:
        return find_f_factor(g, demand)
    for tree in enumerate_quotient_spanning_trees(g, q):
        h = find_f_factor_containing(g, demand, tree)
        if h is not None:
            assert quotient(h, q).is_connected(), "forced tree must connect q"
            return h
    return None
