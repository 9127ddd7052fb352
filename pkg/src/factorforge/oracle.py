"""Exhaustive reference solvers.

These are the ground-truth oracles the test suite measures everything else
against, so they stay deliberately independent of the production code paths:
plain branch-and-prune over edge subsets, no blowups, no algebra.
"""

from __future__ import annotations

from typing import Callable, Optional

from .errors import SizeGuardError
from .graphs import (
    FactorSubgraph,
    Graph,
    Partition,
    as_demand,
    components,
    quotient,
)

# 2^26 subsets with pruning stays under a minute; larger asks must opt in.
DEFAULT_EDGE_GUARD = 26


def _factor_search(
    g: Graph,
    f,
    accept: Callable[[frozenset[int]], bool],
    max_edges: int,
) -> Optional[FactorSubgraph]:
    """First edge set (include-first decision order) that meets the demand
    exactly and satisfies `accept`."""
    spec = as_demand(g, f)
    if g.m > max_edges:
        raise SizeGuardError(
            "brute force limited to %d edges, graph has %d" % (max_edges, g.m)
        )
    if spec.total % 2 == 1:
        return None
    if any(spec[v] > g.degree(v) for v in range(g.n)):
        return None

    m = g.m
    deg = [0] * g.n
    # rem[v]: undecided incident edges of v at the current search depth
    rem = list(g.degrees())
    chosen: list[int] = []
    found: list[frozenset[int]] = []

    def walk(eid: int) -> bool:
        if eid == m:
            if all(deg[v] == spec[v] for v in range(g.n)):
                ids = frozenset(chosen)
                if accept(ids):
                    found.append(ids)
                    return True
            return False
        u, v = g.endpoints(eid)
        rem[u] -= 1
        rem[v] -= 1
        ok = False
        if deg[u] < spec[u] and deg[v] < spec[v]:
            deg[u] += 1
            deg[v] += 1
            chosen.append(eid)
            ok = walk(eid + 1)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
        if not ok and deg[u] + rem[u] >= spec[u] and deg[v] + rem[v] >= spec[v]:
            ok = walk(eid + 1)
        rem[u] += 1
        rem[v] += 1
        return ok

    walk(0)
    if not found:
        return None
    return FactorSubgraph(g, found[0])


def brute_force_cff(g: Graph, f, max_edges: int = DEFAULT_EDGE_GUARD) -> Optional[FactorSubgraph]:
    """First connected f-factor of g, or None.  Exact for any input within
    the edge guard."""
    spec = as_demand(g, f)
    if g.n <= 1:
        return FactorSubgraph(g, ()) if all(x == 0 for x in spec) else None

    def accept(ids: frozenset[int]) -> bool:
        return len(components(FactorSubgraph(g, ids))) == 1

    return _factor_search(g, spec, accept, max_edges)


def brute_force_pc(
    g: Graph, f, q: Partition, max_edges: int = DEFAULT_EDGE_GUARD
) -> Optional[FactorSubgraph]:
    """First f-factor whose quotient by q is connected, or None."""
    spec = as_demand(g, f)
    if g.n == 0:
        return FactorSubgraph(g, ())

    def accept(ids: frozenset[int]) -> bool:
        return quotient(FactorSubgraph(g, ids), q).is_connected()

    return _factor_search(g, spec, accept, max_edges)
