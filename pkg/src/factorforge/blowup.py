"""Degree-gadget blowup construction and f-factor search.

The blowup of (G, f) replaces every vertex v with a block A(v) of f(v)
copies and every edge e = {u, v} with a gadget pair (u_e, v_e); each block
copy is joined to the gadget ends of its vertex's incident edges, and the
two gadget ends of an edge are joined to each other.  Perfect matchings of
the blowup correspond exactly to f-factors of G: edge e belongs to the
factor iff the gadget edge (u_e, v_e) is NOT matched.

Vertex numbering is deterministic: all blocks first in vertex order, then
gadget pairs in edge order.  Induced and edge-masked variants share the
numbering of the blowup they were derived from, which is what lets the
algebraic module evaluate determinants of many induced pieces against one
random assignment.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .errors import InfeasibleDemandError
from .graphs import (
    FactorSubgraph,
    Graph,
    MaskedGraph,
    active_edge_ids,
    as_demand,
    host_of,
)
from .matching import Matching, max_matching


class BlowupGraph:
    """Blowup of a demand-annotated graph, or a restriction of one.

    Restrictions (vertex-induced pieces, edge-masked subinstances) keep the
    base numbering and simply deactivate ids, so determinant evaluations and
    matchings on different pieces line up against shared per-edge values.
    """

    __slots__ = (
        "host",
        "demand",
        "_block_start",
        "_gadget_base",
        "_base_edge_pairs",
        "_block_count",
        "_host_vertices",
        "_active_eids",
        "_ids_cache",
        "_idset_cache",
        "_gadget_idx_cache",
    )

    def __init__(
        self,
        host,
        demand: tuple[int, ...],
        block_start: tuple[int, ...],
        gadget_base: dict,
        base_edge_pairs: tuple[tuple[int, int], ...],
        block_count: tuple[int, ...],
        host_vertices: frozenset,
        active_eids: frozenset,
    ):
        self.host = host
        self.demand = demand
        self._block_start = block_start
        self._gadget_base = gadget_base
        self._base_edge_pairs = base_edge_pairs
        self._block_count = block_count
        self._host_vertices = host_vertices
        self._active_eids = active_eids
        self._ids_cache = None
        self._idset_cache = None
        self._gadget_idx_cache = None

    # -- construction -------------------------------------------------

    @classmethod
    def build(cls, g, f) -> "BlowupGraph":
        spec = as_demand(g, f)
        n = g.n
        for v in range(n):
            if spec[v] > g.degree(v):
                raise InfeasibleDemandError(
                    "f(%d)=%d exceeds degree %d" % (v, spec[v], g.degree(v))
                )
        demand = tuple(spec.values)
        block_start = [0] * (n + 1)
        for v in range(n):
            block_start[v + 1] = block_start[v] + demand[v]
        eids = sorted(active_edge_ids(g))
        gadget_base = {}
        nxt = block_start[n]
        for eid in eids:
            gadget_base[eid] = nxt
            nxt += 2
        pairs: list[tuple[int, int]] = []
        for eid in eids:
            u, v = g.endpoints(eid)
            ue, ve = gadget_base[eid], gadget_base[eid] + 1
            bs = block_start[u]
            for i in range(demand[u]):
                pairs.append((bs + i, ue))
            bs = block_start[v]
            for i in range(demand[v]):
                pairs.append((bs + i, ve))
            pairs.append((ue, ve))
        return cls(
            host=g,
            demand=demand,
            block_start=tuple(block_start),
            gadget_base=gadget_base,
            base_edge_pairs=tuple(pairs),
            block_count=demand,
            host_vertices=frozenset(range(n)),
            active_eids=frozenset(eids),
        )

    def _derive(self, block_count, host_vertices, active_eids) -> "BlowupGraph":
        return BlowupGraph(
            self.host,
            self.demand,
            self._block_start,
            self._gadget_base,
            self._base_edge_pairs,
            block_count,
            host_vertices,
            active_eids,
        )

    def induced(self, s: Iterable[int]) -> "BlowupGraph":
        """Piece of this blowup for the host vertices in s: blocks of s stay;
        every gadget pair whose host edge leaves s is dropped entirely."""
        sset = frozenset(s) & self._host_vertices
        keep = frozenset(
            eid
            for eid in self._active_eids
            if all(x in sset for x in self.host.endpoints(eid))
        )
        count = tuple(
            c if v in sset else 0 for v, c in enumerate(self._block_count)
        )
        return self._derive(count, sset, keep)

    def minus_host_edge(self, eid: int) -> "BlowupGraph":
        """Subinstance view for deleting host edge eid and lowering the
        demand of both endpoints by one (their highest block copy goes)."""
        if eid not in self._active_eids:
            raise KeyError("host edge %d not active in this blowup" % eid)
        u, v = self.host.endpoints(eid)
        if self._block_count[u] < 1 or self._block_count[v] < 1:
            raise InfeasibleDemandError("demand would drop below zero")
        count = list(self._block_count)
        count[u] -= 1
        count[v] -= 1
        return self._derive(tuple(count), self._host_vertices, self._active_eids - {eid})

    # -- structure queries --------------------------------------------

    def block(self, v: int) -> tuple[int, ...]:
        """Active block copies A(v), ascending ids."""
        if v not in self._host_vertices:
            return ()
        s = self._block_start[v]
        return tuple(range(s, s + self._block_count[v]))

    def gadget(self, eid: int) -> tuple[int, int]:
        """(u_e, v_e) ids for an active host edge; u_e is the lower endpoint's
        gadget end."""
        if eid not in self._active_eids:
            raise KeyError("host edge %d not active in this blowup" % eid)
        base = self._gadget_base[eid]
        return base, base + 1

    def gadget_edge_index(self, eid: int) -> int:
        """Base edge index of the gadget edge (u_e, v_e) of host edge eid.
        Defined for every edge the base blowup was built with, active here or
        not, since the base numbering is shared across restrictions."""
        if self._gadget_idx_cache is None:
            gadget_floor = self._block_start[self.host.n]
            self._gadget_idx_cache = {
                i: k
                for k, (i, j) in enumerate(self._base_edge_pairs)
                if i >= gadget_floor
            }
        return self._gadget_idx_cache[self._gadget_base[eid]]

    def vertices(self) -> tuple[int, ...]:
        if self._ids_cache is None:
            ids: list[int] = []
            for v in sorted(self._host_vertices):
                s = self._block_start[v]
                ids.extend(range(s, s + self._block_count[v]))
            for eid in sorted(self._active_eids):
                base = self._gadget_base[eid]
                ids.append(base)
                ids.append(base + 1)
            ids.sort()
            self._ids_cache = tuple(ids)
        return self._ids_cache

    def _id_set(self) -> frozenset:
        if self._idset_cache is None:
            self._idset_cache = frozenset(self.vertices())
        return self._idset_cache

    @property
    def vertex_count(self) -> int:
        return len(self.vertices())

    def edge_entries(self) -> Iterable[tuple[int, int, int]]:
        """(base edge index, i, j) for every active blowup edge.  The base
        edge index is stable across restrictions of the same base blowup."""
        alive = self._id_set()
        for k, (i, j) in enumerate(self._base_edge_pairs):
            if i in alive and j in alive:
                yield k, i, j

    def edge_pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for _, i, j in self.edge_entries()]

    @property
    def base_edge_count(self) -> int:
        return len(self._base_edge_pairs)

    def back_map(self, blowup_id: int):
        """("block", host vertex, copy index) or ("gadget", host edge id, side)."""
        n = self.host.n
        if blowup_id < self._block_start[n]:
            lo, hi = 0, n - 1
            while lo < hi:  # locate the block by binary search
                mid = (lo + hi + 1) // 2
                if self._block_start[mid] <= blowup_id:
                    lo = mid
                else:
                    hi = mid - 1
            return ("block", lo, blowup_id - self._block_start[lo])
        off = blowup_id - self._block_start[n]
        # gadget ids were assigned in ascending host edge order, two apiece
        eids = self._sorted_base_eids()
        return ("gadget", eids[off // 2], off % 2)

    def _sorted_base_eids(self) -> tuple[int, ...]:
        # base gadget layout covers every edge the base blowup was built with
        return tuple(sorted(self._gadget_base))

    def adjacency_dense(self) -> tuple[list, list[list[int]]]:
        """(ids, adjacency over positions) for the matching kernels."""
        ids = list(self.vertices())
        pos = {x: i for i, x in enumerate(ids)}
        adj: list[list[int]] = [[] for _ in ids]
        for _, i, j in self.edge_entries():
            pi, pj = pos[i], pos[j]
            adj[pi].append(pj)
            adj[pj].append(pi)
        return ids, adj

    def active_host_edges(self) -> tuple[int, ...]:
        return tuple(sorted(self._active_eids))

    def active_host_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._host_vertices))

    def block_counts(self) -> tuple[int, ...]:
        return self._block_count

    def __repr__(self) -> str:
        return "BlowupGraph(%d blowup vertices over %r)" % (self.vertex_count, self.host)


def build_blowup(g, f) -> BlowupGraph:
    """Blowup of (g, f).  Raises InfeasibleDemandError if some vertex demands
    more than its degree (callers treat that as "no f-factor")."""
    return BlowupGraph.build(g, f)


def induced_blowup(b: BlowupGraph, s: Iterable[int]) -> BlowupGraph:
    """Restriction of a blowup to host vertex set s; equals the blowup of
    (G[s], f restricted to s) up to the shared numbering."""
    return b.induced(s)


def _decode_perfect_matching(b: BlowupGraph, matching: Matching) -> frozenset[int]:
    """Host edges whose gadget edge is unmatched; the encoded factor."""
    chosen = []
    for eid in b.active_host_edges():
        ue, ve = b.gadget(eid)
        if matching.partner(ue) != ve:
            chosen.append(eid)
    return frozenset(chosen)


def _factor_via_blowup(g, demand: Sequence[int]) -> Optional[frozenset[int]]:
    b = build_blowup(g, demand)
    if b.vertex_count % 2 == 1:
        return None
    m = max_matching(b)
    if not m.is_perfect:
        return None
    return _decode_perfect_matching(b, m)


def find_f_factor(g, f) -> Optional[FactorSubgraph]:
    """Any f-factor of g (a Graph or MaskedGraph), or None.

    Solves whichever of (g, f) and the complementary demand (g, d_g - f) has
    the smaller blowup; a factor of one is the active-edge complement of a
    factor of the other, and on instances with demands near the degrees the
    complementary blowup is far smaller.
    """
    spec = as_demand(g, f)
    if spec.total % 2 == 1:
        return None
    degs = [g.degree(v) for v in range(g.n)]
    if any(spec[v] > degs[v] for v in range(g.n)):
        return None
    host = host_of(g)
    direct_cost = sum(spec[v] * degs[v] for v in range(g.n))
    comp = [degs[v] - spec[v] for v in range(g.n)]
    comp_cost = sum(comp[v] * degs[v] for v in range(g.n))
    if comp_cost < direct_cost:
        ids = _factor_via_blowup(g, comp)
        if ids is None:
            return None
        ids = frozenset(active_edge_ids(g)) - ids
    else:
        ids = _factor_via_blowup(g, spec.values)
        if ids is None:
            return None
    result = FactorSubgraph(host, ids)
    assert all(
        result.degrees[v] == spec[v] for v in range(g.n)
    ), "decoded factor must meet the demand exactly"
    return result


def find_f_factor_containing(g, f, s_edges: Iterable[int]) -> Optional[FactorSubgraph]:
    """Any f-factor of g containing every edge id in s_edges, or None.
    Reduces to a lowered-demand factor of g with those edges deleted."""
    spec = as_demand(g, f)
    host = host_of(g)
    s = frozenset(s_edges)
    active = frozenset(active_edge_ids(g))
    if not s <= active:
        raise ValueError("forced edges must be active edges of the graph")
    lowered = list(spec.values)
    for eid in s:
        u, v = host.endpoints(eid)
        lowered[u] -= 1
        lowered[v] -= 1
    if any(x < 0 for x in lowered):
        return None
    rest = find_f_factor(g.without_edges(s) if s else g, lowered)
    if rest is None:
        return None
    return FactorSubgraph(host, rest.edge_ids | s)
