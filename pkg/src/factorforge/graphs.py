"""Core graph types: simple graphs, degree demands, vertex partitions,
factor subgraphs and quotient multigraphs.

Vertices are dense integers 0..n-1.  Edges are unordered pairs (u, v) with
u < v, stored sorted lexicographically; the position in that order is the
edge id, and every edge-id set in the package refers to this numbering.
Graphs are immutable; edge deletion is expressed with masked views so ids
stay stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import InvalidPartitionError


class Graph:
    """Immutable simple undirected graph."""

    __slots__ = ("n", "edges", "_adj", "_index")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = []
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed: (%d, %d)" % (u, v))
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("edge (%d, %d) outside vertex range" % (u, v))
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        for i in range(1, len(canon)):
            if canon[i] == canon[i - 1]:
                raise ValueError("duplicate edge %s" % (canon[i],))
        self.n = n
        self.edges = tuple(canon)
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        index = {}
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
            index[(u, v)] = eid
        self._adj = tuple(tuple(a) for a in adj)
        self._index = index

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adj)

    def adj(self, v: int) -> tuple[tuple[int, int], ...]:
        """Neighbors of v as (neighbor, edge id) pairs, in edge-id order."""
        return self._adj[v]

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self.edges[eid]

    def edge_id(self, u: int, v: int) -> int:
        """Edge id of (u, v); raises KeyError if absent."""
        return self._index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    def edge_ids(self, pairs: Iterable[tuple[int, int]]) -> frozenset[int]:
        return frozenset(self.edge_id(u, v) for u, v in pairs)

    def without_edges(self, removed: Iterable[int]) -> "MaskedGraph":
        """View of this graph with the given edge ids deleted.  Remaining
        edges keep their original ids."""
        return MaskedGraph(self, frozenset(removed))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return "Graph(n=%d, m=%d)" % (self.n, self.m)


class MaskedGraph:
    """Read-only view of a Graph with some edges deleted.

    Exposes the same query surface as Graph (n, degree, adj, endpoints,
    active_edge_ids) so blowup construction and factor search can run on a
    subinstance without renumbering anything.
    """

    __slots__ = ("host", "removed")

    def __init__(self, host: Graph, removed: frozenset[int]):
        for eid in removed:
            if not (0 <= eid < host.m):
                raise ValueError("masked edge id %d out of range" % eid)
        self.host = host
        self.removed = removed

    @property
    def n(self) -> int:
        return self.host.n

    @property
    def m(self) -> int:
        return self.host.m - len(self.removed)

    def degree(self, v: int) -> int:
        return sum(1 for _, eid in self.host.adj(v) if eid not in self.removed)

    def adj(self, v: int) -> Iterator[tuple[int, int]]:
        removed = self.removed
        return ((w, eid) for w, eid in self.host.adj(v) if eid not in removed)

    def endpoints(self, eid: int) -> tuple[int, int]:
        if eid in self.removed:
            raise KeyError("edge %d is masked out" % eid)
        return self.host.endpoints(eid)

    def active_edge_ids(self) -> Iterator[int]:
        removed = self.removed
        return (eid for eid in range(self.host.m) if eid not in removed)

    def without_edges(self, removed: Iterable[int]) -> "MaskedGraph":
        return MaskedGraph(self.host, self.removed | frozenset(removed))


def active_edge_ids(g) -> Iterator[int]:
    """Edge ids present in a Graph or MaskedGraph, ascending."""
    if isinstance(g, MaskedGraph):
        return g.active_edge_ids()
    return iter(range(g.m))


def host_of(g) -> Graph:
    return g.host if isinstance(g, MaskedGraph) else g


class DegreeSpec:
    """Per-vertex degree demand f.  Requires 0 <= f(v) <= n-1."""

    __slots__ = ("values",)

    def __init__(self, values: Sequence[int]):
        n = len(values)
        vals = tuple(int(x) for x in values)
        for v, fv in enumerate(vals):
            if not (0 <= fv <= max(n - 1, 0)):
                raise ValueError("demand f(%d)=%d outside [0, %d]" % (v, fv, n - 1))
        self.values = vals

    @classmethod
    def uniform(cls, n: int, k: int) -> "DegreeSpec":
        return cls((k,) * n)

    @property
    def total(self) -> int:
        return sum(self.values)

    @property
    def parity_ok(self) -> bool:
        """Total demand must be even for any factor to exist."""
        return self.total % 2 == 0

    @property
    def minimum(self) -> int:
        return min(self.values) if self.values else 0

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other) -> bool:
        return isinstance(other, DegreeSpec) and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return "DegreeSpec(%r)" % (self.values,)


def as_demand(g, f) -> DegreeSpec:
    """Coerce a sequence to a DegreeSpec sized for graph g."""
    spec = f if isinstance(f, DegreeSpec) else DegreeSpec(f)
    if len(spec) != g.n:
        raise ValueError("demand has %d entries for %d vertices" % (len(spec), g.n))
    return spec


class Partition:
    """Partition of the vertex set 0..n-1 into non-empty parts.

    Parts are stored sorted by their minimum vertex, so part index 0 is
    always the part containing vertex 0; that part plays the designated
    first-part role wherever one is needed.
    """

    __slots__ = ("n", "parts", "part_of")

    def __init__(self, n: int, parts: Iterable[Iterable[int]]):
        seen = [False] * n
        canon = []
        for part in parts:
            pt = tuple(sorted(set(part)))
            if not pt:
                raise InvalidPartitionError("empty part")
            for v in pt:
                if not (0 <= v < n):
                    raise InvalidPartitionError("vertex %d outside range" % v)
                if seen[v]:
                    raise InvalidPartitionError("vertex %d in two parts" % v)
                seen[v] = True
            canon.append(pt)
        if not all(seen):
            missing = [v for v in range(n) if not seen[v]]
            raise InvalidPartitionError("vertices %s not covered" % missing)
        canon.sort(key=lambda p: p[0])
        self.n = n
        self.parts = tuple(canon)
        part_of = [0] * n
        for i, pt in enumerate(canon):
            for v in pt:
                part_of[v] = i
        self.part_of = tuple(part_of)

    @classmethod
    def trivial(cls, n: int) -> "Partition":
        """The one-part partition {V}."""
        return cls(n, [range(n)])

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(n, [[v] for v in range(n)])

    def __len__(self) -> int:
        return len(self.parts)

    def part_index(self, v: int) -> int:
        return self.part_of[v]

    def same_part(self, u: int, v: int) -> bool:
        return self.part_of[u] == self.part_of[v]

    def refines(self, coarser: "Partition") -> bool:
        """True if every part of self lies inside one part of coarser."""
        if self.n != coarser.n:
            return False
        return all(
            len({coarser.part_of[v] for v in part}) == 1 for part in self.parts
        )

    def merge(self, i: int, j: int) -> "Partition":
        """Partition with parts i and j unioned (re-canonicalized)."""
        if i == j:
            raise InvalidPartitionError("cannot merge a part with itself")
        newparts = [
            p for k, p in enumerate(self.parts) if k not in (i, j)
        ]
        newparts.append(tuple(sorted(self.parts[i] + self.parts[j])))
        return Partition(self.n, newparts)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Partition)
            and self.n == other.n
            and self.parts == other.parts
        )

    def __hash__(self) -> int:
        return hash((self.n, self.parts))

    def __repr__(self) -> str:
        return "Partition(%d, %r)" % (self.n, [list(p) for p in self.parts])


class FactorSubgraph:
    """Spanning subgraph of a host graph, stored as a set of host edge ids.
    Degrees are cached at construction."""

    __slots__ = ("host", "edge_ids", "degrees")

    def __init__(self, host: Graph, edge_ids: Iterable[int]):
        ids = frozenset(edge_ids)
        for eid in ids:
            if not (0 <= eid < host.m):
                raise ValueError("edge id %d outside host" % eid)
        self.host = host
        self.edge_ids = ids
        deg = [0] * host.n
        for eid in ids:
            u, v = host.endpoints(eid)
            deg[u] += 1
            deg[v] += 1
        self.degrees = tuple(deg)

    @classmethod
    def from_pairs(cls, host: Graph, pairs: Iterable[tuple[int, int]]) -> "FactorSubgraph":
        return cls(host, (host.edge_id(u, v) for u, v in pairs))

    @property
    def m(self) -> int:
        return len(self.edge_ids)

    @property
    def n(self) -> int:
        return self.host.n

    def has_edge_id(self, eid: int) -> bool:
        return eid in self.edge_ids

    def adj(self, v: int) -> list[tuple[int, int]]:
        return [(w, eid) for w, eid in self.host.adj(v) if eid in self.edge_ids]

    def edge_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.host.endpoints(eid) for eid in self.edge_ids)

    def symmetric_difference(self, other: "FactorSubgraph") -> frozenset[int]:
        assert self.host is other.host or self.host == other.host
        return self.edge_ids ^ other.edge_ids

    def union_ids(self, ids: Iterable[int]) -> "FactorSubgraph":
        return FactorSubgraph(self.host, self.edge_ids | frozenset(ids))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FactorSubgraph)
            and self.host == other.host
            and self.edge_ids == other.edge_ids
        )

    def __hash__(self) -> int:
        return hash((self.host, self.edge_ids))

    def __repr__(self) -> str:
        return "FactorSubgraph(m=%d of %r)" % (self.m, self.host)


class QuotientGraph:
    """Multigraph obtained by contracting every part of a partition.

    Keeps one multi-edge (part_i, part_j, origin edge id) per original
    cross edge; edges inside a part are dropped.
    """

    __slots__ = ("partition", "multi_edges")

    def __init__(self, partition: Partition, multi_edges: Iterable[tuple[int, int, int]]):
        self.partition = partition
        self.multi_edges = tuple(sorted(multi_edges))

    @property
    def n_parts(self) -> int:
        return len(self.partition)

    def is_connected(self) -> bool:
        k = self.n_parts
        if k <= 1:
            return True
        adj: list[list[int]] = [[] for _ in range(k)]
        for i, j, _ in self.multi_edges:
            adj[i].append(j)
            adj[j].append(i)
        seen = [False] * k
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    count += 1
                    stack.append(y)
        return count == k

    def __repr__(self) -> str:
        return "QuotientGraph(parts=%d, multi_edges=%d)" % (
            self.n_parts,
            len(self.multi_edges),
        )


@dataclass(frozen=True)
class Report:
    """Outcome of verify_f_factor."""

    degrees_match: bool
    is_connected: bool
    connects_partition: Optional[bool]
    bad_vertices: tuple[int, ...] = ()

    def ok(self, require_connected: bool = True) -> bool:
        if not self.degrees_match:
            return False
        if self.connects_partition is not None:
            return self.connects_partition
        return self.is_connected if require_connected else True


# ---------------------------------------------------------------------------
# operations


def components(h: FactorSubgraph) -> Partition:
    """Connected components of a factor subgraph, as a Partition of the
    host's vertex set (isolated vertices become singleton parts)."""
    n = h.host.n
    comp = [-1] * n
    parts = []
    for s in range(n):
        if comp[s] != -1:
            continue
        cur = [s]
        comp[s] = len(parts)
        stack = [s]
        while stack:
            v = stack.pop()
            for w, eid in h.host.adj(v):
                if eid in h.edge_ids and comp[w] == -1:
                    comp[w] = comp[s]
                    cur.append(w)
                    stack.append(w)
        parts.append(cur)
    return Partition(n, parts)


def quotient(g, q: Partition) -> QuotientGraph:
    """Contract each part of q in g (a Graph, MaskedGraph or FactorSubgraph).
    Cross edges become multi-edges tagged with their origin edge id."""
    host = g.host if isinstance(g, (FactorSubgraph, MaskedGraph)) else g
    if q.n != host.n:
        raise InvalidPartitionError(
            "partition over %d vertices, graph has %d" % (q.n, host.n)
        )
    if isinstance(g, FactorSubgraph):
        eids: Iterable[int] = sorted(g.edge_ids)
    else:
        eids = active_edge_ids(g)
    multi = []
    for eid in eids:
        u, v = host.endpoints(eid)
        pu, pv = q.part_of[u], q.part_of[v]
        if pu == pv:
            continue
        if pu > pv:
            pu, pv = pv, pu
        multi.append((pu, pv, eid))
    return QuotientGraph(q, multi)


def refine_by_components(h: FactorSubgraph, q: Partition) -> tuple[Partition, bool]:
    """Split every part of q into the connected components of h restricted
    to that part.  Returns (refinement, unchanged flag)."""
    if q.n != h.host.n:
        raise InvalidPartitionError("partition does not match host")
    newparts = []
    for part in q.parts:
        inside = set(part)
        comp_of = {}
        for s in part:
            if s in comp_of:
                continue
            comp_of[s] = s
            cur = [s]
            stack = [s]
            while stack:
                v = stack.pop()
                for w, eid in h.host.adj(v):
                    if eid in h.edge_ids and w in inside and w not in comp_of:
                        comp_of[w] = s
                        cur.append(w)
                        stack.append(w)
            newparts.append(cur)
    refined = Partition(q.n, newparts)
    return refined, refined == q


def verify_f_factor(g, f, h: FactorSubgraph, q: Optional[Partition] = None) -> Report:
    """Check a candidate factor: exact degree match against f, connectivity
    of h itself, and (when q is given) connectivity of the quotient h/q."""
    spec = as_demand(g, f)
    bad = tuple(v for v in range(h.host.n) if h.degrees[v] != spec[v])
    n_parts = len(components(h))
    is_conn = h.host.n <= 1 or n_parts == 1
    connects = None
    if q is not None:
        connects = quotient(h, q).is_connected()
    return Report(
        degrees_match=not bad,
        is_connected=is_conn,
        connects_partition=connects,
        bad_vertices=bad,
    )
