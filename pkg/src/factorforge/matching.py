"""Maximum matching front end.

Accepts any of the package's graph shapes, hands dense adjacency lists to
the selected kernel (compiled or pure), and reports the result in the
caller's vertex ids.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .graphs import Graph, MaskedGraph


@dataclass(frozen=True)
class Matching:
    """A matching over some vertex id space.  mate maps each matched vertex
    to its partner; pairs lists each edge once with (low, high) ids."""

    mate: dict
    n_vertices: int

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((u, v) for u, v in self.mate.items() if u < v))

    @property
    def size(self) -> int:
        return len(self.mate) // 2

    @property
    def is_perfect(self) -> bool:
        return len(self.mate) == self.n_vertices

    def covers(self, v) -> bool:
        return v in self.mate

    def partner(self, v):
        return self.mate.get(v)


def _adjacency_of(b) -> tuple[list, list[list[int]]]:
    """(vertex ids, adjacency lists over positions) for a supported graph."""
    if isinstance(b, (Graph, MaskedGraph)):
        ids = list(range(b.n))
        adj = [[w for w, _ in b.adj(v)] for v in range(b.n)]
        return ids, adj
    if hasattr(b, "adjacency_dense"):  # BlowupGraph
        return b.adjacency_dense()
    if isinstance(b, tuple) and len(b) == 2:
        n, edges = b
        adj = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        return list(range(n)), adj
    raise TypeError("unsupported graph type for matching: %r" % type(b))


def max_matching(b) -> Matching:
    """Maximum cardinality matching of a Graph, MaskedGraph, BlowupGraph or
    (n, edge list) tuple."""
    ids, adj = _adjacency_of(b)
    mate_pos = _kernels.maximum_matching(len(ids), adj)
    mate = {}
    for i, j in enumerate(mate_pos):
        if j >= 0:
            mate[ids[i]] = ids[j]
    return Matching(mate=mate, n_vertices=len(ids))
