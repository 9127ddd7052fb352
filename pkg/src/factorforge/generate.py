"""Instance construction: named small graphs, planted yes-instances,
Hamiltonicity reductions, and random instances."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .graphs import DegreeSpec, Graph, Partition


@dataclass
class Instance:
    """A demand-annotated graph, optionally with a partition to connect and
    a known answer (with its provenance and witness when available)."""

    graph: Graph
    demand: DegreeSpec
    partition: Optional[Partition] = None
    answer: Optional[bool] = None
    note: str = ""
    witness: Optional[frozenset] = None  # edge ids of a known factor

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m


# ---------------------------------------------------------------------------
# named graphs used throughout the tests and docs


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def complete_graph(k: int) -> Graph:
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def petersen_graph() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges)


def cube_graph() -> Graph:
    """The 3-dimensional hypercube Q3."""
    edges = []
    for v in range(8):
        for b in (1, 2, 4):
            if v < v ^ b:
                edges.append((v, v ^ b))
    return Graph(8, edges)


def two_disjoint_triangles() -> Graph:
    return Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])


def two_triangles_plus_matching() -> Graph:
    """Two triangles {0,1,2} and {3,4,5} plus the perfect matching
    (0,3), (1,4), (2,5).  The standard running example: with f = 2 it has
    both a disconnected 2-factor (the triangles) and connected ones
    (hexagons using two matching edges)."""
    g = two_disjoint_triangles()
    return Graph(6, list(g.edges) + [(0, 3), (1, 4), (2, 5)])


def triangle_partition() -> Partition:
    return Partition(6, [[0, 1, 2], [3, 4, 5]])


# ---------------------------------------------------------------------------
# generators


def gen_planted(
    n: int,
    extra_edge_rate: float = 0.05,
    seed: int = 0,
    min_degree: int = 2,
) -> Instance:
    """Yes-instance with a planted witness.

    Builds a random connected subgraph H (random spanning tree, then random
    edges until every degree reaches min_degree), sets f := d_H, then
    sprinkles independent noise edges on top to form G.  H certifies the
    answer; with extra_edge_rate = 0, H is the unique f-factor of G.
    """
    if n < 2:
        raise ValueError("planted instances need n >= 2")
    if not (1 <= min_degree <= n - 1):
        raise ValueError("min_degree must lie in [1, n-1]")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        j = rng.randrange(i)
        u, v = order[i], order[j]
        edges.add((u, v) if u < v else (v, u))
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    # raise degrees to min_degree; always possible while min_degree <= n-1
    pending = [v for v in range(n) if deg[v] < min_degree]
    while pending:
        v = min(pending, key=lambda x: (deg[x], x))
        choices = [
            w
            for w in range(n)
            if w != v and ((v, w) if v < w else (w, v)) not in edges
        ]
        choices.sort(key=lambda w: (deg[w], w))
        lowest = deg[choices[0]]
        pool = [w for w in choices if deg[w] == lowest]
        w = pool[rng.randrange(len(pool))]
        edges.add((v, w) if v < w else (w, v))
        deg[v] += 1
        deg[w] += 1
        pending = [x for x in range(n) if deg[x] < min_degree]
    witness_pairs = sorted(edges)
    noise = []
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_edge_rate:
                noise.append((u, v))
    g = Graph(n, witness_pairs + noise)
    demand = DegreeSpec(deg)
    witness = g.edge_ids(witness_pairs)
    return Instance(
        graph=g,
        demand=demand,
        answer=True,
        note="planted witness: connected subgraph with f = its degrees",
        witness=witness,
    )


def gen_hamiltonian_reduction(g: Graph, s: int) -> Instance:
    """Demand instance whose connected f-factors correspond one-to-one to
    Hamiltonian cycles of g.

    Every vertex v gains a private clique of s-1 fresh vertices, all joined
    to v.  Clique vertices demand s-1 (exactly their degree, so all their
    edges are forced); originals demand s+1, leaving exactly two original
    edges per vertex, and connectivity makes those a Hamiltonian cycle.
    """
    if s < 2:
        raise ValueError("clique scale s must be at least 2")
    n = g.n
    k = s - 1
    edges = list(g.edges)
    for v in range(n):
        base = n + v * k
        for i in range(k):
            edges.append((v, base + i))
            for j in range(i + 1, k):
                edges.append((base + i, base + j))
    total = n + n * k
    demand = [0] * total
    for v in range(n):
        demand[v] = s + 1
    for x in range(n, total):
        demand[x] = s - 1
    return Instance(
        graph=Graph(total, edges),
        demand=DegreeSpec(demand),
        answer=None,
        note="clique reduction: connected f-factor iff source has a Hamiltonian cycle",
    )


def asymptotic_clique_scale(z: int, c1: float, eps: float) -> float:
    """Clique scale that makes the reduction's demand lower bound match a
    target density exponent: s = 2^((z/c1)^(1/(1+eps))) / z.  Only useful for
    asymptotic accounting; concrete instances pass an integer s directly."""
    if z < 1 or c1 <= 0 or eps <= 0:
        raise ValueError("need z >= 1, c1 > 0, eps > 0")
    return 2.0 ** ((z / c1) ** (1.0 / (1.0 + eps))) / z


def gen_random(
    n: int,
    m: int,
    seed: int = 0,
    f_min: int = 0,
    f_max: Optional[int] = None,
    even_total_bias: float = 0.5,
) -> Instance:
    """Uniform random graph with m edges and independent random demands.
    With probability even_total_bias the total demand is nudged to even
    (a factor can only exist then); otherwise it is left as drawn."""
    rng = random.Random(seed)
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if m > len(all_pairs):
        raise ValueError("too many edges requested")
    pairs = rng.sample(all_pairs, m)
    g = Graph(n, pairs)
    hi = n - 1 if f_max is None else min(f_max, n - 1)
    f = [rng.randint(f_min, max(f_min, hi)) for _ in range(n)]
    if sum(f) % 2 == 1 and rng.random() < even_total_bias:
        v = rng.randrange(n)
        if f[v] > f_min:
            f[v] -= 1
        else:
            f[v] += 1
    return Instance(graph=g, demand=DegreeSpec(f), answer=None, note="uniform random")


def random_partition(n: int, max_parts: int, rng: random.Random) -> Partition:
    """Random partition with between 1 and max_parts non-empty parts."""
    k = rng.randint(1, max(1, min(max_parts, n)))
    while True:
        buckets: dict[int, list[int]] = {}
        for v in range(n):
            buckets.setdefault(rng.randrange(k), []).append(v)
        if len(buckets) == k:
            return Partition(n, buckets.values())
