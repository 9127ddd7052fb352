"""Shared builders for the test suite."""

from __future__ import annotations

import itertools
import random

from factorforge.generate import gen_random
from factorforge.graphs import FactorSubgraph, Graph, Partition


def random_instance(rng: random.Random, n_lo=3, n_hi=7, m_cap=11, f_max=3):
    """Small random demand-annotated graph within the oracle guard."""
    n = rng.randint(n_lo, n_hi)
    m = rng.randint(1, min(n * (n - 1) // 2, m_cap))
    return gen_random(n, m, seed=rng.randrange(10**9), f_max=f_max)


def random_graph(rng: random.Random, n: int, m: int) -> Graph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, rng.sample(pairs, m))


def exact_partition(n: int, k: int) -> Partition:
    """Deterministic partition into exactly k parts by dealing round-robin."""
    return Partition(n, [tuple(range(n))[i::k] for i in range(k)])


def random_partition_exact(rng: random.Random, n: int, k: int) -> Partition:
    while True:
        buckets = [[] for _ in range(k)]
        for v in range(n):
            buckets[rng.randrange(k)].append(v)
        if all(buckets):
            return Partition(n, buckets)


def all_f_factors(g: Graph, f) -> list[FactorSubgraph]:
    """Every f-factor by direct enumeration; only for tiny hosts."""
    want = list(f)
    out = []
    for r in range(g.m + 1):
        for combo in itertools.combinations(range(g.m), r):
            h = FactorSubgraph(g, frozenset(combo))
            if list(h.degrees) == want:
                out.append(h)
    return out
