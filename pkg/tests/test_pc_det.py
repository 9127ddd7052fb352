"""Deterministic partition connector: tree enumeration and exhaustive search."""

import math
import random

from factorforge.connector_det import (
    enumerate_quotient_spanning_trees,
    pc_deterministic,
)
from factorforge.generate import (
    two_disjoint_triangles,
    two_triangles_plus_matching,
)
from factorforge.graphs import Partition, quotient, verify_f_factor
from factorforge.oracle import brute_force_pc

from conftest import random_instance, random_partition_exact


class TestTreeEnumeration:
    def test_trivial_partition_single_empty_tree(self):
        g = two_triangles_plus_matching()
        trees = list(enumerate_quotient_spanning_trees(g, Partition.trivial(6)))
        assert trees == [()]

    def test_two_parts_trees_are_single_cross_edges(self):
        g = two_triangles_plus_matching()
        q = Partition(6, [[0, 1, 2], [3, 4, 5]])
        trees = list(enumerate_quotient_spanning_trees(g, q))
        cross = sorted(
            g.edge_id(u, v) for u, v in [(0, 3), (1, 4), (2, 5)]
        )
        assert trees == [(e,) for e in cross]

    def test_no_cross_edges_no_trees(self):
        g = two_disjoint_triangles()
        q = Partition(6, [[0, 1, 2], [3, 4, 5]])
        assert list(enumerate_quotient_spanning_trees(g, q)) == []

    def test_every_tree_connects_quotient(self):
        rng = random.Random(5150)
        for _ in range(60):
            inst = random_instance(rng)
            n = inst.n
            k = rng.randint(1, min(4, n))
            q = random_partition_exact(rng, n, k)
            count = 0
            for tree in enumerate_quotient_spanning_trees(inst.graph, q):
                assert len(tree) == k - 1
                # the chosen edges alone must connect the quotient
                parent = list(range(k))

                def find(x):
                    while parent[x] != x:
                        parent[x] = parent[parent[x]]
                        x = parent[x]
                    return x

                for eid in tree:
                    u, v = inst.graph.endpoints(eid)
                    ru, rv = find(q.part_of[u]), find(q.part_of[v])
                    assert ru != rv
                    parent[ru] = rv
                assert len({find(i) for i in range(k)}) == 1
                count += 1
            cross = sum(
                1
                for eid in range(inst.graph.m)
                if q.part_of[inst.graph.endpoints(eid)[0]]
                != q.part_of[inst.graph.endpoints(eid)[1]]
            )
            assert count <= math.comb(cross, k - 1)

    def test_enumeration_is_deterministic(self):
        g = two_triangles_plus_matching()
        q = Partition(6, [[0, 2, 4], [1, 3, 5]])
        a = list(enumerate_quotient_spanning_trees(g, q))
        b = list(enumerate_quotient_spanning_trees(g, q))
        assert a == b


class TestPcDeterministic:
    def test_worked_yes(self):
        g = two_triangles_plus_matching()
        q = Partition(6, [[0, 1, 2], [3, 4, 5]])
        h = pc_deterministic(g, [2] * 6, q)
        assert h is not None
        assert quotient(h, q).is_connected()
        assert h.degrees == (2,) * 6

    def test_worked_no(self):
        g = two_disjoint_triangles()
        q = Partition(6, [[0, 1, 2], [3, 4, 5]])
        assert pc_deterministic(g, [2] * 6, q) is None

    def test_trivial_partition_reduces_to_factor_search(self):
        g = two_disjoint_triangles()
        h = pc_deterministic(g, [2] * 6, Partition.trivial(6))
        assert h is not None  # disconnected factor is fine for one part

    def test_vs_oracle_fuzz(self):
        rng = random.Random(800813)
        agreements = 0
        for _ in range(150):
            inst = random_instance(rng)
            q = random_partition_exact(rng, inst.n, rng.randint(1, 3))
            mine = pc_deterministic(inst.graph, inst.demand, q)
            ref = brute_force_pc(inst.graph, inst.demand, q)
            assert (mine is None) == (ref is None), (
                inst.graph.edges,
                list(inst.demand),
                q.parts,
            )
            if mine is not None:
                rep = verify_f_factor(inst.graph, inst.demand, mine, q)
                assert rep.degrees_match and rep.connects_partition
            agreements += 1
        assert agreements == 150
