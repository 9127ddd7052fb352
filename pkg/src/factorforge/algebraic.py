"""Randomized algebraic partition-connector test and search over GF(2^k).

The blowup's matching polynomial is evaluated through symmetric Tutte
matrices: assign every blowup edge an independent nonzero field value a_e;
the determinant of the (zero-diagonal symmetric) matrix is then the squared
sum, over perfect matchings, of the matched values' product.  Summing
det(piece) * det(complement piece) * (squared cut-gadget values) over all
part-subsets containing part 0 makes the contribution of every factor whose
quotient has c components appear 2^(c-1) times; in characteristic 2 only the
c = 1 factors survive.  So the sum is nonzero only if a connecting factor
exists, and a nonzero evaluation at a random point proves existence, while a
zero may (rarely) be a false negative.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from ._kernels import gfk_det
from .blowup import BlowupGraph, build_blowup, find_f_factor
from .errors import InfeasibleDemandError
from .gf2 import GF2Field, field_bits_for_instance
from .graphs import (
    FactorSubgraph,
    Partition,
    active_edge_ids,
    as_demand,
    host_of,
    quotient,
    verify_f_factor,
)


@dataclass(frozen=True)
class TutteAssignment:
    """One nonzero field value per base blowup edge.  Indices are the stable
    base edge indices, so one assignment serves every restriction of the
    blowup it was drawn for."""

    field: GF2Field
    values: tuple[int, ...]

    @classmethod
    def draw(
        cls, b: BlowupGraph, field: GF2Field, rng: random.Random
    ) -> "TutteAssignment":
        return cls(
            field=field,
            values=tuple(
                field.random_nonzero(rng) for _ in range(b.base_edge_count)
            ),
        )

    def value(self, base_edge_index: int) -> int:
        return self.values[base_edge_index]

    def gadget_value(self, b: BlowupGraph, eid: int) -> int:
        return self.values[b.gadget_edge_index(eid)]


def tutte_matrix(b: BlowupGraph, a: TutteAssignment) -> list[list[int]]:
    """Zero-diagonal symmetric matrix of b's active piece under a, rows and
    columns in ascending active blowup id."""
    ids = b.vertices()
    pos = {x: i for i, x in enumerate(ids)}
    size = len(ids)
    rows = [[0] * size for _ in range(size)]
    for k, i, j in b.edge_entries():
        val = a.values[k]
        pi, pj = pos[i], pos[j]
        rows[pi][pj] = val
        rows[pj][pi] = val
    return rows


def tutte_det(b: BlowupGraph, a: TutteAssignment) -> int:
    """det of the piece's Tutte matrix; 1 for the empty piece, 0 for odd
    pieces (no perfect matching is possible there)."""
    size = b.vertex_count
    if size == 0:
        return 1
    if size % 2 == 1:
        return 0
    return gfk_det(tutte_matrix(b, a), a.field)


def graph_tutte_det(g, values: Mapping[int, int], field: GF2Field) -> int:
    """Tutte determinant of an arbitrary graph, values keyed by edge id.
    Nonzero proves g has a perfect matching; if one exists, a random
    evaluation is nonzero except with probability about n / 2^bits."""
    n = g.n
    if n == 0:
        return 1
    if n % 2 == 1:
        return 0
    rows = [[0] * n for _ in range(n)]
    for eid in active_edge_ids(g):
        u, v = g.endpoints(eid)
        val = values[eid]
        rows[u][v] = val
        rows[v][u] = val
    return gfk_det(rows, field)


def monomial_value(
    b: BlowupGraph, q: Partition, i_parts: Iterable[int], a: TutteAssignment
) -> int:
    """Product of squared gadget values over active host edges crossing
    between the parts in i_parts and the rest.  Part 0 must be inside."""
    sel = frozenset(i_parts)
    if 0 not in sel:
        raise ValueError("part 0 must belong to the selected side")
    host = b.host
    total = 1
    field = a.field
    for eid in b.active_host_edges():
        u, v = host.endpoints(eid)
        if (q.part_of[u] in sel) != (q.part_of[v] in sel):
            g2 = a.gadget_value(b, eid)
            total = field.mul(total, field.mul(g2, g2))
    return total


def eval_pc(b: BlowupGraph, q: Partition, a: TutteAssignment) -> int:
    """Evaluate the connecting-factor polynomial of (b, q) at assignment a.

    Sums det(B[side]) * det(B[rest]) * monomial over the 2^(|q|-1) part
    subsets containing part 0.  Nonzero implies a partition connector exists;
    zero is correct except with probability at most deg / field size.
    """
    field = a.field
    ell = len(q)
    acc = 0
    for bits in range(1 << (ell - 1)):
        sel = [0] + [i + 1 for i in range(ell - 1) if (bits >> i) & 1]
        side = [v for p in sel for v in q.parts[p]]
        rest = [
            v
            for p in range(ell)
            if p not in sel
            for v in q.parts[p]
        ]
        d1 = tutte_det(b.induced(side), a)
        d2 = tutte_det(b.induced(rest), a)
        if d1 and d2:
            term = field.mul(field.mul(d1, d2), monomial_value(b, q, sel, a))
            acc ^= term
    return acc


def exists_pc_randomized(
    g,
    f,
    q: Partition,
    *,
    seed: Optional[int] = None,
    rng: Optional[random.Random] = None,
    field: Optional[GF2Field] = None,
) -> bool:
    """One-sided randomized test for "some f-factor of g connects q".

    True is always correct.  False is wrong with probability at most about
    n^2 / 2^bits for the instance-sized field, fresh randomness per call.
    """
    if field is None:
        field = GF2Field(field_bits_for_instance(g.n))
    if rng is None:
        rng = random.Random(seed)
    spec = as_demand(g, f)
    if spec.total % 2 == 1:
        return False
    try:
        b = build_blowup(g, spec)
    except InfeasibleDemandError:
        return False
    a = TutteAssignment.draw(b, field, rng)
    return eval_pc(b, q, a) != 0


def pc_randomized(
    g,
    f,
    q: Partition,
    *,
    seed: Optional[int] = None,
    field: Optional[GF2Field] = None,
) -> Optional[FactorSubgraph]:
    """Self-reducing randomized partition-connector search.

    Tests existence, then repeatedly forces one edge leaving part 0 whose
    subinstance (edge deleted, demands lowered, parts merged) still tests
    positive, until one part remains; the leftover demands go to the exact
    factor engine.  A returned factor is verified, so YES answers are sound;
    None may be a false negative with the same small probability as the
    existence test, compounded over at most |q| - 1 + m oracle calls.
    """
    spec = as_demand(g, f)
    host = host_of(g)
    if field is None:
        field = GF2Field(field_bits_for_instance(g.n))
    rng = random.Random(seed)
    if spec.total % 2 == 1:
        return None
    try:
        b = build_blowup(g, spec)
    except InfeasibleDemandError:
        return None

    def positive(bb: BlowupGraph, qq: Partition) -> bool:
        a = TutteAssignment.draw(bb, field, rng)
        return eval_pc(bb, qq, a) != 0

    if not positive(b, q):
        return None
    cur = q
    forced: list[int] = []
    while len(cur) > 1:
        part0 = set(cur.parts[0])
        counts = b.block_counts()
        progressed = False
        for eid in b.active_host_edges():
            u, v = host.endpoints(eid)
            if (u in part0) == (v in part0):
                continue
            if counts[u] == 0 or counts[v] == 0:
                continue
            b2 = b.minus_host_edge(eid)
            q2 = cur.merge(cur.part_of[u], cur.part_of[v])
            if positive(b2, q2):
                b = b2
                cur = q2
                forced.append(eid)
                progressed = True
                break
        if not progressed:
            return None  # all candidates tested negative; possibly unlucky
    removed = frozenset(active_edge_ids(g)) - frozenset(b.active_host_edges())
    residual = g.without_edges(removed) if removed else g
    rest = find_f_factor(residual, b.block_counts())
    if rest is None:
        return None
    h = FactorSubgraph(host, rest.edge_ids | frozenset(forced))
    report = verify_f_factor(g, spec, h, q)
    assert report.degrees_match and report.connects_partition, (
        "search invariant broken: assembled factor must connect the partition"
    )
    return h
