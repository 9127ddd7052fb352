"""Alternating-circuit machinery: colored symmetric differences, minimal
alternating circuit decompositions, degree-preserving switches, and the
factor repair step built from them.

A colored (multi)graph is *balanced* when every vertex has equal red and
blue degree.  Every connected balanced component admits a closed trail with
alternating colors, and switching a factor H along such a trail whose red
edges lie in H and blue edges outside H preserves all degrees.  A circuit is
*minimal* when no vertex carries more than two of its red edges; switching
one minimal circuit therefore removes at most two H-edges at any vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    InvalidSwitchError,
    NotAlternatingError,
    RepairContractError,
)
from .graphs import (
    FactorSubgraph,
    Partition,
    components,
    quotient,
    refine_by_components,
)

RED = "red"
BLUE = "blue"


@dataclass(frozen=True)
class ColoredEdge:
    u: int
    v: int
    color: str
    eid: int

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


class ColoredMultigraph:
    """Edges colored red/blue over a vertex id space.  Edge ids must be
    unique; when built from two factors they are the host edge ids."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[ColoredEdge]):
        self.n = n
        es = tuple(edges)
        seen = set()
        for e in es:
            if e.color not in (RED, BLUE):
                raise ValueError("bad color %r" % e.color)
            if not (0 <= e.u < n and 0 <= e.v < n) or e.u == e.v:
                raise ValueError("bad edge endpoints (%d, %d)" % (e.u, e.v))
            if e.eid in seen:
                raise ValueError("duplicate edge id %d" % e.eid)
            seen.add(e.eid)
        self.edges = es
        adj: list[list[int]] = [[] for _ in range(n)]
        for k, e in enumerate(es):
            adj[e.u].append(k)
            adj[e.v].append(k)
        self._adj = adj

    @property
    def m(self) -> int:
        return len(self.edges)

    def color_degree(self, v: int, color: str) -> int:
        return sum(1 for k in self._adj[v] if self.edges[k].color == color)

    def is_balanced(self) -> bool:
        """Red degree equals blue degree everywhere; a balanced colored graph
        is exactly a disjoint union of alternating circuits."""
        return all(
            self.color_degree(v, RED) == self.color_degree(v, BLUE)
            for v in range(self.n)
        )

    def red_ids(self) -> frozenset[int]:
        return frozenset(e.eid for e in self.edges if e.color == RED)

    def blue_ids(self) -> frozenset[int]:
        return frozenset(e.eid for e in self.edges if e.color == BLUE)

    def __repr__(self) -> str:
        return "ColoredMultigraph(n=%d, red=%d, blue=%d)" % (
            self.n,
            len(self.red_ids()),
            len(self.blue_ids()),
        )


@dataclass(frozen=True)
class MinimalAlternatingCircuit:
    """A closed alternating trail with at most two red edges per vertex,
    stored in traversal order as (edge, from, to) steps."""

    steps: tuple[tuple[ColoredEdge, int, int], ...]

    @property
    def edges(self) -> tuple[ColoredEdge, ...]:
        return tuple(e for e, _, _ in self.steps)

    @property
    def edge_ids(self) -> frozenset[int]:
        return frozenset(e.eid for e in self.edges)

    def ids_of(self, color: str) -> frozenset[int]:
        return frozenset(e.eid for e in self.edges if e.color == color)

    def __len__(self) -> int:
        return len(self.steps)

    def is_valid(self) -> bool:
        """Closed, alternating, and minimal (at most 2 same-color edges per
        vertex)."""
        steps = self.steps
        if not steps:
            return False
        for (e, _, to), (e2, frm2, _) in zip(steps, steps[1:] + steps[:1]):
            if to != frm2 or e.color == e2.color:
                return False
        reds: dict[int, int] = {}
        for e, _, _ in steps:
            if e.color == RED:
                for x in (e.u, e.v):
                    reds[x] = reds.get(x, 0) + 1
                    if reds[x] > 2:
                        return False
        return True


def color_symmetric_difference(
    h: FactorSubgraph, h2: FactorSubgraph
) -> ColoredMultigraph:
    """E(h) xor E(h2), with h-only edges red and h2-only edges blue.  When
    the two factors have identical degrees the result is balanced (asserted),
    hence a disjoint union of alternating circuits."""
    if h.host != h2.host:
        raise ValueError("factors live on different hosts")
    host = h.host
    edges = []
    for eid in sorted(h.edge_ids ^ h2.edge_ids):
        u, v = host.endpoints(eid)
        color = RED if eid in h.edge_ids else BLUE
        edges.append(ColoredEdge(u, v, color, eid))
    a = ColoredMultigraph(host.n, edges)
    if h.degrees == h2.degrees:
        assert a.is_balanced(), "equal degrees must give a balanced difference"
    return a


# ---------------------------------------------------------------------------
# decomposition


def _closed_alternating_trail(
    a: ColoredMultigraph, used: list[bool], start_k: int
) -> list[tuple[int, int, int]]:
    """Closed alternating trail through edge start_k in the unused part of a,
    as (edge index, from, to) steps.  The unused part must be balanced; then
    the walk can always continue except at the start vertex with the closing
    color, so it terminates closed."""
    e0 = a.edges[start_k]
    x = min(e0.u, e0.v)
    trail = [(start_k, x, e0.other(x))]
    used[start_k] = True
    cur = e0.other(x)
    cur_color = e0.color
    first_color = e0.color
    while not (cur == x and cur_color != first_color):
        nxt = None
        for k in a._adj[cur]:
            if not used[k] and a.edges[k].color != cur_color:
                nxt = k
                break
        if nxt is None:
            raise NotAlternatingError(
                "alternating walk stuck at vertex %d; input is not a union "
                "of alternating circuits" % cur
            )
        e = a.edges[nxt]
        used[nxt] = True
        trail.append((nxt, cur, e.other(cur)))
        cur = e.other(cur)
        cur_color = e.color
    return trail


def _shrink_to_minimal(
    a: ColoredMultigraph,
    used: list[bool],
    trail: list[tuple[int, int, int]],
    protect_k: int,
) -> list[tuple[int, int, int]]:
    """Splice closed sub-trails out of `trail` until every vertex is visited
    at most twice, never discarding edge protect_k.  Spliced-out edges return
    to the unused pool."""
    while True:
        arrivals: dict[int, list[int]] = {}
        for pos, (k, _, to) in enumerate(trail):
            arrivals.setdefault(to, []).append(pos)
        over = sorted(v for v, lst in arrivals.items() if len(lst) >= 3)
        if not over:
            return trail
        v = over[0]
        lst = arrivals[v]
        pair: Optional[tuple[int, int]] = None
        for i in range(len(lst)):
            for j in range(i + 1, len(lst)):
                if a.edges[trail[lst[i]][0]].color == a.edges[trail[lst[j]][0]].color:
                    pair = (lst[i], lst[j])
                    break
            if pair:
                break
        assert pair is not None, "three arrivals always contain a same-color pair"
        pi, pj = pair
        # the cyclic segments (pi..pj] and (pj..pi] both form closed
        # alternating sub-trails at v; drop whichever misses the protected edge
        seg_inner = trail[pi + 1 : pj + 1]
        if any(k == protect_k for k, _, _ in seg_inner):
            drop = trail[pj + 1 :] + trail[: pi + 1]
            keep = seg_inner
        else:
            drop = seg_inner
            keep = trail[: pi + 1] + trail[pj + 1 :]
        for k, _, _ in drop:
            used[k] = False
        trail = keep


def decompose_minimal_alternating(
    a: ColoredMultigraph, s_edge_ids: Iterable[int]
) -> list[MinimalAlternatingCircuit]:
    """Edge-disjoint minimal alternating circuits covering the edge set S.

    Guarantees (checked before returning): circuits are pairwise
    edge-disjoint, every one contains an S-edge, every S-edge is in exactly
    one, every circuit has at most two red edges per vertex, and there are at
    most |S| circuits.  Raises NotAlternatingError when a is not balanced.
    """
    s_ids = frozenset(s_edge_ids)
    by_id = {e.eid: k for k, e in enumerate(a.edges)}
    if not s_ids <= set(by_id):
        raise ValueError("S contains ids outside the colored graph")
    if not a.is_balanced():
        raise NotAlternatingError(
            "red and blue degrees differ; not a union of alternating circuits"
        )
    used = [False] * a.m
    covered: set[int] = set()
    circuits = []
    for sid in sorted(s_ids):
        if sid in covered:
            continue
        k0 = by_id[sid]
        trail = _closed_alternating_trail(a, used, k0)
        trail = _shrink_to_minimal(a, used, trail, k0)
        circ = MinimalAlternatingCircuit(
            steps=tuple((a.edges[k], frm, to) for k, frm, to in trail)
        )
        circuits.append(circ)
        covered.update(circ.edge_ids & s_ids)
    _validate_decomposition(a, s_ids, circuits)
    return circuits


def _validate_decomposition(
    a: ColoredMultigraph,
    s_ids: frozenset[int],
    circuits: Sequence[MinimalAlternatingCircuit],
) -> None:
    taken: set[int] = set()
    for c in circuits:
        assert c.is_valid(), "emitted circuit must be minimal alternating"
        ids = c.edge_ids
        assert not (ids & taken), "circuits must be edge-disjoint"
        taken |= ids
        assert ids & s_ids, "every circuit must cover part of S"
    assert s_ids <= taken, "all of S must be covered"
    assert len(circuits) <= len(s_ids), "at most |S| circuits"


# ---------------------------------------------------------------------------
# switching


def _as_colored(host, m) -> ColoredMultigraph:
    if isinstance(m, ColoredMultigraph):
        return m
    edges = []
    for circ in m:
        edges.extend(circ.edges)
    return ColoredMultigraph(host.n, edges)


def switch(h: FactorSubgraph, m) -> FactorSubgraph:
    """Exchange the red edges of m (all inside h) for its blue edges (all
    outside h).  m is a ColoredMultigraph or an iterable of circuits from
    decompose_minimal_alternating; it must be balanced, so every degree is
    preserved (asserted)."""
    host = h.host
    cm = _as_colored(host, m)
    red, blue = cm.red_ids(), cm.blue_ids()
    for eid in red | blue:
        if not (0 <= eid < host.m):
            raise InvalidSwitchError("edge id %d outside host" % eid)
    for e in cm.edges:
        u, v = host.endpoints(e.eid)
        if (u, v) != ((e.u, e.v) if e.u < e.v else (e.v, e.u)):
            raise InvalidSwitchError("edge id %d endpoints disagree with host" % e.eid)
    if not red <= h.edge_ids:
        raise InvalidSwitchError("red edges must lie inside the factor")
    if blue & h.edge_ids:
        raise InvalidSwitchError("blue edges must lie outside the factor")
    if not cm.is_balanced():
        raise InvalidSwitchError("switch set must be balanced at every vertex")
    result = FactorSubgraph(host, (h.edge_ids - red) | blue)
    assert result.degrees == h.degrees, "switching must preserve degrees"
    return result


# ---------------------------------------------------------------------------
# repair


def _quotient_spanning_tree(h2: FactorSubgraph, q2: Partition) -> list[int]:
    """Edge ids of a BFS spanning tree of h2/q2, rooted at part 0, scanning
    multi-edges in ascending origin edge id."""
    qg = quotient(h2, q2)
    k = len(q2)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(k)]
    for i, j, eid in qg.multi_edges:
        adj[i].append((eid, j))
        adj[j].append((eid, i))
    for lst in adj:
        lst.sort()
    seen = [False] * k
    seen[0] = True
    order = [0]
    head = 0
    tree: list[int] = []
    while head < len(order):
        p = order[head]
        head += 1
        for eid, q in adj[p]:
            if not seen[q]:
                seen[q] = True
                order.append(q)
                tree.append(eid)
    if len(tree) != k - 1:
        raise RepairContractError("connecting factor's quotient is not connected")
    return tree


def repair_close_factor(
    h: FactorSubgraph,
    q: Partition,
    h2: FactorSubgraph,
    q2: Partition,
) -> FactorSubgraph:
    """Pull h toward h2's quotient connectivity while touching few edges.

    h and h2 must have identical degrees, q2 must refine q, and h2/q2 must
    be connected.  The result contains a spanning tree of the quotient (so it
    connects q2), has h's degrees, and at every vertex loses at most
    2(|q2|-1) incident h-edges inside any fixed part of q2.
    """
    if h.host != h2.host:
        raise RepairContractError("factors live on different hosts")
    if h.degrees != h2.degrees:
        raise RepairContractError("factor degrees differ; repair undefined")
    if not q2.refines(q):
        raise RepairContractError("q2 must refine q")
    tree = _quotient_spanning_tree(h2, q2)  # raises if h2/q2 disconnected
    s_ids = frozenset(tree) - h.edge_ids
    diff = color_symmetric_difference(h, h2)
    circuits = decompose_minimal_alternating(diff, s_ids)
    result = switch(h, circuits)

    # spanning tree edges now all present: h-side ones were never touched,
    # the rest were blue S-edges, covered and switched in
    assert frozenset(tree) <= result.edge_ids, "tree must survive the switch"
    assert quotient(result, q2).is_connected(), "result must connect q2"
    bound = 2 * (len(q2) - 1)
    for v in range(h.host.n):
        before: dict[int, int] = {}
        after: dict[int, int] = {}
        for w, eid in h.host.adj(v):
            p = q2.part_of[w]
            if eid in h.edge_ids:
                before[p] = before.get(p, 0) + 1
            if eid in result.edge_ids:
                after[p] = after.get(p, 0) + 1
        for p, cnt in before.items():
            assert after.get(p, 0) >= cnt - bound, (
                "per-part degree dropped more than the switch bound allows"
            )
    return result
