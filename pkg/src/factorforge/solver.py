"""Connected f-factor search by component refinement.

Start from any f-factor.  Repeatedly split the working partition into the
factor's components within each part; if nothing splits, every part is
internally connected and the factor also connects the parts, so it is
connected and we are done.  Otherwise ask a partition-connector backend for
a factor connecting the refined partition and repair the working factor
toward it along minimal alternating circuits, which preserves the invariant
while touching few edges per vertex.

With minimum demand n/g, every factor has at most ceil(g) components per
part, so both the part counts and the number of rounds stay below
ceil(g) + 1; the bound is guaranteed once n >= 6 g^4 and advisory below
that.  assert_sequence_bounds checks a finished trace against it.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .algebraic import pc_randomized
from .circuits import repair_close_factor
from .connector_det import pc_deterministic
from .blowup import find_f_factor
from .graphs import (
    FactorSubgraph,
    Partition,
    as_demand,
    host_of,
    refine_by_components,
    verify_f_factor,
)

BACKENDS = ("auto", "det", "rand")


@dataclass
class SolverConfig:
    """Driver knobs.

    backend: "det" enumerates quotient trees (exact NO), "rand" uses the
    algebraic test (NO may be a false negative), "auto" picks "rand" when
    ceil(n / min f) <= ceil(log2 n) + 1 and "det" otherwise.
    retries: extra randomized connector attempts before accepting a NO.
    assertion_level: 0 trust, 1 verify the final factor, 2 also verify each
    round's connector.
    initial_factor: override for the first factor (testing hook).
    """

    backend: str = "auto"
    seed: Optional[int] = None
    round_limit: Optional[int] = None
    retries: int = 0
    assertion_level: int = 1
    initial_factor: Optional[Callable] = None

    def __post_init__(self) -> None:
        if self.backend not in BACKENDS:
            raise ValueError("backend must be one of %r" % (BACKENDS,))
        if self.retries < 0:
            raise ValueError("retries must be >= 0")
        if self.assertion_level not in (0, 1, 2):
            raise ValueError("assertion_level must be 0, 1 or 2")
        if self.round_limit is not None and self.round_limit < 1:
            raise ValueError("round_limit must be >= 1")


@dataclass(frozen=True)
class TraceRound:
    round: int
    num_parts: int
    part_sizes: tuple[int, ...]
    refined: bool
    pc_backend: Optional[str]
    pc_found: Optional[bool]
    wall_ms: float

    def as_dict(self) -> dict:
        return {
            "round": self.round,
            "num_parts": self.num_parts,
            "part_sizes": list(self.part_sizes),
            "refined": self.refined,
            "pc_backend": self.pc_backend,
            "pc_found": self.pc_found,
            "wall_ms": self.wall_ms,
        }


@dataclass
class SequenceTrace:
    n: int
    min_demand: int
    backend: str
    rounds: list = field(default_factory=list)
    outcome: str = ""
    certain: bool = True

    def part_counts(self) -> list[int]:
        return [r.num_parts for r in self.rounds]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "min_demand": self.min_demand,
            "backend": self.backend,
            "outcome": self.outcome,
            "certain": self.certain,
            "rounds": [r.as_dict() for r in self.rounds],
        }


@dataclass
class SolveResult:
    factor: Optional[FactorSubgraph]
    trace: SequenceTrace

    @property
    def found(self) -> bool:
        return self.factor is not None

    @property
    def certain(self) -> bool:
        return self.trace.certain


def _auto_backend(n: int, min_demand: int) -> str:
    parts_bound = -(-n // min_demand)  # ceil(n / min f)
    log_bound = (n - 1).bit_length() + 1  # ceil(log2 n) + 1 for n >= 2
    return "rand" if parts_bound <= log_bound else "det"


def connected_f_factor(g, f, config: Optional[SolverConfig] = None) -> SolveResult:
    """A connected f-factor of g with a round-by-round trace, or None.

    A None with trace.certain is a proof of impossibility; without it, only
    the randomized connector declined (exceedingly unlikely to be wrong at
    the instance field size, and retries shrink it further).
    """
    cfg = config or SolverConfig()
    spec = as_demand(g, f)
    n = g.n
    host = host_of(g)
    trace = SequenceTrace(n=n, min_demand=spec.minimum, backend="none")
    if n == 1:
        # the only demand within bounds is f(0) = 0; the single vertex is
        # trivially a connected spanning subgraph
        trace.outcome = "connected"
        return SolveResult(FactorSubgraph(host, frozenset()), trace)
    if spec.minimum == 0:
        # a vertex of demand zero is isolated in any factor, so no factor
        # on two or more vertices is connected
        trace.outcome = "isolated-demand"
        return SolveResult(None, trace)

    backend = cfg.backend
    if backend == "auto":
        backend = _auto_backend(n, spec.minimum)
    trace.backend = backend
    rng = random.Random(cfg.seed)

    finder = cfg.initial_factor or find_f_factor
    h = finder(g, spec)
    if h is None:
        trace.outcome = "no-factor"
        return SolveResult(None, trace)

    prev_q = Partition.trivial(n)
    limit = cfg.round_limit if cfg.round_limit is not None else n
    for rnd in range(1, limit + 1):
        t0 = time.perf_counter()
        q2, unchanged = refine_by_components(h, prev_q)
        if unchanged:
            trace.rounds.append(
                TraceRound(
                    round=rnd,
                    num_parts=len(q2),
                    part_sizes=tuple(len(p) for p in q2.parts),
                    refined=False,
                    pc_backend=None,
                    pc_found=None,
                    wall_ms=(time.perf_counter() - t0) * 1000.0,
                )
            )
            if cfg.assertion_level >= 1:
                report = verify_f_factor(g, spec, h)
                assert report.ok(require_connected=True), (
                    "driver invariant broken: stable refinement must mean "
                    "a connected factor"
                )
            trace.outcome = "connected"
            return SolveResult(h, trace)

        if backend == "det":
            h2 = pc_deterministic(g, spec, q2)
        else:
            h2 = None
            for _ in range(cfg.retries + 1):
                h2 = pc_randomized(g, spec, q2, seed=rng.randrange(1 << 63))
                if h2 is not None:
                    break
        trace.rounds.append(
            TraceRound(
                round=rnd,
                num_parts=len(q2),
                part_sizes=tuple(len(p) for p in q2.parts),
                refined=True,
                pc_backend=backend,
                pc_found=h2 is not None,
                wall_ms=(time.perf_counter() - t0) * 1000.0,
            )
        )
        if h2 is None:
            # no factor connects q2, hence none is connected; for the
            # randomized backend that conclusion might be a false negative
            trace.outcome = "no-connector"
            trace.certain = backend == "det"
            return SolveResult(None, trace)
        if cfg.assertion_level >= 2:
            rep = verify_f_factor(g, spec, h2, q2)
            assert rep.degrees_match and rep.connects_partition
        h = repair_close_factor(h, prev_q, h2, q2)
        prev_q = q2

    trace.outcome = "round-limit"
    trace.certain = False
    return SolveResult(None, trace)


def assert_sequence_bounds(trace: SequenceTrace) -> list[str]:
    """Check a trace against the refinement bounds.

    With g = n / min f, part counts and round count must stay at most
    ceil(g) + 1 and part counts must strictly grow across refining rounds.
    Violations raise AssertionError when n >= 6 g^4 (equivalently
    min_f^4 >= 6 n^3) and are returned as advisory strings below that.
    """
    n, mf = trace.n, trace.min_demand
    if mf <= 0 or not trace.rounds:
        return []
    bound = -(-n // mf) + 1
    strict = mf**4 >= 6 * n**3
    problems = []
    if len(trace.rounds) > bound:
        problems.append(
            "took %d rounds, bound is %d" % (len(trace.rounds), bound)
        )
    for r in trace.rounds:
        if r.num_parts > bound:
            problems.append(
                "round %d has %d parts, bound is %d" % (r.round, r.num_parts, bound)
            )
    for prev, cur in zip(trace.rounds, trace.rounds[1:]):
        if cur.refined and cur.num_parts <= prev.num_parts:
            problems.append(
                "round %d did not grow the partition (%d -> %d)"
                % (cur.round, prev.num_parts, cur.num_parts)
            )
    if strict and problems:
        raise AssertionError("; ".join(problems))
    return problems
