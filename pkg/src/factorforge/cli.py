"""Command-line front end: solve, verify, generate, bench.

Exit codes: 0 a factor was found (or verification passed), 1 provably none
exists (or verification failed), 2 usage or input error, 3 the randomized
backend found nothing (not a proof of absence).

FACTORFORGE_SEED seeds any command that takes --seed when the flag is
absent.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from typing import Optional

from . import __version__
from .errors import FactorForgeError
from .fileio import (
    emit_factor,
    emit_instance,
    load_instance,
    parse_factor,
    parse_partition,
)
from .generate import (
    Instance,
    complete_graph,
    cube_graph,
    cycle_graph,
    gen_hamiltonian_reduction,
    gen_planted,
    gen_random,
    petersen_graph,
    two_disjoint_triangles,
    two_triangles_plus_matching,
)
from .algebraic import pc_randomized
from .connector_det import pc_deterministic
from .solver import SolverConfig, _auto_backend, connected_f_factor
from .graphs import verify_f_factor

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2
EXIT_UNCERTAIN_NO = 3

NAMED_GRAPHS = {
    "c5": lambda: cycle_graph(5),
    "c6": lambda: cycle_graph(6),
    "c7": lambda: cycle_graph(7),
    "c8": lambda: cycle_graph(8),
    "k4": lambda: complete_graph(4),
    "k5": lambda: complete_graph(5),
    "cube": cube_graph,
    "petersen": petersen_graph,
    "disjoint-triangles": two_disjoint_triangles,
    "triangles-matching": two_triangles_plus_matching,
}


def _env_seed() -> Optional[int]:
    raw = os.environ.get("FACTORFORGE_SEED")
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise FactorForgeError("FACTORFORGE_SEED must be an integer, got %r" % raw)


def _seed_of(args) -> Optional[int]:
    return args.seed if args.seed is not None else _env_seed()


def _read_instance(path: str) -> Instance:
    if path == "-":
        return load_instance(sys.stdin)
    return load_instance(path)


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# solve


def _cmd_solve(args) -> int:
    inst = _read_instance(args.instance)
    seed = _seed_of(args)
    if args.pc:
        return _solve_pc(args, inst, seed)
    cfg = SolverConfig(
        backend=args.backend,
        seed=seed,
        retries=args.retries,
        round_limit=args.round_limit,
    )
    result = connected_f_factor(inst.graph, inst.demand, cfg)
    trace = result.trace
    if args.trace:
        _write_text(args.trace, json.dumps(trace.as_dict(), indent=2) + "\n")
    if result.found:
        if args.out:
            _write_text(args.out, emit_factor(result.factor))
        if not args.quiet:
            print(
                "yes n=%d m=%d rounds=%d backend=%s"
                % (inst.n, inst.m, len(trace.rounds), trace.backend)
            )
        return EXIT_YES
    if not args.quiet:
        certainty = "proved" if result.certain else "not found (randomized)"
        print("no [%s] outcome=%s" % (certainty, trace.outcome))
    return EXIT_NO if result.certain else EXIT_UNCERTAIN_NO


def _solve_pc(args, inst: Instance, seed: Optional[int]) -> int:
    partition = inst.partition
    if args.partition:
        with open(args.partition, "r", encoding="utf-8") as fh:
            partition = parse_partition(fh.read(), inst.n)
    if partition is None:
        raise FactorForgeError(
            "--pc needs a partition (q lines in the instance or --partition)"
        )
    backend = args.backend
    if backend == "auto":
        backend = _auto_backend(inst.n, max(1, inst.demand.minimum))
    if backend == "det":
        factor = pc_deterministic(inst.graph, inst.demand, partition)
        certain = True
    else:
        factor = None
        for _ in range(args.retries + 1):
            factor = pc_randomized(inst.graph, inst.demand, partition, seed=seed)
            if factor is not None or seed is None:
                break
            seed += 1
        certain = False
    if factor is not None:
        if args.out:
            _write_text(args.out, emit_factor(factor))
        if not args.quiet:
            print("yes parts=%d backend=%s" % (len(partition), backend))
        return EXIT_YES
    if not args.quiet:
        print("no [%s]" % ("proved" if certain else "not found (randomized)"))
    return EXIT_NO if certain else EXIT_UNCERTAIN_NO


# ---------------------------------------------------------------------------
# verify


def _cmd_verify(args) -> int:
    inst = _read_instance(args.instance)
    with open(args.factor, "r", encoding="utf-8") as fh:
        factor = parse_factor(fh.read(), inst.graph)
    partition = inst.partition
    if args.partition:
        with open(args.partition, "r", encoding="utf-8") as fh:
            partition = parse_partition(fh.read(), inst.n)
    if args.check == "pc" and partition is None:
        raise FactorForgeError("--check pc needs a partition")
    report = verify_f_factor(inst.graph, inst.demand, factor, partition)
    if args.check == "degrees":
        ok = report.degrees_match
    elif args.check == "pc":
        ok = report.degrees_match and report.connects_partition
    else:
        ok = report.ok(require_connected=True)
    if not args.quiet:
        print(
            "%s degrees=%s connected=%s%s"
            % (
                "valid" if ok else "invalid",
                report.degrees_match,
                report.is_connected,
                ""
                if partition is None
                else " connects-partition=%s" % report.connects_partition,
            )
        )
        if not report.degrees_match:
            print("bad vertices: %s" % (report.bad_vertices[:10],))
    return EXIT_YES if ok else EXIT_NO


# ---------------------------------------------------------------------------
# generate


def _cmd_generate(args) -> int:
    seed = _seed_of(args)
    if seed is None:
        seed = 0
    if args.family == "random":
        if args.m is None:
            raise FactorForgeError("--family random needs --m")
        inst = gen_random(args.n, args.m, seed=seed, f_max=args.f_max)
    elif args.family == "planted":
        inst = gen_planted(
            args.n,
            extra_edge_rate=args.extra_rate,
            seed=seed,
            min_degree=args.min_degree,
        )
    elif args.family == "named":
        if args.graph not in NAMED_GRAPHS:
            raise FactorForgeError(
                "unknown graph %r; choices: %s"
                % (args.graph, ", ".join(sorted(NAMED_GRAPHS)))
            )
        g = NAMED_GRAPHS[args.graph]()
        f = args.uniform_demand
        if f is None:
            raise FactorForgeError("--family named needs --uniform-demand")
        inst = Instance(graph=g, demand=_uniform_demand(g, f), note=args.graph)
    elif args.family == "clique-reduction":
        if args.graph not in NAMED_GRAPHS:
            raise FactorForgeError(
                "unknown graph %r; choices: %s"
                % (args.graph, ", ".join(sorted(NAMED_GRAPHS)))
            )
        base = NAMED_GRAPHS[args.graph]()
        inst = gen_hamiltonian_reduction(base, args.clique_size)
    else:  # pragma: no cover - argparse restricts choices
        raise FactorForgeError("unknown family %r" % args.family)
    comments = ["generated by factorforge %s" % __version__, "seed %d" % seed]
    _write_text(args.out, emit_instance(inst, comments))
    return EXIT_YES


def _uniform_demand(g, f: int):
    from .graphs import DegreeSpec

    return DegreeSpec.uniform(g.n, f)


# ---------------------------------------------------------------------------
# bench


def _cmd_bench(args) -> int:
    seed = _seed_of(args)
    rows = []
    for path in args.instances:
        inst = _read_instance(path)
        for rep in range(args.repeat):
            run_seed = None if seed is None else seed + rep
            cfg = SolverConfig(backend=args.backend, seed=run_seed)
            t0 = time.perf_counter()
            result = connected_f_factor(inst.graph, inst.demand, cfg)
            wall_ms = (time.perf_counter() - t0) * 1000.0
            trace = result.trace
            if result.found:
                answer = "yes"
            elif result.certain:
                answer = "no"
            else:
                answer = "unknown"
            rows.append(
                {
                    "instance": path,
                    "n": inst.n,
                    "m": inst.m,
                    "min_f": inst.demand.minimum,
                    "algorithm": trace.backend,
                    "answer": answer,
                    "rounds": len(trace.rounds),
                    "max_parts": max(trace.part_counts() or [1]),
                    "wall_ms": "%.3f" % wall_ms,
                    "seed": "" if run_seed is None else run_seed,
                }
            )
    fieldnames = [
        "instance",
        "n",
        "m",
        "min_f",
        "algorithm",
        "answer",
        "rounds",
        "max_parts",
        "wall_ms",
        "seed",
    ]
    if args.out and args.out != "-":
        fh = open(args.out, "w", encoding="utf-8", newline="")
    else:
        fh = sys.stdout
    try:
        writer = csv.DictWriter(fh, fieldnames=fieldnames)
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_YES


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="factorforge",
        description="connected f-factor and partition-connector solver",
    )
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("solve", help="find a connected f-factor")
    ps.add_argument("instance", help="instance file, or - for stdin")
    ps.add_argument(
        "--backend",
        "--algorithm",
        choices=("auto", "det", "rand"),
        default="auto",
        help="partition-connector backend (--algorithm is an alias)",
    )
    ps.add_argument("--seed", type=int, default=None)
    ps.add_argument("--retries", type=int, default=0)
    ps.add_argument("--round-limit", type=int, default=None)
    ps.add_argument("--pc", action="store_true", help="solve the partition-connector problem instead")
    ps.add_argument("--partition", default=None, help="partition file of q lines (overrides instance q lines)")
    ps.add_argument("--out", default=None, help="write the factor here")
    ps.add_argument("--trace", default=None, help="write the JSON round trace here")
    ps.add_argument("--quiet", action="store_true")
    ps.set_defaults(func=_cmd_solve)

    pv = sub.add_parser("verify", help="check a factor file against an instance")
    pv.add_argument("instance")
    pv.add_argument("factor")
    pv.add_argument("--partition", default=None)
    pv.add_argument("--check", choices=("degrees", "connected", "pc"), default="connected")
    pv.add_argument("--quiet", action="store_true")
    pv.set_defaults(func=_cmd_verify)

    pg = sub.add_parser("generate", help="write an instance file")
    pg.add_argument("--family", choices=("random", "planted", "named", "clique-reduction"), required=True)
    pg.add_argument("--n", type=int, default=12)
    pg.add_argument("--m", type=int, default=None)
    pg.add_argument("--f-max", type=int, default=None)
    pg.add_argument("--extra-rate", type=float, default=0.05)
    pg.add_argument("--min-degree", type=int, default=2)
    pg.add_argument("--graph", default=None, help="named base graph")
    pg.add_argument("--clique-size", type=int, default=2)
    pg.add_argument("--uniform-demand", type=int, default=None)
    pg.add_argument("--seed", type=int, default=None)
    pg.add_argument("--out", default=None, help="output path (default stdout)")
    pg.set_defaults(func=_cmd_generate)

    pb = sub.add_parser("bench", help="time the solver over instance files, CSV out")
    pb.add_argument("instances", nargs="+")
    pb.add_argument(
        "--backend",
        "--algorithm",
        choices=("auto", "det", "rand"),
        default="auto",
    )
    pb.add_argument("--seed", type=int, default=None)
    pb.add_argument("--repeat", type=int, default=1)
    pb.add_argument("--out", default=None)
    pb.set_defaults(func=_cmd_bench)
    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FactorForgeError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
