"""Plain-text instance and factor files.

Instance format, one record per line, 0-based vertex ids:

    c free-form comment
    c !key value            structured annotation (answer, note, seed, ...)
    p cff <n> <m>           header, first non-comment line, exactly once
    v <id> <demand>         demand of a vertex (omitted vertices demand 0)
    e <u> <v>               an edge; exactly m of these
    q <part> <id>           optional partition; all-or-none vertex coverage

Factor files list the chosen edges as `f <u> <v>` lines plus comments.
Emitters write canonical order (vertices ascending, edges in host order),
so parse(emit(x)) round-trips exactly.
"""

from __future__ import annotations

from typing import Iterable, Optional, TextIO, Union

from .errors import FormatError
from .generate import Instance
from .graphs import DegreeSpec, FactorSubgraph, Graph, Partition

_ANSWER_WORDS = {"yes": True, "no": False, "unknown": None}


def _answer_word(answer: Optional[bool]) -> str:
    return {True: "yes", False: "no", None: "unknown"}[answer]


def _split_annotation(body: str) -> tuple[str, str]:
    head, _, rest = body.partition(" ")
    return head, rest.strip()


def parse_instance(text: str) -> Instance:
    """Parse instance text.  Raises FormatError on malformed input."""
    n = m = None
    demands: dict[int, int] = {}
    edges: list[tuple[int, int]] = []
    part_assign: dict[int, int] = {}
    notes: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        kind, _, body = line.partition(" ")
        body = body.strip()
        try:
            if kind == "c":
                if body.startswith("!"):
                    key, value = _split_annotation(body[1:])
                    if key:
                        notes[key] = value
                continue
            if kind == "p":
                if n is not None:
                    raise FormatError("duplicate p line")
                tag, ns, ms = body.split()
                if tag != "cff":
                    raise FormatError("unknown problem tag %r" % tag)
                n, m = int(ns), int(ms)
                if n < 1 or m < 0:
                    raise FormatError("bad sizes in p line")
                continue
            if n is None:
                raise FormatError("%s line before p line" % kind)
            if kind == "v":
                vs, fs = body.split()
                v, f = int(vs), int(fs)
                if not 0 <= v < n:
                    raise FormatError("vertex %d out of range" % v)
                if v in demands:
                    raise FormatError("duplicate demand for vertex %d" % v)
                demands[v] = f
            elif kind == "e":
                us, vs = body.split()
                edges.append((int(us), int(vs)))
            elif kind == "q":
                ps, vs = body.split()
                p, v = int(ps), int(vs)
                if not 0 <= v < n:
                    raise FormatError("vertex %d out of range" % v)
                if v in part_assign:
                    raise FormatError("vertex %d assigned to two parts" % v)
                part_assign[v] = p
            else:
                raise FormatError("unknown line kind %r" % kind)
        except FormatError:
            raise FormatError("line %d: %s" % (lineno, line)) from None
        except ValueError:
            raise FormatError("line %d: cannot parse %r" % (lineno, line)) from None
    if n is None:
        raise FormatError("missing p line")
    if len(edges) != m:
        raise FormatError("p line promises %d edges, file has %d" % (m, len(edges)))
    try:
        graph = Graph(n, edges)
        demand = DegreeSpec([demands.get(v, 0) for v in range(n)])
    except (ValueError, KeyError) as exc:
        raise FormatError(str(exc)) from None
    partition = None
    if part_assign:
        if len(part_assign) != n:
            missing = sorted(set(range(n)) - set(part_assign))
            raise FormatError(
                "partition must cover every vertex; missing %r" % missing[:5]
            )
        labels = sorted(set(part_assign.values()))
        groups = [
            [v for v in range(n) if part_assign[v] == lab] for lab in labels
        ]
        partition = Partition(n, groups)
    answer = None
    if "answer" in notes:
        word = notes["answer"].lower()
        if word not in _ANSWER_WORDS:
            raise FormatError("bad answer annotation %r" % notes["answer"])
        answer = _ANSWER_WORDS[word]
    return Instance(
        graph=graph,
        demand=demand,
        partition=partition,
        answer=answer,
        note=notes.get("note", ""),
    )


def emit_instance(inst: Instance, comments: Iterable[str] = ()) -> str:
    """Canonical text for an instance; inverse of parse_instance."""
    g = inst.graph
    out = []
    for line in comments:
        out.append("c %s" % line)
    if inst.answer is not None or inst.note:
        out.append("c !answer %s" % _answer_word(inst.answer))
    if inst.note:
        out.append("c !note %s" % inst.note)
    out.append("p cff %d %d" % (g.n, g.m))
    for v in range(g.n):
        if inst.demand[v]:
            out.append("v %d %d" % (v, inst.demand[v]))
    for u, v in g.edges:
        out.append("e %d %d" % (u, v))
    if inst.partition is not None:
        for p, part in enumerate(inst.partition.parts):
            for v in part:
                out.append("q %d %d" % (p, v))
    return "\n".join(out) + "\n"


def parse_partition(text: str, n: int) -> Partition:
    """Parse a standalone partition file of `q <part> <id>` lines."""
    part_assign: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        kind, _, body = line.partition(" ")
        if kind != "q":
            raise FormatError("line %d: unknown line kind %r" % (lineno, kind))
        try:
            ps, vs = body.split()
            p, v = int(ps), int(vs)
        except ValueError:
            raise FormatError("line %d: cannot parse %r" % (lineno, line)) from None
        if not 0 <= v < n:
            raise FormatError("line %d: vertex %d out of range" % (lineno, v))
        if v in part_assign:
            raise FormatError("line %d: vertex %d assigned twice" % (lineno, v))
        part_assign[v] = p
    missing = sorted(set(range(n)) - set(part_assign))
    if missing:
        raise FormatError("partition must cover every vertex; missing %r" % missing[:5])
    labels = sorted(set(part_assign.values()))
    groups = [[v for v in range(n) if part_assign[v] == lab] for lab in labels]
    return Partition(n, groups)


def parse_factor(text: str, host: Graph) -> FactorSubgraph:
    """Parse `f <u> <v>` lines against a host graph."""
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        kind, _, body = line.partition(" ")
        if kind != "f":
            raise FormatError("line %d: unknown line kind %r" % (lineno, kind))
        try:
            us, vs = body.split()
            pairs.append((int(us), int(vs)))
        except ValueError:
            raise FormatError("line %d: cannot parse %r" % (lineno, line)) from None
    try:
        return FactorSubgraph.from_pairs(host, pairs)
    except (KeyError, ValueError) as exc:
        raise FormatError("factor does not fit the instance: %s" % exc) from None


def emit_factor(h: FactorSubgraph, comments: Iterable[str] = ()) -> str:
    out = ["c %s" % line for line in comments]
    for u, v in sorted(h.edge_pairs()):
        out.append("f %d %d" % (u, v))
    return "\n".join(out) + "\n"


def load_instance(path_or_file: Union[str, TextIO]) -> Instance:
    if hasattr(path_or_file, "read"):
        return parse_instance(path_or_file.read())
    with open(path_or_file, "r", encoding="utf-8") as fh:
        return parse_instance(fh.read())


def save_instance(inst: Instance, path: str, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_instance(inst, comments))
