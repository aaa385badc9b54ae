"""``holeforge`` command line.

Exit codes are shared by every subcommand: 0 found / pass, 1 none / fail,
2 inconclusive (time budget or size cap). ``--format json`` prints a
versioned run report instead of the human-readable text; reports carry no
wall-clock data unless ``--timing`` is given, so equal inputs and seeds give
byte-identical reports.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from . import generators as gen
from .corpus import random_instance
from .decomposition import NotSubcubic, TheoremViolation, decompose_subcubic, tree_decomposition_subcubic
from .detectors import FINDERS, Inconclusive, PatternWitness, is_7hyperantihole, is_ring
from .forks import extract_induced_stone_wall
from .graph import Graph, GraphError, line_graph
from .io import format_dot, format_edges, format_phi, format_td, parse_phi, read_edges
from .separators import find_2join, find_clique_separator, find_proper_separation
from .treewidth import SizeCapExceeded, exact_treewidth, has_minor, optimal_tree_decomposition
from .verify import archive, digest, verify_corpus
from .walls import homogenize_with_report, homogeneous_kind

SCHEMA = "holeforge.run-report/1"
FOUND, NONE, INCONCLUSIVE = 0, 1, 2


def default_seed() -> int:
    try:
        return int(os.environ.get("HOLEFORGE_SEED", "0"))
    except ValueError:
        return 0


class Run:
    """Collects one subcommand's result and prints it in the requested format."""

    def __init__(self, args, graph: Graph | None = None):
        self.args = args
        self.graph = graph
        self.started = time.perf_counter()
        self.text: list[str] = []
        self.result: dict = {}
        self.out_graph: Graph | None = None
        self.highlight: frozenset = frozenset()
        self.td = None

    def say(self, line: str) -> None:
        self.text.append(line)

    def report(self, status: str) -> dict:
        rep = {
            "schema": SCHEMA,
            "command": self.args.command,
            "input_digest": digest(self.graph) if self.graph is not None else None,
            "seed": self.args.seed,
            "status": status,
            "result": self.result,
            "timing": round(time.perf_counter() - self.started, 6) if self.args.timing else None,
        }
        return rep

    def finish(self, code: int) -> int:
        status = {FOUND: "found", NONE: "none", INCONCLUSIVE: "inconclusive"}[code]
        fmt = self.args.format
        if fmt == "json":
            out = json.dumps(self.report(status), sort_keys=True, indent=2) + "\n"
        elif fmt == "edges" and self.out_graph is not None:
            out = format_edges(self.out_graph)
        elif fmt == "dot" and (self.out_graph or self.graph) is not None:
            g = self.out_graph if self.out_graph is not None else self.graph
            out = format_dot(g, highlight=self.highlight)
        elif fmt == "td" and self.td is not None:
            out = format_td(self.td, self.graph.n)
        else:
            out = "\n".join(self.text) + "\n" if self.text else ""
        target = getattr(self.args, "out", None)
        if target:
            with open(target, "w", encoding="ascii", newline="\n") as fh:
                fh.write(out)
        else:
            sys.stdout.write(out)
        if getattr(self.args, "report", None):
            with open(self.args.report, "w") as fh:
                fh.write(json.dumps(self.report(status), sort_keys=True, indent=2) + "\n")
        return code


def _label(g: Graph, v) -> str:
    return f"{v}" if v not in g.labels else f"{v}={g.label(v)}"


def _describe(g: Graph, wit: PatternWitness) -> list[str]:
    lines = [f"found {wit.kind}"]
    for role, val in wit.roles.items():
        items = []
        for item in val:
            if isinstance(item, (tuple, list, frozenset, set)):
                items.append("[" + " ".join(_label(g, v) for v in item) + "]")
            else:
                items.append(_label(g, item))
        lines.append(f"{role}: " + " ".join(items))
    return lines


def _jsonable(val):
    if isinstance(val, (set, frozenset)):
        return sorted(_jsonable(v) for v in val)
    if isinstance(val, (tuple, list)):
        return [_jsonable(v) for v in val]
    return val


# --------------------------------------------------------------------------
# generate
# --------------------------------------------------------------------------


def _need_params(params, k, family):
    if len(params) != k:
        raise SystemExit(f"{family} takes {k} integer parameters, got {len(params)}")
    return params


def build_family(family: str, params: list[int], seed: int, p: float) -> Graph:
    """Graph for ``holeforge generate``; ``seed`` drives the random families."""
    fixed = {
        "grid": (2, lambda a: gen.grid(*a)),
        "triangulated-grid": (2, lambda a: gen.triangulated_grid(*a)),
        "elementary-wall": (2, lambda a: gen.elementary_wall(*a).graph),
        "chordless-wall": (2, lambda a: gen.chordless_wall(*a).graph),
        "line-chordless-wall": (2, lambda a: line_graph(gen.chordless_wall(*a).graph)),
        "random-wall": (3, lambda a: gen.random_wall(*a, seed).graph),
        "stone-wall": (2, lambda a: gen.random_stone_wall(gen.elementary_wall(*a), p, seed).graph),
        "theta": (3, lambda a: gen.make_theta(*a)),
        "prism": (3, lambda a: gen.make_prism(*a)),
        "pyramid": (3, lambda a: gen.make_pyramid(*a)),
        "extended-prism": (5, lambda a: gen.make_extended_prism(*a)),
        "cube": (0, lambda a: gen.make_cube()),
        "net": (0, lambda a: gen.make_net()),
        "hyperantihole": (7, lambda a: gen.make_7hyperantihole(a)[0]),
        "corpus-instance": (1, lambda a: random_instance(random.Random(seed), a[0]).graph),
    }
    if family in fixed:
        k, make = fixed[family]
        return make(_need_params(params, k, family))
    if family == "complete":
        from .graph import complete_graph

        return complete_graph(*_need_params(params, 1, family))
    if family == "cycle":
        from .graph import cycle_graph

        return cycle_graph(*_need_params(params, 1, family))
    if family == "wheel":
        if len(params) < 4:
            raise SystemExit("wheel takes the rim length then at least three spoke positions")
        return gen.make_wheel(params[0], params[1:])
    if family == "ring":
        if params:
            return gen.make_ring(gen.RingSpec(tuple(params)))[0]
        return gen.make_ring(gen.random_ring_spec(random.Random(seed)))[0]
    raise SystemExit(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")


FAMILIES = (
    "grid triangulated-grid elementary-wall chordless-wall line-chordless-wall random-wall stone-wall theta prism "
    "pyramid extended-prism cube net hyperantihole corpus-instance complete cycle wheel ring uncontraction"
).split()


def cmd_generate(args) -> int:
    run = Run(args)
    if args.family == "uncontraction":
        k, size = _need_params(args.params, 2, "uncontraction")
        grid = gen.triangulated_grid(k, k)
        g, phi = gen.random_uncontraction(grid, size, args.seed)
        if args.phi_out:
            with open(args.phi_out, "w", encoding="ascii", newline="\n") as fh:
                fh.write(format_phi(phi, grid.labels))
    else:
        g = build_family(args.family, args.params, args.seed, args.p)
    run.out_graph = g
    run.result = {"family": args.family, "params": args.params, "n": g.n, "m": g.m, "digest": digest(g)}
    run.text = format_edges(g).splitlines()
    if args.dot:
        args.format = "dot"
    elif args.format in (None, "text"):
        args.format = "edges"
    return run.finish(FOUND)


# --------------------------------------------------------------------------
# detect / separate
# --------------------------------------------------------------------------


PATTERNS = sorted(FINDERS) + ["ring", "hyperantihole"]


def cmd_detect(args) -> int:
    g = read_edges(args.file)
    run = Run(args, g)
    try:
        if args.pattern == "ring":
            parts = is_ring(g, budget=args.budget)
            wit = None if parts is None else PatternWitness("ring", {"parts": tuple(tuple(sorted(p)) for p in parts)})
        elif args.pattern == "hyperantihole":
            parts = is_7hyperantihole(g)
            wit = None if parts is None else PatternWitness("hyperantihole", {"parts": tuple(tuple(sorted(p)) for p in parts)})
        else:
            if args.pattern not in FINDERS:
                raise SystemExit(f"unknown pattern {args.pattern!r}; choose from {PATTERNS}")
            wit = FINDERS[args.pattern](g, budget=args.budget)
    except Inconclusive:
        run.say("inconclusive")
        run.result = {"pattern": args.pattern}
        return run.finish(INCONCLUSIVE)
    run.result = {"pattern": args.pattern, "witness": None if wit is None else {"kind": wit.kind, "roles": _jsonable(wit.roles)}}
    if wit is None:
        run.say("none")
        return run.finish(NONE)
    run.text = _describe(g, wit)
    run.highlight = wit.vertices
    run.out_graph = g.induced(wit.vertices) if args.format == "edges" else None
    return run.finish(FOUND)


def cmd_separate(args) -> int:
    g = read_edges(args.file)
    run = Run(args, g)
    try:
        if args.kind == "clique":
            sep = find_clique_separator(g, args.max_size)
            payload = None if sep is None else {"clique": sep.clique, "components": list(sep.components)}
        elif args.kind == "proper":
            sep = find_proper_separation(g)
            payload = None if sep is None else {"a": sep.a, "b": sep.b, "X": sep.X, "Y": sep.Y}
        else:
            sep = find_2join(g, budget=args.budget)
            payload = None if sep is None else {k: getattr(sep, k) for k in ("X1", "X2", "A1", "B1", "A2", "B2")}
    except Inconclusive:
        run.say("inconclusive")
        return run.finish(INCONCLUSIVE)
    run.result = {"kind": args.kind, "separation": _jsonable(payload)}
    if payload is None:
        run.say("none")
        return run.finish(NONE)
    run.say(f"found {args.kind} separation")
    for key, val in payload.items():
        if isinstance(val, list):
            for i, part in enumerate(val):
                run.say(f"{key}[{i}]: " + " ".join(_label(g, v) for v in sorted(part)))
        elif isinstance(val, (set, frozenset)):
            run.say(f"{key}: " + " ".join(_label(g, v) for v in sorted(val)))
        else:
            run.say(f"{key}: {_label(g, val)}")
    run.highlight = frozenset(payload.get("clique", ())) | frozenset(v for v in (payload.get("a"), payload.get("b")) if v is not None)
    return run.finish(FOUND)


# --------------------------------------------------------------------------
# decompose / tw / minor
# --------------------------------------------------------------------------


def cmd_decompose(args) -> int:
    g = read_edges(args.file)
    run = Run(args, g)
    try:
        tree = decompose_subcubic(g)
    except NotSubcubic as exc:
        run.say(f"not subcubic: {exc}")
        run.result = {"error": "not-subcubic"}
        return run.finish(NONE)
    except TheoremViolation:
        path = archive(g, args.archive)
        run.say(f"theorem violation; graph archived at {path}")
        run.result = {"error": "theorem-violation", "archived": path}
        return run.finish(NONE)
    td = tree_decomposition_subcubic(g, tree)
    run.td = td
    leaves = tree.leaves()
    run.result = {
        "width": td.width,
        "bags": len(td.bags),
        "leaves": [lf.certificate.kind for lf in leaves],
        "depth": tree.depth(),
    }
    run.say(f"decomposed: {len(leaves)} basic leaves, tree depth {tree.depth()}, tree-width <= {td.width}")
    if args.tree_out:
        with open(args.tree_out, "w") as fh:
            json.dump(tree.to_dict(), fh, sort_keys=True, indent=2)
    if args.td_out:
        with open(args.td_out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(format_td(td, g.n))
    return run.finish(FOUND)


def cmd_tw(args) -> int:
    g = read_edges(args.file)
    run = Run(args, g)
    try:
        tw = exact_treewidth(g, budget=args.budget)
        if args.format == "td":
            run.td = optimal_tree_decomposition(g)
    except (SizeCapExceeded, Inconclusive) as exc:
        run.say(f"inconclusive: {exc}")
        return run.finish(INCONCLUSIVE)
    run.result = {"treewidth": tw}
    run.say(str(tw))
    return run.finish(FOUND)


def cmd_minor(args) -> int:
    g = read_edges(args.file)
    run = Run(args, g)
    try:
        wit = has_minor(g, args.l, budget=args.budget)
    except (SizeCapExceeded, Inconclusive) as exc:
        run.say(f"inconclusive: {exc}")
        return run.finish(INCONCLUSIVE)
    run.result = {"l": args.l, "branch_sets": None if wit is None else _jsonable(list(wit.branch_sets))}
    if wit is None:
        run.say("none")
        return run.finish(NONE)
    run.say(f"found K{args.l} minor")
    for i, b in enumerate(wit.branch_sets, 1):
        run.say(f"B{i}: " + " ".join(_label(g, v) for v in sorted(b)))
    run.highlight = frozenset().union(*wit.branch_sets)
    return run.finish(FOUND)


# --------------------------------------------------------------------------
# extract-wall / verify-corpus
# --------------------------------------------------------------------------


def cmd_extract_wall(args) -> int:
    g = read_edges(args.file)
    run = Run(args, g)
    with open(args.witness, encoding="ascii") as fh:
        coords = parse_phi(fh.read())
    k = max((max(c) for c in coords.values()), default=0)
    cells = {lab: v for v, lab in gen.triangulated_grid(k, k).labels.items()} if k else {}
    try:
        phi = {u: cells[c] for u, c in coords.items()}
        sw = extract_induced_stone_wall(g, phi, args.h, k=k)
    except (GraphError, KeyError) as exc:
        run.say(f"no wall: {exc}")
        run.result = {"error": str(exc)}
        return run.finish(NONE)
    out = sw.graph
    result = {"dims": [sw.base.n_rows, sw.base.m_cols], "vertices": sorted(out.vertices), "triangles": len(sw.replaced)}
    if args.homogenize:
        try:
            sw, rep = homogenize_with_report(sw, args.homogenize)
        except GraphError as exc:
            run.say(f"homogenization failed: {exc}")
            run.result = {**result, "error": str(exc)}
            return run.finish(NONE)
        out = sw.graph
        result["homogeneous"] = {"kind": homogeneous_kind(out), "case": rep.case, "color": rep.color, "vertices": sorted(out.vertices)}
    run.result = result
    run.out_graph = out
    run.highlight = out.vertices
    run.say(f"induced stone wall {sw.base.n_rows}x{sw.base.m_cols} on {out.n} vertices ({len(sw.replaced)} triangles)")
    run.say("vertices: " + " ".join(map(str, sorted(out.vertices))))
    return run.finish(FOUND)


def cmd_verify_corpus(args) -> int:
    run = Run(args)
    payload = verify_corpus(args.seed, args.count, args.depth, rings=args.rings, archive_dir=args.archive)
    run.result = payload
    s = payload["summary"]
    run.say(
        f"{s['instances']} instances, max width {s['max_td_width']}, {s['oracle_checked']} oracle-checked, "
        f"{s['reassembled']} reassembled, {s['rings']} rings: " + ("pass" if s["pass"] else f"FAIL {s['failures']}")
    )
    return run.finish(FOUND if s["pass"] else NONE)


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "edges", "dot", "td", "json"], default="text")
    common.add_argument("--seed", type=int, default=default_seed(), help="default: $HOLEFORGE_SEED or 0")
    common.add_argument("--budget", type=float, default=60.0, help="search time budget in seconds")
    common.add_argument("--report", help="also write the JSON run report here")
    common.add_argument("--timing", action="store_true", help="include wall-clock time in reports")

    ap = argparse.ArgumentParser(prog="holeforge", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="write a graph family member as an edge list")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--p", type=float, default=0.5, help="replacement probability for stone-wall")
    p.add_argument("--out")
    p.add_argument("--phi-out", help="uncontraction: where to write the contraction map")
    p.add_argument("--dot", action="store_true", help="shorthand for --format dot")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("detect", parents=[common], help="find an induced pattern")
    p.add_argument("pattern", choices=PATTERNS)
    p.add_argument("file")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("separate", parents=[common], help="find a clique cut, proper separation or 2-join")
    p.add_argument("kind", choices=["clique", "proper", "2join"])
    p.add_argument("file")
    p.add_argument("--max-size", type=int, default=2)
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("decompose", parents=[common], help="decompose a subcubic (theta, prism)-free graph")
    p.add_argument("file")
    p.add_argument("--tree-out")
    p.add_argument("--td-out")
    p.add_argument("--archive", default="counterexamples")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("tw", parents=[common], help="exact tree-width (at most 20 vertices)")
    p.add_argument("file")
    p.set_defaults(func=cmd_tw)

    p = sub.add_parser("minor", parents=[common], help="search for a K_l minor")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("extract-wall", parents=[common], help="induced stone wall from a triangulated-grid contraction")
    p.add_argument("file")
    p.add_argument("--witness", required=True, help="lines 'u -> (i,j)'")
    p.add_argument("--h", type=int, default=2)
    p.add_argument("--homogenize", type=int, metavar="R", help="then extract a homogeneous R x R stone wall")
    p.add_argument("--out")
    p.set_defaults(func=cmd_extract_wall)

    p = sub.add_parser("verify-corpus", parents=[common], help="check the decomposition theorem on a random corpus")
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--depth", type=int, default=5)
    p.add_argument("--rings", type=int, default=10)
    p.add_argument("--archive", default="counterexamples")
    p.set_defaults(func=cmd_verify_corpus)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NONE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NONE


if __name__ == "__main__":
    sys.exit(main())
