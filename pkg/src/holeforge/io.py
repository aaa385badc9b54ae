"""Text formats: edge lists, DOT, PACE ``.td`` tree decompositions and contraction maps.

Edge list::

    n m
    u v          (m lines, 0-based ids)
    # label u <text>

Labels are written with ``repr`` and read back with ``ast.literal_eval`` when
that parses, so tuple coordinates survive a round trip; anything else stays a
string.
"""

from __future__ import annotations

import ast
import re
from collections.abc import Iterable, Mapping

from .graph import Graph, GraphError
from .treewidth import TreeDecomposition


def canonical_form(g: Graph) -> tuple[Graph, dict]:
    """Relabel to dense ids ``0..n-1`` in sorted order; returns the graph and old -> new map."""
    order = {v: i for i, v in enumerate(sorted(g.vertices))}
    return g.relabel(order), order


def _parse_label(text: str):
    try:
        return ast.literal_eval(text)
    except (ValueError, SyntaxError):
        return text


def format_edges(g: Graph) -> str:
    g, _ = canonical_form(g)
    edges = sorted(tuple(sorted(e)) for e in g.edges())
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    lines += [f"# label {v} {g.label(v)!r}" for v in sorted(g.labels)]
    return "\n".join(lines) + "\n"


def parse_edges(text: str) -> Graph:
    header = None
    edges = []
    labels = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = re.match(r"#\s*label\s+(\d+)\s+(.*)$", line)
            if m:
                labels[int(m.group(1))] = _parse_label(m.group(2))
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}")
        a, b = map(int, parts)
        if header is None:
            header = (a, b)
        else:
            edges.append((a, b))
    if header is None:
        raise GraphError("empty edge list")
    n, m = header
    if len(edges) != m:
        raise GraphError(f"header says {m} edges, found {len(edges)}")
    bad = [e for e in edges if not (0 <= e[0] < n and 0 <= e[1] < n)]
    if bad:
        raise GraphError(f"vertex id out of range in edge {bad[0]}")
    return Graph(range(n), edges, labels)


def read_edges(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_edges(fh.read())


def write_edges(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_edges(g))


def format_dot(g: Graph, name: str = "G", highlight: Iterable = ()) -> str:
    hl = set(highlight)
    lines = [f"graph {name} {{"]
    for v in sorted(g.vertices):
        attrs = []
        if v in g.labels:
            attrs.append('label="{}"'.format(str(g.label(v)).replace('"', r"\"")))
        if v in hl:
            attrs.append("color=red")
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    for u, v in sorted(tuple(sorted(e)) for e in g.edges()):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# PACE .td: bags and vertices are 1-based in the file


def format_td(td: TreeDecomposition, n: int) -> str:
    ids = {t: i + 1 for i, t in enumerate(sorted(td.bags))}
    width = max((len(b) for b in td.bags.values()), default=0)
    lines = [f"s td {len(td.bags)} {width} {n}"]
    for t in sorted(td.bags):
        lines.append(" ".join(["b", str(ids[t])] + [str(v + 1) for v in sorted(td.bags[t])]))
    for s, t in sorted(tuple(sorted((ids[s], ids[t]))) for s, t in td.edges):
        lines.append(f"{s} {t}")
    return "\n".join(lines) + "\n"


def parse_td(text: str) -> tuple[TreeDecomposition, int]:
    bags: dict[int, frozenset] = {}
    edges = []
    header = None
    for raw in text.splitlines():
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "s":
            if parts[1:2] != ["td"] or len(parts) != 5:
                raise GraphError(f"bad .td header {raw!r}")
            header = tuple(map(int, parts[2:]))
        elif parts[0] == "b":
            bags[int(parts[1]) - 1] = frozenset(int(x) - 1 for x in parts[2:])
        else:
            s, t = map(int, parts)
            edges.append((s - 1, t - 1))
    if header is None:
        raise GraphError("missing .td header")
    nbags, width, n = header
    if len(bags) != nbags:
        raise GraphError(f"header says {nbags} bags, found {len(bags)}")
    if max((len(b) for b in bags.values()), default=0) != width:
        raise GraphError("header bag size does not match the bags")
    return TreeDecomposition(bags, edges), n


def format_phi(phi: Mapping, coords: Mapping | None = None) -> str:
    """``u -> (i,j)`` lines; ``coords`` translates target ids to coordinates."""
    out = []
    for u in sorted(phi):
        x = phi[u] if coords is None else coords[phi[u]]
        out.append(f"{u} -> ({x[0]},{x[1]})")
    return "\n".join(out) + "\n"


_PHI_LINE = re.compile(r"^\s*(\d+)\s*->\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")


def parse_phi(text: str) -> dict[int, tuple[int, int]]:
    phi = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        m = _PHI_LINE.match(raw)
        if not m:
            raise GraphError(f"line {lineno}: expected 'u -> (i,j)', got {raw!r}")
        u, i, j = map(int, m.groups())
        if u in phi:
            raise GraphError(f"line {lineno}: {u} mapped twice")
        phi[u] = (i, j)
    return phi
