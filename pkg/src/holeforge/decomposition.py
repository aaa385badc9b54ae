"""Decomposition of subcubic (theta, prism)-free graphs.

Every such graph is basic, has a clique separator of size at most two, or
has a proper separator. ``decompose_subcubic`` follows that trichotomy
recursively; ``reassemble`` undoes it with the two gluing operations and
``tree_decomposition_subcubic`` turns the tree into a width-3 decomposition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .detectors import (
    PatternWitness,
    find_cube,
    is_pyramid_graph,
    iter_extended_prisms,
    validate_witness,
)
from .graph import Graph, GraphError, Path
from .separators import ProperSeparation, find_clique_separator, find_proper_separation, proper_separation_violations
from .treewidth import TREEWIDTH_CAP, TreeDecomposition, decomposition_from_ordering, treewidth_with_ordering

BASIC_KINDS = ("chordless-cycle", "clique", "cube", "proper-wheel", "pyramid", "extended-prism")


class NotSubcubic(GraphError):
    pass


class TheoremViolation(RuntimeError):
    """No basic certificate, no small clique separator and no proper separator."""

    def __init__(self, graph: Graph):
        super().__init__(f"graph on {graph.n} vertices has no decomposition step")
        self.graph = graph


class GluingError(GraphError):
    """A named gluing precondition failed; ``condition`` says which."""

    def __init__(self, condition: str, detail: str = ""):
        super().__init__(f"{condition}: {detail}" if detail else condition)
        self.condition = condition


# --------------------------------------------------------------------------
# basic graphs
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class BasicCertificate:
    kind: str
    witness: PatternWitness


def _degree_profile(g: Graph) -> dict[int, int]:
    out: dict[int, int] = {}
    for v in g:
        d = g.degree(v)
        out[d] = out.get(d, 0) + 1
    return out


def _as_cycle(g: Graph) -> tuple | None:
    if g.n < 3 or not g.is_connected() or any(g.degree(v) != 2 for v in g):
        return None
    start = min(g)
    cyc = [start, min(g.neighbors(start))]
    while len(cyc) < g.n:
        cyc.append(min(g.neighbors(cyc[-1]) - {cyc[-2]}))
    return tuple(cyc)


def _proper_wheel(g: Graph) -> PatternWitness | None:
    for x in sorted(g):
        if g.degree(x) < 3:
            continue
        rim = _as_cycle(g.remove({x}))
        if rim is not None and len(rim) >= 4 and is_pyramid_graph(g) is None:
            return PatternWitness("wheel", {"rim": rim, "center": (x,)})
    return None


def classify_basic(g: Graph) -> BasicCertificate | None:
    """The first basic kind that ``g`` is, checked in a fixed order, or None."""
    if g.n == 0 or not g.is_connected():
        return None
    prof = _degree_profile(g)
    cyc = _as_cycle(g)
    if cyc is not None:
        return BasicCertificate("chordless-cycle", PatternWitness("hole", {"cycle": cyc}))
    if g.n <= 4 and g.is_clique(g.vertices):
        return BasicCertificate("clique", PatternWitness("clique", {"clique": tuple(sorted(g))}))
    if g.n == 8 and prof == {3: 8}:
        w = find_cube(g)
        if w is not None:
            return BasicCertificate("cube", w)
    # wheels and pyramids in a subcubic graph: four degree-3 vertices, m = n + 2
    if prof.get(3, 0) == 4 and set(prof) <= {2, 3} and g.m == g.n + 2:
        w = _proper_wheel(g)
        if w is not None:
            return BasicCertificate("proper-wheel", w)
        w = is_pyramid_graph(g)
        if w is not None:
            return BasicCertificate("pyramid", w)
    if prof.get(3, 0) == 8 and set(prof) <= {2, 3} and g.m == g.n + 4:
        for w in iter_extended_prisms(g):
            if w.vertices == g.vertices:
                return BasicCertificate("extended-prism", w)
    return None


def certificate_violations(g: Graph, cert: BasicCertificate) -> list[str]:
    """Re-check a certificate against the raw definition of its kind."""
    w = cert.witness
    out = []
    if w.vertices != g.vertices:
        out.append("witness does not span the graph")
    if cert.kind == "chordless-cycle":
        cyc = w.roles["cycle"]
        edges = {frozenset((cyc[i], cyc[(i + 1) % len(cyc)])) for i in range(len(cyc))}
        if len(cyc) < 3 or len(set(cyc)) != len(cyc) or set(map(frozenset, g.edges())) != edges:
            out.append("not a chordless cycle")
    elif cert.kind == "clique":
        if not (1 <= g.n <= 4 and g.is_clique(g.vertices)):
            out.append("not a clique of size at most 4")
    elif cert.kind == "proper-wheel":
        if w.kind != "wheel" or not validate_witness(g, w):
            out.append("not a wheel")
        elif is_pyramid_graph(g) is not None:
            out.append("wheel is a pyramid")
    elif cert.kind in ("cube", "pyramid", "extended-prism"):
        if w.kind != cert.kind or not validate_witness(g, w):
            out.append(f"not a {cert.kind}")
    else:
        out.append(f"unknown kind {cert.kind}")
    return out


# --------------------------------------------------------------------------
# gluings
# --------------------------------------------------------------------------


def _place_second(g1: Graph, g2: Graph, fixed: dict) -> dict:
    """Map V(G2) into the composite: ``fixed`` entries are identified, the rest keep
    their id unless it clashes with G1, in which case they get fresh ids."""
    mp = dict(fixed)
    taken = set(g1.vertices)
    nxt = max(list(g1.vertices) + list(g2.vertices), default=-1) + 1
    clashes = []
    for v in sorted(g2.vertices):
        if v in mp:
            continue
        if v in taken:
            clashes.append(v)
        else:
            mp[v] = v
            taken.add(v)
    for v in clashes:
        mp[v] = nxt
        nxt += 1
    return mp


def glue_clique(g1: Graph, g2: Graph, identify: dict) -> Graph:
    """Identify the clique ``identify.keys()`` of G2 with the clique ``identify.values()`` of G1."""
    if len(set(identify.values())) != len(identify):
        raise GluingError("identification-not-injective")
    if not set(identify) <= g2.vertices or not set(identify.values()) <= g1.vertices:
        raise GluingError("unknown-vertex")
    if not g2.is_clique(identify) or not g1.is_clique(identify.values()):
        raise GluingError("not-a-clique")
    mp = _place_second(g1, g2, identify)
    labels = dict(g1.labels)
    labels.update({mp[v]: lab for v, lab in g2.labels.items() if v not in identify})
    edges = set(g1.edges()) | {tuple(sorted((mp[u], mp[v]))) for u, v in g2.edges()}
    return Graph(g1.vertices | set(mp.values()), edges, labels)


def _check_glue_path(g: Graph, a, b, p, deg: int, side: str) -> None:
    if a not in g or b not in g:
        raise GluingError(f"{side}-unknown-vertex")
    if g.has_edge(a, b):
        raise GluingError(f"{side}-ends-adjacent", f"{a}-{b}")
    for v in (a, b):
        if g.degree(v) != deg:
            raise GluingError(f"{side}-end-degree", f"vertex {v} has degree {g.degree(v)}, need {deg}")
    p = Path(p)
    if p.ends != (a, b) or not p.is_path_in(g):
        raise GluingError(f"{side}-path-not-a-path")
    for v in p.interior:
        if g.degree(v) != 2:
            raise GluingError(f"{side}-path-interior-degree", f"vertex {v} has degree {g.degree(v)}")


def proper_glue(g1: Graph, a1, b1, p1, g2: Graph, a2, b2, p2) -> Graph:
    """Remove the interiors of P1 and P2, then identify a2 with a1 and b2 with b1.

    Needs a1, b1 non-adjacent of degree 3 in G1, a2, b2 non-adjacent of
    degree 2 in G2, and both paths with all internal vertices of degree 2.
    """
    _check_glue_path(g1, a1, b1, p1, 3, "first")
    _check_glue_path(g2, a2, b2, p2, 2, "second")
    h1 = g1.remove(Path(p1).interior)
    h2 = g2.remove(Path(p2).interior)
    mp = _place_second(h1, h2, {a2: a1, b2: b1})
    labels = dict(h1.labels)
    labels.update({mp[v]: lab for v, lab in h2.labels.items() if v not in (a2, b2)})
    edges = {tuple(sorted(e)) for e in h1.edges()} | {tuple(sorted((mp[u], mp[v]))) for u, v in h2.edges()}
    return Graph(h1.vertices | set(mp.values()), edges, labels)


# --------------------------------------------------------------------------
# decomposition tree
# --------------------------------------------------------------------------


@dataclass
class DecompositionNode:
    kind: str  # "leaf", "clique-cut" or "proper-cut"
    graph: Graph
    certificate: BasicCertificate | None = None
    clique: frozenset = frozenset()
    separation: ProperSeparation | None = None
    markers: tuple = ()  # (m_X, m_Y) marker vertices on the X and Y children
    end_degrees: dict = field(default_factory=dict)
    children: list["DecompositionNode"] = field(default_factory=list)

    def leaves(self) -> list["DecompositionNode"]:
        if self.kind == "leaf":
            return [self]
        return [lf for c in self.children for lf in c.leaves()]

    def nodes(self) -> list["DecompositionNode"]:
        return [self] + [n for c in self.children for n in c.nodes()]

    def depth(self) -> int:
        return 1 + max((c.depth() for c in self.children), default=0)

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "vertices": sorted(self.graph.vertices)}
        if self.certificate is not None:
            d["basic"] = self.certificate.kind
        if self.kind == "clique-cut":
            d["clique"] = sorted(self.clique)
        if self.separation is not None:
            s = self.separation
            d["separation"] = {"a": s.a, "b": s.b, "X": sorted(s.X), "Y": sorted(s.Y)}
            d["markers"] = list(self.markers)
        if self.children:
            d["children"] = [c.to_dict() for c in self.children]
        return d


def decompose_subcubic(g: Graph, marker_length: int = 2) -> DecompositionNode:
    """Recursive decomposition; raises :class:`TheoremViolation` on a dead end.

    ``marker_length`` is the length of the a..b marker path added to each
    side of a proper cut (2 keeps both children strictly smaller).
    """
    if g.max_degree() > 3:
        raise NotSubcubic(f"maximum degree {g.max_degree()} exceeds 3")
    if marker_length not in (2, 3):
        raise ValueError("marker_length must be 2 or 3")
    counter = itertools.count(max(g.vertices, default=-1) + 1)
    return _decompose(g, marker_length, counter)


def _decompose(g: Graph, marker_length: int, counter) -> DecompositionNode:
    cert = classify_basic(g)
    if cert is not None:
        return DecompositionNode("leaf", g, certificate=cert)
    cs = find_clique_separator(g, 2)
    if cs is not None:
        kids = [_decompose(g.induced(c | cs.clique), marker_length, counter) for c in cs.components]
        return DecompositionNode("clique-cut", g, clique=cs.clique, children=kids)
    sep = find_proper_separation(g)
    if sep is None:
        raise TheoremViolation(g)
    kids, markers = [], []
    for side in (sep.X, sep.Y):
        inner = [next(counter) for _ in range(marker_length - 1)]
        chain = [sep.a, *inner, sep.b]
        child = g.induced(side | {sep.a, sep.b}).add_edges(zip(chain, chain[1:]))
        markers.append(tuple(inner))
        kids.append(child)
    degs = {"X": (kids[0].degree(sep.a), kids[0].degree(sep.b)), "Y": (kids[1].degree(sep.a), kids[1].degree(sep.b))}
    children = [_decompose(k, marker_length, counter) for k in kids]
    return DecompositionNode("proper-cut", g, separation=sep, markers=tuple(markers), end_degrees=degs, children=children)


def reassemble(node: DecompositionNode) -> Graph:
    """Bottom-up gluing; reproduces the graph the tree was built from."""
    if node.kind == "leaf":
        return node.graph
    parts = [reassemble(c) for c in node.children]
    if node.kind == "clique-cut":
        out = parts[0]
        for p in parts[1:]:
            out = glue_clique(out, p, {v: v for v in node.clique})
        return out
    sep = node.separation
    gx, gy = parts
    px = [sep.a, *node.markers[0], sep.b]
    py = [sep.a, *node.markers[1], sep.b]
    return proper_glue(gx, sep.a, sep.b, px, gy, sep.a, sep.b, py)


# --------------------------------------------------------------------------
# tree decompositions of width at most 3
# --------------------------------------------------------------------------


def _suppress_chains(g: Graph) -> tuple[Graph, list[tuple]]:
    """Contract degree-2 vertices whose neighbours are non-adjacent; log (v, u, w)."""
    adj = {v: set(g.neighbors(v)) for v in g}
    log = []
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            if len(adj[v]) == 2:
                u, w = sorted(adj[v])
                if w in adj[u]:
                    continue
                del adj[v]
                adj[u].discard(v)
                adj[w].discard(v)
                adj[u].add(w)
                adj[w].add(u)
                log.append((v, u, w))
                changed = True
                break
    core = Graph.from_adjacency(adj)
    return core, log


def _renumber(td: TreeDecomposition, offset: int) -> TreeDecomposition:
    mp = {t: offset + i for i, t in enumerate(sorted(td.bags))}
    return TreeDecomposition({mp[t]: b for t, b in td.bags.items()}, [(mp[s], mp[t]) for s, t in td.edges])


def _bag_with(td: TreeDecomposition, vs) -> int:
    vs = set(vs)
    for t in sorted(td.bags):
        if vs <= td.bags[t]:
            return t
    raise GraphError(f"no bag contains {sorted(vs)}")


def _leaf_decomposition(g: Graph) -> TreeDecomposition:
    core, log = _suppress_chains(g)
    if core.n <= TREEWIDTH_CAP:
        _, order = treewidth_with_ordering(core)
    else:  # not reached by basic graphs; keep a valid (heuristic) fallback
        from .treewidth import _min_fill_order

        _, order = _min_fill_order(core)
    td = decomposition_from_ordering(core, order)
    nxt = max(td.bags) + 1
    for v, u, w in reversed(log):
        host = _bag_with(td, (u, w))
        td.bags[nxt] = frozenset((u, v, w))
        td.edges.append((host, nxt))
        nxt += 1
    return td


def _join(parts: list[TreeDecomposition], shared) -> TreeDecomposition:
    bags, edges = {}, []
    anchor = None
    offset = 0
    for td in parts:
        td = _renumber(td, offset)
        offset += len(td.bags)
        bags.update(td.bags)
        edges += td.edges
        t = _bag_with(td, shared)
        if anchor is None:
            anchor = t
        else:
            edges.append((anchor, t))
    return TreeDecomposition(bags, edges)


def _splice_marker(td: TreeDecomposition, marker, into) -> TreeDecomposition:
    return TreeDecomposition({t: frozenset(into if v in marker else v for v in b) for t, b in td.bags.items()}, list(td.edges))


def tree_decomposition_subcubic(g: Graph, tree: DecompositionNode | None = None) -> TreeDecomposition:
    if tree is None:
        tree = decompose_subcubic(g)
    return _tree_decomposition(tree)


def _tree_decomposition(node: DecompositionNode) -> TreeDecomposition:
    if node.kind == "leaf":
        return _leaf_decomposition(node.graph)
    kids = [_tree_decomposition(c) for c in node.children]
    if node.kind == "clique-cut":
        return _join(kids, node.clique)
    sep = node.separation
    spliced = [_splice_marker(td, set(m), sep.a) for td, m in zip(kids, node.markers)]
    return _join(spliced, {sep.a, sep.b})


def separation_is_proper(g: Graph, sep: ProperSeparation) -> bool:
    return not proper_separation_violations(g, sep)
