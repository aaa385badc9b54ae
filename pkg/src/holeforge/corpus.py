"""Seeded random members of the subcubic (theta, prism)-free class.

Instances are random compositions of basic graphs by clique gluings (sizes
0, 1, 2) and proper gluings. Every candidate is re-checked with the
detectors and discarded if a theta or prism slipped in.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .decomposition import classify_basic, glue_clique, proper_glue
from .detectors import is_theta_prism_free
from .generators import make_cube, make_extended_prism, make_pyramid, make_wheel
from .graph import Graph, complete_graph, cycle_graph


@dataclass
class CorpusConfig:
    seed: int = 0
    count: int = 200
    depth: int = 5
    max_vertices: int = 60
    max_attempts: int = 50


@dataclass
class Instance:
    graph: Graph
    recipe: list = field(default_factory=list)


def random_basic(rng: random.Random) -> tuple[Graph, str]:
    kind = rng.choice(["cycle", "clique", "cube", "wheel", "pyramid", "extended-prism"])
    if kind == "cycle":
        return cycle_graph(rng.randint(3, 9)), kind
    if kind == "clique":
        return complete_graph(rng.randint(1, 4)), kind
    if kind == "cube":
        return make_cube(), kind
    if kind == "wheel":
        while True:
            n = rng.randint(5, 10)
            g = make_wheel(n, rng.sample(range(n), 3))
            cert = classify_basic(g)
            if cert is not None and cert.kind == "proper-wheel":
                return g, kind
    if kind == "pyramid":
        while True:
            ls = [rng.randint(1, 4) for _ in range(3)]
            if sum(x >= 2 for x in ls) >= 2:
                return make_pyramid(*ls), kind
    return make_extended_prism(*(rng.randint(1, 3) for _ in range(5))), kind


def _strip_labels(g: Graph) -> Graph:
    return Graph(g.vertices, g.edges())


def _chains(g: Graph, end_degree: int) -> list[tuple]:
    """Paths with degree-2 interior whose ends are non-adjacent and of ``end_degree``."""
    out = []
    for a in sorted(g):
        if g.degree(a) != end_degree:
            continue
        for first in sorted(g.neighbors(a)):
            path = [a, first]
            while True:
                v = path[-1]
                if len(path) >= 3 and g.degree(v) == end_degree and not g.has_edge(a, v):
                    out.append(tuple(path))
                if g.degree(v) != 2:
                    break
                nxt = min(g.neighbors(v) - {path[-2]})
                if nxt in path:
                    break
                path.append(nxt)
    return out


def _clique_glue(rng, g1: Graph, g2: Graph, size: int) -> Graph | None:
    if size == 0:
        return glue_clique(g1, g2, {})
    if size == 1:
        pairs = [(u, v) for u in g1 for v in g2 if g1.degree(u) + g2.degree(v) <= 3]
        if not pairs:
            return None
        u, v = rng.choice(pairs)
        return glue_clique(g1, g2, {v: u})
    opts = []
    for u1, v1 in g1.edges():
        for u2, v2 in g2.edges():
            for x2, y2 in ((u2, v2), (v2, u2)):
                if g1.degree(u1) + g2.degree(x2) - 1 <= 3 and g1.degree(v1) + g2.degree(y2) - 1 <= 3:
                    opts.append(((u1, v1), (x2, y2)))
    if not opts:
        return None
    (u1, v1), (x2, y2) = rng.choice(opts)
    return glue_clique(g1, g2, {x2: u1, y2: v1})


def _proper(rng, g1: Graph, g2: Graph) -> Graph | None:
    c1 = _chains(g1, 3)
    c2 = _chains(g2, 2)
    if not c1 or not c2:
        return None
    p1 = rng.choice(c1)
    p2 = rng.choice(c2)
    return proper_glue(g1, p1[0], p1[-1], p1, g2, p2[0], p2[-1], p2)


def random_instance(rng: random.Random, depth: int, max_vertices: int = 60) -> Instance:
    """A composition tree of the given depth (depth 1 is a single basic graph)."""
    if depth <= 1:
        g, kind = random_basic(rng)
        return Instance(_strip_labels(g), [kind])
    left = random_instance(rng, depth - 1, max_vertices)
    right = random_instance(rng, rng.randint(1, depth - 1), max_vertices)
    for g1, g2 in ((left.graph, right.graph), (right.graph, left.graph)):
        op = rng.choice(["clique-0", "clique-1", "clique-2", "proper", "proper"])
        if op == "proper":
            out = _proper(rng, g1, g2)
        else:
            out = _clique_glue(rng, g1, g2, int(op[-1]))
        if out is not None and out.n <= max_vertices and out.max_degree() <= 3:
            out, _ = out.canonical()
            return Instance(_strip_labels(out), [op, left.recipe, right.recipe])
    return left


def generate_corpus(cfg: CorpusConfig) -> list[Instance]:
    """``cfg.count`` in-class instances; depths cycle through 1..cfg.depth."""
    rng = random.Random(cfg.seed)
    out = []
    i = 0
    while len(out) < cfg.count:
        depth = 1 + i % cfg.depth
        i += 1
        for _ in range(cfg.max_attempts):
            inst = random_instance(rng, depth, cfg.max_vertices)
            if is_theta_prism_free(inst.graph):
                out.append(inst)
                break
    return out


# --------------------------------------------------------------------------
# (even hole, pyramid)-free graphs of maximum degree 4 with major vertices
# --------------------------------------------------------------------------


def random_wheel_like(rng: random.Random) -> Graph:
    """A hole with one or two extra vertices attached by 3-4 spokes each.

    Sector lengths are random, so many draws contain an even hole or a
    pyramid; callers filter with the detectors.
    """
    sectors = [rng.randint(1, 5) for _ in range(rng.choice([3, 3, 3, 4]))]
    n = sum(sectors)
    spokes = [0]
    for s in sectors[:-1]:
        spokes.append(spokes[-1] + s)
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n, s) for s in spokes]
    g = Graph(range(n + 1), edges)
    if rng.random() < 0.4:
        # a second centre on the same rim, joined to the first
        free = [v for v in range(n) if g.degree(v) < 4]
        k = min(len(free), 3)
        extra = [(n + 1, v) for v in rng.sample(free, k)]
        if rng.random() < 0.5:
            extra.append((n, n + 1))
        g = Graph(range(n + 2), g.edges() + extra)
    return g


def random_major_instance(rng: random.Random) -> Graph:
    g = random_wheel_like(rng)
    for _ in range(rng.randint(0, 2)):
        other = random_wheel_like(rng) if rng.random() < 0.5 else random_basic(rng)[0]
        other = _strip_labels(other)
        size = rng.choice([0, 1, 2])
        out = _clique_glue(rng, g, other, size) if size else glue_clique(g, other, {})
        if out is not None and out.max_degree() <= 4:
            g = out
    return g


def generate_major_corpus(seed: int, count: int, max_attempts: int = 200) -> list[Graph]:
    """``count`` (even hole, pyramid)-free graphs of maximum degree <= 4, each with a major vertex."""
    from .detectors import find_hole, find_pyramid, iter_holes, major_vertices

    rng = random.Random(seed)
    out = []
    for _ in range(count * max_attempts):
        if len(out) == count:
            break
        g = random_major_instance(rng)
        if g.max_degree() > 4 or g.n > 40:
            continue
        if find_hole(g, "even") is not None or find_pyramid(g) is not None:
            continue
        if any(major_vertices(g, h) for h in iter_holes(g)):
            out.append(g)
    return out
