"""Constructors for every graph family used in the package.

Vertex ids are dense integers; each family stores a descriptive label per
vertex (wall coordinates ``(i, j)``, role names for thetas/prisms, ring
cells ``("X", i, j)``) so callers and tests can address named vertices.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from .graph import Graph, GraphError, Path


# --------------------------------------------------------------------------
# grids
# --------------------------------------------------------------------------


def _check_dims(n: int, m: int) -> None:
    if n < 2 or m < 2:
        raise GraphError(f"dimensions must be at least 2, got {n}x{m}")


def grid(n: int, m: int) -> Graph:
    """The (n x m)-grid; vertex ``(i-1)*m + (j-1)`` carries label ``(i, j)``."""
    _check_dims(n, m)
    vid = lambda i, j: (i - 1) * m + (j - 1)  # noqa: E731
    es = []
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            if j < m:
                es.append((vid(i, j), vid(i, j + 1)))
            if i < n:
                es.append((vid(i, j), vid(i + 1, j)))
    labels = {vid(i, j): (i, j) for i in range(1, n + 1) for j in range(1, m + 1)}
    return Graph(range(n * m), es, labels)


def triangulated_grid(n: int, m: int) -> Graph:
    """Grid plus the diagonals ``(i, j)-(i-1, j+1)``."""
    g = grid(n, m)
    vid = lambda i, j: (i - 1) * m + (j - 1)  # noqa: E731
    diag = [(vid(i, j), vid(i - 1, j + 1)) for i in range(2, n + 1) for j in range(1, m)]
    return g.add_edges(diag)


def grid_corners(n: int, m: int) -> dict[str, int]:
    vid = lambda i, j: (i - 1) * m + (j - 1)  # noqa: E731
    return {"top_left": vid(1, 1), "top_right": vid(1, m), "bottom_left": vid(n, 1), "bottom_right": vid(n, m)}


# --------------------------------------------------------------------------
# walls
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Wall:
    graph: Graph
    n_rows: int
    m_cols: int
    horizontal_paths: tuple[Path, ...]
    vertical_paths: tuple[Path, ...]

    @property
    def branch_vertices(self) -> frozenset:
        return frozenset(v for v in self.graph.vertices if self.graph.degree(v) == 3)


def _elementary_coords(n: int, m: int) -> list[tuple[int, int]]:
    coords = [(1, 2 * j - 1) for j in range(1, m + 1)]
    coords += [(i, j) for i in range(2, n) for j in range(1, 2 * m + 1)]
    if n % 2 == 0:
        coords += [(n, 2 * j - 1) for j in range(1, m + 1)]
    else:
        coords += [(n, 2 * j) for j in range(1, m + 1)]
    return coords


def _elementary_edges(n: int, m: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    es = [((1, 2 * j - 1), (1, 2 * j + 1)) for j in range(1, m)]
    es += [((i, j), (i, j + 1)) for i in range(2, n) for j in range(1, 2 * m)]
    if n % 2 == 1:
        es += [((n, 2 * j), (n, 2 * j + 2)) for j in range(1, m)]
    else:
        es += [((n, 2 * j - 1), (n, 2 * j + 1)) for j in range(1, m)]
    for i in range(1, n):
        for j in range(1, 2 * m + 1):
            if i % 2 == j % 2:
                es.append(((i, j), (i + 1, j)))
    coords = set(_elementary_coords(n, m))
    return [e for e in es if e[0] in coords and e[1] in coords]


def elementary_wall(n: int, m: int) -> Wall:
    """Elementary (n x m)-wall built from the coordinate formulas.

    Row 1 holds the odd columns, rows ``2..n-1`` hold columns ``1..2m`` and
    row ``n`` holds the odd columns when ``n`` is even and the even columns
    when ``n`` is odd; vertical rungs ``(i,j)-(i+1,j)`` exist when ``i`` and
    ``j`` have the same parity. Vertex count is ``2m(n-1)``.
    """
    _check_dims(n, m)
    coords = _elementary_coords(n, m)
    vid = {c: k for k, c in enumerate(coords)}
    g = Graph(range(len(coords)), ((vid[a], vid[b]) for a, b in _elementary_edges(n, m)), {k: c for c, k in vid.items()})
    rows = []
    for i in range(1, n + 1):
        rows.append(Path(vid[c] for c in sorted(c for c in coords if c[0] == i)))
    cols = []
    for j in range(1, m + 1):
        members = _vertical_coords(n, j)
        cols.append(_order_as_path(g, {vid[c] for c in members}, start=vid[(1, 2 * j - 1)]))
    return Wall(g, n, m, tuple(rows), tuple(cols))


def _vertical_coords(n: int, j: int) -> set[tuple[int, int]]:
    members = set()
    for i in range(1, n):
        col = 2 * j - 1 if i % 2 == 1 else 2 * j
        members |= {(i, col), (i + 1, col)}
    return members


def _order_as_path(g: Graph, members: set, start=None) -> Path:
    sub = g.induced(members)
    if start is None:
        ends = [v for v in sub if sub.degree(v) <= 1]
        start = min(ends) if ends else min(sub)
    order = [start]
    seen = {start}
    while True:
        nxt = [w for w in sub.neighbors(order[-1]) if w not in seen]
        if not nxt:
            break
        order.append(min(nxt))
        seen.add(order[-1])
    if len(order) != len(members):
        raise GraphError("vertex set does not induce a path")
    return Path(order)


def wall(n: int, m: int, subdivision: Mapping | None = None) -> Wall:
    """Subdivision of the elementary wall.

    ``subdivision`` maps elementary-wall edges, given as pairs of coordinate
    labels ``((i1, j1), (i2, j2))`` in either order, to the number of new
    vertices placed on that edge. New vertices are labelled
    ``("sub", (c1, c2), t)`` with ``c1 < c2``.
    """
    base = elementary_wall(n, m)
    subdivision = dict(subdivision or {})
    g = base.graph
    lab2v = {g.label(v): v for v in g.vertices}
    counts = {}
    for key, k in subdivision.items():
        c1, c2 = sorted(key)
        if c1 not in lab2v or c2 not in lab2v or not g.has_edge(lab2v[c1], lab2v[c2]):
            raise GraphError(f"unknown wall edge {key}")
        if k < 0:
            raise GraphError("subdivision counts must be non-negative")
        counts[(c1, c2)] = counts.get((c1, c2), 0) + k
    return subdivide_wall(base, {(lab2v[c1], lab2v[c2]): k for (c1, c2), k in counts.items()})


def subdivide_wall(w: Wall, counts: Mapping[tuple[int, int], int]) -> Wall:
    """Subdivide edges of any wall (keys are vertex-id pairs); paths are re-derived."""
    g = w.graph
    nxt = g.fresh_vertex()
    chains: dict[frozenset, list] = {}
    labels = g.labels
    es = []
    for u, v in g.edges():
        k = counts.get((u, v), counts.get((v, u), 0))
        chain = [u]
        for t in range(k):
            chain.append(nxt)
            a, b = sorted((labels.get(u, u), labels.get(v, v)), key=repr)
            labels[nxt] = ("sub", (a, b), t)
            nxt += 1
        chain.append(v)
        chains[frozenset((u, v))] = chain
        es.extend(zip(chain, chain[1:]))
    vs = set(g.vertices) | {x for c in chains.values() for x in c}
    ng = Graph(sorted(vs), es, labels)

    def expand(p: Path) -> Path:
        out = [p[0]]
        for a, b in zip(p, p[1:]):
            c = chains[frozenset((a, b))]
            seg = c if c[0] == a else c[::-1]
            out.extend(seg[1:])
        return Path(out)

    return Wall(ng, w.n_rows, w.m_cols, tuple(map(expand, w.horizontal_paths)), tuple(map(expand, w.vertical_paths)))


def subdivide_all(w: Wall, k: int = 1) -> Wall:
    return subdivide_wall(w, {e: k for e in w.graph.edges()})


def chordless_wall(n: int, m: int) -> Wall:
    """Smallest chordless subdivision: one extra vertex on each edge joining two branch vertices."""
    w = elementary_wall(n, m)
    g = w.graph
    return subdivide_wall(w, {(u, v): 1 for u, v in g.edges() if g.degree(u) == 3 and g.degree(v) == 3})


def random_wall(n: int, m: int, max_sub: int, seed: int) -> Wall:
    rng = random.Random(seed)
    w = elementary_wall(n, m)
    return subdivide_wall(w, {e: rng.randint(0, max_sub) for e in w.graph.edges()})


# --------------------------------------------------------------------------
# net graph replacement and stone walls
# --------------------------------------------------------------------------


def net_graph_replacement(g: Graph, v: int) -> Graph:
    """Replace degree-3 vertex ``v`` with a triangle ``xyz`` attached to its old neighbours.

    ``x, y, z`` are fresh ids attached to the neighbours ``a < b < c``
    respectively and labelled ``("net", label(v), label(nbr))``.
    """
    if v not in g:
        raise GraphError(f"unknown vertex {v}")
    if g.degree(v) != 3:
        raise GraphError(f"net graph replacement needs degree 3, vertex {v} has degree {g.degree(v)}")
    return _net_replace(g, v)[0]


def _net_replace(g: Graph, v: int) -> tuple[Graph, tuple[int, int, int]]:
    a, b, c = sorted(g.neighbors(v))
    x = g.fresh_vertex()
    y, z = x + 1, x + 2
    labels = g.labels
    lv = labels.pop(v, v)
    for new, old in ((x, a), (y, b), (z, c)):
        labels[new] = ("net", lv, labels.get(old, old))
    es = [e for e in g.edges() if v not in e]
    es += [(x, y), (y, z), (x, z), (x, a), (y, b), (z, c)]
    vs = (g.vertices - {v}) | {x, y, z}
    return Graph(sorted(vs), es, labels), (x, y, z)


@dataclass(frozen=True)
class StoneWall:
    graph: Graph
    base: Wall
    replaced: frozenset
    triangle_map: dict = field(default_factory=dict)

    @property
    def is_homogeneous(self) -> bool:
        return not self.replaced or self.replaced == self.base.branch_vertices

    def contracted(self) -> Graph:
        """Undo every replacement; recovers the base wall graph."""
        g = self.graph
        back = {}
        for v, tri in self.triangle_map.items():
            for t in tri:
                back[t] = v
        es = set()
        for u, w in g.edges():
            a, b = back.get(u, u), back.get(w, w)
            if a != b:
                es.add((min(a, b), max(a, b)))
        vs = (g.vertices - set(back)) | set(self.triangle_map)
        return Graph(sorted(vs), es, self.base.graph.labels)


def stone_wall_from(w: Wall, replaced: Iterable[int]) -> StoneWall:
    """Net-graph replacement at every vertex of ``replaced``, done in one pass.

    Replaced vertices are processed in increasing order; each gets three fresh
    consecutive ids attached to its base neighbours ``a < b < c``. An edge
    between two replaced vertices becomes an edge between their matching
    triangle vertices.
    """
    replaced = frozenset(replaced)
    bad = replaced - w.branch_vertices
    if bad:
        raise GraphError(f"not branch vertices of the wall: {sorted(bad)}")
    g = w.graph
    labels = g.labels
    nxt = g.fresh_vertex()
    tri: dict = {}
    port: dict = {}
    for v in sorted(replaced):
        lv = labels.pop(v, v)
        tri[v] = (nxt, nxt + 1, nxt + 2)
        for t, nb in zip(tri[v], sorted(g.neighbors(v))):
            port[(v, nb)] = t
            labels[t] = ("net", lv, g.label(nb) if g.label(nb) is not None else nb)
        nxt += 3
    es = []
    for u, x in g.edges():
        es.append((port.get((u, x), u), port.get((x, u), x)))
    for x, y, z in tri.values():
        es += [(x, y), (y, z), (x, z)]
    vs = (g.vertices - replaced) | {t for ts in tri.values() for t in ts}
    return StoneWall(Graph(sorted(vs), es, labels), w, replaced, tri)


def stone_wall(n: int, m: int, replaced: Iterable[int]) -> StoneWall:
    """Stone wall over the elementary (n x m)-wall; ``replaced`` are vertex ids of that wall."""
    return stone_wall_from(elementary_wall(n, m), replaced)


def random_stone_wall(w: Wall, p: float, seed: int) -> StoneWall:
    rng = random.Random(seed)
    return stone_wall_from(w, [v for v in sorted(w.branch_vertices) if rng.random() < p])


def random_uncontraction(h: Graph, max_size: int, seed: int, extra: float = 0.0) -> tuple[Graph, dict]:
    """A graph G with a contraction map onto ``h``: each vertex becomes a random tree.

    Every edge of ``h`` is realised by one edge between random members of the
    two trees, plus further such edges with probability ``extra``. Returns
    ``(G, phi)`` with ``phi`` mapping G's vertices to ``h``'s.
    """
    rng = random.Random(seed)
    phi: dict[int, object] = {}
    members: dict = {}
    edges = []
    for x in sorted(h.vertices):
        size = rng.randint(1, max_size)
        vs = list(range(len(phi), len(phi) + size))
        for i, v in enumerate(vs):
            phi[v] = x
            if i:
                edges.append((vs[rng.randrange(i)], v))
        members[x] = vs
    for x, y in h.edges():
        edges.append((rng.choice(members[x]), rng.choice(members[y])))
        while rng.random() < extra:
            edges.append((rng.choice(members[x]), rng.choice(members[y])))
    return Graph(sorted(phi), set(tuple(sorted(e)) for e in edges)), phi


# --------------------------------------------------------------------------
# small patterns
# --------------------------------------------------------------------------


class _Builder:
    def __init__(self):
        self.labels: dict[int, object] = {}
        self.edges: list[tuple[int, int]] = []

    def vertex(self, label) -> int:
        v = len(self.labels)
        self.labels[v] = label
        return v

    def path(self, start: int, end: int | None, length: int, tag: str) -> list[int]:
        """Chain of ``length`` edges from ``start`` to ``end`` (``end`` created if None)."""
        inner_count = length - 1 if end is not None else length
        chain = [start] + [self.vertex((tag, t + 1)) for t in range(inner_count)]
        if end is not None:
            chain.append(end)
        self.edges.extend(zip(chain, chain[1:]))
        return chain

    def graph(self) -> Graph:
        return Graph(range(len(self.labels)), self.edges, self.labels)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def make_theta(l1: int, l2: int, l3: int) -> Graph:
    _need(min(l1, l2, l3) >= 2, "theta paths need length at least 2")
    b = _Builder()
    a, z = b.vertex("a"), b.vertex("b")
    for k, length in enumerate((l1, l2, l3), 1):
        b.path(a, z, length, f"P{k}")
    return b.graph()


def make_prism(l1: int, l2: int, l3: int) -> Graph:
    _need(min(l1, l2, l3) >= 1, "prism paths need length at least 1")
    b = _Builder()
    tops = [b.vertex(t) for t in ("a", "b", "c")]
    bots = [b.vertex(t) for t in ("a'", "b'", "c'")]
    b.edges += [(tops[0], tops[1]), (tops[1], tops[2]), (tops[0], tops[2])]
    b.edges += [(bots[0], bots[1]), (bots[1], bots[2]), (bots[0], bots[2])]
    for k, length in enumerate((l1, l2, l3)):
        b.path(tops[k], bots[k], length, f"P{k + 1}")
    return b.graph()


def make_pyramid(l1: int, l2: int, l3: int) -> Graph:
    lengths = (l1, l2, l3)
    _need(min(lengths) >= 1, "pyramid paths need length at least 1")
    _need(sum(x >= 2 for x in lengths) >= 2, "at least two pyramid paths need length at least 2")
    b = _Builder()
    apex = b.vertex("x")
    tri = [b.vertex(t) for t in ("a", "b", "c")]
    b.edges += [(tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])]
    for k, length in enumerate(lengths):
        b.path(apex, tri[k], length, f"P{k + 1}")
    return b.graph()


def make_wheel(rim_length: int, spoke_positions: Iterable[int], reject_even: bool = False) -> Graph:
    """Hole ``0..rim_length-1`` plus a centre (id ``rim_length``) joined to the given rim positions."""
    spokes = sorted(set(spoke_positions))
    _need(rim_length >= 4, "wheel rim must be a hole (length >= 4)")
    _need(len(spokes) >= 3, "wheel needs at least three spokes")
    _need(all(0 <= s < rim_length for s in spokes), "spoke position outside the rim")
    if reject_even:
        _need(len(spokes) % 2 == 1, "even wheel rejected")
    labels = {i: ("rim", i) for i in range(rim_length)}
    labels[rim_length] = "center"
    es = [(i, (i + 1) % rim_length) for i in range(rim_length)] + [(rim_length, s) for s in spokes]
    return Graph(range(rim_length + 1), es, labels)


def make_extended_prism(la: int, la2: int, lb: int, lb2: int, lc: int) -> Graph:
    """Paths a..x, x..a', b..y, y..b', c..c' with triangles abc, a'b'c' and edge xy."""
    _need(min(la, la2, lb, lb2, lc) >= 1, "extended prism paths need length at least 1")
    b = _Builder()
    a, bb, c = (b.vertex(t) for t in ("a", "b", "c"))
    a2, b2, c2 = (b.vertex(t) for t in ("a'", "b'", "c'"))
    x, y = b.vertex("x"), b.vertex("y")
    b.edges += [(a, bb), (bb, c), (a, c), (a2, b2), (b2, c2), (a2, c2), (x, y)]
    b.path(a, x, la, "A")
    b.path(x, a2, la2, "A'")
    b.path(bb, y, lb, "B")
    b.path(y, b2, lb2, "B'")
    b.path(c, c2, lc, "C")
    return b.graph()


def make_cube() -> Graph:
    """Hole v1..v6 plus x ~ {v1, v3, v5} and y ~ {v2, v4, v6}."""
    labels = {i: f"v{i + 1}" for i in range(6)}
    labels[6], labels[7] = "x", "y"
    es = [(i, (i + 1) % 6) for i in range(6)] + [(6, 0), (6, 2), (6, 4), (7, 1), (7, 3), (7, 5)]
    return Graph(range(8), es, labels)


def make_net() -> Graph:
    return net_graph_replacement(Graph(range(4), [(0, 1), (0, 2), (0, 3)]), 0)


# --------------------------------------------------------------------------
# rings and 7-hyperantiholes
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class RingSpec:
    """Sizes of the cliques X_1..X_k plus the nesting thresholds between X_i and X_{i+1}.

    Vertex ``j`` of ``X_i`` is adjacent to vertex ``l`` of ``X_{i+1}`` iff
    ``j + l <= thresholds[i]``. Index 0 of every clique is therefore the most
    connected vertex and neighbourhoods shrink with the index, which is what
    makes closed neighbourhoods inside a clique nested.
    """

    clique_sizes: tuple[int, ...]
    thresholds: tuple[int, ...] | None = None

    @property
    def k(self) -> int:
        return len(self.clique_sizes)

    def resolved_thresholds(self) -> tuple[int, ...]:
        s = self.clique_sizes
        k = len(s)
        if self.thresholds is None:
            return tuple(max(s[i], s[(i + 1) % k]) - 1 for i in range(k))
        return tuple(self.thresholds)


def make_ring(spec: RingSpec) -> tuple[Graph, list[frozenset]]:
    """Build the ring and return it with its partition ``[X_1, ..., X_k]``."""
    sizes = spec.clique_sizes
    k = len(sizes)
    _need(k >= 3, "a ring needs at least three cliques")
    _need(min(sizes) >= 1, "ring cliques must be non-empty")
    th = spec.resolved_thresholds()
    _need(len(th) == k, "one threshold per consecutive pair")
    for i in range(k):
        # vertex 0 of X_i complete to X_{i+1} and vertex 0 of X_{i+1} complete to X_i
        _need(th[i] >= max(sizes[i], sizes[(i + 1) % k]) - 1, f"threshold {i} too small for condition 3")
    ids = {}
    labels = {}
    for i in range(k):
        for j in range(sizes[i]):
            ids[i, j] = len(ids)
            labels[ids[i, j]] = ("X", i + 1, j)
    es = set()
    for i in range(k):
        for j in range(sizes[i]):
            for j2 in range(j + 1, sizes[i]):
                es.add((ids[i, j], ids[i, j2]))
        i2 = (i + 1) % k
        for j in range(sizes[i]):
            for l in range(sizes[i2]):
                if j + l <= th[i]:
                    es.add(tuple(sorted((ids[i, j], ids[i2, l]))))
    g = Graph(range(len(ids)), es, labels)
    parts = [frozenset(ids[i, j] for j in range(sizes[i])) for i in range(k)]
    return g, parts


def random_ring_spec(rng: random.Random, k_range=(3, 9), max_size: int = 3) -> RingSpec:
    k = rng.randint(*k_range)
    sizes = [rng.randint(1, max_size) for _ in range(k)]
    th = []
    for i in range(k):
        lo = max(sizes[i], sizes[(i + 1) % k]) - 1
        hi = sizes[i] + sizes[(i + 1) % k] - 2
        th.append(rng.randint(lo, hi))
    return RingSpec(tuple(sizes), tuple(th))


def make_7hyperantihole(sizes: Iterable[int]) -> tuple[Graph, list[frozenset]]:
    sizes = list(sizes)
    _need(len(sizes) == 7, "a 7-hyperantihole has exactly seven cliques")
    _need(min(sizes) >= 1, "hyperantihole cliques must be non-empty")
    ids = {}
    labels = {}
    for i in range(7):
        for j in range(sizes[i]):
            ids[i, j] = len(ids)
            labels[ids[i, j]] = ("X", i + 1, j)
    es = []
    keys = list(ids)
    for p in range(len(keys)):
        for q in range(p + 1, len(keys)):
            (i, _), (i2, _) = keys[p], keys[q]
            d = (i - i2) % 7
            if d == 0 or d not in (1, 6):
                es.append((ids[keys[p]], ids[keys[q]]))
    parts = [frozenset(ids[i, j] for j in range(sizes[i])) for i in range(7)]
    return Graph(range(len(ids)), es, labels), parts
