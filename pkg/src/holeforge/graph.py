"""Immutable simple undirected graphs and the primitives the rest of the package builds on."""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Mapping
from typing import Hashable

Vertex = int
Edge = frozenset


class GraphError(ValueError):
    pass


def edge(u: Vertex, v: Vertex) -> frozenset:
    return frozenset((u, v))


class Graph:
    """A simple undirected graph with integer vertex ids.

    Instances are immutable; every "mutating" operation returns a new graph.
    ``labels`` maps a vertex to an arbitrary hashable tag (wall coordinates,
    role names, ...) and travels along through induced subgraphs.
    """

    __slots__ = ("_adj", "_labels", "_hash")

    def __init__(
        self,
        vertices: Iterable[Vertex] = (),
        edges: Iterable[Iterable[Vertex]] = (),
        labels: Mapping[Vertex, Hashable] | None = None,
    ):
        adj: dict[Vertex, set] = {v: set() for v in vertices}
        for e in edges:
            u, v = tuple(e)
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if u not in adj or v not in adj:
                raise GraphError(f"edge {u}-{v} has an endpoint outside the vertex set")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(n) for v, n in adj.items()}
        self._labels = {v: lab for v, lab in (labels or {}).items() if v in self._adj}
        self._hash = None

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[Vertex, Vertex]], vertices=(), labels=None) -> Graph:
        edges = [tuple(e) for e in edges]
        vs = set(vertices)
        for u, v in edges:
            vs.update((u, v))
        return cls(sorted(vs), edges, labels)

    @classmethod
    def from_adjacency(cls, adj: Mapping[Vertex, Iterable[Vertex]], labels=None) -> Graph:
        return cls(adj.keys(), ((u, v) for u, ns in adj.items() for v in ns if u < v), labels)

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> frozenset:
        return frozenset(self._adj)

    @property
    def labels(self) -> dict:
        return dict(self._labels)

    def label(self, v: Vertex):
        return self._labels.get(v)

    def vertex_by_label(self, lab) -> Vertex:
        for v, l in self._labels.items():
            if l == lab:
                return v
        raise KeyError(lab)

    def edges(self) -> list[tuple[Vertex, Vertex]]:
        """Sorted list of edges as ``(u, v)`` with ``u < v``."""
        return sorted((u, v) for u, ns in self._adj.items() for v in ns if u < v)

    def edge_set(self) -> frozenset:
        return frozenset(edge(u, v) for u, v in self.edges())

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __iter__(self):
        return iter(sorted(self._adj))

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(len(ns) for ns in self._adj.values()) // 2

    def neighbors(self, v: Vertex) -> frozenset:
        return self._adj[v]

    def degree(self, v: Vertex) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adj.values()), default=0)

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return v in self._adj.get(u, ())

    def adjacency(self) -> dict[Vertex, frozenset]:
        return dict(self._adj)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset((v, ns) for v, ns in self._adj.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- derived graphs --------------------------------------------------

    def induced(self, xs: Iterable[Vertex]) -> Graph:
        return induced_subgraph(self, xs)

    def remove(self, xs: Iterable[Vertex]) -> Graph:
        xs = set(xs)
        return induced_subgraph(self, self.vertices - xs)

    def add_edges(self, edges: Iterable[tuple[Vertex, Vertex]]) -> Graph:
        new = list(edges)
        vs = set(self._adj)
        for u, v in new:
            vs.update((u, v))
        return Graph(sorted(vs), self.edges() + new, self._labels)

    def relabel(self, mapping: Mapping[Vertex, Vertex]) -> Graph:
        return Graph(
            (mapping[v] for v in self._adj),
            ((mapping[u], mapping[v]) for u, v in self.edges()),
            {mapping[v]: lab for v, lab in self._labels.items()},
        )

    def canonical(self) -> tuple[Graph, dict[Vertex, Vertex]]:
        """Relabel to ``0..n-1`` preserving vertex order; returns (graph, old->new)."""
        mapping = {v: i for i, v in enumerate(sorted(self._adj))}
        return self.relabel(mapping), mapping

    def with_labels(self, labels: Mapping[Vertex, Hashable]) -> Graph:
        return Graph(self._adj.keys(), self.edges(), labels)

    def complement(self) -> Graph:
        vs = sorted(self._adj)
        return Graph(vs, ((u, v) for i, u in enumerate(vs) for v in vs[i + 1 :] if v not in self._adj[u]))

    def fresh_vertex(self) -> Vertex:
        return max(self._adj, default=-1) + 1

    # -- structure -------------------------------------------------------

    def components(self, within: Iterable[Vertex] | None = None) -> list[frozenset]:
        """Connected components of ``G[within]`` (whole graph by default), ordered by min vertex."""
        allowed = set(self._adj) if within is None else set(within)
        seen: set = set()
        comps = []
        for s in sorted(allowed):
            if s in seen:
                continue
            comp = {s}
            queue = deque([s])
            seen.add(s)
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if w in allowed and w not in seen:
                        seen.add(w)
                        comp.add(w)
                        queue.append(w)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self, within: Iterable[Vertex] | None = None) -> bool:
        return len(self.components(within)) <= 1

    def is_clique(self, xs: Iterable[Vertex]) -> bool:
        xs = list(xs)
        return all(xs[j] in self._adj[xs[i]] for i in range(len(xs)) for j in range(i + 1, len(xs)))

    def neighborhood_of_set(self, xs: Iterable[Vertex]) -> frozenset:
        """N(X): vertices outside X with a neighbour in X."""
        xs = set(xs)
        out = set()
        for x in xs:
            out |= self._adj[x]
        return frozenset(out - xs)

    def bfs_distances(self, sources: Iterable[Vertex], within: Iterable[Vertex] | None = None) -> dict:
        allowed = None if within is None else set(within)
        dist = {}
        queue = deque()
        for s in sources:
            if s not in dist:
                dist[s] = 0
                queue.append(s)
        while queue:
            u = queue.popleft()
            for w in sorted(self._adj[u]):
                if w not in dist and (allowed is None or w in allowed):
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def shortest_path(self, sources: Iterable[Vertex], targets: Iterable[Vertex], within=None) -> list | None:
        """A shortest path from any source to any target using only ``within`` (if given).

        Shortest paths are automatically induced in ``G[within]``. Ties are broken by
        smallest vertex id so results are deterministic.
        """
        allowed = None if within is None else set(within)
        targets = set(targets)
        parent: dict = {}
        queue = deque()
        for s in sorted(set(sources)):
            if allowed is not None and s not in allowed:
                continue
            parent[s] = None
            queue.append(s)
        while queue:
            u = queue.popleft()
            if u in targets:
                path = [u]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path[::-1]
            for w in sorted(self._adj[u]):
                if w not in parent and (allowed is None or w in allowed):
                    parent[w] = u
                    queue.append(w)
        return None

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(sorted(self._adj))
        g.add_edges_from(self.edges())
        return g

    @classmethod
    def from_networkx(cls, g) -> Graph:
        mapping = {v: i for i, v in enumerate(sorted(g.nodes(), key=repr))}
        return cls(
            range(len(mapping)),
            ((mapping[u], mapping[v]) for u, v in g.edges()),
            {i: v for v, i in mapping.items()},
        )


def induced_subgraph(g: Graph, xs: Iterable[Vertex]) -> Graph:
    xs = set(xs)
    unknown = xs - g.vertices
    if unknown:
        raise GraphError(f"unknown vertices {sorted(unknown)}")
    adj = g.adjacency()
    return Graph(sorted(xs), ((u, v) for u in xs for v in adj[u] if v in xs and u < v), g.labels)


def disjoint_union(*graphs: Graph) -> tuple[Graph, list[dict]]:
    """Union with vertices renumbered consecutively; returns the maps old->new per operand."""
    maps = []
    vs, es, labels = [], [], {}
    offset = 0
    for g in graphs:
        mp = {v: offset + i for i, v in enumerate(sorted(g.vertices))}
        offset += len(mp)
        maps.append(mp)
        vs.extend(mp.values())
        es.extend((mp[u], mp[v]) for u, v in g.edges())
        labels.update({mp[v]: lab for v, lab in g.labels.items()})
    return Graph(vs, es, labels), maps


# -- named small graphs ------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(range(n), ((i, j) for i in range(n) for j in range(i + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(range(n), ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(range(n), ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph(range(p + q), ((i, p + j) for i in range(p) for j in range(q)))


# -- paths -------------------------------------------------------------------


class Path(tuple):
    """An ordered sequence of distinct vertices."""

    def __new__(cls, vertices: Iterable[Vertex]):
        vs = tuple(vertices)
        if len(set(vs)) != len(vs):
            raise GraphError("path vertices must be distinct")
        return super().__new__(cls, vs)

    @property
    def ends(self) -> tuple[Vertex, Vertex]:
        return (self[0], self[-1])

    @property
    def interior(self) -> tuple:
        return tuple(self[1:-1])

    @property
    def length(self) -> int:
        return max(len(self) - 1, 0)

    def subpath(self, a: Vertex, b: Vertex) -> Path:
        i, j = self.index(a), self.index(b)
        if i <= j:
            return Path(self[i : j + 1])
        return Path(self[j : i + 1][::-1])

    def is_path_in(self, g: Graph) -> bool:
        return all(g.has_edge(self[i], self[i + 1]) for i in range(len(self) - 1))

    def is_chordless_in(self, g: Graph) -> bool:
        """True iff consecutive vertices are adjacent and no others are."""
        pos = {v: i for i, v in enumerate(self)}
        for i, v in enumerate(self):
            for w in g.neighbors(v):
                j = pos.get(w)
                if j is not None and abs(i - j) != 1:
                    return False
        return self.is_path_in(g)


def is_hole(g: Graph, cycle: Iterable[Vertex]) -> bool:
    """Is the cyclic sequence a chordless cycle of length at least 4 in ``g``?"""
    cyc = list(cycle)
    k = len(cyc)
    if k < 4 or len(set(cyc)) != k:
        return False
    pos = {v: i for i, v in enumerate(cyc)}
    for i, v in enumerate(cyc):
        inside = [pos[w] for w in g.neighbors(v) if w in pos]
        if sorted(inside) != sorted({(i - 1) % k, (i + 1) % k}):
            return False
    return True


# -- operations --------------------------------------------------------------


def line_graph(g: Graph) -> Graph:
    """L(G); vertex i of the result is the i-th edge of ``g.edges()``, labelled by that edge."""
    es = g.edges()
    by_vertex: dict[Vertex, list[int]] = {v: [] for v in g.vertices}
    for i, (u, v) in enumerate(es):
        by_vertex[u].append(i)
        by_vertex[v].append(i)
    new_edges = set()
    for inc in by_vertex.values():
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                new_edges.add((inc[a], inc[b]))
    return Graph(range(len(es)), new_edges, {i: e for i, e in enumerate(es)})


def subdivide(g: Graph, e: tuple[Vertex, Vertex], k: int) -> Graph:
    """Replace edge ``e`` by a path with ``k`` new internal vertices."""
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"edge {u}-{v} not in graph")
    if k < 0:
        raise GraphError("subdivision count must be non-negative")
    if k == 0:
        return g
    start = g.fresh_vertex()
    chain = [u] + list(range(start, start + k)) + [v]
    es = [x for x in g.edges() if set(x) != {u, v}]
    es += [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    return Graph(sorted(g.vertices) + chain[1:-1], es, g.labels)


def distance(g: Graph, xs: Iterable[Vertex], ys: Iterable[Vertex]) -> float:
    xs, ys = set(xs), set(ys)
    if not xs or not ys:
        raise GraphError("distance needs non-empty vertex sets")
    if (xs | ys) - g.vertices:
        raise GraphError("unknown vertices")
    dist = g.bfs_distances(xs)
    return min((dist[y] for y in ys if y in dist), default=math.inf)


def is_chordless_graph(g: Graph) -> bool:
    """True iff no cycle of length >= 4 has a chord.

    An edge ``uv`` is a chord of some cycle exactly when ``u`` and ``v`` are
    joined, outside the edge itself, by two internally disjoint paths each of
    length >= 2 (the cycle then is the union of those two paths). Equivalently,
    after deleting the edge, ``u`` and ``v`` still have two internally disjoint
    paths avoiding a direct connection, i.e. local connectivity >= 2 in G - uv.
    Checked per edge with a unit-capacity max-flow; O(m * (n + m)).
    """
    for u, v in g.edges():
        if _disjoint_paths_without_edge(g, u, v) >= 2:
            return False
    return True


def _disjoint_paths_without_edge(g: Graph, s: Vertex, t: Vertex, limit: int = 2) -> int:
    # Vertex-disjoint s-t paths in G - st via node splitting + augmenting paths.
    # Node x is split into (x, 0) -> (x, 1) with capacity 1 (except s, t).
    cap: dict = {}

    def add(a, b, c):
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)

    out: dict = {}
    for x in g.vertices:
        c = limit if x in (s, t) else 1
        add((x, 0), (x, 1), c)
    for a, b in g.edges():
        if {a, b} == {s, t}:
            continue
        add((a, 1), (b, 0), 1)
        add((b, 1), (a, 0), 1)
    for (a, b) in cap:
        out.setdefault(a, []).append(b)
    source, sink = (s, 1), (t, 0)
    flow = 0
    while flow < limit:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in out.get(a, ()):
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while parent[b] is not None:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow


def verify_contraction_map(g: Graph, h: Graph, phi: Mapping[Vertex, Vertex]) -> bool:
    return not contraction_violations(g, h, phi)


def contraction_violations(g: Graph, h: Graph, phi: Mapping[Vertex, Vertex]) -> list[str]:
    """All reasons ``phi`` fails to witness H as a contraction of G (empty list if valid)."""
    problems = []
    missing = g.vertices - set(phi)
    if missing:
        problems.append(f"phi undefined on {sorted(missing)}")
        return problems
    bad = {phi[v] for v in g.vertices} - h.vertices
    if bad:
        problems.append(f"phi maps outside V(H): {sorted(bad, key=repr)}")
        return problems
    pre: dict = {x: set() for x in h.vertices}
    for v in g.vertices:
        pre[phi[v]].add(v)
    for x, block in pre.items():
        if not block:
            problems.append(f"not surjective: {x!r} has empty pre-image")
        elif not g.is_connected(block):
            problems.append(f"pre-image of {x!r} is disconnected")
    for x, y in h.edges():
        if pre[x] and pre[y] and not g.is_connected(pre[x] | pre[y]):
            problems.append(f"pre-images of H-edge {x!r}-{y!r} are not joined")
    for u, v in g.edges():
        if phi[u] != phi[v] and not h.has_edge(phi[u], phi[v]):
            problems.append(f"G-edge {u}-{v} maps to non-edge {phi[u]!r}-{phi[v]!r}")
    return problems


def contract_edge(g: Graph, u: Vertex, v: Vertex) -> tuple[Graph, dict]:
    """Contract ``uv`` into ``u``; returns the simple result and the contraction map."""
    if not g.has_edge(u, v):
        raise GraphError(f"edge {u}-{v} not in graph")
    phi = {x: (u if x == v else x) for x in g.vertices}
    es = {tuple(sorted((phi[a], phi[b]))) for a, b in g.edges() if phi[a] != phi[b]}
    return Graph(sorted(g.vertices - {v}), es, g.labels), phi
