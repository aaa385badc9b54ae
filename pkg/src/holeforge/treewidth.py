"""Exact tree-width, tree-decomposition validation and complete-graph minor search."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from .detectors import DEFAULT_BUDGET, _Clock
from .graph import Graph, GraphError

TREEWIDTH_CAP = 20
MINOR_CAP = 18


class SizeCapExceeded(GraphError):
    pass


# --------------------------------------------------------------------------
# tree decompositions
# --------------------------------------------------------------------------


@dataclass
class TreeDecomposition:
    bags: dict[int, frozenset]
    edges: list[tuple[int, int]] = field(default_factory=list)

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags.values()), default=0) - 1

    def neighbors(self) -> dict[int, set]:
        adj = {t: set() for t in self.bags}
        for s, t in self.edges:
            adj[s].add(t)
            adj[t].add(s)
        return adj


@dataclass(frozen=True)
class TDCheck:
    valid: bool
    width: int
    problems: tuple[str, ...] = ()


def validate_tree_decomposition(g: Graph, td: TreeDecomposition) -> TDCheck:
    """Check vertex coverage, edge coverage and per-vertex subtree connectivity.

    A tree that is not a tree (cycle, disconnected, dangling edge) raises
    :class:`GraphError`; axiom failures are reported in ``problems``.
    """
    nodes = set(td.bags)
    for s, t in td.edges:
        if s not in nodes or t not in nodes or s == t:
            raise GraphError(f"tree edge {s}-{t} is malformed")
    if len({frozenset(e) for e in td.edges}) != len(td.edges):
        raise GraphError("duplicate tree edge")
    if nodes and len(td.edges) != len(nodes) - 1:
        raise GraphError("decomposition tree is not a tree (edge count)")
    adj = td.neighbors()
    if nodes:
        start = next(iter(nodes))
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u] - seen:
                seen.add(w)
                queue.append(w)
        if seen != nodes:
            raise GraphError("decomposition tree is disconnected")
    for t, bag in td.bags.items():
        extra = set(bag) - g.vertices
        if extra:
            raise GraphError(f"bag {t} holds unknown vertices {sorted(extra)}")

    problems = []
    holders: dict[int, set] = {v: set() for v in g.vertices}
    for t, bag in td.bags.items():
        for v in bag:
            holders[v].add(t)
    missing = sorted(v for v, h in holders.items() if not h)
    if missing:
        problems.append(f"vertices in no bag: {missing}")
    for u, v in g.edges():
        if not holders[u] & holders[v]:
            problems.append(f"edge {u}-{v} in no bag")
    for v, h in holders.items():
        if len(h) > 1:
            start = next(iter(h))
            seen = {start}
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if y in h and y not in seen:
                        seen.add(y)
                        queue.append(y)
            if seen != h:
                problems.append(f"bags holding {v} are not connected")
    return TDCheck(not problems, td.width, tuple(problems))


def decomposition_from_ordering(g: Graph, order: list) -> TreeDecomposition:
    """Standard elimination-ordering decomposition: one bag per vertex, width = max fill degree."""
    pos = {v: i for i, v in enumerate(order)}
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    bags = {}
    higher = {}
    for v in order:
        nb = {w for w in adj[v] if pos[w] > pos[v]}
        higher[v] = nb
        bags[pos[v]] = frozenset(nb | {v})
        for a in nb:
            adj[a] |= nb - {a}
    edges = []
    roots = []
    for v in order:
        if higher[v]:
            parent = min(higher[v], key=pos.__getitem__)
            edges.append((pos[v], pos[parent]))
        else:
            roots.append(pos[v])
    # one root per component; chain them so the result is a single tree
    for r1, r2 in zip(roots, roots[1:]):
        edges.append((r1, r2))
    if not bags:
        return TreeDecomposition({0: frozenset()}, [])
    return TreeDecomposition(bags, edges)


# --------------------------------------------------------------------------
# exact tree-width
# --------------------------------------------------------------------------


def _masks(g: Graph):
    verts = sorted(g)
    idx = {v: i for i, v in enumerate(verts)}
    nbr = [0] * len(verts)
    for v in verts:
        for w in g.neighbors(v):
            nbr[idx[v]] |= 1 << idx[w]
    return verts, nbr


def _q_size(nbr: list[int], s_mask: int, v: int) -> int:
    """|Q(S, v)|: vertices outside S + v reachable from v through S."""
    comp = 1 << v
    frontier = comp
    reach = 0
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            i = low.bit_length() - 1
            f ^= low
            nxt |= nbr[i]
        reach |= nxt
        frontier = nxt & s_mask & ~comp
        comp |= frontier
    return bin(reach & ~comp & ~s_mask & ~(1 << v)).count("1")


def _min_fill_order(g: Graph) -> tuple[int, list]:
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    order, width = [], 0
    while adj:
        def fill(v):
            ns = list(adj[v])
            return sum(1 for i in range(len(ns)) for j in range(i + 1, len(ns)) if ns[j] not in adj[ns[i]])

        v = min(adj, key=lambda x: (fill(x), len(adj[x]), x))
        width = max(width, len(adj[v]))
        ns = adj.pop(v)
        for a in ns:
            adj[a] |= ns - {a}
            adj[a].discard(v)
        order.append(v)
    return width, order


def _mmw_lower_bound(g: Graph) -> int:
    """Minor-min-width: contract a min-degree vertex into its least-shared neighbour."""
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    best = 0
    while len(adj) > 1:
        v = min(adj, key=lambda x: (len(adj[x]), x))
        best = max(best, len(adj[v]))
        if not adj[v]:
            del adj[v]
            continue
        u = min(adj[v], key=lambda w: (len(adj[w] & adj[v]), w))
        for w in adj[v] - {u}:
            adj[w].discard(v)
            adj[w].add(u)
            adj[u].add(w)
        adj[u].discard(v)
        del adj[v]
    return best


def _elimination_feasible(nbr: list[int], n: int, k: int, clock: _Clock) -> list[int] | None:
    """An elimination order of width <= k, or None. BFS over eliminated-vertex sets."""
    full = (1 << n) - 1
    parent: dict[int, tuple[int, int]] = {0: (-1, -1)}
    layer = [0]
    while layer:
        nxt_layer = []
        for s in layer:
            clock.tick()
            if n - bin(s).count("1") - 1 <= k:
                order = _unwind(parent, s)
                order += [i for i in range(n) if not s >> i & 1]
                return order
            for v in range(n):
                if s >> v & 1:
                    continue
                t = s | (1 << v)
                if t in parent:
                    continue
                if _q_size(nbr, s, v) <= k:
                    parent[t] = (s, v)
                    nxt_layer.append(t)
        layer = nxt_layer
    return None


def _unwind(parent, s) -> list[int]:
    out = []
    while s:
        s, v = parent[s]
        out.append(v)
    return out[::-1]


def treewidth_with_ordering(g: Graph, budget: float | None = None) -> tuple[int, list]:
    if g.n > TREEWIDTH_CAP:
        raise SizeCapExceeded(f"exact tree-width capped at {TREEWIDTH_CAP} vertices, got {g.n}")
    if g.n == 0:
        return -1, []
    verts, nbr = _masks(g)
    ub, ub_order = _min_fill_order(g)
    lb = _mmw_lower_bound(g)
    clock = _Clock(budget)
    for k in range(lb, ub):
        order = _elimination_feasible(nbr, len(verts), k, clock)
        if order is not None:
            return k, [verts[i] for i in order]
    return ub, ub_order


def exact_treewidth(g: Graph, budget: float | None = None) -> int:
    """Exact tree-width for at most 20 vertices (empty graph: -1)."""
    return treewidth_with_ordering(g, budget)[0]


def optimal_tree_decomposition(g: Graph) -> TreeDecomposition:
    _, order = treewidth_with_ordering(g)
    return decomposition_from_ordering(g, order)


# --------------------------------------------------------------------------
# complete-graph minors
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class MinorWitness:
    branch_sets: tuple[frozenset, ...]


def minor_witness_violations(g: Graph, w: MinorWitness) -> list[str]:
    out = []
    sets = list(w.branch_sets)
    seen = set()
    for i, b in enumerate(sets):
        if not b or not set(b) <= g.vertices:
            out.append(f"B_{i + 1} empty or outside V(G)")
            continue
        if seen & b:
            out.append(f"B_{i + 1} overlaps an earlier set")
        seen |= b
        if not g.is_connected(b):
            out.append(f"B_{i + 1} is disconnected")
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if not any(g.neighbors(v) & sets[j] for v in sets[i]):
                out.append(f"no edge between B_{i + 1} and B_{j + 1}")
    return out


def has_minor(g: Graph, l: int, budget: float | None = DEFAULT_BUDGET) -> MinorWitness | None:
    """Branch sets of a K_l minor, or None.

    For a connected graph a K_l model can always be grown into a partition
    of the vertex set, so the search only contracts and deletes edges:
    a vertex of degree below ``l - 1`` can never be a whole branch set and is
    forced to merge with a neighbour; otherwise branch on contracting or
    deleting one edge. Degree <= 1 vertices are dropped and degree-2 vertices
    suppressed (both safe for ``l >= 4``). States are memoised.
    """
    if not 2 <= l <= 6:
        raise ValueError("l must be in 2..6")
    if l == 6 and g.n > MINOR_CAP:
        raise SizeCapExceeded(f"K_6 minor search capped at {MINOR_CAP} vertices, got {g.n}")
    clock = _Clock(budget)
    for comp in g.components():
        adj = {v: set(g.neighbors(v)) & comp for v in comp}
        sets = {v: frozenset({v}) for v in comp}
        res = _minor_search(adj, sets, l, {}, clock)
        if res is not None:
            return MinorWitness(tuple(sorted(res, key=min)))
    return None


def _clique_of_size(adj: Mapping[int, set], l: int) -> list | None:
    cands = sorted(v for v in adj if len(adj[v]) >= l - 1)

    def rec(q: list, pool: list):
        if len(q) == l:
            return q
        for i, c in enumerate(pool):
            r = rec(q + [c], [d for d in pool[i + 1 :] if d in adj[c]])
            if r:
                return r
        return None

    return rec([], cands)


def _contract(adj, sets, u, v):
    """Merge v into u; returns fresh copies."""
    adj = {x: set(ns) for x, ns in adj.items()}
    sets = dict(sets)
    for w in adj.pop(v):
        adj[w].discard(v)
        if w != u:
            adj[w].add(u)
            adj[u].add(w)
    sets[u] = sets[u] | sets.pop(v)
    return adj, sets


def _reduce(adj, sets, l):
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            d = len(adj[v])
            if d <= 1 and l >= 3:
                for w in adj.pop(v):
                    adj[w].discard(v)
                sets.pop(v)
                changed = True
                break
            if d == 2 and l >= 4:
                u = min(adj[v])
                adj, sets = _contract(adj, sets, u, v)
                changed = True
                break
    return adj, sets


def _minor_search(adj, sets, l, memo, clock):
    clock.tick()
    adj = {x: set(ns) for x, ns in adj.items()}
    adj, sets = _reduce(adj, dict(sets), l)
    key = frozenset((x, frozenset(ns)) for x, ns in adj.items())
    if key in memo:
        return memo[key]
    memo[key] = None
    n = len(adj)
    m = sum(map(len, adj.values())) // 2
    if n < l or m < l * (l - 1) // 2:
        return None
    q = _clique_of_size(adj, l)
    if q:
        memo[key] = [sets[v] for v in q]
        return memo[key]
    if n == l:
        return None
    v = min(adj, key=lambda x: (len(adj[x]), x))
    if len(adj[v]) < l - 1:
        for u in sorted(adj[v]):
            a2, s2 = _contract(adj, sets, u, v)
            r = _minor_search(a2, s2, l, memo, clock)
            if r:
                memo[key] = r
                return r
        return None
    u = min(adj[v])
    a2, s2 = _contract(adj, sets, u, v)
    r = _minor_search(a2, s2, l, memo, clock)
    if r is None:
        a3 = {x: set(ns) for x, ns in adj.items()}
        a3[u].discard(v)
        a3[v].discard(u)
        comps = _components(a3)
        for comp in comps:
            sub = {x: a3[x] for x in comp}
            r = _minor_search(sub, {x: sets[x] for x in comp}, l, memo, clock)
            if r:
                break
    memo[key] = r
    return r


def _components(adj) -> list[set]:
    seen, out = set(), []
    for s in sorted(adj):
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        seen.add(s)
        while queue:
            x = queue.popleft()
            for w in adj[x]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        out.append(comp)
    return out

