"""Forks and semi-forks from seven-part partitions, and induced stone walls
from a contraction onto a triangulated grid.

A fork is a tree with exactly three leaves; a semi-fork is a triangle with a
pendant path at each of its vertices. Both are recorded as a centre (one
vertex, or the three triangle vertices) plus three legs, each leg listed from
the centre outwards to its tip.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Mapping
from dataclasses import dataclass

from .detectors import PatternWitness
from .generators import StoneWall, Wall, elementary_wall, triangulated_grid
from .graph import Graph, GraphError, Path, contraction_violations
from .walls import stone_wall_shape

_PARTS = ("A_", "A", "B_", "B", "C_", "C", "S")
# parts allowed to touch each part (besides itself)
_ALLOWED = {
    "A_": {"A"},
    "A": {"A_", "S"},
    "B_": {"B"},
    "B": {"B_", "S"},
    "C_": {"C"},
    "C": {"C_", "S"},
    "S": {"A", "B", "C"},
}


@dataclass(frozen=True)
class SeptuplePartition:
    """Seven vertex sets of ``graph`` and tips ``a`` in A', ``b`` in B', ``c`` in C'.

    ``A_`` stands for A' (and so on). Every edge among these sets lies inside
    one set or joins A'-A, B'-B, C'-C or S to one of A, B, C.
    """

    graph: Graph
    A_: frozenset
    A: frozenset
    B_: frozenset
    B: frozenset
    C_: frozenset
    C: frozenset
    S: frozenset
    a: object
    b: object
    c: object

    def part(self, name: str) -> frozenset:
        return getattr(self, name)


def partition_violations(p: SeptuplePartition) -> list[str]:
    g = p.graph
    out = []
    where = {}
    for name in _PARTS:
        xs = p.part(name)
        if not xs:
            out.append(f"{name} is empty")
        elif not g.is_connected(xs):
            out.append(f"{name} is not connected")
        for v in xs:
            if v not in g:
                out.append(f"{v!r} not in graph")
            elif v in where:
                out.append(f"{v!r} in both {where[v]} and {name}")
            where[v] = name
    for tip, name in ((p.a, "A_"), (p.b, "B_"), (p.c, "C_")):
        if tip not in p.part(name):
            out.append(f"tip {tip!r} not in {name}")
    for u, v in g.edges():
        if u in where and v in where and where[u] != where[v] and where[v] not in _ALLOWED[where[u]]:
            out.append(f"edge {u}-{v} joins {where[u]} and {where[v]}")
    return out


@dataclass(frozen=True)
class Fork:
    kind: str  # "fork" or "semi-fork"
    centre: tuple  # (x,) or the triangle
    legs: dict  # "a" / "b" / "c" -> tuple from the centre to the tip

    @property
    def vertices(self) -> frozenset:
        return frozenset(self.centre).union(*self.legs.values())

    def witness(self) -> PatternWitness:
        roles = {"tips": tuple(self.legs[k][-1] for k in "abc"), "legs": tuple(self.legs[k] for k in "abc")}
        if self.kind == "semi-fork":
            roles["triangle"] = self.centre
        else:
            roles["centre"] = self.centre
        return PatternWitness(self.kind, roles)


def _first_touching(g: Graph, start, allowed: set, targets: set) -> list:
    """BFS path from ``start`` inside ``allowed`` to the nearest vertex with a neighbour in ``targets``."""
    parent = {start: None}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        if g.neighbors(x) & targets:
            path = []
            while x is not None:
                path.append(x)
                x = parent[x]
            return path[::-1]
        for y in sorted(g.neighbors(x)):
            if y in allowed and y not in parent:
                parent[y] = x
                queue.append(y)
    raise GraphError("A-side cannot reach the b-c path")


def fork_from_partition(p: SeptuplePartition, check: bool = True) -> Fork:
    if check:
        bad = partition_violations(p)
        if bad:
            raise GraphError("invalid partition: " + "; ".join(bad[:3]))
    g = p.graph
    path = g.shortest_path([p.b], [p.c], within=p.B_ | p.B | p.S | p.C | p.C_)
    if path is None:
        raise GraphError("no b-c path through S")
    on_path = set(path)
    q = _first_touching(g, p.a, (p.A_ | p.A | p.S) - on_path, on_path)
    w = q[-1]
    idx = sorted(path.index(x) for x in g.neighbors(w) & on_path)
    iu, iv = idx[0], idx[-1]
    a_leg = tuple(reversed(q))
    b_leg = tuple(reversed(path[: iu + 1]))
    c_leg = tuple(path[iv:])
    if iu == iv:
        return Fork("fork", (path[iu],), {"a": (path[iu],) + a_leg, "b": b_leg, "c": c_leg})
    if iv == iu + 1:
        return Fork("semi-fork", (w, path[iu], path[iv]), {"a": a_leg, "b": b_leg, "c": c_leg})
    return Fork("fork", (w,), {"a": a_leg, "b": (w,) + b_leg, "c": (w,) + c_leg})


def find_fork_or_semifork(p: SeptuplePartition) -> PatternWitness:
    """An induced fork or semi-fork whose degree-1 vertices are exactly a, b, c.

    P is a shortest b-c path through B' B S C C'; a shortest path from a
    through A' A S (avoiding P) stops at the first vertex w seeing P; u and v
    are the P-neighbours of w closest to b and to c. u = v gives a fork
    centred at u, adjacent u, v a semi-fork on the triangle wuv, and
    otherwise a fork centred at w.
    """
    return fork_from_partition(p).witness()


def validate_fork(g: Graph, wit: PatternWitness) -> bool:
    h = g.induced(wit.vertices)
    leaves = {v for v in h if h.degree(v) == 1}
    if leaves != set(wit.roles["tips"]) or not h.is_connected():
        return False
    if wit.kind == "fork":
        return h.m == h.n - 1 and all(h.degree(v) <= 3 for v in h)
    tri = wit.roles["triangle"]
    return h.m == h.n and h.is_clique(tri) and all(h.degree(v) <= 3 for v in h)


# --------------------------------------------------------------------------
# induced stone wall from a triangulated-grid witness
# --------------------------------------------------------------------------

# cells of the 4x4 block used by each part, local 1-based (row, col)
_BLOCK = {"A_": (1, 1), "A": (2, 1), "B_": (1, 4), "B": (1, 3), "C_": (4, 1), "C": (3, 2), "S": (2, 2)}
_TIP_PART = {"a": "A_", "b": "B_", "c": "C_"}


def wall_shape_for(k: int) -> tuple[int, int]:
    """(rows, columns) of the wall built from a k x k triangulated grid."""
    per_side = (k - 4) // 8 + 1 if k >= 4 else 0
    return per_side, per_side // 2


def _ports(s: int, t: int) -> dict:
    """Port (a, b or c) used in each direction by the fork at position (s, t)."""
    if s % 2 == t % 2:
        return {"left": "a", "right": "b", "down": "c"}
    return {"up": "a", "right": "b", "left": "c"}


def _positions(n: int, m: int) -> list[tuple[int, int]]:
    out = []
    for s in range(n):
        ts = range(2 * m)
        if s == 0:
            ts = range(2 * m - 1)
        elif s == n - 1:
            ts = range(2 * m - 1) if n % 2 == 0 else range(1, 2 * m)
        out += [(s, t) for t in ts]
    return out


def _corridor(kind: str, s: int, t: int) -> list[tuple[int, int]]:
    r, c = 8 * s, 8 * t
    if kind == "D":  # right port of (s, t) to the top-left port of (s, t + 1)
        return [(r + 1, c + 5 + d) for d in range(4)]
    if kind == "U":  # right port of (s, t) to the bottom-left port of (s, t + 1)
        return [(r + 1, c + 5), (r + 1, c + 6), (r + 1, c + 7), (r + 2, c + 7), (r + 3, c + 7), (r + 4, c + 7), (r + 4, c + 8)]
    return [(r + 5 + d, c + 1) for d in range(4)]  # rung from (s, t) down to (s + 1, t)


def _connect(g: Graph, leg_x: tuple, cell_x: set, leg_y: tuple, cell_y: set, corridor: set):
    """Join two legs by an induced path through ``corridor``; returns the cut legs and the interior."""
    xs = [v for v in leg_x if v in cell_x]
    ys = [v for v in leg_y if v in cell_y]
    path = g.shortest_path(xs, ys, within=set(xs) | set(ys) | corridor)
    if path is None or len(path) < 3:
        raise GraphError("corridor does not join the two forks")
    inner = path[1:-1]
    ix = min(i for i, v in enumerate(leg_x) if g.has_edge(v, inner[0]))
    iy = min(i for i, v in enumerate(leg_y) if g.has_edge(v, inner[-1]))
    return leg_x[: ix + 1], leg_y[: iy + 1], inner


def _grid_cells(k: int) -> dict:
    t = triangulated_grid(k, k)
    return {t.label(v): v for v in t}


def extract_induced_stone_wall(g: Graph, phi: Mapping, h: int, k: int | None = None, check: bool = True) -> StoneWall:
    """An induced stone wall in ``g`` from a contraction ``phi`` onto triangulated_grid(k, k).

    ``phi`` maps vertices of ``g`` to vertex ids of the grid. The grid is cut
    into 4x4 blocks; every second block in every second block row hosts a
    fork or semi-fork (cells A' A B' B C' C S at (1,1) (2,1) (1,4) (1,3)
    (4,1) (3,2) (2,2)), and forks are joined by shortest induced paths
    through the unused blocks in between. A k x k grid gives
    ``wall_shape_for(k)``; with k = 8h that is an (h x floor(h/2))-wall,
    so h >= 4 is needed for a wall at all.
    """
    if k is None:
        side = len(set(phi.values())) ** 0.5
        k = round(side)
        if k * k != len(set(phi.values())):
            raise GraphError("phi is not onto a square grid")
    if k < 8 * h:
        raise GraphError(f"grid side {k} is below 8h = {8 * h}")
    n, m = wall_shape_for(k)
    if n < 2 or m < 2:
        raise GraphError(f"a {k} x {k} grid is too small for a wall; need k >= 28")
    cells = _grid_cells(k)
    if check:
        bad = contraction_violations(g, triangulated_grid(k, k), phi)
        if bad:
            raise GraphError("invalid witness: " + "; ".join(bad[:3]))
    pre: dict = {}
    for v, x in phi.items():
        pre.setdefault(x, set()).add(v)

    def cell(i, j) -> set:
        return pre[cells[(i, j)]]

    positions = _positions(n, m)
    present = set(positions)

    # which ports are used, and the corridor behind each
    links = []  # (pos1, port1, pos2, port2, corridor cells)
    for s, t in positions:
        if (s, t + 1) in present:
            kind = "D" if s % 2 == (t + 1) % 2 else "U"
            links.append(((s, t), "right", (s, t + 1), "left", _corridor(kind, s, t)))
        if s % 2 == t % 2 and (s + 1, t) in present:
            links.append(((s, t), "down", (s + 1, t), "up", _corridor("V", s, t)))
    used = {p: {} for p in positions}
    for p1, d1, p2, d2, cor in links:
        used[p1][_ports(*p1)[d1]] = cor[0]
        used[p2][_ports(*p2)[d2]] = cor[-1]

    forks = {}
    for s, t in positions:
        r, c = 8 * s, 8 * t
        parts = {name: frozenset(cell(r + i, c + j)) for name, (i, j) in _BLOCK.items()}
        tips = {}
        for port, part in _TIP_PART.items():
            cands = sorted(parts[part])
            if port in used[(s, t)]:
                out = cell(*used[(s, t)][port])
                cands = [v for v in cands if g.neighbors(v) & out] or cands
            tips[port] = cands[0]
        sub = g.induced(set().union(*parts.values()))
        forks[(s, t)] = fork_from_partition(SeptuplePartition(sub, **parts, **tips), check=check)

    legs = {p: dict(f.legs) for p, f in forks.items()}
    inner = {}
    for p1, d1, p2, d2, cor in links:
        x, y = _ports(*p1)[d1], _ports(*p2)[d2]
        s1, t1 = p1
        s2, t2 = p2
        cx = cell(8 * s1 + _BLOCK[_TIP_PART[x]][0], 8 * t1 + _BLOCK[_TIP_PART[x]][1])
        cy = cell(8 * s2 + _BLOCK[_TIP_PART[y]][0], 8 * t2 + _BLOCK[_TIP_PART[y]][1])
        corridor = set().union(*(cell(*rc) for rc in cor))
        legs[p1][x], legs[p2][y], inner[(p1, p2)] = _connect(g, legs[p1][x], cx, legs[p2][y], cy, corridor)

    keep: set = set()
    triangles = {}
    fresh = max(g.vertices) + 1 if g.n else 0
    rep = {}
    contract = {}
    for p, f in forks.items():
        ports = set(used[p])
        for port in ports:
            keep.update(legs[p][port])
        keep.update(v for part in inner.values() for v in part)
        if f.kind == "fork":
            keep.add(f.centre[0])
            rep[p] = f.centre[0]
        elif len(ports) == 3:
            keep.update(f.centre)
            triangles[fresh] = tuple(f.centre)
            for x in f.centre:
                contract[x] = fresh
            rep[p] = fresh
            fresh += 1
        else:
            rep[p] = legs[p][sorted(ports)[0]][0]

    def link_path(p1, d1, p2, d2) -> list:
        x, y = _ports(*p1)[d1], _ports(*p2)[d2]
        seq = list(legs[p1][x]) + inner[(p1, p2)] + list(reversed(legs[p2][y]))
        if seq[0] != rep[p1] and contract.get(seq[0]) != rep[p1]:
            seq.insert(0, rep[p1])
        if seq[-1] != rep[p2] and contract.get(seq[-1]) != rep[p2]:
            seq.append(rep[p2])
        out: list = []
        for v in seq:
            v = contract.get(v, v)
            if not out or out[-1] != v:
                out.append(v)
        return out

    seg = {}
    for p1, d1, p2, d2, _ in links:
        seg[(p1, p2)] = link_path(p1, d1, p2, d2)
        seg[(p2, p1)] = seg[(p1, p2)][::-1]

    out_graph = g.induced(keep)
    if stone_wall_shape(out_graph) is None:
        raise GraphError("assembled subgraph is not an induced stone wall")

    def walk(ps) -> Path:
        out: list = [rep[ps[0]]]
        for a, b in zip(ps, ps[1:]):
            out += seg[(a, b)][1:]
        return Path(out)

    e = elementary_wall(n, m)
    pos_of = {v: (lab[0] - 1, lab[1] - 1) for v, lab in e.graph.labels.items()}
    rows = [walk([(s, t) for (s2, t) in positions if s2 == s]) for s in range(n)]
    cols = []
    for vp in e.vertical_paths:
        ps = [pos_of[v] for v in vp]
        cols.append(walk(ps))
    base_edges = set()
    base_vs = set()
    for path in rows + cols:
        base_vs.update(path)
        base_edges.update(zip(path, path[1:]))
    labels = {v: out_graph.label(v) for v in base_vs if v in out_graph}
    base = Graph(sorted(base_vs), base_edges, labels)
    sw = StoneWall(out_graph, Wall(base, n, m, tuple(rows), tuple(cols)), frozenset(triangles), triangles)
    if sw.contracted().edge_set() != base.edge_set():
        raise GraphError("wall frame does not match the assembled subgraph")
    return sw
