"""Wall recognition, the subwall lemma and stone-wall homogenization."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import networkx as nx
from networkx.algorithms import isomorphism

from .generators import StoneWall, Wall, elementary_wall
from .graph import Graph, GraphError, Path, is_chordless_graph
from .ramsey import find_monochromatic_biclique, ramsey_bound

# --------------------------------------------------------------------------
# recognizers
# --------------------------------------------------------------------------


def _reduction(g: Graph) -> nx.MultiGraph | None:
    """Suppress degree-2 vertices: branch vertices joined by one edge per chain, weighted by length.

    Returns None for a graph made only of degree-2 vertices (a cycle).
    """
    nodes = [v for v in g if g.degree(v) != 2]
    if not nodes:
        return None
    red = nx.MultiGraph()
    red.add_nodes_from(nodes)
    node_set = set(nodes)
    seen = set()
    for a in nodes:
        for first in sorted(g.neighbors(a)):
            if frozenset((a, first)) in seen:
                continue
            prev, cur, length = a, first, 1
            seen.add(frozenset((a, first)))
            while cur not in node_set:
                nxt = next(x for x in g.neighbors(cur) if x != prev)
                prev, cur, length = cur, nxt, length + 1
            seen.add(frozenset((prev, cur)))
            red.add_edge(a, cur, length=length)
    return red


def _lengths_dominate(big: dict, small: dict) -> bool:
    xs = sorted(d["length"] for d in big.values())
    ys = sorted(d["length"] for d in small.values())
    return len(xs) == len(ys) and all(x >= y for x, y in zip(xs, ys))


def _candidate_dims(branch_count: int):
    # an elementary (n x m)-wall has 2m(n-1) - 2n vertices of degree 3
    n = 2
    while 2 * 2 * (n - 1) - 2 * n <= branch_count:
        num = branch_count + 2 * n
        if num % (2 * (n - 1)) == 0 and num // (2 * (n - 1)) >= 2:
            yield n, num // (2 * (n - 1))
        n += 1


def wall_dimensions(g: Graph) -> tuple[int, int] | None:
    """``(n, m)`` if ``g`` is a subdivision of the elementary (n x m)-wall, else None.

    Degree-2 vertices are suppressed on both sides and the resulting
    multigraphs compared; each chain of ``g`` must be at least as long as the
    matching chain of the elementary wall, so the degree-2 corners of the
    elementary wall have somewhere to go.
    """
    if g.n == 0 or g.max_degree() > 3 or not g.is_connected():
        return None
    if any(g.degree(v) < 2 for v in g):
        return None
    branch = sum(1 for v in g if g.degree(v) == 3)
    if branch == 0:
        return (2, 2) if g.m == g.n and g.n >= 4 else None
    red = _reduction(g)
    for n, m in _candidate_dims(branch):
        e_red = _reduction(elementary_wall(n, m).graph)
        if e_red.number_of_edges() != red.number_of_edges():
            continue
        gm = isomorphism.MultiGraphMatcher(red, e_red, edge_match=_lengths_dominate)
        if gm.is_isomorphic():
            return n, m
    return None


def is_wall(g: Graph) -> bool:
    return wall_dimensions(g) is not None


def line_graph_root(g: Graph) -> Graph | None:
    """H with L(H) isomorphic to ``g`` (networkx inverse line graph), or None."""
    if g.n == 0 or not g.is_connected():
        return None
    try:
        root = nx.inverse_line_graph(g.to_networkx())
    except nx.NetworkXError:
        return None
    root = nx.convert_node_labels_to_integers(root, ordering="sorted")
    return Graph.from_networkx(root)


def line_graph_wall_dimensions(g: Graph) -> tuple[int, int] | None:
    """Dimensions of a chordless wall W with L(W) isomorphic to ``g``, or None."""
    if g.n == 0 or g.max_degree() > 3:
        return None
    root = line_graph_root(g)
    if root is None:
        return None
    dims = wall_dimensions(root)
    if dims is None or not is_chordless_graph(root):
        return None
    return dims


def homogeneous_kind(g: Graph) -> str | None:
    """"wall", "line-graph" (of a chordless wall) or None."""
    if is_wall(g):
        return "wall"
    if line_graph_wall_dimensions(g) is not None:
        return "line-graph"
    return None


def _triangles(g: Graph) -> list[tuple]:
    out = []
    for u in sorted(g):
        for v in sorted(g.neighbors(u)):
            if v <= u:
                continue
            for w in sorted(g.neighbors(u) & g.neighbors(v)):
                if w > v:
                    out.append((u, v, w))
    return out


@dataclass(frozen=True)
class StoneWallShape:
    dims: tuple[int, int]
    triangles: tuple[tuple, ...]
    contracted: Graph = field(repr=False)


def stone_wall_shape(g: Graph) -> StoneWallShape | None:
    """Recognize a stone wall: disjoint net triangles whose contraction is a wall."""
    if g.n == 0 or g.max_degree() > 3:
        return None
    tris = _triangles(g)
    owner = {}
    for t in tris:
        for x in t:
            if x in owner:
                return None
            owner[x] = t
    for t in tris:
        outside = []
        for x in t:
            if g.degree(x) != 3:
                return None
            outside += [y for y in g.neighbors(x) if y not in t]
        back = {owner.get(y, (y,))[0] for y in outside}
        if len(outside) != 3 or len(back) != 3:
            return None
    rep = {x: t[0] for t in tris for x in t}
    es = {tuple(sorted((rep.get(u, u), rep.get(v, v)))) for u, v in g.edges()}
    es = {e for e in es if e[0] != e[1]}
    contracted = Graph(sorted({rep.get(v, v) for v in g}), es)
    dims = wall_dimensions(contracted)
    if dims is None:
        return None
    if any(contracted.degree(t[0]) != 3 for t in tris):
        return None
    return StoneWallShape(dims, tuple(tris), contracted)


def is_stone_wall(g: Graph) -> bool:
    return stone_wall_shape(g) is not None


def is_homogeneous_stone_wall(g: Graph) -> bool:
    return homogeneous_kind(g) is not None


# --------------------------------------------------------------------------
# subwalls
# --------------------------------------------------------------------------


def _prune(g: Graph, keep: set) -> set:
    keep = set(keep)
    deg = {v: len(g.neighbors(v) & keep) for v in keep}
    stack = [v for v, d in deg.items() if d <= 1]
    while stack:
        v = stack.pop()
        if v not in keep:
            continue
        keep.discard(v)
        for w in g.neighbors(v):
            if w in keep:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    return keep


def _restrict(seq: Sequence, keep: set) -> list:
    out = [v for v in seq if v in keep]
    if not out:
        raise GraphError("a chosen path vanished while pruning")
    return out


def _assemble(g: Graph, rows: list[list], cols: list[list]) -> Wall:
    """Union of the given paths, pruned of degree-1 vertices, packaged as a Wall.

    Rows are listed top to bottom. Column ends that run along the top or
    bottom row are trimmed so that each column meets those rows in a single
    vertex, as in an elementary wall.
    """
    keep = _prune(g, {v for p in rows + cols for v in p})
    sub = g.induced(keep)
    rows = [_restrict(p, keep) for p in rows]
    top, bottom = set(rows[0]), set(rows[-1])
    out_cols = []
    for p in cols:
        p = _restrict(p, keep)
        while len(p) > 1 and p[0] in top and p[1] in top:
            p = p[1:]
        while len(p) > 1 and p[-1] in bottom and p[-2] in bottom:
            p = p[:-1]
        out_cols.append(p)
    return Wall(sub, len(rows), len(cols), tuple(map(Path, rows)), tuple(map(Path, out_cols)))


def _paths_adjacent(g: Graph, p: Sequence, q: Sequence) -> bool:
    qs = set(q)
    return any(v in qs or g.neighbors(v) & qs for v in p)


def extract_subwall(w: Wall, rows: Iterable[int], cols: Iterable[int]) -> Wall:
    """Induced (|rows| x |cols|)-wall inside the union of the chosen paths.

    ``rows`` and ``cols`` are indices into ``w.horizontal_paths`` and
    ``w.vertical_paths``; chosen rows must be pairwise non-adjacent, and so
    must chosen columns. The union of the paths is taken as an induced
    subgraph and degree-1 vertices are deleted until none remain.
    """
    rows, cols = sorted(set(rows)), sorted(set(cols))
    if len(rows) < 2 or len(cols) < 2:
        raise GraphError("need at least two rows and two columns")
    g = w.graph
    for idx, paths, kind in ((rows, w.horizontal_paths, "rows"), (cols, w.vertical_paths, "columns")):
        if idx[0] < 0 or idx[-1] >= len(paths):
            raise GraphError(f"{kind} index out of range")
        for a, b in itertools.combinations(idx, 2):
            if _paths_adjacent(g, paths[a], paths[b]):
                raise GraphError(f"{kind} {a} and {b} are adjacent")
    return _assemble(g, [list(w.horizontal_paths[i]) for i in rows], [list(w.vertical_paths[j]) for j in cols])


# --------------------------------------------------------------------------
# homogenization
# --------------------------------------------------------------------------

GREEN, RED, WHITE, BLACK = "green", "red", "white", "black"
SPACING = 4  # distance between chosen block rows / columns of the contracted wall


class WallTooSmall(GraphError):
    def __init__(self, have: int, need: int):
        super().__init__(f"stone wall is {have} wide, homogenization needs at least {need}")
        self.need = need


def required_size(r: int) -> int:
    """Smallest n for which every (n x n)-stone wall is certified to yield an (r x r) result.

    n = 4 * (2^r (r - 1) + 1) + 1.

    The rerouting step works on block rows ``i = 3, 7, 11, ...`` (row ``i``
    plus its helper row ``i + 1``, both interior) and columns
    ``j = 3, 7, 11, ..., <= m - 1``. At every (block, column) cell one of five
    local reroutings puts two same-coloured branch vertices at the crossing
    (among the four vertices the column visits there, some same-coloured pair
    is always served), so a cell colouring with two colours exists and the
    bipartite Ramsey bound 2^r (r - 1) + 1 on blocks x columns gives r blocks
    and r columns of one colour. An n-row wall has floor((n - 5) / 4) + 1
    blocks and floor((m - 4) / 4) + 1 columns, hence the formula.
    """
    return SPACING * ramsey_bound(r) + 1


def _block_rows(n: int) -> list[int]:
    return list(range(3, n - 1, SPACING))


def _block_cols(m: int) -> list[int]:
    return list(range(3, m, SPACING))


@dataclass(frozen=True)
class AuxiliaryColoring:
    """Colours of the contracted wall W' and of the path-intersection graph H.

    ``matrix[a][b]`` colours the pair (horizontal path ``rows[a]``, vertical
    path ``cols[b]``): green or red when both branch vertices they share have
    that colour, white when the green one comes first from left to right,
    black otherwise.
    """

    contracted: Wall = field(repr=False)
    vertex_colors: dict = field(repr=False)
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    matrix: tuple[tuple[str, ...], ...]


def _vertex_colors(sw: StoneWall) -> dict:
    g = sw.base.graph
    return {v: (RED if v in sw.replaced else GREEN) for v in g if g.degree(v) == 3}


def auxiliary_coloring(sw: StoneWall) -> AuxiliaryColoring:
    w = sw.base
    colors = _vertex_colors(sw)
    rows = tuple(range(1, w.n_rows - 1))
    cols = tuple(range(1, w.m_cols - 1))
    col_sets = [set(w.vertical_paths[j]) for j in cols]
    matrix = []
    for i in rows:
        line = []
        for cs in col_sets:
            shared = [v for v in w.horizontal_paths[i] if v in cs and v in colors]
            if len(shared) != 2:
                raise GraphError("malformed stone wall: a horizontal and a vertical path do not share two branch vertices")
            a, b = colors[shared[0]], colors[shared[1]]
            line.append(a if a == b else (WHITE if a == GREEN else BLACK))
        matrix.append(tuple(line))
    return AuxiliaryColoring(w, colors, rows, cols, tuple(matrix))


class _Frame:
    """Elementary-wall coordinates ``(i, p)`` of the interior rows of a wall.

    Row ``i`` (1-based) meets column ``j`` in a segment whose ends are
    ``(i, 2j - 1)`` and ``(i, 2j)`` from left to right.
    """

    def __init__(self, w: Wall):
        self.n, self.m = w.n_rows, w.m_cols
        self.rows = [list(p) for p in w.horizontal_paths]
        self.cols = [list(p) for p in w.vertical_paths]
        self.row_idx = [{v: k for k, v in enumerate(p)} for p in self.rows]
        self.col_idx = [{v: k for k, v in enumerate(p)} for p in self.cols]
        col_of = {v: j for j, p in enumerate(self.cols) for v in p}
        self.pos = {}
        for i in range(2, self.n):
            segs: dict[int, list] = {}
            for v in self.rows[i - 1]:
                if v in col_of:
                    segs.setdefault(col_of[v], []).append(v)
            if sorted(segs) != list(range(self.m)):
                raise GraphError("malformed stone wall: a row misses a column")
            for j, seg in segs.items():
                self.pos[(i, 2 * j + 1)] = seg[0]
                self.pos[(i, 2 * j + 2)] = seg[-1]

    def at(self, i: int, p: int):
        return self.pos[(i, p)]

    @staticmethod
    def _sub(path, idx, a, b) -> list:
        ia, ib = idx[a], idx[b]
        return path[ia : ib + 1] if ia <= ib else path[ib : ia + 1][::-1]

    def h(self, i: int, p1: int, p2: int) -> list:
        return self._sub(self.rows[i - 1], self.row_idx[i - 1], self.at(i, p1), self.at(i, p2))

    def v(self, i: int, p: int, upward: bool = False) -> list:
        """Rung of column ``(p + 1) // 2`` from ``(i, p)`` down to ``(i + 1, p)``."""
        j = (p + 1) // 2 - 1
        a, b = self.at(i, p), self.at(i + 1, p)
        if a not in self.col_idx[j] or b not in self.col_idx[j]:
            raise GraphError(f"malformed stone wall: no rung at ({i}, {p})")
        seg = self._sub(self.cols[j], self.col_idx[j], a, b)
        return seg[::-1] if upward else seg


def _join(*parts: list) -> list:
    out: list = []
    for part in parts:
        if out and part and out[-1] == part[0]:
            part = part[1:]
        out.extend(part)
    return out


# local reroutings at the crossing of block row i (helper row i + 1) and column j;
# u, v, w, x are (i, 2j), (i, 2j - 1), (i + 1, 2j - 1), (i + 1, 2j), the order
# in which the column visits them. Each gadget: (branch pair, entry row, exit row).
_GADGETS = {
    "O": (("u", "v"), 0, 0),  # no rerouting
    "W": (("w", "x"), 1, 1),  # the helper row carries the crossing
    "F": (("v", "w"), 1, 0),  # column detours left around u
    "A": (("u", "w"), 1, 0),
    "B": (("v", "x"), 0, 1),
}


def _cell_vertices(fr: _Frame, i: int, j: int) -> dict:
    return {"u": fr.at(i, 2 * j), "v": fr.at(i, 2 * j - 1), "w": fr.at(i + 1, 2 * j - 1), "x": fr.at(i + 1, 2 * j)}


def _gadget_for(cell: dict, colors: dict, color: str) -> str | None:
    for name, (pair, _, _) in _GADGETS.items():
        if all(colors.get(cell[k]) == color for k in pair):
            return name
    return None


def _cell_path(fr: _Frame, i: int, j: int, kind: str) -> list:
    if kind == "O":
        return fr.h(i, 2 * j - 1, 2 * j)
    if kind == "W":
        return fr.h(i + 1, 2 * j - 1, 2 * j)
    if kind == "B":
        return _join(fr.v(i, 2 * j - 1), fr.h(i + 1, 2 * j - 1, 2 * j))
    return _join(fr.v(i, 2 * j - 1, upward=True), fr.h(i, 2 * j - 1, 2 * j))


def _row_route(fr: _Frame, i: int, cells: list[tuple[int, str]]) -> list:
    route: list = []
    for k, (j, kind) in enumerate(cells):
        route = _join(route, _cell_path(fr, i, j, kind))
        if k + 1 == len(cells):
            break
        out_row = i + _GADGETS[kind][2]
        nj, nkind = cells[k + 1]
        in_row = i + _GADGETS[nkind][1]
        if out_row == in_row:
            route = _join(route, fr.h(out_row, 2 * j, 2 * nj - 1))
        else:
            s = 2 * j + 3  # switch rows on a rung clear of both crossings
            route = _join(route, fr.h(out_row, 2 * j, s), fr.v(i, s, upward=out_row > in_row), fr.h(in_row, s, 2 * nj - 1))
    return route


def _column_route(fr: _Frame, j: int, detour_rows: list[int]) -> list:
    col = fr.cols[j - 1]
    for i in sorted(detour_rows, reverse=True):
        a, b = fr.at(i - 1, 2 * j - 1), fr.at(i, 2 * j - 1)
        ia, ib = col.index(a), col.index(b)
        detour = _join(fr.h(i - 1, 2 * j - 1, 2 * j - 2), fr.v(i - 1, 2 * j - 2), fr.h(i, 2 * j - 2, 2 * j - 1))
        col = col[:ia] + detour + col[ib + 1 :]
    return col


def _lift(sw: StoneWall, z: Wall) -> StoneWall:
    """Undo the triangle contractions on an induced subwall ``z`` of the contracted wall."""
    g = sw.graph
    tri = sw.triangle_map
    owner = {t: v for v, ts in tri.items() for t in ts}

    def toward(v, a):
        for t in tri[v]:
            o = next(y for y in g.neighbors(t) if y not in tri[v])
            if owner.get(o, o) == a:
                return t
        raise GraphError("triangle does not match the contracted wall")

    zg = z.graph
    keep: set = set()
    new_tri = {}
    expanded = set()
    for v in zg:
        if v not in sw.replaced:
            keep.add(v)
        elif zg.degree(v) == 3:
            keep.update(tri[v])
            new_tri[v] = tri[v]
        else:
            expanded.add(v)
            keep.update(toward(v, a) for a in zg.neighbors(v))

    def end(v, a):
        return toward(v, a) if v in expanded else v

    base_edges = [(end(a, b), end(b, a)) for a, b in zg.edges()]
    for v in expanded:
        x, y = (toward(v, a) for a in sorted(zg.neighbors(v)))
        base_edges.append((x, y))
    base_vs = (zg.vertices - expanded) | {toward(v, a) for v in expanded for a in zg.neighbors(v)}
    labels = {**zg.labels, **{t: g.label(t) for t in base_vs if t in g}}
    base_graph = Graph(sorted(base_vs), base_edges, labels)

    def expand(path) -> Path:
        out = []
        for k, v in enumerate(path):
            if v not in expanded:
                out.append(v)
                continue
            prev = path[k - 1] if k > 0 else None
            nxt = path[k + 1] if k + 1 < len(path) else None
            other = next(iter(zg.neighbors(v) - {prev, nxt}), None)
            a = prev if prev is not None else other
            b = nxt if nxt is not None else other
            out += [toward(v, a), toward(v, b)]
        return Path(out)

    base = Wall(base_graph, z.n_rows, z.m_cols, tuple(map(expand, z.horizontal_paths)), tuple(map(expand, z.vertical_paths)))
    return StoneWall(g.induced(keep), base, frozenset(new_tri), new_tri)


def _monochrome(z: Wall, colors: dict, color: str) -> bool:
    # a (2 x 2)-wall is a cycle, vacuously monochromatic
    return all(colors.get(v) == color for v in z.branch_vertices)


@dataclass
class HomogenizationReport:
    case: str  # "subwall" (green or red biclique on alternate paths) or "rerouted"
    color: str
    rows: tuple
    cols: tuple
    gadgets: dict = field(default_factory=dict)


def homogenize_with_report(
    sw: StoneWall, r: int, strict: bool = True, method: str = "auto"
) -> tuple[StoneWall, HomogenizationReport]:
    """``method`` is "auto" (subwall case first), "subwall" or "reroute"."""
    if r < 2:
        raise ValueError("r must be at least 2")
    if method not in ("auto", "subwall", "reroute"):
        raise ValueError(f"unknown method {method!r}")
    w = sw.base
    need = required_size(r)
    if strict and min(w.n_rows, w.m_cols) < need:
        raise WallTooSmall(min(w.n_rows, w.m_cols), need)
    aux = auxiliary_coloring(sw)
    colors = aux.vertex_colors

    # green/red case: alternate paths keep the chosen ones pairwise non-adjacent
    a_rows = list(range(0, len(aux.rows), 2))
    a_cols = list(range(0, len(aux.cols), 2))
    if method != "reroute" and len(a_rows) >= r and len(a_cols) >= r:
        sub = [[aux.matrix[a][b] for b in a_cols] for a in a_rows]
        hit = find_monochromatic_biclique(sub, r, colors=(GREEN, RED))
        if hit is not None:
            ra, cb, color = hit
            rows = [aux.rows[a_rows[k]] for k in ra]
            cols = [aux.cols[a_cols[k]] for k in cb]
            z = extract_subwall(w, rows, cols)
            if not _monochrome(z, colors, color):
                raise AssertionError("subwall is not monochromatic")
            return _lift(sw, z), HomogenizationReport("subwall", color, tuple(rows), tuple(cols))

    if method == "subwall":
        raise GraphError("no green or red K_{r,r} among alternate paths")

    # otherwise reroute around the crossings
    fr = _Frame(w)
    blocks, bcols = _block_rows(w.n_rows), _block_cols(w.m_cols)
    if len(blocks) < r or len(bcols) < r:
        raise WallTooSmall(min(w.n_rows, w.m_cols), need)
    cells = {(i, j): _cell_vertices(fr, i, j) for i in blocks for j in bcols}
    matrix = [[GREEN if _gadget_for(cells[(i, j)], colors, GREEN) else RED for j in bcols] for i in blocks]
    hit = find_monochromatic_biclique(matrix, r)
    if hit is None:
        raise WallTooSmall(min(w.n_rows, w.m_cols), need)
    ra, cb, color = hit
    rows = [blocks[k] for k in ra]
    cols = [bcols[k] for k in cb]
    kinds = {(i, j): _gadget_for(cells[(i, j)], colors, color) for i in rows for j in cols}
    row_paths = [_row_route(fr, i, [(j, kinds[(i, j)]) for j in cols]) for i in rows]
    col_paths = [_column_route(fr, j, [i for i in rows if kinds[(i, j)] == "F"]) for j in cols]
    z = _assemble(w.graph, row_paths, col_paths)
    if not _monochrome(z, colors, color):
        raise AssertionError("rerouted wall is not monochromatic")
    return _lift(sw, z), HomogenizationReport("rerouted", color, tuple(rows), tuple(cols), kinds)


def homogenize_stone_wall(sw: StoneWall, r: int, strict: bool = True, method: str = "auto") -> StoneWall:
    """An induced homogeneous stone wall of size at least r x r inside ``sw``.

    Contract the triangles, colour branch vertices red (contracted) or green,
    colour horizontal x vertical path pairs green/red/white/black and look
    for a green or red K_{r,r} among alternate paths; if there is one, the
    subwall lemma plus undoing the contractions finishes. Otherwise the paths
    are rerouted around each chosen crossing so that both branch vertices
    there share a colour (see ``required_size``). With ``strict`` a wall
    below ``required_size(r)`` is rejected up front.
    """
    return homogenize_with_report(sw, r, strict, method)[0]
