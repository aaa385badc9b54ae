"""Induced pattern detection with re-checkable witnesses.

All searches are exhaustive: a ``None`` result means the pattern is absent.
Each search runs under a wall-clock budget and raises :class:`Inconclusive`
when it runs out, so "absent" and "gave up" are never confused.

Thetas, prisms, pyramids and extended prisms share one engine: enumerate the
bounded core (ends, triangles, apex, middle edge), then grow the connecting
paths one vertex at a time, only accepting a vertex whose neighbours among
the chosen vertices are exactly its predecessor (plus the target when the
path closes). That rule is the anticompleteness condition of the definitions
applied incrementally, so every emitted witness is induced by construction.
"""

from __future__ import annotations

import itertools
import time
from collections import deque
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

from .graph import Graph, GraphError, Path, is_hole

DEFAULT_BUDGET = 60.0


class Inconclusive(RuntimeError):
    """The search exhausted its time budget before reaching a verdict."""


class _Clock:
    def __init__(self, budget: float | None):
        self.deadline = None if budget is None else time.monotonic() + budget
        self.ticks = 0

    def tick(self) -> None:
        self.ticks += 1
        if self.deadline is not None and self.ticks % 256 == 0 and time.monotonic() > self.deadline:
            raise Inconclusive("search budget exhausted")


@dataclass(frozen=True)
class PatternWitness:
    """A found pattern: ``kind`` plus role-labelled vertex tuples.

    Roles per kind:
      hole / even-hole / odd-hole: ``cycle``
      theta: ``ends`` (a, b), ``paths`` (three a..b paths)
      prism: ``triangles`` ((a, b, c), (a', b', c')), ``paths`` (a..a', b..b', c..c')
      pyramid: ``apex`` (x,), ``triangle`` (a, b, c), ``paths`` (x..a, x..b, x..c)
      wheel: ``rim`` (hole), ``center`` (x,)
      extended-prism: ``triangles``, ``middle`` (x, y), ``paths`` (A, A', B, B', C)
      cube: ``cycle`` (v1..v6), ``centers`` (x, y)
      fork / semi-fork: ``tips`` (a, b, c), ``vertices``; semi-fork adds ``triangle``
    """

    kind: str
    roles: dict = field(default_factory=dict)

    @property
    def vertices(self) -> frozenset:
        out = set()
        for val in self.roles.values():
            for item in val:
                if isinstance(item, (tuple, list)):
                    out.update(item)
                else:
                    out.add(item)
        return frozenset(out)

    def describe(self, g: Graph | None = None) -> str:
        def name(v):
            if g is None or g.label(v) is None:
                return str(v)
            return f"{v}[{g.label(v)}]"

        def fmt(val):
            if val and isinstance(val[0], (tuple, list)):
                return "; ".join(" ".join(name(v) for v in p) for p in val)
            return " ".join(name(v) for v in val)

        lines = [self.kind]
        lines += [f"  {role}: {fmt(val)}" for role, val in self.roles.items()]
        return "\n".join(lines)


# --------------------------------------------------------------------------
# independent validators: rebuild the expected edge set from roles, compare
# --------------------------------------------------------------------------


def _path_edges(p) -> set:
    return {frozenset(e) for e in zip(p, p[1:])}


def _tri_edges(t) -> set:
    return {frozenset(e) for e in itertools.combinations(t, 2)}


def _induced_edges(g: Graph, vs) -> set:
    vs = set(vs)
    return {frozenset((u, v)) for u in vs for v in g.neighbors(u) if v in vs and u < v}


def _disjoint_except(paths, allowed_shared) -> bool:
    seen = set()
    for p in paths:
        for v in p:
            if v in seen and v not in allowed_shared:
                return False
            seen.add(v)
    return all(len(set(p)) == len(p) for p in paths)


def validate_witness(g: Graph, w: PatternWitness) -> bool:
    """Check the witness against the raw definition using adjacency only."""
    try:
        vs = w.vertices
        if not vs <= g.vertices:
            return False
        r = w.roles
        k = w.kind
        if k in ("hole", "even-hole", "odd-hole"):
            cyc = r["cycle"]
            if not is_hole(g, cyc):
                return False
            return k == "hole" or (len(cyc) % 2 == 0) == (k == "even-hole")
        if k == "theta":
            a, b = r["ends"]
            ps = r["paths"]
            if len(ps) != 3 or any(p[0] != a or p[-1] != b or len(p) < 3 for p in ps):
                return False
            if not _disjoint_except(ps, {a, b}):
                return False
            expected = set().union(*map(_path_edges, ps))
        elif k == "prism":
            t1, t2 = r["triangles"]
            ps = r["paths"]
            if len(ps) != 3 or any(len(p) < 2 for p in ps):
                return False
            if [p[0] for p in ps] != list(t1) or [p[-1] for p in ps] != list(t2):
                return False
            if not _disjoint_except(ps, set()):
                return False
            expected = _tri_edges(t1) | _tri_edges(t2) | set().union(*map(_path_edges, ps))
        elif k == "pyramid":
            (x,) = r["apex"]
            tri = r["triangle"]
            ps = r["paths"]
            if len(ps) != 3 or any(p[0] != x or len(p) < 2 for p in ps):
                return False
            if [p[-1] for p in ps] != list(tri) or sum(len(p) >= 3 for p in ps) < 2:
                return False
            if not _disjoint_except(ps, {x}):
                return False
            expected = _tri_edges(tri) | set().union(*map(_path_edges, ps))
        elif k == "wheel":
            rim = r["rim"]
            (x,) = r["center"]
            if not is_hole(g, rim) or x in rim:
                return False
            return len(g.neighbors(x) & set(rim)) >= 3
        elif k == "extended-prism":
            t1, t2 = r["triangles"]
            x, y = r["middle"]
            pa, pa2, pb, pb2, pc = r["paths"]
            ends_ok = (
                (pa[0], pa[-1]) == (t1[0], x)
                and (pa2[0], pa2[-1]) == (x, t2[0])
                and (pb[0], pb[-1]) == (t1[1], y)
                and (pb2[0], pb2[-1]) == (y, t2[1])
                and (pc[0], pc[-1]) == (t1[2], t2[2])
            )
            if not ends_ok or any(len(p) < 2 for p in r["paths"]):
                return False
            if not _disjoint_except(r["paths"], {x, y}) or x == y:
                return False
            if len([p for p in r["paths"] if x in p]) != 2 or len([p for p in r["paths"] if y in p]) != 2:
                return False
            expected = _tri_edges(t1) | _tri_edges(t2) | {frozenset((x, y))}
            expected |= set().union(*map(_path_edges, r["paths"]))
        elif k == "cube":
            cyc = r["cycle"]
            x, y = r["centers"]
            if len(cyc) != 6 or len(set(cyc) | {x, y}) != 8:
                return False
            expected = {frozenset((cyc[i], cyc[(i + 1) % 6])) for i in range(6)}
            expected |= {frozenset((x, cyc[i])) for i in (0, 2, 4)} | {frozenset((y, cyc[i])) for i in (1, 3, 5)}
        elif k in ("fork", "semi-fork"):
            return _validate_fork(g, w)
        else:
            return False
        return _induced_edges(g, vs) == expected
    except (KeyError, ValueError, TypeError):
        return False


def _validate_fork(g: Graph, w: PatternWitness) -> bool:
    vs = set(w.vertices)
    sub = g.induced(vs)
    tips = set(w.roles["tips"])
    if {v for v in sub if sub.degree(v) == 1} != tips or len(tips) != 3:
        return False
    if not sub.is_connected():
        return False
    if w.kind == "fork":
        return sub.m == sub.n - 1
    # semi-fork: exactly one cycle, a triangle, with the three pendant paths
    tri = w.roles["triangle"]
    if sub.m != sub.n or not sub.is_clique(tri) or len(tri) != 3:
        return False
    comps = sub.remove(tri).components()
    return len(comps) == 3 and all(len(c & tips) == 1 for c in comps) and all(sub.degree(t) == 3 for t in tri)


# --------------------------------------------------------------------------
# search engine
# --------------------------------------------------------------------------


def _reachable(g: Graph, start, target, blocked_nbrs: set, used: set) -> bool:
    """Can ``start`` reach a vertex adjacent to ``target`` through vertices that
    avoid ``used`` and have no neighbour in ``blocked_nbrs``?"""
    if g.has_edge(start, target):
        return True
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w in seen or w in used or (g.neighbors(w) & blocked_nbrs):
                continue
            if g.has_edge(w, target):
                return True
            seen.add(w)
            queue.append(w)
    return False


def _path_systems(
    g: Graph,
    core: set,
    specs: Sequence[tuple],
    clock: _Clock,
) -> Iterator[list[list]]:
    """Yield lists of paths, one per ``(source, target, same_as_previous)`` spec.

    Paths are internally disjoint from each other and from ``core``; each
    interior vertex sees exactly its two path-neighbours among all chosen
    vertices. ``same_as_previous`` orders interchangeable paths by their
    second vertex to avoid emitting permutations.
    """
    specs = list(specs)

    def feasible(k: int, used: set, end) -> bool:
        s, t, _ = specs[k]
        if not _reachable(g, end, t, used - {end, t}, used):
            return False
        for j in range(k + 1, len(specs)):
            sj, tj, _ = specs[j]
            if not g.has_edge(sj, tj) and not _reachable(g, sj, tj, used - {sj, tj}, used):
                return False
        return True

    def rec(k: int, used: set, done: list) -> Iterator[list[list]]:
        if k == len(specs):
            yield [list(p) for p in done]
            return
        s, t, same = specs[k]
        lower = done[-1][1] if (same and done) else -1
        if g.has_edge(s, t):
            if lower == -1:
                yield from rec(k + 1, used, done + [[s, t]])
            return
        if not feasible(k, used, s):
            return
        yield from grow(k, [s], used, done, lower)

    def grow(k, path, used, done, lower) -> Iterator[list[list]]:
        clock.tick()
        s, t, _ = specs[k]
        p = path[-1]
        for w in sorted(g.neighbors(p)):
            if w in used:
                continue
            if len(path) == 1 and w <= lower:
                continue
            seen = g.neighbors(w) & used
            if seen == {p, t}:
                yield from rec(k + 1, used | {w}, done + [path + [w, t]])
            elif seen == {p}:
                nu = used | {w}
                if feasible(k, nu, w):
                    yield from grow(k, path + [w], nu, done, lower)

    yield from rec(0, set(core), [])


def _triangles(g: Graph) -> list[tuple]:
    out = []
    for u in g:
        for v in g.neighbors(u):
            if v <= u:
                continue
            for w in g.neighbors(u) & g.neighbors(v):
                if w > v:
                    out.append((u, v, w))
    return out


# --------------------------------------------------------------------------
# holes
# --------------------------------------------------------------------------


def iter_holes(g: Graph, parity: str = "any", budget: float | None = DEFAULT_BUDGET, within=None) -> Iterator[tuple]:
    """Every hole once, as a vertex tuple starting at its smallest vertex."""
    clock = _Clock(budget)
    allowed = g.vertices if within is None else frozenset(within)
    want = {"any": None, "even": 0, "odd": 1}[parity]

    for v in sorted(allowed):
        region = {x for x in allowed if x > v}

        def grow(path: list, used: set):
            clock.tick()
            p = path[-1]
            for w in sorted(g.neighbors(p)):
                if w not in region or w in used:
                    continue
                seen = g.neighbors(w) & used
                if seen == {p, v}:
                    if len(path) >= 3 and w > path[1] and (want is None or (len(path) + 1) % 2 == want):
                        yield tuple(path + [w])
                elif seen == {p}:
                    nu = used | {w}
                    blocked = nu - {w, v}
                    if _reachable_in(g, w, v, blocked, nu, region):
                        yield from grow(path + [w], nu)

        for u in sorted(g.neighbors(v)):
            if u in region:
                yield from grow([v, u], {v, u})


def _reachable_in(g, start, target, blocked, used, region) -> bool:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w in seen or w in used or w not in region or (g.neighbors(w) & blocked):
                continue
            if g.has_edge(w, target):
                return True
            seen.add(w)
            queue.append(w)
    return False


def find_hole(g: Graph, parity: str = "any", budget: float | None = DEFAULT_BUDGET) -> PatternWitness | None:
    if parity not in ("any", "even", "odd"):
        raise ValueError(f"parity must be any, even or odd, not {parity!r}")
    for cyc in iter_holes(g, parity, budget):
        kind = "hole" if parity == "any" else f"{parity}-hole"
        return PatternWitness(kind, {"cycle": cyc})
    return None


# --------------------------------------------------------------------------
# three-path configurations
# --------------------------------------------------------------------------


def iter_thetas(g: Graph, budget: float | None = DEFAULT_BUDGET) -> Iterator[PatternWitness]:
    clock = _Clock(budget)
    for a in sorted(g):
        if g.degree(a) < 3:
            continue
        for b in sorted(g):
            if b <= a or g.has_edge(a, b) or g.degree(b) < 3:
                continue
            specs = [(a, b, False), (a, b, True), (a, b, True)]
            for ps in _path_systems(g, {a, b}, specs, clock):
                yield PatternWitness("theta", {"ends": (a, b), "paths": tuple(map(tuple, ps))})


def find_theta(g: Graph, budget: float | None = DEFAULT_BUDGET) -> PatternWitness | None:
    return next(iter_thetas(g, budget), None)


def iter_prisms(g: Graph, budget: float | None = DEFAULT_BUDGET) -> Iterator[PatternWitness]:
    clock = _Clock(budget)
    tris = _triangles(g)
    for i, t1 in enumerate(tris):
        for t2 in tris[i + 1 :]:
            if set(t1) & set(t2):
                continue
            for perm in itertools.permutations(t2):
                cross = {(u, v) for u in t1 for v in perm if g.has_edge(u, v)}
                if not cross <= set(zip(t1, perm)):
                    continue
                specs = [(t1[k], perm[k], False) for k in range(3)]
                for ps in _path_systems(g, set(t1) | set(t2), specs, clock):
                    yield PatternWitness("prism", {"triangles": (tuple(t1), tuple(perm)), "paths": tuple(map(tuple, ps))})


def find_prism(g: Graph, budget: float | None = DEFAULT_BUDGET) -> PatternWitness | None:
    return next(iter_prisms(g, budget), None)


def iter_pyramids(g: Graph, budget: float | None = DEFAULT_BUDGET) -> Iterator[PatternWitness]:
    clock = _Clock(budget)
    for tri in _triangles(g):
        for x in sorted(g):
            if x in tri or g.degree(x) < 3:
                continue
            if len(g.neighbors(x) & set(tri)) > 1:
                continue
            specs = [(x, c, False) for c in tri]
            for ps in _path_systems(g, {x, *tri}, specs, clock):
                yield PatternWitness("pyramid", {"apex": (x,), "triangle": tuple(tri), "paths": tuple(map(tuple, ps))})


def find_pyramid(g: Graph, budget: float | None = DEFAULT_BUDGET) -> PatternWitness | None:
    return next(iter_pyramids(g, budget), None)


def iter_extended_prisms(g: Graph, budget: float | None = DEFAULT_BUDGET) -> Iterator[PatternWitness]:
    clock = _Clock(budget)
    tris = _triangles(g)
    edges = g.edges()
    for t1, t2 in itertools.permutations(tris, 2):
        if set(t1) & set(t2):
            continue
        for perm in itertools.permutations(t2):
            for order in itertools.permutations(t1):
                # the mirror x<->y swaps the first two corners; keep one of them
                if order[0] > order[1]:
                    continue
                cross = {frozenset((u, v)) for u in order for v in perm if g.has_edge(u, v)}
                if not cross <= {frozenset((order[2], perm[2]))}:
                    continue
                for x0, y0 in edges:
                    for x, y in ((x0, y0), (y0, x0)):
                        if {x, y} & (set(t1) | set(t2)):
                            continue
                        core = {*order, *perm, x, y}
                        specs = [
                            (order[0], x, False),
                            (x, perm[0], False),
                            (order[1], y, False),
                            (y, perm[1], False),
                            (order[2], perm[2], False),
                        ]
                        if not _core_ok_extended(g, order, perm, x, y):
                            continue
                        for ps in _path_systems(g, core, specs, clock):
                            yield PatternWitness(
                                "extended-prism",
                                {"triangles": (tuple(order), tuple(perm)), "middle": (x, y), "paths": tuple(map(tuple, ps))},
                            )


def _core_ok_extended(g: Graph, t1, t2, x, y) -> bool:
    allowed = {frozenset((t1[0], x)), frozenset((x, t2[0])), frozenset((t1[1], y)), frozenset((y, t2[1])), frozenset((x, y))}
    for u in (x, y):
        for v in (*t1, *t2):
            if g.has_edge(u, v) and frozenset((u, v)) not in allowed:
                return False
    return True


def find_extended_prism(g: Graph, budget: float | None = DEFAULT_BUDGET) -> PatternWitness | None:
    return next(iter_extended_prisms(g, budget), None)


def find_cube(g: Graph) -> PatternWitness | None:
    from networkx.algorithms.isomorphism import GraphMatcher

    from .generators import make_cube

    cube = make_cube()
    gm = GraphMatcher(g.to_networkx(), cube.to_networkx())
    for mapping in gm.subgraph_isomorphisms_iter():
        inv = {c: v for v, c in mapping.items()}
        return PatternWitness("cube", {"cycle": tuple(inv[i] for i in range(6)), "centers": (inv[6], inv[7])})
    return None


# --------------------------------------------------------------------------
# wheels
# --------------------------------------------------------------------------


def is_pyramid_graph(g: Graph, budget: float | None = DEFAULT_BUDGET) -> PatternWitness | None:
    """A pyramid witness spanning all of ``g``, if ``g`` itself is a pyramid."""
    for w in iter_pyramids(g, budget):
        if w.vertices == g.vertices:
            return w
    return None


def wheel_is_pyramid(g: Graph, rim: Sequence, center) -> bool:
    return is_pyramid_graph(g.induced(set(rim) | {center})) is not None


def iter_wheels(g: Graph, proper_only: bool = False, budget: float | None = DEFAULT_BUDGET) -> Iterator[PatternWitness]:
    for x in sorted(g):
        if g.degree(x) < 3:
            continue
        rest = g.vertices - {x}
        for cyc in iter_holes(g, "any", budget, within=rest):
            if len(g.neighbors(x) & set(cyc)) >= 3:
                if proper_only and wheel_is_pyramid(g, cyc, x):
                    continue
                yield PatternWitness("wheel", {"rim": cyc, "center": (x,)})


def find_wheel(g: Graph, proper_only: bool = False, budget: float | None = DEFAULT_BUDGET) -> PatternWitness | None:
    return next(iter_wheels(g, proper_only, budget), None)


FINDERS = {
    "hole": lambda g, budget=DEFAULT_BUDGET: find_hole(g, "any", budget),
    "even-hole": lambda g, budget=DEFAULT_BUDGET: find_hole(g, "even", budget),
    "odd-hole": lambda g, budget=DEFAULT_BUDGET: find_hole(g, "odd", budget),
    "theta": find_theta,
    "prism": find_prism,
    "pyramid": find_pyramid,
    "wheel": lambda g, budget=DEFAULT_BUDGET: find_wheel(g, False, budget),
    "proper-wheel": lambda g, budget=DEFAULT_BUDGET: find_wheel(g, True, budget),
    "extended-prism": find_extended_prism,
    "cube": lambda g, budget=DEFAULT_BUDGET: find_cube(g),
}


def find_pattern(g: Graph, kind: str, budget: float | None = DEFAULT_BUDGET) -> PatternWitness | None:
    try:
        finder = FINDERS[kind]
    except KeyError:
        raise ValueError(f"unknown pattern {kind!r}; choose from {sorted(FINDERS)}") from None
    return finder(g, budget=budget)


def is_theta_prism_free(g: Graph, budget: float | None = DEFAULT_BUDGET) -> bool:
    return find_theta(g, budget) is None and find_prism(g, budget) is None


# --------------------------------------------------------------------------
# major vertices, sectors
# --------------------------------------------------------------------------


def _require_hole(g: Graph, hole: Sequence) -> None:
    if not is_hole(g, hole):
        raise GraphError("the given vertex sequence is not a hole")


def major_vertices(g: Graph, hole: Sequence) -> frozenset:
    """Vertices outside the hole whose hole-neighbourhood is not inside any 3-vertex subpath."""
    _require_hole(g, hole)
    k = len(hole)
    windows = [frozenset(hole[(i + d) % k] for d in (-1, 0, 1)) for i in range(k)]
    hs = set(hole)
    out = set()
    for u in g.vertices - hs:
        nh = g.neighbors(u) & hs
        if not any(nh <= wdw for wdw in windows):
            out.add(u)
    return frozenset(out)


def major_vertex_lemma_violations(g: Graph, budget: float | None = DEFAULT_BUDGET) -> list[tuple]:
    """(hole, vertex) pairs where a major vertex does not see exactly three pairwise non-adjacent hole vertices.

    The lemma promises none of these in (even hole, pyramid)-free graphs of
    maximum degree 4; every hole of ``g`` is checked.
    """
    bad = []
    for hole in iter_holes(g, "any", budget):
        hs = set(hole)
        for u in sorted(major_vertices(g, hole)):
            nh = sorted(g.neighbors(u) & hs)
            if len(nh) != 3 or any(g.has_edge(a, b) for a, b in itertools.combinations(nh, 2)):
                bad.append((hole, u))
    return bad


def sectors(g: Graph, hole: Sequence, u) -> list[Path]:
    """The u-sectors of the hole, in hole order starting from the first u-neighbour."""
    _require_hole(g, hole)
    if u in hole:
        raise GraphError("u must lie outside the hole")
    k = len(hole)
    idx = [i for i, v in enumerate(hole) if g.has_edge(u, v)]
    if len(idx) < 2:
        raise GraphError("u needs at least two neighbours in the hole")
    out = []
    for a, b in zip(idx, idx[1:] + [idx[0] + k]):
        out.append(Path(hole[t % k] for t in range(a, b + 1)))
    return out


def check_sector_containment(g: Graph, hole: Sequence, v, component) -> Path | None:
    """A v-sector x..y with N(C) within {x, y} plus the neighbours of v off the hole, or None."""
    comp = frozenset(component)
    closed = g.neighbors(v) | {v}
    rest = g.vertices - closed
    if not comp or not comp <= rest or comp not in g.components(rest):
        raise GraphError("C is not a connected component of G minus N[v]")
    if v not in major_vertices(g, hole):
        raise GraphError("v is not major with respect to the hole")
    nc = g.neighborhood_of_set(comp)
    off = g.neighbors(v) - set(hole)
    for p in sectors(g, hole, v):
        if nc <= {p[0], p[-1]} | off:
            return p
    return None


# --------------------------------------------------------------------------
# rings and 7-hyperantiholes
# --------------------------------------------------------------------------


def ring_violations(g: Graph, parts: Sequence) -> list[str]:
    """Empty iff the cyclic partition satisfies all four ring conditions."""
    parts = [frozenset(p) for p in parts]
    k = len(parts)
    problems = []
    if k < 3:
        return ["fewer than three parts"]
    if any(not p for p in parts) or set().union(*parts) != g.vertices or sum(map(len, parts)) != g.n:
        return ["not a partition of V(G) into non-empty sets"]
    closed = {v: g.neighbors(v) | {v} for v in g.vertices}
    for i, x in enumerate(parts):
        prev, nxt = parts[i - 1], parts[(i + 1) % k]
        if not g.is_clique(x):
            problems.append(f"(1) X_{i + 1} is not a clique")
        outside = g.vertices - prev - x - nxt
        if any(g.neighbors(v) & outside for v in x):
            problems.append(f"(2) X_{i + 1} has neighbours beyond X_{i} and X_{i + 2}")
        if not any((prev | nxt) <= g.neighbors(v) for v in x):
            problems.append(f"(3) no vertex of X_{i + 1} is complete to its neighbours")
        for a, b in itertools.combinations(x, 2):
            if not (closed[a] <= closed[b] or closed[b] <= closed[a]):
                problems.append(f"(4) closed neighbourhoods of {a}, {b} not nested")
    return problems


def _cliques(g: Graph, cands, forced=frozenset()) -> Iterator[frozenset]:
    """All non-empty cliques ``forced | extra`` with ``extra`` drawn from ``cands``."""
    forced = frozenset(forced)
    if not g.is_clique(forced):
        return
    cands = sorted(c for c in set(cands) - forced if all(g.has_edge(c, x) for x in forced))

    def rec(i: int, q: frozenset):
        if q:
            yield q
        for j in range(i, len(cands)):
            c = cands[j]
            if all(g.has_edge(c, x) for x in q):
                yield from rec(j + 1, q | {c})

    yield from rec(0, forced)


def is_ring(g: Graph, budget: float | None = DEFAULT_BUDGET) -> list[frozenset] | None:
    """A ring partition of ``g`` or None.

    Exhaustive backtracking: X_1 is a clique through the smallest vertex, X_2
    any clique meeting N(X_1), and each later part must contain every new
    neighbour of the previous part (condition 2) plus optionally vertices
    that do not see the previous part. Candidates are re-checked against all
    four conditions before being returned.
    """
    if g.n < 3:
        return None
    clock = _Clock(budget)
    verts = g.vertices
    start = min(verts)

    def extend(seq: list, used: frozenset):
        clock.tick()
        cur, prev = seq[-1], seq[-2]
        beyond = g.neighborhood_of_set(cur) - prev
        if used == verts:
            if len(seq) >= 3 and not ring_violations(g, seq):
                yield list(seq)
            return
        if beyond & used or not beyond:
            return
        extras = [v for v in verts - used - beyond if not (g.neighbors(v) & cur)]
        for nxt in _cliques(g, extras, frozenset(beyond)):
            yield from extend(seq + [nxt], used | nxt)

    for first in _cliques(g, g.neighbors(start), frozenset({start})):
        touch = g.neighborhood_of_set(first)
        for second in _cliques(g, verts - first):
            if not (second & touch):
                continue
            for res in extend([first, second], first | second):
                return res
    return None


def is_7hyperantihole(g: Graph) -> list[frozenset] | None:
    """Partition into seven cliques X_i, each complete to all but X_{i-1}, X_{i+1}.

    In the complement such a graph is a 7-cycle blown up by false twins, so
    grouping vertices by complement neighbourhood recovers the partition.
    """
    if g.n < 7:
        return None
    comp = g.complement()
    classes: dict[frozenset, set] = {}
    for v in sorted(comp):
        classes.setdefault(comp.neighbors(v), set()).add(v)
    if len(classes) != 7:
        return None
    groups = [frozenset(c) for c in classes.values()]
    start = groups[0]
    order = [start]
    while len(order) < 7:
        cur = order[-1]
        nb = [x for x in groups if x not in order and comp.has_edge(next(iter(cur)), next(iter(x)))]
        if not nb:
            return None
        order.append(min(nb, key=min))
    if hyperantihole_violations(g, order):
        return None
    return order


def hyperantihole_violations(g: Graph, parts: Sequence) -> list[str]:
    parts = [frozenset(p) for p in parts]
    if len(parts) != 7 or set().union(*parts) != g.vertices or sum(map(len, parts)) != g.n:
        return ["not a partition into seven sets"]
    problems = []
    for i, x in enumerate(parts):
        prev, nxt = parts[i - 1], parts[(i + 1) % 7]
        if not x or not g.is_clique(x):
            problems.append(f"(1) X_{i + 1} is not a non-empty clique")
        far = g.vertices - prev - x - nxt
        if any(not far <= g.neighbors(v) for v in x):
            problems.append(f"(2) X_{i + 1} not complete to the far sets")
        if any(g.neighbors(v) & (prev | nxt) for v in x):
            problems.append(f"(3) X_{i + 1} not anticomplete to its neighbours")
    return problems
