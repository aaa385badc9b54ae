"""Clique separators, proper separations and 2-joins, each with a checkable witness."""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass

from .detectors import DEFAULT_BUDGET, Inconclusive, _Clock  # noqa: F401
from .graph import Graph


# --------------------------------------------------------------------------
# clique separators
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class CliqueSeparator:
    clique: frozenset
    components: tuple[frozenset, ...]


def iter_cliques(g: Graph, size: int) -> Iterator[tuple]:
    """Cliques of exactly ``size`` vertices in lexicographic order."""
    if size == 0:
        yield ()
        return

    def rec(prefix: tuple, cands: list):
        if len(prefix) == size:
            yield prefix
            return
        for i, c in enumerate(cands):
            yield from rec(prefix + (c,), [d for d in cands[i + 1 :] if g.has_edge(c, d)])

    yield from rec((), sorted(g))


def find_clique_separator(g: Graph, max_size: int = 2) -> CliqueSeparator | None:
    """Smallest (then lexicographically least) clique S, |S| <= max_size, with G - S disconnected."""
    if not 0 <= max_size <= 4:
        raise ValueError("max_size must be in 0..4")
    for size in range(max_size + 1):
        for s in iter_cliques(g, size):
            comps = g.components(g.vertices - set(s))
            if len(comps) >= 2:
                return CliqueSeparator(frozenset(s), tuple(comps))
    return None


# --------------------------------------------------------------------------
# proper separations
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ProperSeparation:
    a: int
    b: int
    X: frozenset
    Y: frozenset


def proper_separation_violations(g: Graph, sep: ProperSeparation) -> list[str]:
    """The conditions (i)-(vii) that fail, by number; empty when the triple is a proper separation."""
    a, b, X, Y = sep.a, sep.b, set(sep.X), set(sep.Y)
    out = []
    ab = {a, b}
    if not (a != b and X and Y and not (X & Y) and not (ab & (X | Y)) and ab | X | Y == set(g.vertices)):
        out.append("i")
    if any(g.neighbors(x) & Y for x in X):
        out.append("ii")
    if g.has_edge(a, b):
        out.append("iii")
    if len(g.neighbors(a) & X) != 2 or len(g.neighbors(b) & X) != 2:
        out.append("iv")
    if len(g.neighbors(a) & Y) != 1 or len(g.neighbors(b) & Y) != 1:
        out.append("v")
    if not (_joined_through(g, a, b, X) and _joined_through(g, a, b, Y)):
        out.append("vi")
    if _is_chordless_ab_path(g, a, b, Y):
        out.append("vii")
    return out


def _joined_through(g: Graph, a, b, interior: set) -> bool:
    comp = next((c for c in g.components(interior | {a, b}) if a in c), frozenset())
    return b in comp


def _is_chordless_ab_path(g: Graph, a, b, interior: set) -> bool:
    sub = g.induced(interior | {a, b})
    if not sub.is_connected():
        return False
    if sub.m != sub.n - 1:
        return False
    degs = {v: sub.degree(v) for v in sub}
    ends = {v for v, d in degs.items() if d == 1}
    return ends == {a, b} and all(d <= 2 for d in degs.values())


def find_proper_separation(g: Graph) -> ProperSeparation | None:
    """Exhaustive over non-adjacent pairs and component bipartitions of G - {a, b}.

    Filters run cheapest first: non-adjacency, the degree profile needed by
    (iv)/(v) (degree exactly 3), then each bipartition is checked in full.
    """
    for a in sorted(g):
        if g.degree(a) != 3:
            continue
        for b in sorted(g):
            if b <= a or g.degree(b) != 3 or g.has_edge(a, b):
                continue
            comps = g.components(g.vertices - {a, b})
            if len(comps) < 2:
                continue
            for mask in range(1, 2 ** len(comps) - 1):
                X = frozenset().union(*(c for i, c in enumerate(comps) if mask >> i & 1))
                Y = g.vertices - X - {a, b}
                if len(g.neighbors(a) & X) != 2 or len(g.neighbors(b) & X) != 2:
                    continue
                sep = ProperSeparation(a, b, X, frozenset(Y))
                if not proper_separation_violations(g, sep):
                    return sep
    return None


# --------------------------------------------------------------------------
# 2-joins
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class TwoJoin:
    X1: frozenset
    X2: frozenset
    A1: frozenset
    B1: frozenset
    A2: frozenset
    B2: frozenset


def two_join_violations(g: Graph, tj: TwoJoin) -> list[str]:
    out = []
    X1, X2 = set(tj.X1), set(tj.X2)
    if X1 & X2 or X1 | X2 != set(g.vertices):
        out.append("not a partition")
    if len(X1) < 3 or len(X2) < 3:
        out.append("a side has fewer than 3 vertices")
    for side, A, B in ((X1, tj.A1, tj.B1), (X2, tj.A2, tj.B2)):
        if not A or not B or A & B or not (A | B) <= side:
            out.append("special sets must be non-empty, disjoint and inside their side")
    allowed = {frozenset((u, v)) for u in tj.A1 for v in tj.A2} | {frozenset((u, v)) for u in tj.B1 for v in tj.B2}
    cross = {frozenset((u, v)) for u in X1 for v in g.neighbors(u) if v in X2}
    if cross != allowed:
        out.append("cross edges are not exactly A1-A2 and B1-B2 complete")
    for side, A, B in ((X1, tj.A1, tj.B1), (X2, tj.A2, tj.B2)):
        if _is_excluded_path(g, side, A, B):
            out.append("a side is a path from A_i to B_i")
    return out


def _is_excluded_path(g: Graph, side, A, B) -> bool:
    sub = g.induced(side)
    if not sub.is_connected() or sub.m != sub.n - 1 or sub.max_degree() > 2:
        return False
    ends = [v for v in sub if sub.degree(v) <= 1]
    if len(ends) == 1:
        ends = ends * 2
    u, v = ends
    if not ((u in A and v in B) or (u in B and v in A)):
        return False
    return not ((set(A) | set(B)) - {u, v})


def find_2join(g: Graph, budget: float | None = DEFAULT_BUDGET) -> TwoJoin | None:
    """Exhaustive 2-join search seeded by a pair of cross edges a1a2, b1b2.

    Once the sides are fixed the special sets are forced
    (``A1 = N(a2) & X1`` and so on), so every cross pair ``u in X1, v in X2``
    must satisfy ``uv in E  <=>  (u~a2 and v~a1) or (u~b2 and v~b1)``. That
    pairwise rule drives a backtracking over side assignments.
    """
    clock = _Clock(budget)
    edges = g.edges()
    directed = [(u, v) for u, v in edges] + [(v, u) for u, v in edges]
    for a1, a2 in directed:
        for b1, b2 in directed:
            if len({a1, a2, b1, b2}) < 4 or b1 < a1:
                continue
            tj = _two_join_from_seed(g, a1, a2, b1, b2, clock)
            if tj is not None:
                return tj
    return None


def _two_join_from_seed(g: Graph, a1, a2, b1, b2, clock) -> TwoJoin | None:
    side = {a1: 1, b1: 1, a2: 2, b2: 2}

    def role(v, s):
        if s == 1:
            return g.has_edge(v, a2), g.has_edge(v, b2)
        return g.has_edge(v, a1), g.has_edge(v, b1)

    def ok(v, s) -> bool:
        ra, rb = role(v, s)
        if ra and rb:
            return False
        for u, su in side.items():
            if su == s or u == v:
                continue
            ua, ub = role(u, su)
            if g.has_edge(u, v) != ((ra and ua) or (rb and ub)):
                return False
        return True

    for v, s in list(side.items()):
        if not ok(v, s):
            return None
    dist = g.bfs_distances(side)
    order = sorted(g.vertices - set(side), key=lambda v: (dist.get(v, len(g)), v))

    def rec(i: int) -> TwoJoin | None:
        clock.tick()
        if i == len(order):
            X1 = frozenset(v for v, s in side.items() if s == 1)
            X2 = g.vertices - X1
            tj = TwoJoin(
                X1,
                frozenset(X2),
                frozenset(v for v in X1 if g.has_edge(v, a2)),
                frozenset(v for v in X1 if g.has_edge(v, b2)),
                frozenset(v for v in X2 if g.has_edge(v, a1)),
                frozenset(v for v in X2 if g.has_edge(v, b1)),
            )
            return None if two_join_violations(g, tj) else tj
        v = order[i]
        for s in (1, 2):
            if ok(v, s):
                side[v] = s
                res = rec(i + 1)
                if res is not None:
                    return res
                del side[v]
        return None

    return rec(0)
