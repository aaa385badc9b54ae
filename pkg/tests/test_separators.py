import itertools

import networkx as nx
from hypothesis import given, settings

from holeforge.decomposition import proper_glue
from holeforge.generators import make_prism, make_theta
from holeforge.graph import Graph, complete_graph, cycle_graph
from holeforge.separators import (
    ProperSeparation,
    TwoJoin,
    find_2join,
    find_clique_separator,
    find_proper_separation,
    iter_cliques,
    proper_separation_violations,
    two_join_violations,
)

from .strategies import graphs, subcubic_graphs


def naive_clique_separator_size(g, max_size):
    nxg = g.to_networkx()
    for k in range(max_size + 1):
        for s in itertools.combinations(sorted(g), k):
            if all(nxg.has_edge(u, v) for u, v in itertools.combinations(s, 2)):
                rest = nxg.subgraph(set(nxg) - set(s))
                if rest.number_of_nodes() and nx.number_connected_components(rest) >= 2:
                    return k
    return None


def test_clique_separator_examples():
    bowtie = Graph(range(5), [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    sep = find_clique_separator(bowtie, 2)
    assert sep.clique == {2} and len(sep.components) == 2
    assert find_clique_separator(cycle_graph(5), 2) is None
    sep = find_clique_separator(Graph(range(4), [(0, 1), (2, 3)]))
    assert sep.clique == frozenset()


@settings(max_examples=80)
@given(graphs(max_n=9))
def test_clique_separator_agrees_with_naive(g):
    sep = find_clique_separator(g, 3)
    size = naive_clique_separator_size(g, 3)
    assert (sep is None) == (size is None)
    if sep is not None:
        assert len(sep.clique) == size
        assert g.is_clique(sep.clique)
        assert len(g.components(g.vertices - sep.clique)) >= 2


def test_iter_cliques_counts():
    assert len(list(iter_cliques(complete_graph(5), 3))) == 10
    assert list(iter_cliques(cycle_graph(4), 3)) == []


def _glued():
    # theta(3,3,3) with ends 0,1 loses one path; the second side is C6 plus a
    # vertex on 4,5 so that the Y side is not a chordless path
    g1 = make_theta(3, 3, 3)
    p1 = [0] + [v for v in g1 if g1.label(v) in (("P1", 1), ("P1", 2))] + [1]
    g2 = cycle_graph(6).add_edges([(6, 4), (6, 5)])
    return proper_glue(g1, 0, 1, p1, g2, 0, 3, [0, 1, 2, 3])


def test_proper_separation_from_gluing():
    g = _glued()
    sep = find_proper_separation(g)
    assert sep is not None
    assert {sep.a, sep.b} == {0, 1}
    assert not proper_separation_violations(g, sep)
    assert _independent_proper_check(g, sep)


def _independent_proper_check(g, sep):
    nxg = g.to_networkx()
    a, b, X, Y = sep.a, sep.b, set(sep.X), set(sep.Y)
    if X & Y or {a, b} & (X | Y) or X | Y | {a, b} != set(nxg) or not X or not Y:
        return False
    if any(nxg.has_edge(x, y) for x in X for y in Y) or nxg.has_edge(a, b):
        return False
    for v in (a, b):
        if len(set(nxg[v]) & X) != 2 or len(set(nxg[v]) & Y) != 1:
            return False
    for side in (X, Y):
        if not nx.has_path(nxg.subgraph(side | {a, b}), a, b):
            return False
    h = nxg.subgraph(Y | {a, b})
    is_path = nx.is_tree(h) and max(d for _, d in h.degree()) <= 2 and h.degree(a) == 1 and h.degree(b) == 1
    return not is_path


def test_proper_separation_negatives():
    assert find_proper_separation(complete_graph(4)) is None
    for n in range(4, 10):
        assert find_proper_separation(cycle_graph(n)) is None


def test_proper_separation_violation_labels():
    g = _glued()
    sep = find_proper_separation(g)
    swapped = ProperSeparation(sep.a, sep.b, sep.Y, sep.X)
    assert "iv" in proper_separation_violations(g, swapped)


@settings(max_examples=40)
@given(subcubic_graphs(max_n=10))
def test_proper_separation_results_validate(g):
    sep = find_proper_separation(g)
    if sep is not None:
        assert _independent_proper_check(g, sep)


def naive_two_join(g):
    # enumerate sides; the cross edges must form exactly two disjoint bicliques
    vs = sorted(g)
    nxg = g.to_networkx()
    for k in range(3, len(vs) - 2):
        for X1 in itertools.combinations(vs, k):
            X1 = set(X1)
            X2 = set(vs) - X1
            cross = nx.Graph([(u, v) for u in X1 for v in nxg[u] if v in X2])
            comps = list(nx.connected_components(cross)) if cross.number_of_nodes() else []
            if len(comps) != 2:
                continue
            parts = []
            for c in comps:
                s1, s2 = c & X1, c & X2
                if cross.subgraph(c).number_of_edges() != len(s1) * len(s2):
                    break
                parts.append((s1, s2))
            else:
                (A1, A2), (B1, B2) = parts
                tj = TwoJoin(frozenset(X1), frozenset(X2), frozenset(A1), frozenset(B1), frozenset(A2), frozenset(B2))
                if not _side_is_path(nxg, X1, A1, B1) and not _side_is_path(nxg, X2, A2, B2):
                    return tj
    return None


def _side_is_path(nxg, side, A, B):
    h = nxg.subgraph(side)
    if not nx.is_tree(h) or max(d for _, d in h.degree()) > 2:
        return False
    ends = [v for v in h if h.degree(v) <= 1]
    if len(ends) == 1:
        ends *= 2
    u, v = ends
    return ((u in A and v in B) or (u in B and v in A)) and not ((A | B) - {u, v})


def test_two_join_examples():
    g = make_prism(2, 2, 2)
    assert find_2join(g) is None  # every split makes a side the excluded path
    assert naive_two_join(g) is None
    g2 = g.add_edges([(g.n, next(v for v in g if g.label(v) == ("P2", 1)))])
    tj = find_2join(g2)
    assert tj is not None and not two_join_violations(g2, tj)
    assert find_2join(complete_graph(5)) is None
    assert find_2join(cycle_graph(7)) is None


@settings(max_examples=60)
@given(graphs(min_n=6, max_n=8, connected=True))
def test_two_join_agrees_with_naive(g):
    tj = find_2join(g)
    assert (tj is None) == (naive_two_join(g) is None)
    if tj is not None:
        assert not two_join_violations(g, tj)
