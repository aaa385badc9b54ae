import math

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from holeforge.generators import elementary_wall, grid
from holeforge.graph import (
    Graph,
    GraphError,
    Path,
    complete_graph,
    contract_edge,
    contraction_violations,
    cycle_graph,
    distance,
    induced_subgraph,
    is_chordless_graph,
    is_hole,
    line_graph,
    path_graph,
    subdivide,
    verify_contraction_map,
)

from .strategies import graphs


def test_induced_clique_restriction():
    assert induced_subgraph(complete_graph(4), [0, 1, 2]) == complete_graph(3)


def test_induced_alternate_cycle_vertices_are_independent():
    h = induced_subgraph(cycle_graph(6), [0, 2, 4])
    assert h.n == 3 and h.m == 0


def test_first_horizontal_path_of_wall_is_chordless():
    w = elementary_wall(5, 5)
    row = w.horizontal_paths[0]
    h = w.graph.induced(row)
    assert h.m == len(row) - 1
    assert Path(row).is_chordless_in(w.graph)


def test_induced_rejects_unknown_vertex():
    with pytest.raises(GraphError):
        induced_subgraph(cycle_graph(4), [0, 9])


@given(graphs())
def test_induced_whole_vertex_set_is_identity(g):
    assert induced_subgraph(g, g.vertices) == g


def test_line_graph_small_cases():
    assert nx.is_isomorphic(line_graph(complete_graph(3)).to_networkx(), nx.complete_graph(3))
    lp = line_graph(path_graph(4))
    assert lp.n == 3 and lp.m == 2


@given(graphs())
def test_line_graph_degrees(g):
    lg = line_graph(g)
    assert lg.n == g.m
    for i, (u, v) in enumerate(g.edges()):
        assert lg.degree(i) == g.degree(u) + g.degree(v) - 2


def test_subdivide_cases():
    k3 = complete_graph(3)
    assert subdivide(k3, (0, 1), 0) == k3
    c4 = subdivide(k3, (0, 1), 1)
    assert c4.n == 4 and c4.m == 4 and all(c4.degree(v) == 2 for v in c4)
    with pytest.raises(GraphError):
        subdivide(cycle_graph(5), (0, 2), 1)


@given(graphs(min_n=2), st.integers(0, 3), st.data())
def test_subdivide_keeps_cycle_rank(g, k, data):
    if not g.m:
        return
    e = data.draw(st.sampled_from(g.edges()))
    h = subdivide(g, e, k)
    assert len(h.components()) == len(g.components())
    assert h.m - h.n == g.m - g.n


def _has_chorded_cycle(g):
    nxg = g.to_networkx()
    return any(len(c) >= 4 and nxg.subgraph(c).number_of_edges() > len(c) for c in nx.simple_cycles(nxg))


def test_chordless_graph_examples():
    # the rung shared by two neighbouring bricks is a chord of their union
    w = elementary_wall(4, 4).graph
    assert not is_chordless_graph(w)
    assert _has_chorded_cycle(w)
    from holeforge.generators import subdivide_all
    assert is_chordless_graph(subdivide_all(elementary_wall(3, 3)).graph)
    assert not is_chordless_graph(complete_graph(4))
    assert is_chordless_graph(nx_tree())


def nx_tree():
    return Graph.from_networkx(nx.balanced_tree(2, 3))


@given(graphs(max_n=7))
def test_chordless_graph_matches_cycle_enumeration(g):
    assert is_chordless_graph(g) == (not _has_chorded_cycle(g))


def test_contraction_examples():
    c5 = cycle_graph(5)
    assert verify_contraction_map(c5, c5, {v: v for v in c5})
    c4, phi = contract_edge(c5, 0, 1)
    assert verify_contraction_map(c5, c4, phi)
    bad = {0: 0, 1: 1, 2: 0, 3: 2, 4: 3}
    probs = contraction_violations(c5, cycle_graph(4), bad)
    assert any("disconnected" in p for p in probs)


def test_contraction_non_surjective_is_reported():
    probs = contraction_violations(path_graph(2), path_graph(3), {0: 0, 1: 1})
    assert any("surjective" in p for p in probs)


@given(graphs(min_n=3, connected=True), st.data())
def test_contraction_composition(g, data):
    if g.m < 2:
        return
    u, v = data.draw(st.sampled_from(g.edges()))
    h, phi = contract_edge(g, u, v)
    assert verify_contraction_map(g, h, phi)
    if h.m:
        x, y = data.draw(st.sampled_from(h.edges()))
        h2, psi = contract_edge(h, x, y)
        assert verify_contraction_map(g, h2, {w: psi[phi[w]] for w in g})


def test_distance_examples():
    g = grid(3, 3)
    assert distance(g, [4], [4]) == 0
    assert distance(g, [0], [8]) == 4
    two = Graph(range(4), [(0, 1), (2, 3)])
    assert distance(two, [0], [3]) == math.inf
    with pytest.raises(GraphError):
        distance(two, [], [1])


def test_hole_check():
    assert is_hole(cycle_graph(5), range(5))
    assert not is_hole(complete_graph(4), range(4))
