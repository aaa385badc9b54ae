import networkx as nx
import pytest
from hypothesis import given, strategies as st

from holeforge.detectors import find_hole, find_prism, find_pyramid, find_theta, is_7hyperantihole, is_ring
from holeforge.generators import (
    RingSpec,
    chordless_wall,
    elementary_wall,
    grid,
    grid_corners,
    make_7hyperantihole,
    make_cube,
    make_extended_prism,
    make_net,
    make_prism,
    make_pyramid,
    make_ring,
    make_theta,
    make_wheel,
    net_graph_replacement,
    random_ring_spec,
    random_uncontraction,
    random_wall,
    stone_wall,
    triangulated_grid,
    wall,
)
from holeforge.graph import Graph, GraphError, complete_bipartite, cycle_graph, is_chordless_graph, line_graph, verify_contraction_map
from holeforge.treewidth import exact_treewidth, has_minor

import random


def iso(a, b):
    return nx.is_isomorphic(a.to_networkx(), b.to_networkx())


def test_grid_counts():
    assert iso(grid(2, 2), cycle_graph(4))
    g = grid(5, 5)
    assert (g.n, g.m) == (25, 40)
    assert grid_corners(3, 4) == {"top_left": 0, "top_right": 3, "bottom_left": 8, "bottom_right": 11}


@pytest.mark.parametrize("n,m", [(1, 3), (3, 1), (0, 0)])
def test_grid_rejects_small(n, m):
    with pytest.raises(GraphError):
        grid(n, m)
    with pytest.raises(GraphError):
        elementary_wall(n, m)


def test_grid_3x3_treewidth():
    assert exact_treewidth(grid(3, 3)) == 3


def test_triangulated_grid():
    t = triangulated_grid(2, 2)
    assert (t.n, t.m) == (4, 5)
    t = triangulated_grid(5, 5)
    assert (t.n, t.m) == (25, 56)
    assert has_minor(triangulated_grid(4, 4), 4) is not None


@pytest.mark.parametrize("n", range(2, 7))
@pytest.mark.parametrize("m", range(2, 7))
def test_elementary_wall_invariants(n, m):
    w = elementary_wall(n, m)
    g = w.graph
    assert g.n == 2 * m * (n - 1)
    assert {g.degree(v) for v in g} <= {2, 3}
    assert g.is_connected()
    rows = [set(p) for p in w.horizontal_paths]
    assert sum(map(len, rows)) == g.n
    for p in w.horizontal_paths + w.vertical_paths:
        assert p.is_path_in(g) and p.is_chordless_in(g)
    for col in w.vertical_paths:
        assert all(set(col) & r for r in rows)


def test_elementary_wall_small_sizes():
    assert iso(elementary_wall(2, 2).graph, cycle_graph(4))
    w = elementary_wall(5, 5).graph
    assert w.n == 40 and w.max_degree() == 3


def test_large_wall_has_theta():
    assert find_theta(elementary_wall(3, 3).graph) is not None


def test_wall_subdivision():
    assert wall(3, 3) .graph == elementary_wall(3, 3).graph
    w = wall(3, 3, {((1, 1), (1, 3)): 2})
    assert w.graph.n == elementary_wall(3, 3).graph.n + 2
    assert len(w.horizontal_paths[0]) == len(elementary_wall(3, 3).horizontal_paths[0]) + 2
    with pytest.raises(GraphError):
        wall(3, 3, {((1, 1), (2, 2)): 1})


@given(st.integers(2, 4), st.integers(2, 4), st.integers(0, 2), st.integers(0, 10**6))
def test_random_wall_degrees(n, m, k, seed):
    w = random_wall(n, m, k, seed)
    assert {w.graph.degree(v) for v in w.graph} <= {2, 3}
    assert len(w.branch_vertices) == len(elementary_wall(n, m).branch_vertices)


def test_chordless_wall_is_chordless():
    assert is_chordless_graph(chordless_wall(3, 3).graph)


def test_net_graph_replacement():
    claw = Graph(range(4), [(0, 1), (0, 2), (0, 3)])
    net = net_graph_replacement(claw, 0)
    assert (net.n, net.m) == (6, 6)
    assert iso(net, make_net())
    degs = sorted(net.degree(v) for v in net)
    assert degs == [1, 1, 1, 3, 3, 3]
    with pytest.raises(GraphError):
        net_graph_replacement(cycle_graph(4), 0)


def test_net_replacement_degree_count():
    g = elementary_wall(3, 3).graph
    v = min(g.vertices, key=lambda x: (g.degree(x) != 3, x))
    h = net_graph_replacement(g, v)
    cubic = lambda x: sum(x.degree(u) == 3 for u in x)  # noqa: E731
    assert cubic(h) == cubic(g) + 3 - 1
    assert (h.n, h.m) == (g.n + 2, g.m + 3)


def test_stone_wall_extremes():
    w = elementary_wall(3, 3)
    assert stone_wall(3, 3, []).graph == w.graph
    full = stone_wall(3, 3, w.branch_vertices)
    assert full.is_homogeneous
    assert full.graph.n == w.graph.n + 2 * len(w.branch_vertices)
    # the fully replaced wall is the line graph of a chordless wall
    assert nx.is_isomorphic(full.graph.to_networkx(), nx.line_graph(_lengthen(w.graph)))
    some = stone_wall(3, 3, sorted(w.branch_vertices)[:1])
    assert not some.is_homogeneous
    with pytest.raises(GraphError):
        stone_wall(3, 3, [v for v in w.graph if w.graph.degree(v) == 2][:1])


def _lengthen(g):
    # subdivide every wall edge once, then dissolve the original degree-2 vertices;
    # the edges of the result correspond to vertices of the full stone wall
    h = nx.Graph()
    for u, v in g.edges():
        h.add_edges_from([(u, ("e", u, v)), (("e", u, v), v)])
    for w in list(h):
        if not isinstance(w, tuple) and g.degree(w) == 2:
            a, b = h.neighbors(w)
            h.remove_node(w)
            h.add_edge(a, b)
    return h


@pytest.mark.parametrize("n,m", [(2, 3), (3, 3), (3, 4), (4, 4)])
def test_stone_wall_full_is_line_graph(n, m):
    w = elementary_wall(n, m)
    full = stone_wall(n, m, w.branch_vertices)
    assert nx.is_isomorphic(full.graph.to_networkx(), nx.line_graph(_lengthen(w.graph)))


def test_theta_prism_examples():
    assert iso(make_theta(2, 2, 2), complete_bipartite(2, 3))
    p = make_prism(1, 1, 1)
    assert (p.n, p.m) == (6, 9)
    c = make_cube()
    assert c.n == 8 and all(c.degree(v) == 3 for v in c)
    assert find_theta(c) is None and find_prism(c) is None
    assert iso(c, Graph.from_networkx(nx.hypercube_graph(3)))


@given(st.integers(2, 5), st.integers(2, 5), st.integers(2, 5))
def test_theta_detected_and_has_even_hole(a, b, c):
    g = make_theta(a, b, c)
    assert find_theta(g) is not None
    assert find_prism(g) is None and find_pyramid(g) is None
    assert find_hole(g, "even") is not None


@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 4))
def test_prism_detected_and_has_even_hole(a, b, c):
    g = make_prism(a, b, c)
    assert find_prism(g) is not None
    assert find_theta(g) is None and find_pyramid(g) is None
    assert find_hole(g, "even") is not None


def test_pattern_preconditions():
    with pytest.raises(GraphError):
        make_theta(1, 2, 2)
    with pytest.raises(GraphError):
        make_prism(0, 1, 1)
    with pytest.raises(GraphError):
        make_pyramid(1, 1, 2)
    with pytest.raises(GraphError):
        make_wheel(4, [0, 1])
    with pytest.raises(GraphError):
        make_wheel(6, [0, 2, 4, 5], reject_even=True)
    with pytest.raises(GraphError):
        make_extended_prism(0, 1, 1, 1, 1)


def test_pyramid_and_extended_prism_shapes():
    py = make_pyramid(1, 2, 2)
    assert find_pyramid(py) is not None and find_theta(py) is None and find_prism(py) is None
    ep = make_extended_prism(1, 1, 1, 1, 1)
    assert ep.n == 8 and ep.max_degree() == 3


def test_ring_examples():
    g, parts = make_ring(RingSpec((1,) * 6))
    assert iso(g, cycle_graph(6))
    assert is_ring(g) is not None
    h, _ = make_7hyperantihole([1] * 7)
    assert iso(h, cycle_graph(7).complement())
    assert is_7hyperantihole(h) is not None
    with pytest.raises(GraphError):
        make_ring(RingSpec((1, 1)))
    with pytest.raises(GraphError):
        make_7hyperantihole([1] * 6)


@given(st.integers(0, 10**6))
def test_random_rings_are_rings(seed):
    g, parts = make_ring(random_ring_spec(random.Random(seed), (3, 7), 3))
    assert is_ring(g) is not None


def test_degree4_ring_has_no_k6_minor():
    g, _ = make_ring(RingSpec((2, 1, 2, 1, 2, 1), (2, 1, 2, 1, 2, 1)))
    assert g.max_degree() <= 4
    assert has_minor(g, 6) is None


@given(st.integers(3, 7), st.integers(1, 4), st.integers(0, 10**6))
def test_random_uncontraction_maps_back(n, size, seed):
    h = cycle_graph(n)
    g, phi = random_uncontraction(h, size, seed, extra=0.3)
    assert verify_contraction_map(g, h, phi)
