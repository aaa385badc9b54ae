import pytest
from hypothesis import given, settings, strategies as st

from holeforge.forks import (
    SeptuplePartition,
    extract_induced_stone_wall,
    find_fork_or_semifork,
    fork_from_partition,
    partition_violations,
    validate_fork,
    wall_shape_for,
)
from holeforge.generators import random_uncontraction, triangulated_grid
from holeforge.graph import Graph, GraphError
from holeforge.walls import homogeneous_kind, stone_wall_shape, wall_dimensions

CELLS = {"A_": (1, 1), "A": (2, 1), "B_": (1, 4), "B": (1, 3), "C_": (4, 1), "C": (3, 2), "S": (2, 2)}


def _star():
    # a - x - s - y - b and s - z - c
    g = Graph(range(7), [(0, 1), (1, 6), (2, 3), (3, 6), (4, 5), (5, 6)])
    p = SeptuplePartition(g, frozenset({0}), frozenset({1}), frozenset({2}), frozenset({3}), frozenset({4}), frozenset({5}), frozenset({6}), 0, 2, 4)
    return g, p


def test_star_gives_subdivided_claw():
    g, p = _star()
    f = fork_from_partition(p)
    assert f.kind == "fork" and f.centre == (6,)
    wit = find_fork_or_semifork(p)
    assert set(wit.roles["tips"]) == {0, 2, 4}
    assert validate_fork(g, wit)


def test_adjacent_attachments_give_semifork():
    # b - y - s1 - s2 - z - c with w ~ s1, s2 and a - x - w
    es = [(0, 1), (1, 8), (2, 3), (3, 6), (6, 7), (7, 5), (5, 4), (8, 6), (8, 7)]
    g = Graph(range(9), es)
    p = SeptuplePartition(g, frozenset({0}), frozenset({1}), frozenset({2}), frozenset({3}), frozenset({4}), frozenset({5}), frozenset({6, 7, 8}), 0, 2, 4)
    wit = find_fork_or_semifork(p)
    assert wit.kind == "semi-fork"
    assert set(wit.roles["triangle"]) == {6, 7, 8}
    assert validate_fork(g, wit)


def test_spread_attachments_give_fork_at_w():
    # w sees s1 and s3 on the b-c path, which are not adjacent
    es = [(0, 1), (1, 9), (2, 3), (3, 6), (6, 7), (7, 8), (8, 5), (5, 4), (9, 6), (9, 8)]
    g = Graph(range(10), es)
    p = SeptuplePartition(g, frozenset({0}), frozenset({1}), frozenset({2}), frozenset({3}), frozenset({4}), frozenset({5}), frozenset({6, 7, 8, 9}), 0, 2, 4)
    f = fork_from_partition(p)
    assert f.kind == "fork" and f.centre == (9,)
    assert validate_fork(g, f.witness())


def test_partition_violations():
    g, p = _star()
    bad = SeptuplePartition(g.add_edges([(0, 6)]), *[p.part(n) for n in ("A_", "A", "B_", "B", "C_", "C", "S")], 0, 2, 4)
    assert any("joins" in v for v in partition_violations(bad))
    with pytest.raises(GraphError):
        fork_from_partition(bad)
    wrong_tip = SeptuplePartition(g, *[p.part(n) for n in ("A_", "A", "B_", "B", "C_", "C", "S")], 1, 2, 4)
    assert partition_violations(wrong_tip)


def _grid_partition(g, phi, t):
    cells = {t.label(v): v for v in t}
    pre = {name: frozenset(u for u, x in phi.items() if x == cells[c]) for name, c in CELLS.items()}
    nodes = set().union(*pre.values())
    h = g.induced(nodes)
    tip = lambda name: min(pre[name])  # noqa: E731
    return h, SeptuplePartition(h, pre["A_"], pre["A"], pre["B_"], pre["B"], pre["C_"], pre["C"], pre["S"], tip("A_"), tip("B_"), tip("C_"))


@settings(max_examples=40)
@given(st.integers(1, 4), st.integers(0, 10**6))
def test_grid_preimage_partitions(size, seed):
    t = triangulated_grid(4, 4)
    g, phi = random_uncontraction(t, size, seed, extra=0.4)
    h, p = _grid_partition(g, phi, t)
    assert not partition_violations(p)
    wit = find_fork_or_semifork(p)
    assert validate_fork(h, wit)
    assert set(wit.roles["tips"]) == {p.a, p.b, p.c}


def test_wall_shape_for():
    assert wall_shape_for(28) == (4, 2)
    assert wall_shape_for(32) == (4, 2)
    assert wall_shape_for(48) == (6, 3)
    assert wall_shape_for(8) == (1, 0)


@pytest.mark.parametrize("k,dims", [(28, (4, 2)), (32, (4, 2)), (40, (5, 2))])
def test_identity_witness(k, dims):
    t = triangulated_grid(k, k)
    sw = extract_induced_stone_wall(t, {v: v for v in t}, 3, k)
    assert sw.graph == t.induced(sw.graph.vertices)
    shape = stone_wall_shape(sw.graph)
    assert shape is not None
    assert wall_dimensions(sw.base.graph) is not None
    assert (sw.base.n_rows, sw.base.m_cols) == dims


def test_extraction_errors():
    t = triangulated_grid(28, 28)
    phi = {v: v for v in t}
    with pytest.raises(GraphError):
        extract_induced_stone_wall(t, phi, 4, 28)
    small = triangulated_grid(16, 16)
    with pytest.raises(GraphError):
        extract_induced_stone_wall(small, {v: v for v in small}, 2, 16)
    broken = dict(phi)
    broken[0] = 5
    with pytest.raises(GraphError):
        extract_induced_stone_wall(t, broken, 3, 28)


@settings(max_examples=6)
@given(st.integers(0, 10**6))
def test_uncontracted_grid_yields_induced_stone_wall(seed):
    t = triangulated_grid(28, 28)
    g, phi = random_uncontraction(t, 3, seed, extra=0.3)
    sw = extract_induced_stone_wall(g, phi, 3, 28)
    assert sw.graph == g.induced(sw.graph.vertices)
    assert stone_wall_shape(sw.graph) is not None
    assert sw.contracted().edge_set() == sw.base.graph.edge_set()
