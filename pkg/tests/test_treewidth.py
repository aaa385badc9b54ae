import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from holeforge.decomposition import tree_decomposition_subcubic
from holeforge.generators import grid, make_cube, make_ring, RingSpec
from holeforge.graph import Graph, GraphError, complete_graph, contract_edge, cycle_graph, path_graph
from holeforge.treewidth import (
    MinorWitness,
    SizeCapExceeded,
    TreeDecomposition,
    decomposition_from_ordering,
    exact_treewidth,
    has_minor,
    minor_witness_violations,
    optimal_tree_decomposition,
    validate_tree_decomposition,
)

from .strategies import graphs


def brute_treewidth(g):
    # minimum over all elimination orderings of the maximum fill degree
    best = g.n - 1
    for order in itertools.permutations(sorted(g)):
        adj = {v: set(g.neighbors(v)) for v in g}
        w = 0
        for v in order:
            nb = adj.pop(v)
            w = max(w, len(nb))
            for a in nb:
                adj[a] |= nb - {a}
                adj[a].discard(v)
            if w >= best:
                break
        best = min(best, w)
    return best


def brute_minor(g, l):
    # every vertex goes to one of l branch sets or is deleted
    vs = sorted(g)
    for assign in itertools.product(range(l + 1), repeat=len(vs)):
        sets = [frozenset(v for v, a in zip(vs, assign) if a == i) for i in range(1, l + 1)]
        if all(sets) and not minor_witness_violations(g, MinorWitness(tuple(sets))):
            return True
    return False


def test_treewidth_examples():
    assert exact_treewidth(complete_graph(5)) == 4
    assert exact_treewidth(Graph.from_networkx(nx.balanced_tree(2, 3))) == 1
    assert exact_treewidth(grid(4, 4)) == 4
    assert exact_treewidth(Graph()) == -1


def test_grid_hand_decomposition():
    # path decomposition of the 4x4 grid sliding a window of five vertices
    g = grid(4, 4)
    bags = {t: frozenset(range(t, t + 5)) for t in range(12)}
    td = TreeDecomposition(bags, [(t, t + 1) for t in range(11)])
    chk = validate_tree_decomposition(g, td)
    assert chk.valid and chk.width == 4 == exact_treewidth(g)


@settings(max_examples=40)
@given(graphs(max_n=7))
def test_treewidth_matches_permutation_oracle(g):
    assert exact_treewidth(g) == brute_treewidth(g)


@given(graphs(max_n=10))
def test_optimal_decomposition_is_valid(g):
    td = optimal_tree_decomposition(g)
    chk = validate_tree_decomposition(g, td)
    assert chk.valid and chk.width == exact_treewidth(g)


def test_size_cap():
    with pytest.raises(SizeCapExceeded):
        exact_treewidth(grid(5, 5))


def test_validate_examples():
    g = cycle_graph(5)
    chk = validate_tree_decomposition(g, TreeDecomposition({0: g.vertices}))
    assert chk.valid and chk.width == 4
    bad = TreeDecomposition({0: frozenset({0, 1, 2}), 1: frozenset({2, 3, 4})}, [(0, 1)])
    chk = validate_tree_decomposition(g, bad)
    assert not chk.valid and any("4-0" in p or "0-4" in p for p in chk.problems)
    chk = validate_tree_decomposition(make_cube(), tree_decomposition_subcubic(make_cube()))
    assert chk.valid and chk.width == 3


def test_validate_subtree_axiom_and_malformed_tree():
    g = path_graph(3)
    td = TreeDecomposition({0: frozenset({0, 1}), 1: frozenset({1, 2}), 2: frozenset({0})}, [(0, 1), (1, 2)])
    assert not validate_tree_decomposition(g, td).valid
    with pytest.raises(GraphError):
        validate_tree_decomposition(g, TreeDecomposition({0: frozenset({0, 1}), 1: frozenset({1, 2})}, []))
    with pytest.raises(GraphError):
        validate_tree_decomposition(g, TreeDecomposition({0: frozenset({0, 9})}))


def test_minor_examples():
    w = has_minor(complete_graph(6), 6)
    assert w is not None and all(len(b) == 1 for b in w.branch_sets)
    assert has_minor(grid(4, 4), 5) is None
    ring, _ = make_ring(RingSpec((2, 2, 1, 2, 1, 2, 1)))
    assert ring.max_degree() <= 4
    assert has_minor(ring, 6) is None
    assert has_minor(make_cube(), 4) is not None
    with pytest.raises(ValueError):
        has_minor(complete_graph(3), 7)


@settings(max_examples=40)
@given(graphs(max_n=6), st.integers(3, 5))
def test_minor_matches_brute_force(g, l):
    w = has_minor(g, l)
    assert (w is not None) == brute_minor(g, l)
    if w is not None:
        assert not minor_witness_violations(g, w)


@settings(max_examples=30)
@given(graphs(max_n=9))
def test_minor_implies_treewidth(g):
    tw = exact_treewidth(g)
    for l in range(3, 6):
        if has_minor(g, l) is not None:
            assert tw >= l - 1


@settings(max_examples=30)
@given(graphs(min_n=2, max_n=10), st.data())
def test_treewidth_monotone_under_contraction(g, data):
    if not g.m:
        return
    u, v = data.draw(st.sampled_from(g.edges()))
    h, _ = contract_edge(g, u, v)
    assert exact_treewidth(h) <= exact_treewidth(g)


def test_decomposition_from_ordering_width():
    g = grid(3, 3)
    td = decomposition_from_ordering(g, sorted(g))
    chk = validate_tree_decomposition(g, td)
    assert chk.valid and chk.width >= exact_treewidth(g)
