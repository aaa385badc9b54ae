import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from holeforge.corpus import CorpusConfig, generate_corpus
from holeforge.decomposition import (
    GluingError,
    NotSubcubic,
    TheoremViolation,
    certificate_violations,
    classify_basic,
    decompose_subcubic,
    glue_clique,
    proper_glue,
    reassemble,
    tree_decomposition_subcubic,
)
from holeforge.detectors import find_prism, find_theta, is_theta_prism_free
from holeforge.generators import make_cube, make_extended_prism, make_pyramid, make_theta, make_wheel
from holeforge.graph import Graph, complete_graph, cycle_graph, disjoint_union
from holeforge.separators import find_proper_separation
from holeforge.treewidth import exact_treewidth, validate_tree_decomposition


def iso(a, b):
    return nx.is_isomorphic(a.to_networkx(), b.to_networkx())


def _path(g, start, tag, end):
    inner = sorted((v for v in g if isinstance(g.label(v), tuple) and g.label(v)[0] == tag), key=lambda v: g.label(v)[1])
    return [start, *inner, end]


def _pyramid_wheel():
    g1 = make_pyramid(2, 2, 2)
    x, a = g1.vertex_by_label("x"), g1.vertex_by_label("a")
    g2 = make_wheel(8, [0, 2, 4])
    return proper_glue(g1, x, a, _path(g1, x, "P1", a), g2, 5, 7, [5, 6, 7]), g1, g2


@pytest.mark.parametrize("g,kind", [
    (cycle_graph(7), "chordless-cycle"),
    (complete_graph(4), "clique"),
    (complete_graph(3), "chordless-cycle"),
    (make_cube(), "cube"),
    (make_wheel(6, [0, 2, 4]), "proper-wheel"),
    (make_pyramid(1, 2, 2), "pyramid"),
    (make_extended_prism(1, 1, 1, 1, 1), "extended-prism"),
])
def test_classify_basic(g, kind):
    cert = classify_basic(g)
    assert cert is not None and cert.kind == kind
    assert not certificate_violations(g, cert)


def test_non_basic_gluing():
    g, _, _ = _pyramid_wheel()
    assert classify_basic(g) is None
    assert is_theta_prism_free(g)


def test_certificate_violations_detects_mismatch():
    cert = classify_basic(cycle_graph(6))
    assert certificate_violations(cycle_graph(6).add_edges([(0, 3)]), cert)


def test_decompose_leaf_and_clique_cut():
    assert decompose_subcubic(complete_graph(4)).kind == "leaf"
    two, _ = disjoint_union(make_cube(), make_cube())
    tree = decompose_subcubic(two)
    assert tree.kind == "clique-cut" and tree.clique == frozenset()
    assert [lf.certificate.kind for lf in tree.leaves()] == ["cube", "cube"]


def test_decompose_proper_cut_children_reclassify():
    g, g1, g2 = _pyramid_wheel()
    tree = decompose_subcubic(g)
    assert tree.kind == "proper-cut"
    kinds = sorted(c.certificate.kind for c in tree.children if c.kind == "leaf")
    assert kinds == ["proper-wheel", "pyramid"]
    assert iso(reassemble(tree), g)
    for child in tree.children:
        assert child.graph.n < g.n


def test_decompose_errors():
    with pytest.raises(NotSubcubic):
        decompose_subcubic(complete_graph(5))
    with pytest.raises(TheoremViolation):
        decompose_subcubic(make_theta(2, 3, 3))


def test_gluing_errors():
    with pytest.raises(GluingError):
        glue_clique(cycle_graph(4), cycle_graph(4), {0: 0, 2: 2})
    g1 = make_pyramid(2, 2, 2)
    with pytest.raises(GluingError):
        proper_glue(g1, 0, 1, [0, 1], cycle_graph(4), 0, 2, [0, 1, 2])


def test_glue_empty_clique_is_disjoint_union():
    g = glue_clique(cycle_graph(4), cycle_graph(5), {})
    assert iso(g, disjoint_union(cycle_graph(4), cycle_graph(5))[0])


def test_glued_pyramids_stay_in_class():
    g1 = make_pyramid(2, 2, 2)
    x, a = g1.vertex_by_label("x"), g1.vertex_by_label("a")
    g2 = make_pyramid(2, 2, 4)
    # the second copy needs two non-adjacent degree-2 ends of a path of degree-2 vertices
    p2 = _path(g2, g2.vertex_by_label("x"), "P3", g2.vertex_by_label("c"))
    g = proper_glue(g1, x, a, _path(g1, x, "P1", a), g2, p2[1], p2[3], p2[1:4])
    assert find_theta(g) is None and find_prism(g) is None
    sep = find_proper_separation(g)
    assert sep is not None and {sep.a, sep.b} == {x, a}


@pytest.mark.parametrize("g,width", [
    (complete_graph(4), 3),
    (cycle_graph(9), 2),
    (make_cube(), 3),
])
def test_tree_decomposition_examples(g, width):
    td = tree_decomposition_subcubic(g)
    chk = validate_tree_decomposition(g, td)
    assert chk.valid and chk.width == width == exact_treewidth(g)


@settings(max_examples=25)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_corpus_instances_decompose_and_reassemble(seed, depth):
    for inst in generate_corpus(CorpusConfig(seed=seed, count=2, depth=depth, max_vertices=40)):
        g = inst.graph
        tree = decompose_subcubic(g)
        for node in tree.nodes():
            for c in node.children:
                assert c.graph.n < node.graph.n
        assert iso(reassemble(tree), g)
        chk = validate_tree_decomposition(g, tree_decomposition_subcubic(g, tree))
        assert chk.valid and chk.width <= 3
