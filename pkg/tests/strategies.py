"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from holeforge.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=9, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = Graph(range(n), chosen)
    if connected and not g.is_connected():
        comps = g.components()
        g = g.add_edges((min(a), min(b)) for a, b in zip(comps, comps[1:]))
    return g


@st.composite
def subcubic_graphs(draw, max_n=12):
    n = draw(st.integers(2, max_n))
    edges = []
    deg = [0] * n
    for u, v in draw(st.permutations([(u, v) for u in range(n) for v in range(u + 1, n)])):
        if deg[u] < 3 and deg[v] < 3 and draw(st.booleans()):
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(range(n), edges)
