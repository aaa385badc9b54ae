import itertools

import pytest
from hypothesis import given, strategies as st

from holeforge.ramsey import (
    count_k22_free_colorings,
    find_monochromatic_biclique,
    has_monochromatic_biclique,
    k22_free_coloring,
    ramsey_bound,
)


def brute_biclique(c, r):
    p, q = len(c), len(c[0])
    for rows in itertools.combinations(range(p), r):
        for cols in itertools.combinations(range(q), r):
            if len({c[i][j] for i in rows for j in cols}) == 1:
                return True
    return False


def test_bounds():
    assert [ramsey_bound(r) for r in (1, 2, 3, 4)] == [1, 5, 17, 49]
    with pytest.raises(ValueError):
        ramsey_bound(0)


def test_monochrome_host():
    rows, cols, color = find_monochromatic_biclique([["g"] * 4 for _ in range(4)], 3)
    assert color == "g" and len(rows) == len(cols) == 3


def test_checkerboard_k33_has_k22():
    board = [[(i + j) % 2 for j in range(3)] for i in range(3)]
    rows, cols, color = find_monochromatic_biclique(board, 2)
    assert {board[i][j] for i in rows for j in cols} == {color}
    assert brute_biclique(board, 2)


def test_errors():
    with pytest.raises(ValueError):
        find_monochromatic_biclique([[0, 1]], 2)
    with pytest.raises(ValueError):
        find_monochromatic_biclique([[0, 1], [0]], 1)


@given(st.integers(2, 5), st.integers(2, 5), st.integers(2, 3), st.data())
def test_matches_brute_force(p, q, r, data):
    if r > min(p, q):
        return
    c = [[data.draw(st.integers(0, 2)) for _ in range(q)] for _ in range(p)]
    hit = find_monochromatic_biclique(c, r)
    assert (hit is not None) == brute_biclique(c, r)
    if hit is not None:
        rows, cols, color = hit
        assert all(c[i][j] == color for i in rows for j in cols)


def test_restricted_palette():
    c = [[0, 0], [0, 0]]
    assert find_monochromatic_biclique(c, 2, colors=(1,)) is None
    assert has_monochromatic_biclique(c, 2)


def test_k22_free_counts():
    # K_{4,4} still has colourings without a monochromatic K_{2,2}; K_{5,5} has none
    assert count_k22_free_colorings(4)[1] == 35
    c = k22_free_coloring(4)
    assert c is not None and not brute_biclique(c, 2)
    assert k22_free_coloring(2) is not None


def test_row_multiset_count_at_five():
    # C(2^5 + 5 - 1, 5) classes of row multisets
    from math import comb

    assert comb(36, 5) == 376992


def test_k44_class_count_against_full_enumeration():
    # free colourings have pairwise distinct rows (equal rows agree in 4 columns),
    # so each row-multiset class stands for exactly 4! colourings
    full = 0
    for bits in range(1 << 16):
        rows = [(bits >> (4 * i)) & 15 for i in range(4)]
        if all(bin(a & b).count("1") < 2 and bin(~a & ~b & 15).count("1") < 2 for a, b in itertools.combinations(rows, 2)):
            full += 1
    assert full == 24 * count_k22_free_colorings(4)[1]
