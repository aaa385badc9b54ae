"""Monochromatic complete bipartite subgraphs in edge-coloured K_{p,q}.

A colouring is a ``p x q`` matrix ``c[i][j]``: the colour of the edge
between row vertex ``i`` and column vertex ``j``.
"""

from __future__ import annotations

import itertools
from collections.abc import Hashable, Iterable, Sequence


def ramsey_bound(r: int) -> int:
    """2^r (r - 1) + 1: every 2-colouring of K_{n,n} with n at least this has a monochromatic K_{r,r}."""
    if r < 1:
        raise ValueError("r must be positive")
    return 2**r * (r - 1) + 1


def find_monochromatic_biclique(
    coloring: Sequence[Sequence[Hashable]], r: int, colors: Iterable[Hashable] | None = None
) -> tuple[tuple[int, ...], tuple[int, ...], Hashable] | None:
    """``(rows, cols, colour)`` with every crossing edge of that colour, or None.

    Exhaustive over r-subsets of rows (lexicographic), so the answer is exact:
    None means no monochromatic K_{r,r} exists in the allowed ``colors``.
    """
    p = len(coloring)
    q = len(coloring[0]) if p else 0
    if any(len(row) != q for row in coloring):
        raise ValueError("colouring must be a rectangular matrix")
    if p < r or q < r:
        raise ValueError(f"both sides need at least r={r} vertices, got {p}x{q}")
    palette = sorted({c for row in coloring for c in row}, key=repr) if colors is None else list(colors)
    for color in palette:
        masks = [sum(1 << j for j in range(q) if row[j] == color) for row in coloring]
        found = _search(masks, q, r, color)
        if found is not None:
            return found
    return None


def _search(masks: list[int], q: int, r: int, color):
    # extend row sets while the common column mask still has r bits
    def rec(start: int, chosen: list[int], common: int):
        if len(chosen) == r:
            cols = [j for j in range(q) if common >> j & 1][:r]
            return tuple(chosen), tuple(cols), color
        for i in range(start, len(masks)):
            nxt = common & masks[i]
            if bin(nxt).count("1") >= r:
                res = rec(i + 1, chosen + [i], nxt)
                if res is not None:
                    return res
        return None

    return rec(0, [], (1 << q) - 1)


def has_monochromatic_biclique(coloring, r: int) -> bool:
    return find_monochromatic_biclique(coloring, r) is not None


# --------------------------------------------------------------------------
# exhaustive check at r = 2
# --------------------------------------------------------------------------


def _pair_table(n: int) -> list[list[bool]]:
    full = (1 << n) - 1
    ok = [[False] * (1 << n) for _ in range(1 << n)]
    for a in range(1 << n):
        for b in range(1 << n):
            ones = bin(a & b).count("1")
            zeros = bin(~a & ~b & full).count("1")
            ok[a][b] = ones >= 2 or zeros >= 2
    return ok


def count_k22_free_colorings(n: int) -> tuple[int, int]:
    """(row-pattern classes checked, classes without a monochromatic K_{2,2}) for K_{n,n}.

    Each row of a 2-colouring is an n-bit pattern. Permuting rows does not
    change whether a monochromatic K_{2,2} exists, so it suffices to check one
    colouring per multiset of n row patterns: C(2^n + n - 1, n) classes
    instead of 2^(n*n) colourings (376,992 instead of 2^25 at n = 5). Two
    rows span a monochromatic K_{2,2} iff they agree on colour 1 in two
    columns or on colour 0 in two columns, tabulated once per pattern pair.
    """
    ok = _pair_table(n)
    classes = bad = 0
    for rows in itertools.combinations_with_replacement(range(1 << n), n):
        classes += 1
        if not any(ok[a][b] for a, b in itertools.combinations(rows, 2)):
            bad += 1
    return classes, bad


def k22_free_coloring(n: int) -> list[list[int]] | None:
    """Some 2-colouring of K_{n,n} with no monochromatic K_{2,2}, or None."""
    ok = _pair_table(n)
    for rows in itertools.combinations_with_replacement(range(1 << n), n):
        if not any(ok[a][b] for a, b in itertools.combinations(rows, 2)):
            return [[a >> j & 1 for j in range(n)] for a in rows]
    return None
