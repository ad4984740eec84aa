"""Pure-Python GF(2) elimination kernel on int bitset rows."""

from __future__ import annotations

from typing import List


def gf2_rank(rows: List[int], col_count: int) -> int:
    """Rank over GF(2) of a matrix whose rows are int bitmasks (bit j = column j)."""
    work = [r for r in rows if r]
    rank = 0
    while work:
        pivot_row = work.pop()
        low = pivot_row & -pivot_row
        rank += 1
        work = [r ^ pivot_row if r & low else r for r in work]
        work = [r for r in work if r]
    return rank


BACKEND = "python"
