"""Exact linear algebra over F2.

Matrices are stored as int bitmask rows (bit j of ``rows[i]`` is entry
(i, j)). The elimination kernel is the compiled extension when available,
otherwise the pure-Python fallback; set ORBITCOHOM_GF2_BACKEND=py|c to
force a choice.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .errors import InvalidInputError, PreconditionError

from . import _gf2_py

_choice = os.environ.get("ORBITCOHOM_GF2_BACKEND", "")
if _choice == "py":
    _kernel = _gf2_py
elif _choice == "c":
    from . import _gf2core as _kernel  # type: ignore[no-redef]
else:
    try:
        from . import _gf2core as _kernel  # type: ignore[no-redef]
    except ImportError:
        _kernel = _gf2_py

BACKEND = _kernel.BACKEND


@dataclass(frozen=True)
class F2Matrix:
    """Matrix over F2 acting on column vectors: (m @ v) has row_count entries."""

    row_count: int
    col_count: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.row_count:
            raise InvalidInputError("row list does not match row_count")
        mask = (1 << self.col_count) - 1
        for r in self.rows:
            if r < 0 or r & ~mask:
                raise InvalidInputError("row bits out of column range")

    @classmethod
    def zeros(cls, row_count: int, col_count: int) -> "F2Matrix":
        return cls(row_count, col_count, (0,) * row_count)

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_entries(cls, row_count: int, col_count: int,
                     entries: Iterable[Tuple[int, int]]) -> "F2Matrix":
        rows = [0] * row_count
        for i, j in entries:
            if not (0 <= i < row_count and 0 <= j < col_count):
                raise InvalidInputError(f"entry ({i}, {j}) out of bounds")
            rows[i] ^= 1 << j
        return cls(row_count, col_count, tuple(rows))

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]]) -> "F2Matrix":
        row_count = len(data)
        col_count = len(data[0]) if data else 0
        rows = []
        for row in data:
            if len(row) != col_count:
                raise InvalidInputError("ragged row lengths")
            rows.append(sum((v & 1) << j for j, v in enumerate(row)))
        return cls(row_count, col_count, tuple(rows))

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.row_count and 0 <= j < self.col_count):
            raise InvalidInputError(f"index ({i}, {j}) out of bounds")
        return (self.rows[i] >> j) & 1

    def transpose(self) -> "F2Matrix":
        cols = [0] * self.col_count
        for i, r in enumerate(self.rows):
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= 1 << i
                r ^= low
        return F2Matrix(self.col_count, self.row_count, tuple(cols))

    def __matmul__(self, other: "F2Matrix") -> "F2Matrix":
        if self.col_count != other.row_count:
            raise InvalidInputError("inner dimensions do not match")
        out = []
        for r in self.rows:
            acc = 0
            while r:
                low = r & -r
                acc ^= other.rows[low.bit_length() - 1]
                r ^= low
            out.append(acc)
        return F2Matrix(self.row_count, other.col_count, tuple(out))

    def is_zero(self) -> bool:
        return not any(self.rows)

    def rank(self) -> int:
        return _kernel.gf2_rank(list(self.rows), self.col_count)


def rank(m: F2Matrix) -> int:
    """Row rank of m over F2 by exact elimination."""
    return m.rank()


def nullspace(m: F2Matrix) -> List[int]:
    """Basis (as bitmask column vectors) of the kernel of m acting on columns."""
    cols = m.transpose().rows  # cols[j] = column j of m as a bitmask of rows
    table = {}  # pivot bit -> (reduced column, tag in source coordinates)
    basis: List[int] = []
    for j in range(m.col_count):
        col, tag = cols[j], 1 << j
        while col:
            pivot = col & -col
            if pivot not in table:
                table[pivot] = (col, tag)
                break
            rcol, rtag = table[pivot]
            col ^= rcol
            tag ^= rtag
        else:
            basis.append(tag)
    return basis


def homology_dim(d_in: F2Matrix, d_out: F2Matrix) -> int:
    """dim ker(d_out) - rank(d_in) for a two-step complex d_in -> V -> d_out.

    Requires d_out o d_in = 0.
    """
    if d_out.col_count != d_in.row_count:
        raise InvalidInputError("d_in target and d_out source dimensions differ")
    if not (d_out @ d_in).is_zero():
        raise PreconditionError("composite d_out o d_in is nonzero")
    return (d_out.col_count - d_out.rank()) - d_in.rank()
