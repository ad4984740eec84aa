"""Interval summand representation of graded modules over the base ring F2[t].

A summand (shift, length) contributes one F2 dimension in the degrees
shift, shift + step, ..., shift + step*(length - 1); length None means the
summand continues forever. Infinitude stays exactly decidable, which is
what the freeness filter needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import InvalidInputError

INFINITE = None

Summand = Tuple[int, Optional[int]]


def _sort_key(summand: Summand):
    shift, length = summand
    return (shift, length is INFINITE, length if length is not INFINITE else 0)


@dataclass(frozen=True)
class IntervalModule:
    step: int
    summands: Tuple[Summand, ...]

    def __post_init__(self):
        if self.step < 1:
            raise InvalidInputError("step must be positive")
        for shift, length in self.summands:
            if shift < 0 or (length is not INFINITE and length < 1):
                raise InvalidInputError(f"bad summand ({shift}, {length})")
        canon = tuple(sorted(self.summands, key=_sort_key))
        if canon != self.summands:
            object.__setattr__(self, "summands", canon)

    def dimension_at(self, k: int) -> int:
        dim = 0
        for shift, length in self.summands:
            d = k - shift
            if d < 0 or d % self.step:
                continue
            if length is INFINITE or d // self.step < length:
                dim += 1
        return dim

    def alive(self, k: int) -> bool:
        return k >= 0 and self.dimension_at(k) > 0

    def is_zero(self) -> bool:
        return not self.summands

    def has_infinite(self) -> bool:
        return any(length is INFINITE for _, length in self.summands)

    def max_degree(self) -> Optional[int]:
        """Largest supported degree, or None when some summand is infinite."""
        if self.has_infinite():
            return None
        if not self.summands:
            return -1
        return max(shift + self.step * (length - 1) for shift, length in self.summands)

    def max_finite_endpoint(self) -> int:
        """Largest degree at which the support pattern can still change."""
        best = 0
        for shift, length in self.summands:
            if length is INFINITE:
                best = max(best, shift)
            else:
                best = max(best, shift + self.step * length)
        return best

    def column_mask(self, nbits: int) -> int:
        """Bitmask with bit i set when degree i*step is supported (i < nbits)."""
        mask = 0
        for i in range(nbits):
            if self.dimension_at(i * self.step):
                mask |= 1 << i
        return mask


def free_module(step: int, rank: int = 1) -> IntervalModule:
    return IntervalModule(step, ((0, INFINITE),) * rank)


def from_columns(step: int, columns: Sequence[int],
                 tail_start: Optional[int] = None) -> IntervalModule:
    """Build the canonical module supported on the given degrees.

    columns must be distinct multiples of step in increasing order;
    tail_start, when given, adds support on tail_start + step*i for all i
    and must sit beyond the last explicit column.
    """
    summands: List[Summand] = []
    run_start = run_len = 0
    prev = None
    for c in columns:
        if c % step or (prev is not None and c <= prev):
            raise InvalidInputError("columns must be increasing multiples of step")
        if prev is not None and c == prev + step:
            run_len += 1
        else:
            if run_len:
                summands.append((run_start, run_len))
            run_start, run_len = c, 1
        prev = c
    if tail_start is not None:
        if tail_start % step or (prev is not None and tail_start <= prev):
            raise InvalidInputError("tail_start must follow the explicit columns")
        if run_len and prev == tail_start - step:
            summands.append((run_start, INFINITE))
        else:
            if run_len:
                summands.append((run_start, run_len))
            summands.append((tail_start, INFINITE))
    elif run_len:
        summands.append((run_start, run_len))
    return IntervalModule(step, tuple(summands))


def dimension_at(m: IntervalModule, k: int) -> int:
    """Dimension of m in degree k."""
    return m.dimension_at(k)
