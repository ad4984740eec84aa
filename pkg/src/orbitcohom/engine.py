"""Spectral-sequence engine for the Borel fibration of a free action.

Starting from the tensor-product second page, the engine enumerates every
assignment of F2 coefficients to the differential slots of each round,
prunes assignments that break the Leibniz rule or d o d = 0, turns pages,
and keeps exactly the branches whose limit page is compatible with a free
action (finite, and supported in total degree at most the fiber dimension).

Differentials are recorded only on row generators: every starting row is a
free module over the base ring H*(B_G) = F2[t] and the differentials are
module maps over it, so the generator values determine everything. The
Leibniz and d o d checks are evaluated across all columns exactly, using
bitmask arithmetic over the eventually-constant interval supports.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from . import obstruction, presentation
from .errors import InvalidInputError, PreconditionError, UnsupportedShapeError
from .fiber import FiberRing, validate as validate_fiber
from .intervals import IntervalModule, free_module, from_columns


class GroupChoice(enum.Enum):
    Z2 = "z2"
    CIRCLE = "s1"

    @property
    def step(self) -> int:
        return 1 if self is GroupChoice.Z2 else 2


@dataclass(frozen=True)
class PageRow:
    module: IntervalModule
    generator: Optional[str]  # names the class of 1 (x) v_l when column 0 survives


@dataclass(frozen=True)
class Page:
    fiber: FiberRing
    group: GroupChoice
    rounds: Tuple[int, ...]           # remaining schedule of differential rounds
    round: Optional[int]              # current round; None once past the last
    rows: Dict[int, PageRow]

    @property
    def step(self) -> int:
        return self.group.step

    def row(self, l: int) -> Optional[PageRow]:
        return self.rows.get(l)


@dataclass(frozen=True)
class DifferentialSlot:
    round: int
    source_row: int
    target_row: int
    t_exponent: int


@dataclass(frozen=True)
class DifferentialPattern:
    round: int
    slots: Tuple[DifferentialSlot, ...]
    coefficients: Tuple[int, ...]

    def coefficient_map(self) -> Dict[int, int]:
        return {s.source_row: c for s, c in zip(self.slots, self.coefficients)}

    def nonzero_sources(self) -> Tuple[int, ...]:
        return tuple(sorted(s.source_row for s, c in
                            zip(self.slots, self.coefficients) if c))


@dataclass(frozen=True)
class Outcome:
    history: Tuple[DifferentialPattern, ...]
    e_inf: Page
    poincare: Dict[int, int]
    presentation: presentation.RingPresentation
    extension_flags: Tuple[presentation.ExtensionFlag, ...]
    index: Optional[int]

    def history_key(self) -> Tuple[Tuple[int, Tuple[int, ...]], ...]:
        return tuple((p.round, p.nonzero_sources()) for p in self.history)


@dataclass(frozen=True)
class RejectedBranch:
    history: Tuple[DifferentialPattern, ...]
    round: Optional[int]
    reason: str


@dataclass(frozen=True)
class ClassificationReport:
    fiber: FiberRing
    group: GroupChoice
    top_degree: int
    outcomes: Tuple[Outcome, ...]
    rejected: Tuple[RejectedBranch, ...]
    warnings: Tuple[str, ...]

    @property
    def verdict(self) -> str:
        return "free-action-possible" if self.outcomes else "no-free-action"


def build_e2(fiber: FiberRing, group: GroupChoice) -> Page:
    """Second page of the Borel fibration: each fiber row free over F2[t]."""
    problems = validate_fiber(fiber)
    if problems:
        raise InvalidInputError("invalid fiber ring: " + "; ".join(problems))
    step = group.step
    rows: Dict[int, PageRow] = {}
    by_degree: Dict[int, List[str]] = {}
    for name, deg in fiber.basis:
        by_degree.setdefault(deg, []).append(name)
    for deg in sorted(by_degree):
        names = by_degree[deg]
        generator = names[0] if len(names) == 1 else None
        rows[deg] = PageRow(free_module(step, rank=len(names)), generator)
    rounds = _round_schedule(fiber, group)
    return Page(fiber=fiber, group=group, rounds=rounds,
                round=rounds[0] if rounds else None, rows=rows)


def admissible_rounds(fiber: FiberRing, group: GroupChoice) -> List[int]:
    """Rounds that can carry a nonzero differential for a type-(a,b) fiber.

    Only r in {n+1, 2n+1, 3n+1} connect two nonzero rows, and for the
    circle only the even ones exist at all.
    """
    degrees = sorted(d for _, d in fiber.basis if d > 0)
    if not degrees:
        raise UnsupportedShapeError("fiber has no positive-degree rows")
    n = degrees[0]
    if degrees != [n, 2 * n, 3 * n]:
        raise UnsupportedShapeError(
            "fiber rows are not at n, 2n, 3n; general fibers use slot "
            "enumeration directly")
    return [r for r in (n + 1, 2 * n + 1, 3 * n + 1) if r % group.step == 0]


def _round_schedule(fiber: FiberRing, group: GroupChoice) -> Tuple[int, ...]:
    try:
        return tuple(admissible_rounds(fiber, group))
    except UnsupportedShapeError:
        # General fibers: any gap between two nonzero rows yields a round.
        degrees = sorted({d for _, d in fiber.basis})
        rounds = sorted({hi - lo + 1 for hi in degrees for lo in degrees
                         if hi > lo and (hi - lo + 1) % group.step == 0})
        return tuple(r for r in rounds if r >= 2)


def differential_slots(page: Page, r: int) -> List[DifferentialSlot]:
    """Admissible generator-level slots of round r on this page.

    A slot needs a surviving source generator, a surviving target generator,
    and a live target class t^e (x) v at column r; anything else forces the
    coefficient to zero and carries no choice.
    """
    if r % page.step:
        return []
    rows = page.rows
    slots = []
    for l in sorted(rows):
        src = rows[l]
        if src.generator is None or not src.module.alive(0):
            continue
        lt = l - r + 1
        if lt < 0 or lt not in rows:
            continue
        tgt = rows[lt]
        if tgt.generator is None or not tgt.module.alive(0):
            continue
        if not tgt.module.alive(r):
            continue
        slots.append(DifferentialSlot(r, l, lt, r // page.step))
    return slots


def _scan_bits(page: Page, r: int) -> Tuple[int, int]:
    """(enumeration bits, mask bits) covering every support regime.

    Beyond the largest interval endpoint shifted by the differential every
    row's support is constant, so scanning representatives up to that bound
    is exact even though the modules are infinite.
    """
    step = page.step
    endpoint = max((row.module.max_finite_endpoint()
                    for row in page.rows.values()), default=0)
    rep = endpoint // step + 2 * (r // step) + 4
    return rep, 2 * rep + 2 * (r // step) + 4


def _masks(page: Page, nbits: int) -> Dict[int, int]:
    return {l: row.module.column_mask(nbits) for l, row in page.rows.items()}


def _sum_hit(left: int, right: int, sums: int) -> bool:
    """True when some k in left and j in right have k + j in sums (bit indices)."""
    while left:
        low = left & -left
        k = low.bit_length() - 1
        if (sums >> k) & right:
            return True
        left ^= low
    return False


def check_pattern(page: Page, pattern: DifferentialPattern) -> Optional[str]:
    """First violated constraint of the assignment, or None when consistent."""
    r = pattern.round
    if page.round != r:
        raise PreconditionError("pattern round does not match page round")
    step = page.step
    e = r // step
    coeff = pattern.coefficient_map()
    rows = page.rows
    rep_bits, nbits = _scan_bits(page, r)
    masks = _masks(page, nbits)
    full = (1 << nbits) - 1
    rep_mask = (1 << rep_bits) - 1

    gens = [(l, rows[l].generator) for l in sorted(rows)
            if rows[l].generator is not None and rows[l].module.alive(0)]

    # Leibniz closure, columnwise: for generators u, v and all columns k, j,
    #   d((t^k u)(t^j v)) = d(t^k u)(t^j v) + (t^k u) d(t^j v)
    # with page products of dead classes equal to zero.
    for i, (lu, gu) in enumerate(gens):
        for lv, gv in gens[i:]:
            lw = lu + lv
            target = lw - r + 1
            if target < 0 or target not in rows:
                continue
            sum_alive = masks.get(target, 0) >> e  # s -> class t^(s+e) in row target
            if not sum_alive:
                continue
            cw = coeff.get(lw, 0)
            phi_w = bool(page.fiber.mult(gu, gv))
            w_mask = masks.get(lw, 0) if (cw and phi_w) else 0

            cu = coeff.get(lu, 0)
            u_mask = 0
            if cu:
                lu2 = lu - r + 1
                gu2 = rows[lu2].generator
                if page.fiber.mult(gu2, gv):
                    u_mask = masks.get(lu2, 0) >> e
            cv = coeff.get(lv, 0)
            v_mask = 0
            if cv:
                lv2 = lv - r + 1
                gv2 = rows[lv2].generator
                if page.fiber.mult(gu, gv2):
                    v_mask = masks.get(lv2, 0) >> e
            if not (w_mask or u_mask or v_mask):
                continue

            u_cols = masks[lu] & rep_mask
            v_cols = masks[lv] & rep_mask
            u1 = u_cols & u_mask
            u0 = u_cols & ~u_mask & full
            v1 = v_cols & v_mask
            v0 = v_cols & ~v_mask & full
            odd_sum = sum_alive & w_mask       # term count is odd here ...
            even_sum = sum_alive & ~w_mask & full  # ... and even here
            if (_sum_hit(u0, v0, odd_sum) or _sum_hit(u1, v1, odd_sum)
                    or _sum_hit(u0, v1, even_sum) or _sum_hit(u1, v0, even_sum)):
                return (f"Leibniz violation at round {r} on the product "
                        f"{gu}*{gv}")

    # d o d = 0 along row chains l -> l-r+1 -> l-2r+2.
    for l, c1 in sorted(coeff.items()):
        if not c1:
            continue
        mid = l - r + 1
        c2 = coeff.get(mid, 0)
        if not c2:
            continue
        last = mid - r + 1
        if last < 0 or last not in rows:
            continue
        chain = masks[l] & (masks[mid] >> e) & (masks[last] >> (2 * e))
        if chain:
            return (f"d o d nonzero at round {r} along rows "
                    f"{l} -> {mid} -> {last}")
    return None


def enumerate_patterns(page: Page, r: int) -> List[DifferentialPattern]:
    """All constraint-consistent coefficient assignments of round r, in binary order."""
    slots = tuple(differential_slots(page, r))
    out = []
    for coeffs in itertools.product((0, 1), repeat=len(slots)):
        pattern = DifferentialPattern(r, slots, coeffs)
        if check_pattern(page, pattern) is None:
            out.append(pattern)
    return out


def turn_page(page: Page, pattern: DifferentialPattern) -> Page:
    """Homology of the page under the pattern, rows back in canonical form."""
    reason = check_pattern(page, pattern)
    if reason is not None:
        raise PreconditionError(f"inconsistent pattern: {reason}")
    r = pattern.round
    step = page.step
    e = r // step
    coeff = pattern.coefficient_map()
    rows = page.rows
    _, nbits = _scan_bits(page, r)
    masks = _masks(page, nbits)
    threshold = nbits - 2 * e - 2  # supports are constant beyond this index
    full = (1 << nbits) - 1

    new_rows: Dict[int, PageRow] = {}
    for l in sorted(rows):
        mask = masks[l]
        if coeff.get(l, 0):
            mask &= ~(masks.get(l - r + 1, 0) >> e) & full
        inc = l + r - 1
        if coeff.get(inc, 0) == 1 and rows[inc].module.alive(0):
            # image of the incoming differential: source column k - r must live
            mask &= ~(masks.get(inc, 0) << e) & full
        columns = [i * step for i in range(threshold) if (mask >> i) & 1]
        tail = bool((mask >> threshold) & 1)
        module = from_columns(step, columns,
                              tail_start=threshold * step if tail else None)
        if module.is_zero():
            continue
        old = rows[l]
        generator = old.generator if module.alive(0) else None
        new_rows[l] = PageRow(module, generator)

    schedule = page.rounds
    later = [x for x in schedule if x > r]
    new_round = later[0] if later else None
    new_page = Page(fiber=page.fiber, group=page.group, rounds=schedule,
                    round=new_round, rows=new_rows)
    unit = new_page.row(0)
    assert unit is not None and unit.module.alive(0), "unit class must survive"
    return new_page


def is_free_admissible(page: Page, top_degree: int) -> bool:
    """Freeness filter: finite page supported in total degree <= top_degree."""
    for l, row in page.rows.items():
        if row.module.has_infinite():
            return False
        top = row.module.max_degree()
        if top is not None and top >= 0 and l + top > top_degree:
            return False
    return True


def classify(fiber: FiberRing, group: GroupChoice,
             top_degree: Optional[int] = None) -> ClassificationReport:
    """Depth-first enumeration of all differential branches.

    Outcomes are the admissible limit pages with their extracted ring data;
    every maximal branch lands exactly once in outcomes or rejected.
    """
    page0 = build_e2(fiber, group)
    if any(row.generator is None for row in page0.rows.values()):
        raise UnsupportedShapeError("rows of rank > 1 are not classifiable")
    if top_degree is None:
        top_degree = fiber.top_degree

    outcomes: List[Outcome] = []
    rejected: List[RejectedBranch] = []

    def dfs(page: Page, history: Tuple[DifferentialPattern, ...]):
        r = page.round
        if r is None:
            if is_free_admissible(page, top_degree):
                pres, flags = presentation.extract_presentation(page, group)
                index = (obstruction.cohomology_index(pres)
                         if group is GroupChoice.Z2 else None)
                outcomes.append(Outcome(
                    history=history,
                    e_inf=page,
                    poincare=presentation.tot_poincare(page),
                    presentation=pres,
                    extension_flags=tuple(flags),
                    index=index,
                ))
            else:
                rejected.append(RejectedBranch(
                    history, None,
                    "survival: classes persist to infinity or above the top degree"))
            return
        slots = tuple(differential_slots(page, r))
        for coeffs in itertools.product((0, 1), repeat=len(slots)):
            pattern = DifferentialPattern(r, slots, coeffs)
            reason = check_pattern(page, pattern)
            branch = history + (pattern,)
            if reason is not None:
                rejected.append(RejectedBranch(branch, r, reason))
            else:
                dfs(turn_page(page, pattern), branch)

    dfs(page0, ())
    outcomes.sort(key=lambda o: o.history_key())
    return ClassificationReport(
        fiber=fiber, group=group, top_degree=top_degree,
        outcomes=tuple(outcomes), rejected=tuple(rejected),
        warnings=tuple(fiber.warnings))
