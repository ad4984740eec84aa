"""Graded ring presentations read off an admissible limit page.

The canonical answer is the total graded ring of the limit page: one
generator x for the surviving base column (the image of t), one generator
per surviving fiber row, and monomial relations read off the interval
endpoints and the induced product table. Products that vanish on the limit
page while higher-filtration classes of the same degree survive are
reported as extension flags, never silently resolved.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import TYPE_CHECKING, Dict, List, Optional, Tuple

from .errors import UnsupportedShapeError

if TYPE_CHECKING:  # pragma: no cover - typing only
    from .engine import GroupChoice, Page

# A monomial is a tuple of (generator name, exponent) pairs in canonical
# generator order; a relation is a tuple of monomials whose sum is zero.
Monomial = Tuple[Tuple[str, int], ...]
Relation = Tuple[Monomial, ...]


@dataclass(frozen=True)
class RingPresentation:
    generators: Tuple[Tuple[str, int], ...]
    relations: Tuple[Relation, ...]
    base_generator: Optional[str] = None  # image of t; not part of ring identity

    def degree_of(self, name: str) -> int:
        return dict(self.generators)[name]

    def monomial_degree(self, monomial: Monomial) -> int:
        degs = dict(self.generators)
        return sum(degs[g] * e for g, e in monomial)


@dataclass(frozen=True)
class ExtensionFlag:
    product: str
    candidates: Tuple[str, ...]


def make_presentation(generators, relations, base_generator=None) -> RingPresentation:
    gens = tuple(sorted(generators, key=lambda g: (g[1], g[0])))
    order = {name: i for i, (name, _) in enumerate(gens)}
    degs = dict(gens)

    def canon_monomial(m: Monomial) -> Monomial:
        return tuple(sorted(((g, e) for g, e in m if e), key=lambda p: order[p[0]]))

    def mono_degree(m: Monomial) -> int:
        return sum(degs[g] * e for g, e in m)

    canon_relations = []
    for rel in relations:
        monos = tuple(sorted({canon_monomial(m) for m in rel}))
        if monos:
            canon_relations.append(monos)
    canon_relations.sort(key=lambda rel: (mono_degree(rel[0]), rel))
    return RingPresentation(gens, tuple(canon_relations), base_generator)


def monomial_str(m: Monomial) -> str:
    if not m:
        return "1"
    return "*".join(g if e == 1 else f"{g}^{e}" for g, e in m)


def relation_str(rel: Relation) -> str:
    return " + ".join(monomial_str(m) for m in rel)


def presentation_str(pres: RingPresentation) -> str:
    gens = ",".join(f"{name}({deg})" for name, deg in pres.generators)
    rels = ", ".join(relation_str(r) for r in pres.relations)
    return f"F2[{gens}]/({rels})" if rels else f"F2[{gens}]"


def tot_poincare(e_inf: "Page") -> Dict[int, int]:
    """Dimension of the total graded ring per degree; requires a finite page."""
    out: Dict[int, int] = {}
    for l, row in e_inf.rows.items():
        top = row.module.max_degree()
        if top is None:
            raise UnsupportedShapeError("page has an infinite row; no finite Poincare data")
        for k in range(0, top + 1, e_inf.step):
            d = row.module.dimension_at(k)
            if d:
                out[k + l] = out.get(k + l, 0) + d
    return dict(sorted(out.items()))


def _single_interval(row) -> Tuple[int, int]:
    """(shift, length) of a row that is one finite summand, else raise."""
    summands = row.module.summands
    if len(summands) != 1 or summands[0][1] is None:
        raise UnsupportedShapeError("row is not a single finite interval")
    return summands[0]


def extract_presentation(e_inf: "Page",
                         group: "GroupChoice") -> Tuple[RingPresentation, List[ExtensionFlag]]:
    """Presentation of the total ring of an admissible limit page.

    Supports pages whose rows are rank <= 1 single intervals based at
    column 0 (the shapes the classification produces); anything else is an
    unsupported-shape error.
    """
    step = group.step
    if step != e_inf.step:
        raise UnsupportedShapeError("group does not match the page")
    rows = e_inf.rows
    if 0 not in rows:
        raise UnsupportedShapeError("unit row is missing from the page")
    for l, row in rows.items():
        if any(row.module.dimension_at(k) > 1
               for k in range(0, (row.module.max_finite_endpoint() or 0) + 1)):
            raise UnsupportedShapeError(f"row {l} has rank > 1")

    shift0, x_power = _single_interval(rows[0])
    if shift0 != 0:
        raise UnsupportedShapeError("base row does not start at column 0")

    generators: List[Tuple[str, int]] = []
    relations: List[Relation] = []
    x_name: Optional[str] = None
    if x_power > 1:
        x_name = "x"
        generators.append((x_name, step))
        relations.append(((((x_name, x_power)),),))

    fiber_rows = sorted(l for l in rows if l > 0)
    z_names: Dict[int, str] = {}
    for i, l in enumerate(fiber_rows):
        row = rows[l]
        if row.generator is None:
            raise UnsupportedShapeError(f"row {l} has no named generator")
        shift, length = _single_interval(row)
        if shift != 0:
            raise UnsupportedShapeError(f"row {l} does not start at column 0")
        name = "z" if len(fiber_rows) == 1 else f"z{i + 1}"
        z_names[l] = name
        generators.append((name, l))
        if x_name is None:
            if length != 1:
                raise UnsupportedShapeError(
                    f"row {l} extends past column 0 but the base generator is elided")
        elif length > x_power:
            raise UnsupportedShapeError(
                f"row {l} outlives the base row; not generated by x and z")
        elif length < x_power:
            # z*x^q with q = x_power is already implied by x^x_power = 0.
            relations.append(((((x_name, length), (name, 1))),))

    # Products of the fiber-row generators, induced from the starting page.
    for li, lj in itertools.combinations_with_replacement(fiber_rows, 2):
        gi, gj = rows[li].generator, rows[lj].generator
        product = e_inf.fiber.mult(gi, gj)
        mono: Monomial = ((z_names[li], 2),) if li == lj else (
            (z_names[li], 1), (z_names[lj], 1))
        lw = li + lj
        if product and lw in rows and rows[lw].module.alive(0):
            target = ((z_names[lw], 1),)
            relations.append((mono, target))
        else:
            relations.append((mono,))

    pres = make_presentation(generators, relations, base_generator=x_name)
    flags = _extension_flags(e_inf, pres, z_names, x_name, x_power if x_name else 1)
    return pres, flags


def _surviving_monomials(e_inf: "Page", z_names, x_name) -> List[Tuple[int, int, str]]:
    """(total degree, filtration column, monomial string) for all page classes."""
    step = e_inf.step
    out = []
    for l, row in e_inf.rows.items():
        top = row.module.max_degree()
        if top is None:
            continue
        for k in range(0, top + 1, step):
            if not row.module.dimension_at(k):
                continue
            parts = []
            if k and x_name:
                parts.append(x_name if k == step else f"{x_name}^{k // step}")
            if l:
                parts.append(z_names[l])
            out.append((k + l, k, "*".join(parts) if parts else "1"))
    return out


def _extension_flags(e_inf, pres: RingPresentation, z_names, x_name,
                     x_power) -> List[ExtensionFlag]:
    classes = _surviving_monomials(e_inf, z_names, x_name)
    flags: List[ExtensionFlag] = []
    for rel in pres.relations:
        if len(rel) != 1:
            continue  # only vanishing products can hide an extension
        (mono,) = rel
        if len(mono) == 1 and mono[0][0] == x_name:
            continue  # x-power vanishing is exact at the base edge
        degree = pres.monomial_degree(mono)
        filtration = sum(pres.degree_of(g) * e for g, e in mono if g == x_name)
        candidates = tuple(name for d, k, name in sorted(classes)
                           if d == degree and k > filtration)
        if candidates:
            flags.append(ExtensionFlag(monomial_str(mono), candidates))
    flags.sort(key=lambda f: f.product)
    return flags


def monomial_basis_elements(pres: RingPresentation,
                            max_degree: int) -> List[Tuple[int, Monomial]]:
    """All (degree, monomial) basis elements of the presented ring up to max_degree.

    Only presentations whose relations each kill a single monomial are
    enumerable this way; two-term relations would need rewriting machinery
    that is out of scope.
    """
    zero_monomials: List[Monomial] = []
    for rel in pres.relations:
        if len(rel) != 1:
            raise UnsupportedShapeError("basis enumeration needs monomial relations")
        zero_monomials.append(rel[0])

    gens = pres.generators
    out: List[Tuple[int, Monomial]] = []

    def divisible(exps: List[int], zero: Monomial) -> bool:
        z = dict(zero)
        return all(exps[i] >= z.get(name, 0) for i, (name, _) in enumerate(gens))

    def walk(i: int, exps: List[int], degree: int):
        if i == len(gens):
            if not any(divisible(exps, z) for z in zero_monomials):
                mono = tuple((name, e) for (name, _), e in zip(gens, exps) if e)
                out.append((degree, mono))
            return
        name, d = gens[i]
        e = 0
        while degree + d * e <= max_degree:
            exps.append(e)
            walk(i + 1, exps, degree + d * e)
            exps.pop()
            e += 1

    walk(0, [], 0)
    out.sort()
    return out


def monomial_basis(pres: RingPresentation, max_degree: int) -> Dict[int, int]:
    """Degreewise dimension of the presented ring, by direct enumeration."""
    counts: Dict[int, int] = {}
    for degree, _ in monomial_basis_elements(pres, max_degree):
        counts[degree] = counts.get(degree, 0) + 1
    return dict(sorted(counts.items()))


def same_presentation(p1: RingPresentation, p2: RingPresentation) -> bool:
    """Equality after canonicalization, allowing renames within equal degree."""

    def forms(p: RingPresentation):
        gens = sorted(p.generators, key=lambda g: (g[1], g[0]))
        degrees = tuple(d for _, d in gens)
        # permute names within each degree class
        by_degree: Dict[int, List[str]] = {}
        for name, d in gens:
            by_degree.setdefault(d, []).append(name)
        degree_classes = [by_degree[d] for d in sorted(by_degree)]
        for perm_parts in itertools.product(
                *[itertools.permutations(c) for c in degree_classes]):
            rename = {}
            slot = 0
            for part in perm_parts:
                for name in part:
                    rename[name] = slot
                    slot += 1
            rels = frozenset(
                tuple(sorted(tuple(sorted((rename[g], e) for g, e in mono))
                             for mono in rel))
                for rel in p.relations)
            yield degrees, rels

    targets = set(forms(p2))
    return any(f in targets for f in forms(p1))
