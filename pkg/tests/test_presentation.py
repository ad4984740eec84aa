"""Tests for ring presentations extracted from limit pages."""

import pytest

from orbitcohom.engine import GroupChoice, classify
from orbitcohom.errors import UnsupportedShapeError
from orbitcohom.fiber import make_type_ab
from orbitcohom.presentation import (make_presentation,
                                     monomial_basis, presentation_str,
                                     relation_str, same_presentation,
                                     tot_poincare)


def _z2_ring(n, power, z_deg, z_len=None):
    """Hand-written Z2-style presentation: x^power, z^2, optional z*x^z_len."""
    rels = [((("x", power),),), ((("z", 2),),)]
    if z_len is not None:
        rels.append(((("x", z_len), ("z", 1)),))
    return make_presentation([("x", 1), ("z", z_deg)], rels,
                             base_generator="x")


def test_even_even_matches_expected_ring():
    for n in (1, 2, 3, 4):
        report = classify(make_type_ab(n, 0, 0), GroupChoice.Z2)
        assert len(report.outcomes) == 1
        expected = _z2_ring(n, 3 * n + 1, n, z_len=n + 1)
        assert same_presentation(report.outcomes[0].presentation, expected)


def test_odd_odd_matches_expected_ring():
    for n in (2, 4):
        report = classify(make_type_ab(n, 1, 1), GroupChoice.Z2)
        assert len(report.outcomes) == 1
        expected = make_presentation([("x", 1), ("z", 2 * n)],
                                     [((("x", n + 1),),), ((("z", 2),),)],
                                     base_generator="x")
        assert same_presentation(report.outcomes[0].presentation, expected)


def test_circle_even_even_ring():
    for n in (1, 3, 5):
        report = classify(make_type_ab(n, 0, 0), GroupChoice.CIRCLE)
        assert len(report.outcomes) == 1
        pres = report.outcomes[0].presentation
        expected = make_presentation(
            [("x", 2), ("z", n)],
            [((("x", (3 * n + 1) // 2),),), ((("z", 2),),),
             ((("x", (n + 1) // 2), ("z", 1)),)],
            base_generator="x")
        assert same_presentation(pres, expected)


def test_circle_degenerate_ring_drops_x():
    report = classify(make_type_ab(1, 0, 1), GroupChoice.CIRCLE)
    degenerate = [o for o in report.outcomes
                  if o.presentation.base_generator is None]
    assert len(degenerate) == 1
    pres = degenerate[0].presentation
    assert pres.generators == (("z", 2),)
    assert pres.relations == (((("z", 2),),),)


def test_same_presentation_swapped_generators():
    p1 = make_presentation([("z", 2), ("x", 1)],
                           [((("x", 3),),), ((("z", 2),),)])
    p2 = make_presentation([("x", 1), ("z", 2)],
                           [((("z", 2),),), ((("x", 3),),)])
    assert same_presentation(p1, p2)


def test_same_presentation_renames_within_degree():
    p1 = make_presentation([("a", 2), ("b", 2)], [((("a", 2),),)])
    p2 = make_presentation([("a", 2), ("b", 2)], [((("b", 2),),)])
    assert same_presentation(p1, p2)


def test_different_degrees_not_same():
    p1 = _z2_ring(3, 10, 3, 4)
    p2 = make_presentation([("x", 2), ("z", 3)],
                           [((("x", 5),),), ((("z", 2),),),
                            ((("x", 2), ("z", 1)),)])
    assert not same_presentation(p1, p2)


def test_tot_poincare_matches_monomial_basis():
    for group in (GroupChoice.Z2, GroupChoice.CIRCLE):
        for n in (1, 2, 3):
            for a in (0, 1):
                for b in (0, 1):
                    report = classify(make_type_ab(n, a, b), group)
                    for out in report.outcomes:
                        top = report.top_degree
                        basis = monomial_basis(out.presentation, top)
                        page_dims = tot_poincare(out.e_inf)
                        assert basis == page_dims, (group, n, a, b)


def test_extension_flags_even_even():
    report = classify(make_type_ab(2, 0, 0), GroupChoice.Z2)
    flags = {f.product: set(f.candidates) for f in
             report.outcomes[0].extension_flags}
    assert flags["z^2"] == {"x^2*z", "x^4"}
    # x-power relations are exact at the base edge, never flagged
    assert not any(p.startswith("x^7") or p == "x" for p in flags)


def test_extraction_is_stable():
    from orbitcohom.presentation import extract_presentation
    report = classify(make_type_ab(3, 0, 0), GroupChoice.Z2)
    out = report.outcomes[0]
    again, flags = extract_presentation(out.e_inf, GroupChoice.Z2)
    assert again == out.presentation
    assert tuple(flags) == out.extension_flags


def test_monomial_basis_rejects_two_term_relations():
    pres = make_presentation(
        [("u", 1), ("v", 2)],
        [((("u", 2),), (("v", 1),))])
    with pytest.raises(UnsupportedShapeError):
        monomial_basis(pres, 4)


def test_presentation_str_and_relation_str():
    pres = _z2_ring(2, 7, 2, 3)
    text = presentation_str(pres)
    assert text == "F2[x(1),z(2)]/(z^2, x^3*z, x^7)"
    assert relation_str(((("x", 1),), (("z", 1),))) == "x + z"


def test_canonical_relation_order():
    pres = make_presentation([("x", 1)],
                             [((("x", 5),),), ((("x", 3),),)])
    assert pres.relations == (((("x", 3),),), ((("x", 5),),))
