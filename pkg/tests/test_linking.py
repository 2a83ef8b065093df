from fractions import Fraction
from math import gcd, isqrt

import pytest

from hfconcordance.linking import Z_N_FORM, CyclicLinkingForm


def forms(max_order):
    for p in range(1, max_order + 1):
        for a in range(p):
            if gcd(a, p) == 1 or p == 1:
                yield CyclicLinkingForm(p, Fraction(a, p) if p > 1 else Fraction(0))


def test_z9_form_has_unique_metabolizer():
    assert Z_N_FORM.metabolizers() == [3]
    assert Z_N_FORM.subgroup(3) == frozenset({0, 3, 6})
    assert Z_N_FORM.pair(1, 1) == Fraction(5, 9)


def test_non_square_order_has_no_metabolizer():
    assert CyclicLinkingForm(5, Fraction(1, 5)).metabolizers() == []
    assert CyclicLinkingForm(12, Fraction(5, 12)).metabolizers() == []


def test_trivial_group():
    assert CyclicLinkingForm(1, 0).metabolizers() == [0]


def test_singular_forms_rejected():
    with pytest.raises(ValueError):
        CyclicLinkingForm(9, Fraction(1, 3))
    with pytest.raises(ValueError):
        CyclicLinkingForm(0, 0)


def test_metabolizers_square_to_order():
    for form in forms(60):
        for gen in form.metabolizers():
            sub = form.subgroup(gen)
            assert len(sub) ** 2 == form.order
            # self-perpendicular, checked by brute force
            perp = {x for x in range(form.order) if all((x * y * form.self_pairing) % 1 == 0 for y in sub)}
            assert perp == set(sub)
        p = form.order
        if isqrt(p) ** 2 != p:
            assert form.metabolizers() == []
        else:
            assert form.metabolizers()
