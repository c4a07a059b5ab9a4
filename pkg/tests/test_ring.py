"""Graded ring arithmetic: axioms, truncation, canonical text form."""

import pytest
from hypothesis import given, settings, strategies as st

from cobcalc.rationals import Q
from cobcalc.ring import GradedPoly, mu_ring

RING = mu_ring(4)


def _poly_strategy():
    exps = st.tuples(*(st.integers(min_value=0, max_value=2) for _ in range(4)))
    coeff = st.tuples(st.integers(min_value=-20, max_value=20), st.integers(min_value=1, max_value=8))
    term = st.tuples(exps, coeff)
    return st.lists(term, max_size=5).map(
        lambda terms: sum(
            (RING.monomial(e, Q(num, den)) for e, (num, den) in terms),
            RING.zero(),
        )
    )


polys = _poly_strategy()


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_addition_commutes(a, b):
    assert a + b == b + a


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_multiplication_commutes(a, b):
    assert a * b == b * a


@settings(max_examples=40, deadline=None)
@given(polys, polys, polys)
def test_multiplication_associates(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=40, deadline=None)
@given(polys, polys, polys)
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40, deadline=None)
@given(polys)
def test_additive_inverse(a):
    assert (a - a).is_zero()
    assert (a + (-a)).is_zero()


def test_truncation_drops_heavy_terms():
    p4 = RING.gen("P4")
    assert (p4 * p4).is_zero()  # weight 8 > cap 4
    p1 = RING.gen("P1")
    assert not (p1 ** 4).is_zero()
    assert (p1 ** 5).is_zero()


def test_homogeneous_weight_of_products():
    p1, p2, p3 = RING.gen("P1"), RING.gen("P2"), RING.gen("P3")
    assert (p1 * p3).homogeneous_weight() == 4
    assert (p1 * p1 * p2).homogeneous_weight() == 4
    mixed = p1 + p2
    assert not mixed.is_homogeneous()


def test_pow_matches_repeated_multiplication():
    p = RING.gen("P1") + RING.gen("P2").scale(Q(1, 2))
    by_mul = RING.one()
    for _ in range(3):
        by_mul = by_mul * p
    assert p ** 3 == by_mul
    assert p ** 0 == RING.one()


def test_canonical_text_form():
    p1, p2, p3 = RING.gen("P1"), RING.gen("P2"), RING.gen("P3")
    poly = p3.scale(Q(-3, 2)) + (p1 * p2).scale(4) + (p1 ** 3).scale(Q(-5, 2))
    assert poly.to_text() == "-5/2*P1^3+4*P1*P2-3/2*P3"
    assert RING.zero().to_text() == "0"
    assert RING.one().to_text() == "1"
    assert (-p1).to_text() == "-P1"


def test_text_round_trip():
    p1, p2 = RING.gen("P1"), RING.gen("P2")
    poly = (p1 * p2).scale(Q(7, 3)) - p1 ** 2 + RING.scalar(Q(1, 2))
    assert GradedPoly.from_text(RING, poly.to_text()) == poly


def test_scalar_and_constant_term():
    s = RING.scalar(Q(-7, 2))
    assert s.constant_term() == Q(-7, 2)
    assert RING.gen("P1").constant_term() == 0
