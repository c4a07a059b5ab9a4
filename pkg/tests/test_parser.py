"""Expression parser: grammar, normalization, error positions, round trips."""

import pytest

from cobcalc.exprparse import ParseError, parse_class, parse_poly
from cobcalc.rationals import Q
from cobcalc.ring import mu_ring

RING = mu_ring(6)


def test_basic_parse():
    poly = parse_poly(RING, "CP2 - 9/8*CP1^2")
    p1, p2 = RING.gen("P1"), RING.gen("P2")
    assert poly == p2 - (p1 * p1).scale(Q(9, 8))


def test_p_and_cp_are_aliases():
    assert parse_poly(RING, "CP1*CP2") == parse_poly(RING, "P1*P2")


def test_power_equals_repetition():
    assert parse_poly(RING, "CP1*CP1") == parse_poly(RING, "CP1^2")


def test_bare_rational_term():
    poly = parse_poly(RING, "3/4 + CP1")
    assert poly.constant_term() == Q(3, 4)


def test_leading_sign():
    assert parse_poly(RING, "-CP1") == -RING.gen("P1")
    assert parse_poly(RING, "+CP1") == RING.gen("P1")


def test_round_trip_canonical_forms():
    for text in (
        "-5/2*P1^3+4*P1*P2-3/2*P3",
        "P1^2-P2",
        "-P1",
        "9*P1^2-8*P2",
        "-2*P1^4+7*P1^2*P2-4*P1*P3-3*P2^2+2*P4",
    ):
        assert parse_poly(RING, text).to_text() == text


def test_cp0_rejected_with_column():
    with pytest.raises(ParseError) as excinfo:
        parse_class("CP0")
    assert "indices start at 1" in str(excinfo.value)
    assert excinfo.value.column == 3


def test_zero_denominator_rejected():
    with pytest.raises(ParseError) as excinfo:
        parse_class("1/0*CP1")
    assert "zero denominator" in str(excinfo.value)


def test_unexpected_character():
    with pytest.raises(ParseError) as excinfo:
        parse_class("CP1 @ CP2")
    assert excinfo.value.column == 5


def test_trailing_operator():
    with pytest.raises(ParseError):
        parse_class("CP1 +")


def test_generator_beyond_cap():
    from cobcalc.errors import DomainError

    with pytest.raises(DomainError):
        parse_poly(RING, "CP9")


def test_whitespace_insensitive():
    assert parse_poly(RING, " CP1 * CP2 ") == parse_poly(RING, "CP1*CP2")
