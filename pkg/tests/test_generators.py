"""Generator families: binomial gcds with certificates, the z/x families in
W, the SU family, and the polynomial-generator criterion."""

from math import comb, gcd

import pytest

from cobcalc.errors import DomainError
from cobcalc.generators import (
    d2_of,
    d_closed_form,
    d_of,
    e_generator,
    euclid_combo,
    novikov_check,
    su_generator,
    su_low_generators,
    w_generator,
    z_generator,
)
from cobcalc.rationals import Q


def test_d_closed_form_matches_bruteforce():
    for m in range(1, 31):
        brute = 0
        for i in range(1, max(m, 2)):
            brute = gcd(brute, comb(m + 1, i))
        assert d_of(m) == brute == d_closed_form(m), m


def test_d_closed_form_prime_powers():
    assert d_of(1) == 2  # 2 = 2^1
    assert d_of(3) == 2  # 4 = 2^2
    assert d_of(4) == 5  # 5 prime
    assert d_of(8) == 3  # 9 = 3^2
    assert d_of(5) == 1  # 6 = 2*3


def test_d2_product_identity():
    for m in range(3, 31):
        assert d2_of(m) == d_of(m) * d_of(m - 1), m


def test_euclid_certificates():
    for m in range(2, 13):
        assert euclid_combo(m).check()
    for m in range(3, 13):
        assert euclid_combo(m, inner=True).check()


def test_certificate_is_deterministic():
    a = euclid_combo(7)
    b = euclid_combo(7)
    assert a.lambdas == b.lambdas


def test_e_generator_s_values(ctx8):
    eng = ctx8.chern
    for m in range(2, 9):
        rec = e_generator(ctx8, m)
        assert abs(rec.s_value) == d_of(m), m
        assert eng.s_number(rec.cls) == rec.s_value


def test_z_generator_values(ctx8):
    for k in range(3, 9):
        rec = z_generator(ctx8, k)
        assert rec.s_value == d_of(k) * d_of(k - 1), k
        assert rec.cls.homogeneous_weight() == k


def test_z3_is_minus_alpha22(ctx8):
    assert z_generator(ctx8, 3).cls == -ctx8.alpha(2, 2)


def test_w_generators(ctx8):
    eng = ctx8.chern
    for k in [1] + list(range(3, 9)):
        rec = w_generator(ctx8, k)
        assert eng.is_w_class(rec.cls), k
        expected = 2 if k == 1 else d_of(k) * d_of(k - 1)
        assert rec.s_value == expected, k


def test_w_generator_equals_z_modulo_lower_ideal(ctx8):
    from cobcalc.generators import _ideal_tilde_generators
    from cobcalc.ideals import IdealSpec, ideal_member

    for k in (4, 5, 6):
        x = w_generator(ctx8, k).cls
        z = z_generator(ctx8, k).cls
        spec = IdealSpec("lower", tuple(_ideal_tilde_generators(ctx8, k - 1)), ctx8.cap)
        assert ideal_member(ctx8, spec, x - z), k


def test_w_generator_rejects_bad_degree(ctx8):
    with pytest.raises(DomainError):
        w_generator(ctx8, 2)


def test_su_low_generators(ctx8):
    eng = ctx8.chern
    y2, y3, y4 = su_low_generators(ctx8)
    assert eng.s_number(y2) == 3
    assert abs(eng.s_number(y3)) == 6
    assert abs(eng.s_number(y4)) == 10
    for y in (y2, y3, y4):
        assert eng.is_su_class(y)


def test_y3_closed_form(ctx8):
    _, y3, _ = su_low_generators(ctx8)
    assert y3 == -ctx8.alpha(2, 2)


def test_y4_closed_form(ctx8):
    """The unique SU representative with s_4 = 10 modulo y2^2 uses the
    coefficient 1/2 on alpha(2,2) P1 under this sign convention."""
    _, _, y4 = su_low_generators(ctx8)
    p1 = ctx8.ring.gen("P1")
    assert y4 == -ctx8.alpha(2, 3) + (ctx8.alpha(2, 2) * p1).scale(Q(1, 2))


def test_su_generators_higher_degrees(ctx8):
    eng = ctx8.chern
    for i in range(5, 9):
        rec = su_generator(ctx8, i)
        target = d_of(i) * d_of(i - 1) * (1 if i % 2 else 2)
        assert rec.s_value == target, i
        assert eng.is_su_class(rec.cls), i


def test_novikov_criterion():
    assert novikov_check(2, 3)
    assert novikov_check(3, -6)
    assert novikov_check(4, 10)
    assert not novikov_check(2, 5)  # odd part 5 is not the relevant prime 3
    assert not novikov_check(4, 0)
    assert not novikov_check(5, 8)  # odd part 1 but the relevant prime is 5
    assert novikov_check(15, 8)  # neither 15 nor 16 is an odd prime power; odd part must be 1
    with pytest.raises(DomainError):
        novikov_check(3, Q(1, 2))
