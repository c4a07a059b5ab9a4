"""Chern and s-numbers, the boundary operator, W and SU membership and the
* product."""

import random

import pytest

from cobcalc.errors import DomainError
from cobcalc.exprparse import parse_poly
from cobcalc.partitions import partition_count, partitions
from cobcalc.rationals import Q


def test_s_number_of_projective_spaces(ctx8):
    eng = ctx8.chern
    for n in range(1, 9):
        assert eng.s_number(ctx8.ring.gen(f"P{n}")) == n + 1


def test_s_number_kills_decomposables(ctx8):
    eng = ctx8.chern
    ring = ctx8.ring
    for expr in ("P1*P2", "P1^2", "P2*P3", "P1*P2^2", "P4*P4"):
        assert eng.s_number(parse_poly(ring, expr)) == 0, expr


def test_low_degree_table(ctx8):
    eng = ctx8.chern
    ring = ctx8.ring
    assert eng.chern_number(parse_poly(ring, "P1^2"), (1, 1)) == 8
    assert eng.chern_number(parse_poly(ring, "P2"), (1, 1)) == 9
    assert eng.chern_number(parse_poly(ring, "P1^2"), (2,)) == 4
    assert eng.chern_number(parse_poly(ring, "P2"), (2,)) == 3


def test_degree_three_table(ctx8):
    eng = ctx8.chern
    ring = ctx8.ring
    rows = {
        "P3": (4, 24, 64),
        "P1*P2": (6, 24, 54),
        "P1^3": (8, 24, 48),
    }
    for expr, (c3, c1c2, c111) in rows.items():
        cls = parse_poly(ring, expr)
        assert eng.chern_number(cls, (3,)) == c3
        assert eng.chern_number(cls, (1, 2)) == c1c2
        assert eng.chern_number(cls, (1, 1, 1)) == c111


def test_degree_four_table(ctx8):
    eng = ctx8.chern
    ring = ctx8.ring
    rows = {
        "P1^4": (384, 192, 64),
        "P1^2*P2": (432, 204, 60),
        "P2^2": (486, 216, 54),
        "P1*P3": (512, 224, 56),
        "P4": (625, 250, 50),
    }
    for expr, (c1111, c112, c13) in rows.items():
        cls = parse_poly(ring, expr)
        assert eng.chern_number(cls, (1, 1, 1, 1)) == c1111
        assert eng.chern_number(cls, (1, 1, 2)) == c112
        assert eng.chern_number(cls, (1, 3)) == c13


def test_chern_number_is_linear(ctx8):
    eng = ctx8.chern
    ring = ctx8.ring
    a = parse_poly(ring, "P1*P2")
    b = parse_poly(ring, "P3")
    combo = a.scale(Q(2, 3)) - b.scale(5)
    for omega in ((3,), (1, 2), (1, 1, 1)):
        assert eng.chern_number(combo, omega) == Q(2, 3) * eng.chern_number(a, omega) - 5 * eng.chern_number(b, omega)


def test_class_from_chern_round_trip(ctx8):
    eng = ctx8.chern
    ring = ctx8.ring
    rng = random.Random(7)
    for n in (2, 3, 4, 5):
        cls = ring.zero()
        for mu in partitions(n):
            mono = ring.one()
            for part in mu:
                mono = mono * ring.gen(f"P{part}")
            cls = cls + mono.scale(Q(rng.randint(-5, 5), rng.randint(1, 4)))
        if cls.is_zero():
            continue
        numbers = eng.chern_vector(cls)
        assert eng.class_from_chern(n, numbers) == cls


def test_chern_matrix_is_square_nonsingular(ctx8):
    from cobcalc.linalg import rank

    eng = ctx8.chern
    for n in (2, 3, 4):
        m = eng.chern_matrix(n)
        p = partition_count(n)
        assert len(m) == p and all(len(row) == p for row in m)
        assert rank(m) == p


def test_boundary_values(ctx8):
    eng = ctx8.chern
    ring = ctx8.ring
    assert eng.boundary(ring.gen("P1")) == ring.scalar(2)
    assert eng.boundary(ring.gen("P2")).is_zero()
    # boundary is linear
    a, b = ring.gen("P3"), parse_poly(ring, "P1*P2")
    combo = a.scale(3) - b
    assert eng.boundary(combo) == eng.boundary(a).scale(3) - eng.boundary(b)


def test_boundary_kills_su_classes(ctx8):
    from cobcalc.generators import su_low_generators

    eng = ctx8.chern
    y2, y3, y4 = su_low_generators(ctx8)
    for y in (y2, y3, y4):
        assert eng.boundary(y).is_zero()


def test_w_and_su_membership(ctx8):
    eng = ctx8.chern
    ring = ctx8.ring
    p1 = ring.gen("P1")
    assert eng.is_w_class(p1)  # no Chern number with >= 2 ones in degree 1
    assert not eng.is_su_class(p1)
    y2 = parse_poly(ring, "P2-9/8*P1^2")
    assert eng.is_su_class(y2)
    assert eng.is_w_class(y2)
    assert not eng.is_w_class(ring.gen("P2"))


def test_w_basis_dimensions(ctx8):
    eng = ctx8.chern
    for n in range(1, 9):
        expected = partition_count(n) - partition_count(n - 2)
        assert len(eng.w_basis(n)) == expected, n


def test_su_basis_dimensions(ctx8):
    eng = ctx8.chern
    for n in range(2, 9):
        # SU classes kill every partition containing a 1.
        expected = len([mu for mu in partitions(n) if 1 not in mu])
        assert len(eng.su_basis(n)) == expected, n


def test_star_product_value(ctx8):
    eng = ctx8.chern
    ring = ctx8.ring
    p1 = ring.gen("P1")
    assert eng.star(p1, p1) == parse_poly(ring, "9*P1^2-8*P2")


def test_star_commutes_and_is_bilinear(ctx8):
    eng = ctx8.chern
    basis1 = eng.w_basis(1)
    basis3 = eng.w_basis(3)
    a, b = basis1[0], basis3[0]
    assert eng.star(a, b) == eng.star(b, a)
    assert eng.star(a.scale(3), b) == eng.star(a, b).scale(3)


def test_star_stays_in_w(ctx8):
    eng = ctx8.chern
    for n, m in ((1, 1), (1, 3), (3, 4), (4, 4)):
        for a in eng.w_basis(n)[:2]:
            for b in eng.w_basis(m)[:2]:
                assert eng.is_w_class(eng.star(a, b))


def test_star_rejects_non_w_inputs(ctx8):
    eng = ctx8.chern
    with pytest.raises(DomainError):
        eng.star(ctx8.ring.gen("P2"), ctx8.ring.gen("P1"))


def test_star_associativity_samples(ctx8):
    eng = ctx8.chern
    rng = random.Random(11)
    degrees = [1, 1, 3, 4]
    for _ in range(10):
        picks = []
        total = 0
        for _ in range(3):
            n = rng.choice(degrees)
            if total + n > 6:
                n = 1
            total += n
            basis = eng.w_basis(n)
            picks.append(basis[rng.randrange(len(basis))])
        a, b, c = picks
        assert eng.star(eng.star(a, b), c) == eng.star(a, eng.star(b, c))


def test_chern_vector_json_keys(ctx8):
    eng = ctx8.chern
    data = eng.chern_vector_json(ctx8.ring.gen("P2"))
    assert data["degree"] == 2
    assert set(data["numbers"]) == {"1,1", "2"}
    assert data["numbers"]["1,1"] == "9/1"
