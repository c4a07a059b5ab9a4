"""Specializations: the two- and four-parameter eliminations, the functional
form check, the quartic ODE genus and the projection genus on W."""

import random

import pytest

from cobcalc.errors import DomainError
from cobcalc.exprparse import parse_poly
from cobcalc.partitions import weighted_ring_dims
from cobcalc.rationals import Q
from cobcalc.special import (
    abel_eliminate,
    abel_fgl,
    buchstaber_eliminate,
    get_wstar,
    hoehn_solve,
    hoehn_symbolic_ring,
    krichever_form_check,
    krichever_params_of,
    phi_w,
)


def test_abel_images(ctx8):
    sub = abel_eliminate(ctx8)
    assert sub.images["P1"].to_text() == "P1"
    assert sub.images["P2"].to_text() == "P2"
    assert sub.images["P3"] == parse_poly(sub.target, "-5/3*P1^3+8/3*P1*P2")


def test_abel_kills_inner_coefficients(ctx8):
    sub = abel_eliminate(ctx8)
    for i in range(2, 9):
        for j in range(i, 10 - i):
            if i + j - 1 > 8:
                continue
            assert sub.apply_poly(ctx8.alpha(i, j)).is_zero(), (i, j)


def test_abel_law_shape(ctx8):
    law = abel_fgl(ctx8)
    for (i, j), c in law.F.terms.items():
        if min(i, j) >= 2:
            assert c.is_zero(), (i, j)


def test_abel_quotient_dimensions(ctx8):
    from cobcalc.ideals import IdealSpec, ideal_degree_report
    from cobcalc.special import abel_relation_generators

    gens = tuple(abel_relation_generators(ctx8))
    report = ideal_degree_report(ctx8, IdealSpec("rel", gens, 8))
    assert list(report.quotient_dims) == [n // 2 + 1 for n in range(1, 9)]
    assert list(report.quotient_dims) == weighted_ring_dims([1, 2], 8)[1:]


def test_buchstaber_antisymmetry(ctx8):
    data = buchstaber_eliminate(ctx8)
    for (i, j), c in data.entries.items():
        assert (c + data.entries.get((j, i), ctx8.ring.zero())).is_zero(), (i, j)


def test_buchstaber_quotient_dimensions(ctx8):
    from cobcalc.ideals import IdealSpec, ideal_degree_report

    data = buchstaber_eliminate(ctx8)
    gens = tuple(data.relation_generators())
    report = ideal_degree_report(ctx8, IdealSpec("rel", gens, 8))
    assert list(report.quotient_dims) == weighted_ring_dims([1, 2, 3, 4], 8)[1:]


def test_buchstaber_law_passes_form_check(ctx8):
    data = buchstaber_eliminate(ctx8)
    assert krichever_form_check(data.fgl).ok


def test_abel_law_passes_form_check(ctx8):
    assert krichever_form_check(abel_fgl(ctx8)).ok


def test_additive_law_passes_form_check():
    from cobcalc.fgl import FormalGroupLaw
    from cobcalc.ring import GradedRing
    from cobcalc.series import BiSeries, Series1

    ring = GradedRing([], 6)
    order = 7
    log = Series1.x(ring, order)
    F = BiSeries(ring, {(1, 0): ring.one(), (0, 1): ring.one()}, order)
    law = FormalGroupLaw(F=F, origin="additive", logarithm=log)
    assert krichever_form_check(law).ok


def test_universal_law_fails_form_check(ctx8):
    report = krichever_form_check(ctx8.fgl)
    assert not report.ok
    assert report.failure_degree == 5
    assert report.residual


def test_hoehn_todd_point(ctx8):
    genus = hoehn_solve((2, 1, 0, 0), 8)
    for n in range(1, 9):
        assert genus.images[n] == genus.ring.one(), n


def test_hoehn_todd_exponent_closed_form():
    """With (p1..p4) = (2,1,0,0) the exponent is 1 - e^{-x}."""
    genus = hoehn_solve((2, 1, 0, 0), 8)
    f = genus.f
    fact = 1
    for k in range(1, f.order + 1):
        fact *= k
        assert f.coeffs[k] == genus.ring.scalar(Q((-1) ** (k + 1), fact)), k


def test_hoehn_zero_point(ctx8):
    genus = hoehn_solve((0, 0, 0, 0), 8)
    for n in range(1, 9):
        assert genus.images[n].is_zero(), n


def test_hoehn_params_round_trip_random():
    rng = random.Random(13)
    for _ in range(5):
        p = tuple(Q(rng.randint(-8, 8), rng.randint(1, 5)) for _ in range(4))
        genus = hoehn_solve(p, 8)
        report = krichever_params_of(genus.fgl())
        assert report.ok
        assert tuple(pi.constant_term() for pi in report.p) == p


def test_hoehn_symbolic_round_trip():
    ring = hoehn_symbolic_ring(8)
    genus = hoehn_solve(tuple(ring.gen(f"p{i}") for i in range(1, 5)), 8)
    report = krichever_params_of(genus.fgl())
    assert report.ok
    for i in range(1, 5):
        assert report.p[i - 1] == ring.gen(f"p{i}")


def test_hoehn_rejects_wrong_arity():
    with pytest.raises(DomainError):
        hoehn_solve((1, 2, 3), 8)


def test_krichever_params_of_buchstaber_image(ctx8):
    data = buchstaber_eliminate(ctx8)
    report = krichever_params_of(data.fgl)
    assert report.ok
    assert report.p[0].to_text() == "2*P1"


def test_star_monomials_span_w(ctx8):
    ws = get_wstar(ctx8)
    for n in range(1, 9):
        assert ws.spans(n), n


def test_phi_on_generators(ctx8):
    ws = get_wstar(ctx8)
    assert phi_w(ctx8, ws.xgens[1]).to_text() == "X1"
    assert phi_w(ctx8, ws.xgens[3]).to_text() == "X3"
    assert phi_w(ctx8, ws.xgens[4]).to_text() == "X4"
    for k in range(5, 9):
        assert phi_w(ctx8, ws.xgens[k]).is_zero(), k


def test_phi_multiplicative_example(ctx8):
    ws = get_wstar(ctx8)
    eng = ctx8.chern
    expr = eng.star(ws.xgens[3], ws.xgens[4]) + eng.star(
        eng.star(ws.xgens[5], ws.xgens[1]), ws.xgens[1]
    )
    image = phi_w(ctx8, expr)
    assert image == ws.image_ring.gen("X3") * ws.image_ring.gen("X4")


def test_phi_rejects_non_w_class(ctx8):
    with pytest.raises(DomainError):
        phi_w(ctx8, ctx8.ring.gen("P2"))
