"""The universal formal group law: pinned coefficients, grading, symmetry,
s-numbers of coefficients, the invariant form and associativity."""

from math import comb

import pytest

from cobcalc import Context
from cobcalc.errors import DomainError
from cobcalc.exprparse import parse_poly
from cobcalc.fgl import associativity_defect, universal_fgl
from cobcalc.series import Series1


def test_pinned_low_coefficients(ctx4):
    assert ctx4.alpha(1, 1).to_text() == "-P1"
    assert ctx4.alpha(1, 2).to_text() == "P1^2-P2"
    assert ctx4.alpha(2, 2).to_text() == "-5/2*P1^3+4*P1*P2-3/2*P3"
    expected23 = parse_poly(ctx4.ring, "9/2*P1^4-11*P1^2*P2+11/2*P1*P3+3*P2^2-2*P4")
    assert ctx4.alpha(2, 3) == expected23


def test_alpha_symmetry_and_grading(ctx8):
    cap = ctx8.cap
    for i in range(1, cap + 1):
        for j in range(i, cap + 2 - i):
            a = ctx8.alpha(i, j)
            assert a == ctx8.alpha(j, i)
            if not a.is_zero():
                assert a.homogeneous_weight() == i + j - 1


def test_alpha_s_numbers_are_signed_binomials(ctx8):
    """s_{i+j-1}(alpha_ij) = -C(i+j, i) under the fixed sign convention."""
    eng = ctx8.chern
    for i in range(1, 5):
        for j in range(i, min(9 - i, 5) + 1):
            if i + j - 1 > ctx8.cap:
                continue
            assert eng.s_number(ctx8.alpha(i, j)) == -comb(i + j, i), (i, j)


def test_unit_coefficients(ctx4):
    F = ctx4.fgl.F
    assert F.coeff(1, 0) == ctx4.ring.one()
    assert F.coeff(0, 1) == ctx4.ring.one()
    assert F.coeff(0, 0).is_zero()


def test_invariant_form_matches_alpha_row(ctx8):
    w = ctx8.fgl.w
    assert w.coeffs[0] == ctx8.ring.one()
    for k in range(1, ctx8.cap + 1):
        assert w.coeffs[k] == ctx8.alpha(1, k)


def test_formal_inverse(ctx4):
    inv = ctx4.fgl.inverse_series()
    # Verified internally; spot check the first coefficients: i(x) = -x + ...
    assert inv.coeffs[1] == -ctx4.ring.one()
    residual = ctx4.fgl.F.eval_series(Series1.x(ctx4.ring, ctx4.fgl.order), inv)
    assert residual.is_zero()


def test_associativity_direct_at_low_cap():
    for cap in (3, 4):
        fgl = universal_fgl(cap)
        assert associativity_defect(fgl) is None


def test_log_linearizes_the_law(ctx8):
    """log F(x, y) = log x + log y through the truncation order."""
    from cobcalc.series import BiSeries

    fgl = ctx8.fgl
    log = fgl.logarithm
    order = fgl.order
    lhs = fgl.F.compose_series(log)
    rhs = BiSeries.from_series_x(log, order) + BiSeries.from_series_y(log, order)
    assert lhs == rhs


def test_alpha_out_of_range(ctx4):
    with pytest.raises(DomainError):
        ctx4.alpha(2, 100)


def test_context_caches_law():
    a = Context(4)
    assert a.fgl is a.fgl
    assert a.chern is a.chern
