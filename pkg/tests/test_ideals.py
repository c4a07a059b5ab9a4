"""Graded ideal pieces: dimension tables, membership, equality and the
Hilbert-series regularity check."""

import pytest

from cobcalc.errors import DomainError
from cobcalc.exprparse import parse_poly
from cobcalc.generators import su_low_generators, w_generator, z_generator
from cobcalc.ideals import (
    IdealSpec,
    ideal_degree_report,
    ideal_degree_vectors,
    ideal_member,
    ideals_equal,
    regularity_check,
)
from cobcalc.special import abel_relation_generators


def test_principal_ideal_degree_dims(ctx8):
    p1 = ctx8.ring.gen("P1")
    report = ideal_degree_report(ctx8, IdealSpec("(P1)", (p1,), 8))
    # dim of the degree-n piece of (P1) is p(n-1) restricted to parts <= cap.
    assert report.ideal_dims == (1, 1, 2, 3, 5, 7, 11, 15)
    assert report.ambient_dims == (1, 2, 3, 5, 7, 11, 15, 22)
    assert all(q == a - i for q, a, i in zip(report.quotient_dims, report.ambient_dims, report.ideal_dims))


def test_degree_vectors_count(ctx8):
    p1 = ctx8.ring.gen("P1")
    vectors = ideal_degree_vectors(ctx8, (p1,), 2)
    assert len(vectors) == 1


def test_membership(ctx8):
    ring = ctx8.ring
    p1 = ring.gen("P1")
    spec = IdealSpec("(P1)", (p1,), 8)
    assert ideal_member(ctx8, spec, p1 * p1)
    assert ideal_member(ctx8, spec, parse_poly(ring, "3*P1*P2-P1^3"))
    assert not ideal_member(ctx8, spec, ring.gen("P2"))
    assert ideal_member(ctx8, spec, ring.zero())


def test_membership_weight_guard(ctx8):
    p1 = ctx8.ring.gen("P1")
    spec = IdealSpec("(P1)", (p1,), 4)
    with pytest.raises(DomainError):
        ideal_member(ctx8, spec, ctx8.ring.gen("P5"))


def test_ideal_specs_reject_inhomogeneous_zero(ctx8):
    ring = ctx8.ring
    with pytest.raises(DomainError):
        IdealSpec("bad", (ring.zero(),), 8)


def test_equality_same_generators_reordered(ctx8):
    ring = ctx8.ring
    a = IdealSpec("A", (ring.gen("P1"), ring.gen("P2")), 8)
    b = IdealSpec("B", (ring.gen("P2"), ring.gen("P1")), 8)
    assert ideals_equal(ctx8, a, b).equal


def test_equality_detects_difference(ctx8):
    p1 = ctx8.ring.gen("P1")
    a = IdealSpec("(P1)", (p1,), 8)
    b = IdealSpec("(P1^2)", (p1 * p1,), 8)
    report = ideals_equal(ctx8, a, b)
    assert not report.equal
    assert report.first_failing_degree == 1


def test_z_ideal_equals_relation_ideal(ctx8):
    zs = tuple(z_generator(ctx8, k).cls for k in range(3, 9))
    relations = tuple(abel_relation_generators(ctx8))
    report = ideals_equal(
        ctx8,
        IdealSpec("(z)", zs, 8),
        IdealSpec("(alpha_ij, i,j>=2)", relations, 8),
    )
    assert report.equal, report.detail


def test_x_and_z_span_same_ideal_over_y2(ctx8):
    y2 = su_low_generators(ctx8)[0]
    zs = tuple(z_generator(ctx8, k).cls for k in range(3, 9))
    xs = tuple(w_generator(ctx8, k).cls for k in range(3, 9))
    report = ideals_equal(
        ctx8,
        IdealSpec("(y2,x)", (y2, *xs), 8),
        IdealSpec("(y2,z)", (y2, *zs), 8),
    )
    assert report.equal, report.detail


def test_regularity_of_generator_sequences(ctx8):
    xs = {k: w_generator(ctx8, k).cls for k in [1, 3, 4, 5, 6, 7, 8]}
    full = [xs[1], xs[3], xs[4], xs[5], xs[6], xs[7], xs[8]]
    assert regularity_check(ctx8, full).ok
    assert regularity_check(ctx8, full[1:]).ok
    assert regularity_check(ctx8, full[3:]).ok


def test_regularity_counterexample(ctx8):
    p1 = ctx8.ring.gen("P1")
    report = regularity_check(ctx8, [p1, p1 * p1])
    assert not report.ok
    assert report.first_failing_degree == 2


def test_regularity_expected_dims_shape(ctx8):
    p1 = ctx8.ring.gen("P1")
    report = regularity_check(ctx8, [p1])
    # Q[P1..P8]/(P1) has the dimensions of partitions with parts in 2..8.
    assert report.ok
    assert report.quotient_dims == (0, 1, 1, 2, 2, 4, 4, 7)
