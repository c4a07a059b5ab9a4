"""Graded-piece linear algebra for homogeneous ideals: per-degree dimension
tables, membership, equality up to the cap, and Hilbert-series regularity
checks.  All ranks go through exact fraction-free elimination."""

from __future__ import annotations

from dataclasses import dataclass, field

from .context import Context
from .errors import DomainError
from .linalg import rank, solve
from .partitions import partition_count, partitions, weighted_ring_dims
from .rationals import Q
from .ring import GradedPoly

__all__ = [
    "IdealSpec",
    "ideal_degree_vectors",
    "ideal_degree_report",
    "ideal_member",
    "ideals_equal",
    "regularity_check",
    "GradedReport",
]


@dataclass(frozen=True)
class IdealSpec:
    name: str
    generators: tuple[GradedPoly, ...]
    cap: int

    def __post_init__(self):
        for g in self.generators:
            if g.is_zero():
                raise DomainError("ideal generators must be nonzero")
            w = g.homogeneous_weight()
            if w > self.cap:
                raise DomainError(f"generator of weight {w} exceeds cap {self.cap}")


def ideal_degree_vectors(ctx: Context, generators, n: int) -> list[list[Q]]:
    """Coordinate vectors spanning the degree-n piece of the ideal.

    Spans {m * g : g generator, m monomial with weight(m g) = n} over the
    fixed partition-monomial basis of degree n.
    """
    eng = ctx.chern
    vectors = []
    for g in generators:
        w = g.homogeneous_weight()
        if w is None or w > n:
            continue
        for mu in partitions(n - w, max_part=ctx.cap):
            mono = ctx.ring.one()
            for part in mu:
                mono = mono * ctx.ring.gen(f"P{part}")
            vectors.append(eng.class_to_vector(mono * g, n))
    return vectors


@dataclass(frozen=True)
class GradedReport:
    """Per-degree dimension table for an ideal inside the ambient graded ring."""

    name: str
    degrees: tuple[int, ...]
    ideal_dims: tuple[int, ...]
    ambient_dims: tuple[int, ...]
    quotient_dims: tuple[int, ...]
    expected_quotient: tuple[int, ...] | None = None
    failures: tuple[int, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> list[dict]:
        out = []
        for idx, n in enumerate(self.degrees):
            row = {
                "degree": n,
                "ideal_dim": self.ideal_dims[idx],
                "ambient_dim": self.ambient_dims[idx],
                "quotient_dim": self.quotient_dims[idx],
            }
            if self.expected_quotient is not None:
                row["expected"] = self.expected_quotient[idx]
                row["pass"] = self.quotient_dims[idx] == self.expected_quotient[idx]
            out.append(row)
        return out


def ideal_degree_report(ctx: Context, spec: IdealSpec, expected_quotient=None) -> GradedReport:
    """Dimension table of an ideal through the cap (degrees 1..cap)."""
    degrees = tuple(range(1, spec.cap + 1))
    ideal_dims, ambient_dims, quotient_dims, failures = [], [], [], []
    for n in degrees:
        vectors = ideal_degree_vectors(ctx, spec.generators, n)
        r = rank(vectors) if vectors else 0
        p = partition_count(n)
        ideal_dims.append(r)
        ambient_dims.append(p)
        quotient_dims.append(p - r)
        if expected_quotient is not None and p - r != expected_quotient[n]:
            failures.append(n)
    return GradedReport(
        name=spec.name,
        degrees=degrees,
        ideal_dims=tuple(ideal_dims),
        ambient_dims=tuple(ambient_dims),
        quotient_dims=tuple(quotient_dims),
        expected_quotient=tuple(expected_quotient[n] for n in degrees)
        if expected_quotient is not None
        else None,
        failures=tuple(failures),
    )


def ideal_member(ctx: Context, spec: IdealSpec, z: GradedPoly) -> bool:
    """Exact linear solvability of z inside the matching degree piece."""
    if z.is_zero():
        return True
    n = z.homogeneous_weight()
    if n > spec.cap:
        raise DomainError(f"weight {n} exceeds the ideal's cap {spec.cap}")
    vectors = ideal_degree_vectors(ctx, spec.generators, n)
    if not vectors:
        return False
    target = ctx.chern.class_to_vector(z, n)
    columns = [[v[t] for v in vectors] for t in range(len(target))]
    return solve(columns, target) is not None


@dataclass(frozen=True)
class EqualityReport:
    equal: bool
    first_failing_degree: int | None
    detail: str

    def to_json(self) -> dict:
        return {
            "equal": self.equal,
            "first_failing_degree": self.first_failing_degree,
            "detail": self.detail,
        }


def ideals_equal(ctx: Context, a: IdealSpec, b: IdealSpec, cap: int | None = None) -> EqualityReport:
    """Per-degree dimension equality plus two-sided generator membership."""
    cap = cap if cap is not None else min(a.cap, b.cap)
    for n in range(1, cap + 1):
        va = ideal_degree_vectors(ctx, a.generators, n)
        vb = ideal_degree_vectors(ctx, b.generators, n)
        ra = rank(va) if va else 0
        rb = rank(vb) if vb else 0
        if ra != rb:
            return EqualityReport(False, n, f"dimensions differ in degree {n}: {ra} vs {rb}")
        if ra != (rank(va + vb) if va or vb else 0):
            return EqualityReport(False, n, f"degree-{n} pieces span different subspaces")
    for g in a.generators:
        if g.homogeneous_weight() <= cap and not ideal_member(ctx, b, g):
            return EqualityReport(False, g.homogeneous_weight(), f"{a.name} generator not in {b.name}")
    for g in b.generators:
        if g.homogeneous_weight() <= cap and not ideal_member(ctx, a, g):
            return EqualityReport(False, g.homogeneous_weight(), f"{b.name} generator not in {a.name}")
    return EqualityReport(True, None, f"ideals agree through degree {cap}")


@dataclass(frozen=True)
class RegularityReport:
    ok: bool
    degrees: tuple[int, ...]
    quotient_dims: tuple[int, ...]
    expected_dims: tuple[int, ...]
    first_failing_degree: int | None

    def to_json(self) -> dict:
        return {
            "pass": self.ok,
            "degrees": list(self.degrees),
            "quotient_dims": list(self.quotient_dims),
            "expected_dims": list(self.expected_dims),
            "first_failing_degree": self.first_failing_degree,
        }


def regularity_check(ctx: Context, sequence, cap: int | None = None) -> RegularityReport:
    """Hilbert-series test: quotient dimensions must match the prediction
    prod 1/(1-t^i) * prod_j (1 - t^{d_j}) through the cap.

    For homogeneous sequences, equality through degree n certifies there is
    no Koszul defect through that degree.
    """
    cap = cap if cap is not None else ctx.cap
    sequence = list(sequence)
    gen_weights = [g.homogeneous_weight() for g in sequence]
    ambient = weighted_ring_dims(list(range(1, cap + 1)), cap)
    # Multiply the ambient series by prod (1 - t^{d_j}).
    expected = list(ambient)
    for d in gen_weights:
        expected = [expected[n] - (expected[n - d] if n >= d else 0) for n in range(cap + 1)]
    spec = IdealSpec("seq", tuple(sequence), cap)
    degrees = tuple(range(1, cap + 1))
    quotient = []
    first_fail = None
    for n in degrees:
        vectors = ideal_degree_vectors(ctx, spec.generators, n)
        r = rank(vectors) if vectors else 0
        q = partition_count(n) - r
        quotient.append(q)
        if q != expected[n] and first_fail is None:
            first_fail = n
    return RegularityReport(
        ok=first_fail is None,
        degrees=degrees,
        quotient_dims=tuple(quotient),
        expected_dims=tuple(expected[1:]),
        first_failing_degree=first_fail,
    )
