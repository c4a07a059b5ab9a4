"""Generator families and the combinatorics behind them.

d(m) is the gcd of the inner binomial coefficients C(m+1, 1..m-1); d2(m)
uses the range 2..m-2.  The z and x families are integer combinations of
formal-group-law coefficients whose s-numbers realize those gcds; the y
family gives the low-degree SU generators and their higher desk analogs.

Sign note: with log(x) = sum Pn x^{n+1}/(n+1) the s-numbers of the alpha
coefficients come out negative, s_{i+j-1}(alpha_ij) = -C(i+j, i).  z_k is
therefore defined with a global minus so that z_3 = -alpha(2,2) = y_3 and
s_k(z_k) = +d(k)d(k-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd

from .context import Context
from .errors import ConstructionError, DomainError
from .linalg import solve
from .rationals import Q, rat_json
from .ring import GradedPoly

__all__ = [
    "d_of",
    "d_closed_form",
    "d2_of",
    "euclid_combo",
    "EuclidCombo",
    "GeneratorRecord",
    "e_generator",
    "z_generator",
    "w_generator",
    "su_low_generators",
    "su_generator",
    "novikov_check",
]


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, u, v) with u*a + v*b = g, standard iterative extended Euclid."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def extended_euclid_list(values: list[int]) -> tuple[int, list[int]]:
    """Deterministic fold of the two-term extended gcd over the list."""
    if not values:
        raise DomainError("empty gcd")
    g = values[0]
    coeffs = [1]
    for v in values[1:]:
        g2, u, t = _ext_gcd(g, v)
        coeffs = [c * u for c in coeffs] + [t]
        g = g2
    return g, coeffs


def _d_indices(m: int) -> list[int]:
    if m < 1:
        raise DomainError("d(m) needs m >= 1")
    return [1] if m == 1 else list(range(1, m))


def _d2_indices(m: int) -> list[int]:
    if m < 3:
        raise DomainError("d2(m) needs m >= 3")
    return [2] if m == 3 else list(range(2, m - 1))


def d_of(m: int) -> int:
    """Brute-force gcd of the binomials C(m+1, i), i in 1..m-1 (i=1 for m=1)."""
    g = 0
    for i in _d_indices(m):
        g = gcd(g, comb(m + 1, i))
    return g


def d_closed_form(m: int) -> int:
    """p when m+1 is a power of the prime p, else 1."""
    n = m + 1
    for p in range(2, n + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else 1
    return 1


def d2_of(m: int) -> int:
    """Brute-force gcd of C(m+1, i), i in 2..m-2 (i=2 for m=3)."""
    g = 0
    for i in _d2_indices(m):
        g = gcd(g, comb(m + 1, i))
    return g


@dataclass(frozen=True)
class EuclidCombo:
    """Certificate lambda_i with sum lambda_i C(m+1, i) = gcd over the range."""

    m: int
    indices: tuple[int, ...]
    lambdas: dict[int, int]
    gcd_value: int

    def check(self) -> bool:
        total = sum(self.lambdas[i] * comb(self.m + 1, i) for i in self.indices)
        brute = 0
        for i in self.indices:
            brute = gcd(brute, comb(self.m + 1, i))
        return total == self.gcd_value == brute


def euclid_combo(m: int, inner: bool = False) -> EuclidCombo:
    """Euclid certificate for d(m) (full range) or d2(m) (inner range)."""
    indices = tuple(_d2_indices(m) if inner else _d_indices(m))
    g, coeffs = extended_euclid_list([comb(m + 1, i) for i in indices])
    return EuclidCombo(m=m, indices=indices, lambdas=dict(zip(indices, coeffs)), gcd_value=g)


@dataclass(frozen=True)
class GeneratorRecord:
    kind: str
    degree: int
    cls: GradedPoly
    s_value: Q
    certificates: dict

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "degree": self.degree,
            "class": self.cls.to_text(),
            "s_number": rat_json(self.s_value),
            "certificates": dict(self.certificates),
        }


def _record(ctx: Context, kind: str, cls: GradedPoly) -> GeneratorRecord:
    eng = ctx.chern
    degree = cls.homogeneous_weight()
    s_value = eng.s_number(cls)
    certificates = {
        "w_member": eng.is_w_class(cls),
        "su_member": eng.is_su_class(cls),
        "novikov_odd_part": novikov_check(degree, s_value) if s_value.denominator == 1 else False,
    }
    return GeneratorRecord(kind=kind, degree=degree, cls=cls, s_value=s_value, certificates=certificates)


def e_generator(ctx: Context, m: int) -> GeneratorRecord:
    """e_m = sum lambda_i alpha(i, m+1-i); |s_m(e_m)| = d(m)."""
    if not 1 <= m <= ctx.cap:
        raise DomainError(f"e_m needs 1 <= m <= cap, got {m}")
    combo = euclid_combo(m)
    cls = ctx.ring.zero()
    for i in combo.indices:
        cls = cls + ctx.alpha(i, m + 1 - i).scale(combo.lambdas[i])
    return _record(ctx, "e_m", cls)


def z_generator(ctx: Context, k: int) -> GeneratorRecord:
    """z_k = -sum_{i=2}^{k-1} lambda_i alpha(i, k+1-i); s_k(z_k) = d(k)d(k-1)."""
    if not 3 <= k <= ctx.cap:
        raise DomainError(f"z_k needs 3 <= k <= cap, got {k}")
    combo = euclid_combo(k, inner=True)
    # The summation range 2..k-1 contains C(k+1,k-1) = C(k+1,2), so the gcd
    # certificate over 2..k-2 extends with lambda_{k-1} = 0.
    cls = ctx.ring.zero()
    for i in combo.indices:
        cls = cls + ctx.alpha(i, k + 1 - i).scale(combo.lambdas[i])
    return _record(ctx, "z_k", -cls)


def _ideal_tilde_generators(ctx: Context, upto: int) -> list[GradedPoly]:
    """Generators of the ideal (y2, z_3 .. z_upto)."""
    y2, _, _ = su_low_generators(ctx)
    gens = [y2]
    for k in range(3, upto + 1):
        gens.append(z_generator(ctx, k).cls)
    return gens


def w_generator(ctx: Context, k: int) -> GeneratorRecord:
    """x_k in W with s_k(x_k) = d(k)d(k-1), equal to z_k modulo (y2, z_3..z_{k-1}).

    Also emits x_1 = P1 for k = 1.
    """
    if k == 1:
        return _record(ctx, "x_k", ctx.ring.gen("P1"))
    if not 3 <= k <= ctx.cap:
        raise DomainError(f"x_k needs k = 1 or 3 <= k <= cap, got {k}")
    from .ideals import ideal_degree_vectors  # local import to avoid a cycle

    eng = ctx.chern
    z = z_generator(ctx, k).cls
    correction_span = ideal_degree_vectors(ctx, _ideal_tilde_generators(ctx, k - 1), k)
    constraints = eng.constraint_rows(k, min_ones=2)
    z_vec = eng.class_to_vector(z, k)
    if constraints and correction_span:
        matrix = [
            [sum(row[t] * v[t] for t in range(len(v))) for v in correction_span]
            for row in constraints
        ]
        rhs = [-sum(row[t] * z_vec[t] for t in range(len(z_vec))) for row in constraints]
        coeffs = solve(matrix, rhs)
        if coeffs is None:
            raise ConstructionError(
                f"no correction in the degree-{k} ideal piece makes z_{k} c1^2-free"
            )
        vec = list(z_vec)
        for c, v in zip(coeffs, correction_span):
            for t in range(len(vec)):
                vec[t] = vec[t] + c * v[t]
        x = eng.vector_to_class(vec, k)
    else:
        x = z
    record = _record(ctx, "x_k", x)
    expected = Q(d_of(k) * d_of(k - 1))
    if record.s_value != expected:
        raise ConstructionError(
            f"s_{k}(x_{k}) = {record.s_value}, expected {expected}; convention discrepancy"
        )
    if not record.certificates["w_member"]:
        raise ConstructionError(f"x_{k} failed the c1^2-vanishing check")
    return record


def su_low_generators(ctx: Context):
    """(y2, y3, y4) = (P2 - 9/8 P1^2, -alpha(2,2), -alpha(2,3) + 1/2 alpha(2,2) P1).

    The y4 correction coefficient is pinned by the SU condition: with our
    alpha signs, 1/2 is the unique multiple of alpha(2,2) P1 that kills the
    c1 c3 number of -alpha(2,3).
    """
    if ctx.cap < 4:
        raise DomainError("the low SU generators need cap >= 4")
    ring = ctx.ring
    p1, p2 = ring.gen("P1"), ring.gen("P2")
    y2 = p2 - (p1 * p1).scale(Q(9, 8))
    y3 = -ctx.alpha(2, 2)
    y4 = -ctx.alpha(2, 3) + (ctx.alpha(2, 2) * p1).scale(Q(1, 2))
    eng = ctx.chern
    for name, y in (("y2", y2), ("y3", y3), ("y4", y4)):
        if not eng.is_su_class(y):
            raise ConstructionError(f"{name} failed the SU membership check")
    return y2, y3, y4


def su_generator(ctx: Context, i: int) -> GeneratorRecord:
    """A degree-i SU class with s_i = d(i)d(i-1) (odd i) or 2 d(i)d(i-1) (even i).

    Deterministic: first solution over the fixed SU basis.
    """
    if not 5 <= i <= ctx.cap:
        raise DomainError(f"the SU analogs need 5 <= i <= cap, got {i}")
    eng = ctx.chern
    basis = eng.su_basis(i)
    target = Q(d_of(i) * d_of(i - 1) * (1 if i % 2 else 2))
    s_row = [eng.s_number(b) for b in basis]
    coeffs = solve([s_row], [target])
    if coeffs is None:
        raise ConstructionError(f"no SU class of degree {i} with s = {target}")
    cls = ctx.ring.zero()
    for c, b in zip(coeffs, basis):
        if c != 0:
            cls = cls + b.scale(c)
    record = _record(ctx, "y_i", cls)
    if not record.certificates["su_member"]:
        raise ConstructionError(f"constructed degree-{i} class left the SU subspace")
    return record


def _odd_prime_power(n: int) -> int | None:
    """p when n is a power of an odd prime p, else None."""
    if n < 3 or n % 2 == 0:
        return None
    p = 3
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else None
        p += 2
    return n  # n itself is an odd prime


def novikov_check(n: int, s) -> bool:
    """Polynomial-generator criterion on the odd part of the s-number."""
    s = Q(s)
    if s.denominator != 1:
        raise DomainError("s-number must be an integer for the criterion")
    v = abs(int(s.numerator))
    if v == 0:
        return False  # zero s-number can never certify a generator
    odd = v
    while odd % 2 == 0:
        odd //= 2
    p = _odd_prime_power(n) or _odd_prime_power(n + 1)
    return odd == (p if p is not None else 1)
