"""Specializations of the universal formal group law.

abel_eliminate kills every alpha_ij with i, j >= 2, leaving two free
parameters of weights 1 and 2.  buchstaber_eliminate kills the A_ij
(i, j >= 3) of A(x,y) = F(x,y) (x w(y) - y w(x)), leaving four free
parameters.  krichever_form_check verifies the closed two-variable form
built from the invariant form w and beta; hoehn_solve produces the genus
whose exponent f makes h = f'/f satisfy (h')^2 = quartic(h), and
krichever_params_of recovers the quartic's coefficients from a law.
phi_w is the genus on W that kills the degree >= 5 generators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .context import Context
from .errors import ConstructionError, DomainError, EliminationError
from .fgl import FormalGroupLaw, Substitution, specialize_fgl
from .linalg import rank, solve
from .partitions import restricted_partitions
from .rationals import Q
from .ring import GradedPoly, GradedRing
from .series import BiSeries, Series1

__all__ = [
    "abel_eliminate",
    "abel_fgl",
    "abel_relation_generators",
    "BuchstaberData",
    "buchstaber_eliminate",
    "KricheverFormReport",
    "krichever_form_check",
    "HoehnGenus",
    "hoehn_solve",
    "KricheverParamsReport",
    "krichever_params_of",
    "WStarAlgebra",
    "get_wstar",
    "phi_w",
]


# -- degree-by-degree elimination helpers ------------------------------------


def _apply_partial(poly: GradedPoly, source: GradedRing, images: dict, target: GradedRing) -> GradedPoly:
    """Substitute generator images; every generator occurring must be mapped."""
    out = target.zero()
    for exps, q in poly.terms.items():
        term = target.one()
        for idx, e in enumerate(exps):
            if e == 0:
                continue
            name = source.names[idx]
            img = images.get(name)
            if img is None:
                raise EliminationError(f"generator {name} used before it was eliminated")
            term = term * img**e
        out = out + term.scale(q)
    return out


def _split_pivot(ctx: Context, poly: GradedPoly, n: int):
    """Write a weight-n value as c * Pn + rest(P1..P{n-1})."""
    exps = [0] * ctx.ring.nvars
    exps[n - 1] = 1
    exps = tuple(exps)
    c = poly.terms.get(exps, Q(0))
    rest = poly - ctx.ring.monomial(exps, c)
    return Q(c), rest


def abel_eliminate(ctx: Context) -> Substitution:
    """Substitution fixing P1, P2 and killing every alpha_ij with i, j >= 2.

    Degree n is solved from alpha(2, n-1); all remaining alpha_ij of the
    same weight are then checked to vanish.
    """
    if ctx.cap < 3:
        raise DomainError("abel elimination needs cap >= 3")
    target = GradedRing([("P1", 1), ("P2", 2)], ctx.cap)
    images = {"P1": target.gen("P1"), "P2": target.gen("P2")}
    for n in range(3, ctx.cap + 1):
        pivot = ctx.alpha(2, n - 1)
        c, rest = _split_pivot(ctx, pivot, n)
        if c == 0:
            raise EliminationError(f"elimination blocked: alpha(2,{n - 1}) has no P{n} term")
        images[f"P{n}"] = _apply_partial(rest, ctx.ring, images, target).scale(-1 / c)
    sub = Substitution(ctx.ring, target, images)
    for i in range(2, ctx.cap + 1):
        for j in range(i, ctx.cap + 2 - i):
            if not sub.apply_poly(ctx.alpha(i, j)).is_zero():
                raise EliminationError(
                    f"over-determined inconsistency: alpha({i},{j}) does not vanish"
                )
    return sub


def abel_fgl(ctx: Context) -> FormalGroupLaw:
    return specialize_fgl(ctx.fgl, abel_eliminate(ctx), origin="abel")


def abel_relation_generators(ctx: Context) -> list[GradedPoly]:
    """The alpha_ij with i, j >= 2 of weight <= cap (each unordered pair once)."""
    out = []
    for i in range(2, ctx.cap + 1):
        for j in range(i, ctx.cap + 2 - i):
            out.append(ctx.alpha(i, j))
    return out


@dataclass(frozen=True)
class BuchstaberData:
    A: BiSeries
    entries: dict
    substitution: Substitution
    fgl: FormalGroupLaw

    def entry(self, i: int, j: int) -> GradedPoly:
        return self.entries.get((i, j), self.A.ring.zero())

    def relation_generators(self) -> list[GradedPoly]:
        """The nonzero A_ij with i, j >= 3 of weight <= cap, each once."""
        out = []
        for (i, j), c in sorted(self.entries.items()):
            if i >= 3 and j >= 3 and i <= j and not c.is_zero():
                if i + j - 2 <= self.A.ring.cap:
                    out.append(c)
        return out


def _universal_a_series(ctx: Context) -> BiSeries:
    """A(x,y) = F(x,y) (x w(y) - y w(x)), exact through total degree cap + 2."""
    order = ctx.cap + 2
    ring = ctx.ring
    F = BiSeries(ring, dict(ctx.fgl.F.terms), order)
    w = ctx.fgl.w
    xw_y = BiSeries(ring, {(1, k): c for k, c in enumerate(w.coeffs)}, order)
    yw_x = BiSeries(ring, {(k, 1): c for k, c in enumerate(w.coeffs)}, order)
    # The bracket has valuation 1, so F's unknown degree-(cap+2) tail cannot
    # reach total degree <= cap + 2 in the product.
    return F * (xw_y - yw_x)


def buchstaber_eliminate(ctx: Context) -> BuchstaberData:
    """Substitution fixing P1..P4 and killing every A_ij with i, j >= 3."""
    if ctx.cap < 5:
        raise DomainError("buchstaber elimination needs cap >= 5")
    A = _universal_a_series(ctx)
    entries = dict(A.terms)
    for (i, j), c in entries.items():
        opposite = entries.get((j, i), ctx.ring.zero())
        if not (c + opposite).is_zero():
            raise EliminationError(f"antisymmetry failure at A({i},{j})")
    target = GradedRing([(f"P{n}", n) for n in range(1, 5)], ctx.cap)
    images = {f"P{n}": target.gen(f"P{n}") for n in range(1, 5)}
    for n in range(5, ctx.cap + 1):
        pivot = entries.get((3, n - 1), ctx.ring.zero())
        c, rest = _split_pivot(ctx, pivot, n)
        if c == 0:
            raise EliminationError(f"elimination blocked: A(3,{n - 1}) has no P{n} term")
        images[f"P{n}"] = _apply_partial(rest, ctx.ring, images, target).scale(-1 / c)
    sub = Substitution(ctx.ring, target, images)
    for (i, j), c in sorted(entries.items()):
        if i >= 3 and j >= 3 and not sub.apply_poly(c).is_zero():
            raise EliminationError(f"over-determined inconsistency: A({i},{j}) does not vanish")
    return BuchstaberData(
        A=A, entries=entries, substitution=sub, fgl=specialize_fgl(ctx.fgl, sub, origin="buchstaber")
    )


# -- Krichever functional form ------------------------------------------------


@dataclass(frozen=True)
class KricheverFormReport:
    ok: bool
    first_failure: tuple[int, int] | None
    residual: str | None
    checked_order: int
    failure_degree: int | None = None

    def to_json(self) -> dict:
        return {
            "pass": self.ok,
            "first_failure": list(self.first_failure) if self.first_failure else None,
            "residual": self.residual,
            "checked_order": self.checked_order,
            "failure_degree": self.failure_degree,
        }


def krichever_form_check(fgl: FormalGroupLaw) -> KricheverFormReport:
    """Check F = x w(y) + y w(x) - w'(0) xy + x^2 y^2 (wb(x) - wb(y)) / (x w(y) - y w(x)).

    Equivalently, with N = F - low terms and Q = N / x^2 y^2:
    Q (x w(y) - y w(x)) = w(x) beta(x) - w(y) beta(y).
    """
    ring, order = fgl.ring, fgl.order
    w, beta = fgl.w, fgl.beta
    w1 = w.coeffs[1]  # w'(0)
    xw_y = BiSeries(ring, {(1, k): c for k, c in enumerate(w.coeffs)}, order)
    yw_x = BiSeries(ring, {(k, 1): c for k, c in enumerate(w.coeffs)}, order)
    low = xw_y + yw_x - BiSeries(ring, {(1, 1): w1}, order)
    N = fgl.F - low
    for (i, j), c in sorted(N.terms.items(), key=lambda kv: (sum(kv[0]), kv[0])):
        if i < 2 or j < 2:
            return KricheverFormReport(
                False, (i, j), c.to_text(), order, failure_degree=c.homogeneous_weight()
            )
    checked = order - 4
    if checked < 0:
        raise DomainError("truncation order too small for the functional-form check")
    Qs = BiSeries(ring, {(i - 2, j - 2): c for (i, j), c in N.terms.items()}, checked)
    bracket = BiSeries(ring, dict((xw_y - yw_x).terms), checked)
    lhs = Qs * bracket
    wb = w * beta
    rhs = BiSeries(ring, {(k, 0): c for k, c in enumerate(wb.coeffs)}, checked) - BiSeries(
        ring, {(0, k): c for k, c in enumerate(wb.coeffs)}, checked
    )
    diff = lhs - rhs
    for (i, j), c in sorted(diff.terms.items(), key=lambda kv: (sum(kv[0]), kv[0])):
        return KricheverFormReport(
            False, (i, j), c.to_text(), checked, failure_degree=c.homogeneous_weight()
        )
    return KricheverFormReport(True, None, None, checked)


# -- the quartic ODE genus -----------------------------------------------------


def _h_regular_part(f: Series1) -> Series1:
    """u with f'/f = 1/x + u, exact through index f.order - 2."""
    ring, n = f.ring, f.order
    if not f.coeffs[0].is_zero() or f.coeffs[1] != ring.one():
        raise DomainError("exponent series must start with x")
    fprime = f.derivative()
    # x f' - f, then shift down by x^2 and divide by f/x.
    xfp = Series1(ring, [ring.zero()] + list(fprime.coeffs[:-1]), n)
    diff = xfp - f
    shifted = Series1(ring, list(diff.coeffs[2:]), n - 2)
    fx = Series1(ring, list(f.coeffs[1:]), n - 2)
    return shifted * fx.inverse()


def _ode_basis(u: Series1):
    """The series multiplying 1, p1, p2, p3, p4 in x^4 S(h), h = 1/x + u."""
    ring, n = u.ring, u.order
    x = Series1.x(ring, n)
    one = Series1(ring, [ring.one()], n)
    u2 = u * u
    u3 = u2 * u
    u4 = u2 * u2
    x2, x3, x4 = x * x, x * x * x, (x * x) * (x * x)
    b0 = one + (x * u).scale(4) + (x2 * u2).scale(6) + (x3 * u3).scale(4) + x4 * u4
    b1 = x + (x2 * u).scale(3) + (x3 * u2).scale(3) + x4 * u3
    b2 = x2 + (x3 * u).scale(2) + x4 * u2
    b3 = x3 + x4 * u
    b4 = x4
    return b0, b1, b2, b3, b4


def _ode_lhs(u: Series1) -> Series1:
    """x^4 (h')^2 = 1 - 2 x^2 u' + x^4 (u')^2."""
    ring, n = u.ring, u.order
    up = u.derivative()
    x = Series1.x(ring, n)
    x2 = x * x
    one = Series1(ring, [ring.one()], n)
    return one - (x2 * up).scale(2) + (x2 * x2) * (up * up)


@dataclass(frozen=True)
class HoehnGenus:
    ring: GradedRing
    p: tuple[GradedPoly, GradedPoly, GradedPoly, GradedPoly]
    f: Series1
    u: Series1
    images: dict[int, GradedPoly]
    cap: int

    def logarithm(self) -> Series1:
        return self.f.reversion()

    def fgl(self) -> FormalGroupLaw:
        log = self.logarithm()
        order = self.cap + 1
        L = BiSeries.from_series_x(log, order) + BiSeries.from_series_y(log, order)
        return FormalGroupLaw(F=L.compose_series(self.f), origin="hoehn", logarithm=log)

    def to_json(self) -> dict:
        return {
            "p": [pi.to_text() for pi in self.p],
            "images": {f"P{n}": img.to_text() for n, img in sorted(self.images.items())},
            "residual_ok": True,
        }


def _coerce_p_values(p_values, cap: int):
    """Accept 4 rationals (trivial ring) or 4 GradedPoly in a shared ring."""
    if len(p_values) != 4:
        raise DomainError("exactly four quartic coefficients are required")
    if all(not isinstance(v, GradedPoly) for v in p_values):
        ring = GradedRing([], cap)
        return ring, tuple(ring.scalar(Q(v)) for v in p_values)
    ring = None
    for v in p_values:
        if isinstance(v, GradedPoly):
            ring = v.ring
            break
    out = []
    for i, v in enumerate(p_values):
        v = v if isinstance(v, GradedPoly) else ring.scalar(Q(v))
        if v.ring != ring:
            raise DomainError("quartic coefficients live in different rings")
        if not v.is_zero() and v.homogeneous_weight() != i + 1:
            raise DomainError(f"p{i + 1} must be homogeneous of weight {i + 1}")
        out.append(v)
    return ring, tuple(out)


def hoehn_symbolic_ring(cap: int) -> GradedRing:
    return GradedRing([("p1", 1), ("p2", 2), ("p3", 3), ("p4", 4)], cap)


def hoehn_solve(p_values, cap: int) -> HoehnGenus:
    """Solve (h')^2 = p4 + p3 h + p2 h^2 + p1 h^3 + h^4 for the exponent f.

    h = f'/f has a simple pole 1/x; the regular part u is solved order by
    order (the pivot at order m is the nonzero scalar -(2m+2)), then
    f = x exp(integral of u) and the residual is re-verified.
    """
    ring, p = _coerce_p_values(p_values, cap)
    order = cap + 1
    u_coeffs = [ring.zero() for _ in range(order + 1)]
    for m in range(1, cap + 1):
        u = Series1(ring, u_coeffs, order)
        b0, b1, b2, b3, b4 = _ode_basis(u)
        rhs = b0 + b1.scale_poly(p[0]) + b2.scale_poly(p[1]) + b3.scale_poly(p[2]) + b4.scale_poly(p[3])
        residual = _ode_lhs(u) - rhs
        r0 = residual.coeffs[m]
        # residual_m = r0 - (2m + 2) u_{m-1}; u_{m-1} is still zero here.
        u_coeffs[m - 1] = r0.scale(Q(1, 2 * m + 2))
    u = Series1(ring, u_coeffs, order)
    # f = x exp(integral u); build exp by composing the exponential series.
    integral = u.integrate()
    exp_series = Series1(
        ring, [ring.scalar(_inv_factorial(k)) for k in range(order + 1)], order
    )
    f = Series1.x(ring, order) * exp_series.compose(integral)
    # Independent residual re-verification from f itself.
    u_check = _h_regular_part(f)
    u_check = Series1(ring, list(u_check.coeffs), order)
    b0, b1, b2, b3, b4 = _ode_basis(u_check)
    residual = _ode_lhs(u_check) - (
        b0 + b1.scale_poly(p[0]) + b2.scale_poly(p[1]) + b3.scale_poly(p[2]) + b4.scale_poly(p[3])
    )
    for m in range(0, cap + 1):
        if not residual.coeffs[m].is_zero():
            raise ConstructionError(f"quartic ODE residual nonzero at order {m}")
    log = f.reversion()
    images = {n: log.coeffs[n + 1].scale(n + 1) for n in range(1, cap + 1)}
    return HoehnGenus(ring=ring, p=p, f=f, u=u, images=images, cap=cap)


def _inv_factorial(k: int):
    out = Q(1)
    for i in range(2, k + 1):
        out /= i
    return out


@dataclass(frozen=True)
class KricheverParamsReport:
    ok: bool
    p: tuple | None
    first_failing_order: int | None

    def to_json(self) -> dict:
        return {
            "pass": self.ok,
            "p": [pi.to_text() for pi in self.p] if self.p else None,
            "first_failing_order": self.first_failing_order,
        }


def krichever_params_of(fgl: FormalGroupLaw) -> KricheverParamsReport:
    """Fit quartic coefficients to the exponent of a law, then verify.

    The four coefficients are read off triangularly from the lowest orders of
    x^4 ((h')^2 - S(h)); the remaining orders up to the truncation are then
    checked, and the first obstruction order is reported on failure.
    """
    ring, order = fgl.ring, fgl.order
    if fgl.logarithm is not None:
        log = fgl.logarithm
    else:
        log = fgl.w.inverse().integrate()
    f = log.reversion()
    u = Series1(ring, list(_h_regular_part(f).coeffs), order)
    b0, b1, b2, b3, b4 = _ode_basis(u)
    lhs = _ode_lhs(u) - b0
    p = []
    remainder = lhs
    for k, basis in enumerate((b1, b2, b3, b4), start=1):
        pk = remainder.coeffs[k]
        p.append(pk)
        remainder = remainder - basis.scale_poly(pk)
    p = tuple(p)
    # u is exact through index order - 2, so the residual is exact through
    # x^{order - 1}.
    for m in range(0, order):
        if not remainder.coeffs[m].is_zero():
            return KricheverParamsReport(False, p, m)
    return KricheverParamsReport(True, p, None)


# -- the genus on W -------------------------------------------------------------


class WStarAlgebra:
    """The *-monomial basis of W on the generators x1, x3, x4, ..., xcap."""

    def __init__(self, ctx: Context):
        from .generators import w_generator

        self.ctx = ctx
        self.xgens = {1: w_generator(ctx, 1).cls}
        for k in range(3, ctx.cap + 1):
            self.xgens[k] = w_generator(ctx, k).cls
        self.image_ring = GradedRing([("X1", 1), ("X3", 3), ("X4", 4)], ctx.cap)
        self._monomial_cache: dict = {}

    def monomials(self, n: int):
        """(partition, class) pairs for all star monomials of degree n."""
        cached = self._monomial_cache.get(n)
        if cached is not None:
            return cached
        eng = self.ctx.chern
        parts = tuple(k for k in sorted(self.xgens) if k <= n) or (1,)
        out = []
        for lam in restricted_partitions(n, parts):
            cls = self.ctx.ring.scalar(1) if n == 0 else None
            for part in lam:
                cls = self.xgens[part] if cls is None else eng.star(cls, self.xgens[part])
            out.append((lam, cls))
        self._monomial_cache[n] = out
        return out

    def spans(self, n: int) -> bool:
        """Do the degree-n star monomials span the degree-n piece of W?"""
        eng = self.ctx.chern
        vectors = [eng.class_to_vector(cls, n) for _, cls in self.monomials(n)]
        return rank(vectors) == len(eng.w_basis(n))

    def expand(self, z: GradedPoly) -> dict[tuple[int, ...], Q]:
        """Coordinates of a W class over the star-monomial basis."""
        eng = self.ctx.chern
        if z.is_zero():
            return {}
        n = z.homogeneous_weight()
        if n == 0:
            return {(): z.constant_term()}
        monos = self.monomials(n)
        columns = [eng.class_to_vector(cls, n) for _, cls in monos]
        target = eng.class_to_vector(z, n)
        matrix = [[col[t] for col in columns] for t in range(len(target))]
        coeffs = solve(matrix, target)
        if coeffs is None:
            raise ConstructionError(
                f"star monomials fail to span the degree-{n} piece of W"
            )
        return {lam: c for (lam, _), c in zip(monos, coeffs) if c != 0}

    def phi(self, z: GradedPoly) -> GradedPoly:
        """Expand in star monomials, kill every part >= 5, rename to X's."""
        if not self.ctx.chern.is_w_class(z):
            raise DomainError("phi_w is only defined on W classes")
        out = self.image_ring.zero()
        for lam, c in self.expand(z).items():
            if any(part >= 5 for part in lam):
                continue
            exps = [lam.count(1), lam.count(3), lam.count(4)]
            out = out + self.image_ring.monomial(tuple(exps), c)
        return out


_WSTAR_CACHE: dict[int, WStarAlgebra] = {}


def get_wstar(ctx: Context) -> WStarAlgebra:
    algebra = _WSTAR_CACHE.get(id(ctx))
    if algebra is None or algebra.ctx is not ctx:
        algebra = WStarAlgebra(ctx)
        _WSTAR_CACHE[id(ctx)] = algebra
    return algebra


def phi_w(ctx: Context, z: GradedPoly) -> GradedPoly:
    return get_wstar(ctx).phi(z)
