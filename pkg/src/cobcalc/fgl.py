"""Formal group laws: the universal law from its logarithm, coefficient
extraction, invariant form, and specialization along graded substitutions.

Sign convention, fixed once: log(x) = x + sum_n Pn x^{n+1}/(n+1).  Every
derived sign (alpha_11 = -P1, s-numbers of the alpha's, ...) follows from
this choice and is recorded by the verification suite's convention ledger.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConfigError, DomainError
from .rationals import Q
from .ring import GradedPoly, GradedRing, mu_ring
from .series import BiSeries, Series1

__all__ = [
    "FormalGroupLaw",
    "mishchenko_log",
    "universal_fgl",
    "Substitution",
    "specialize_fgl",
    "associativity_defect",
]


def mishchenko_log(ring: GradedRing, order: int | None = None) -> Series1:
    """x + sum_{n>=1} Pn x^{n+1}/(n+1), truncated after x^order."""
    if order is None:
        order = ring.cap + 1
    coeffs = [ring.zero(), ring.one()]
    for n in range(1, order):
        name = f"P{n}"
        gen = ring.gen(name) if name in ring.names else ring.zero()
        coeffs.append(gen.scale(Q(1, n + 1)))
    return Series1(ring, coeffs, order)


@dataclass(frozen=True)
class FormalGroupLaw:
    """A validated formal group law together with derived data.

    w(x) = 1 + sum alpha_1i x^i is the invariant form, and
    beta(x) = (w'(x) - w'(0)) / (2x).
    """

    F: BiSeries
    origin: str = "custom"
    logarithm: Series1 | None = None
    w: Series1 = field(init=False)
    beta: Series1 = field(init=False)

    def __post_init__(self):
        self._validate()
        object.__setattr__(self, "w", self._invariant_form())
        object.__setattr__(self, "beta", self._beta())

    @property
    def ring(self) -> GradedRing:
        return self.F.ring

    @property
    def order(self) -> int:
        return self.F.order

    def _validate(self):
        F = self.F
        ring = F.ring
        # Unit laws, exact.
        for (i, j), c in F.terms.items():
            if j == 0 and not (i == 1 and c == ring.one()):
                raise DomainError(f"unit law violated: x^{i}y^0 coefficient {c.to_text()}")
            if i == 0 and not (j == 1 and c == ring.one()):
                raise DomainError(f"unit law violated: x^0y^{j} coefficient {c.to_text()}")
        if F.terms.get((1, 0)) != ring.one() or F.terms.get((0, 1)) != ring.one():
            raise DomainError("unit law violated: linear coefficients must be 1")
        # Commutativity, exact.
        if F.swap() != F:
            raise DomainError("formal group law is not commutative")
        # Grading (trivial over rings without generators).
        if ring.nvars:
            F.check_fgl_weights()
        # Associativity certificate: the logarithm linearizes F.  When a
        # logarithm is supplied, log(F(x,y)) = log(x) + log(y) up to the
        # truncation order implies F(F(x,y),z) = F(x,F(y,z)) there; the
        # direct three-variable check is available as associativity_defect.
        if self.logarithm is not None:
            lhs = self.F.compose_series(self.logarithm)
            rhs = BiSeries.from_series_x(self.logarithm, self.order) + BiSeries.from_series_y(
                self.logarithm, self.order
            )
            if lhs != rhs:
                raise DomainError("logarithm does not linearize the group law")

    def _invariant_form(self) -> Series1:
        F, ring = self.F, self.ring
        coeffs = [F.terms.get((i, 1), ring.zero()) for i in range(self.order)]
        return Series1(ring, coeffs, self.order)

    def _beta(self) -> Series1:
        w, ring = self.w, self.ring
        # (w'(x) - w'(0)) / (2x): coefficient of x^k is (k+2) w_{k+2} / 2.
        coeffs = [
            w.coeffs[k + 2].scale(Q(k + 2, 2)) if k + 2 <= w.order else ring.zero()
            for k in range(self.order - 1)
        ]
        return Series1(ring, coeffs, self.order)

    # -- coefficient access -------------------------------------------------

    def alpha(self, i: int, j: int) -> GradedPoly:
        if i < 0 or j < 0 or i + j > self.order:
            raise DomainError(f"alpha({i},{j}) is beyond the truncation order {self.order}")
        return self.F.terms.get((i, j), self.ring.zero())

    def alpha_table(self) -> dict[tuple[int, int], GradedPoly]:
        return dict(self.F.terms)

    def exponent(self) -> Series1:
        """Compositional inverse of the logarithm (requires one)."""
        if self.logarithm is None:
            raise DomainError("no logarithm attached to this formal group law")
        return self.logarithm.reversion()

    def inverse_series(self) -> Series1:
        """The formal inverse i(x) with F(x, i(x)) = 0 up to the order."""
        ring, n = self.ring, self.order
        if self.logarithm is not None:
            inv = self.exponent().compose(-self.logarithm)
        else:
            inv = Series1(ring, [ring.zero(), -ring.one()], n)
            for m in range(2, n + 1):
                defect = self.F.eval_series(Series1.x(ring, n), inv).coeffs[m]
                coeffs = list(inv.coeffs)
                coeffs[m] = coeffs[m] - defect
                inv = Series1(ring, coeffs, n)
        residual = self.F.eval_series(Series1.x(ring, n), inv)
        if not residual.is_zero():
            raise DomainError("formal inverse construction failed")
        return inv


def universal_fgl(cap: int) -> FormalGroupLaw:
    """The universal law exp(log x + log y) over Q[P1..Pcap]."""
    if cap < 1:
        raise ConfigError("cap must be at least 1")
    ring = mu_ring(cap)
    order = cap + 1
    log = mishchenko_log(ring, order)
    exp = log.reversion()
    L = BiSeries.from_series_x(log, order) + BiSeries.from_series_y(log, order)
    F = L.compose_series(exp)
    return FormalGroupLaw(F=F, origin="universal", logarithm=log)


def associativity_defect(fgl: FormalGroupLaw):
    """Direct three-variable check of F(F(x,y),z) = F(x,F(y,z)).

    Returns None when associativity holds up to the truncation order, else
    the exponent triple (i, j, k) of the first discrepancy.  Cubic cost;
    intended for spot checks and custom laws without a logarithm.
    """
    F = fgl.F
    ring, order = F.ring, F.order

    def tri_mul(a: dict, b: dict) -> dict:
        out: dict = {}
        for ea, ca in a.items():
            da = sum(ea)
            for eb, cb in b.items():
                if da + sum(eb) > order:
                    continue
                key = tuple(x + y for x, y in zip(ea, eb))
                prod = ca * cb
                if prod.is_zero():
                    continue
                acc = out.get(key)
                acc = prod if acc is None else acc + prod
                if acc.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = acc
        return out

    def tri_eval(a: dict, b: dict) -> dict:
        # F evaluated at two tri-variate arguments with zero constant term.
        pa = [{(0, 0, 0): ring.one()}]
        pb = [{(0, 0, 0): ring.one()}]
        for _ in range(order):
            pa.append(tri_mul(pa[-1], a))
            pb.append(tri_mul(pb[-1], b))
        out: dict = {}
        for (i, j), c in F.terms.items():
            for e, q in tri_mul(pa[i], pb[j]).items():
                prod = c * q
                if prod.is_zero():
                    continue
                acc = out.get(e)
                acc = prod if acc is None else acc + prod
                if acc.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = acc
        return out

    x = {(1, 0, 0): ring.one()}
    y = {(0, 1, 0): ring.one()}
    z = {(0, 0, 1): ring.one()}
    fxy = {(i, j, 0): c for (i, j), c in F.terms.items()}
    fyz = {(0, i, j): c for (i, j), c in F.terms.items()}
    lhs = tri_eval(fxy, z)
    rhs = tri_eval(x, fyz)
    for key in sorted(set(lhs) | set(rhs), key=lambda e: (sum(e), e)):
        if lhs.get(key, ring.zero()) != rhs.get(key, ring.zero()):
            return key
    return None


class Substitution:
    """A graded ring map sending each source generator to a homogeneous
    element of the same weight in a target GradedRing."""

    def __init__(self, source: GradedRing, target: GradedRing, images: dict[str, GradedPoly]):
        for name in images:
            if name not in source.names:
                raise ConfigError(f"{name!r} is not a source generator")
        for name, w in zip(source.names, source.weights):
            img = images.get(name)
            if img is None:
                raise ConfigError(f"missing image for generator {name}")
            if not img.is_zero() and img.homogeneous_weight() != w:
                raise DomainError(
                    f"image of {name} must be homogeneous of weight {w}"
                )
            if img.ring != target:
                raise ConfigError(f"image of {name} lives in the wrong ring")
        self.source = source
        self.target = target
        self.images = dict(images)

    def apply_poly(self, p: GradedPoly) -> GradedPoly:
        if p.ring != self.source:
            raise ConfigError("polynomial not in the substitution's source ring")
        out = self.target.zero()
        cache: dict[tuple[int, int], GradedPoly] = {}
        for exps, q in p.terms.items():
            term = self.target.one()
            for idx, e in enumerate(exps):
                if e == 0:
                    continue
                key = (idx, e)
                power = cache.get(key)
                if power is None:
                    power = self.images[self.source.names[idx]] ** e
                    cache[key] = power
                term = term * power
            out = out + term.scale(q)
        return out

    def apply_series(self, s: Series1) -> Series1:
        return Series1(self.target, [self.apply_poly(c) for c in s.coeffs], s.order)

    def apply_biseries(self, s: BiSeries) -> BiSeries:
        return BiSeries(
            self.target, {ij: self.apply_poly(c) for ij, c in s.terms.items()}, s.order
        )

    def to_json(self) -> dict:
        return {name: img.to_text() for name, img in sorted(self.images.items())}


def specialize_fgl(fgl: FormalGroupLaw, sub: Substitution, origin: str = "custom") -> FormalGroupLaw:
    """Coefficient-wise image of an FGL; axioms are re-checked in the target."""
    F = sub.apply_biseries(fgl.F)
    log = sub.apply_series(fgl.logarithm) if fgl.logarithm is not None else None
    return FormalGroupLaw(F=F, origin=origin, logarithm=log)
