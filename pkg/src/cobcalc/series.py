"""Truncated power series over a GradedRing.

Series1 is univariate (coefficients indexed by the power of x, kept through
x^order); BiSeries is bivariate with coefficients kept for total degree
i + j <= order.  The default order everywhere is cap + 1, which is exactly
what the formal-group-law constructions need.
"""

from __future__ import annotations

from .errors import ConfigError, DomainError, NotDivisibleError
from .rationals import Q
from .ring import GradedPoly, GradedRing

__all__ = ["Series1", "BiSeries", "biseries_divide"]


def _check_compat(a, b):
    if a.ring != b.ring or a.order != b.order:
        raise ConfigError("series operands disagree in ring or truncation order")


class Series1:
    """sum_k c_k x^k with GradedPoly coefficients, truncated after x^order."""

    __slots__ = ("ring", "coeffs", "order")

    def __init__(self, ring: GradedRing, coeffs, order: int):
        if order < 0:
            raise ConfigError("order must be non-negative")
        coeffs = list(coeffs)
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        while len(coeffs) < order + 1:
            coeffs.append(ring.zero())
        self.ring = ring
        self.coeffs = tuple(coeffs)
        self.order = order

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, ring, order):
        return cls(ring, [], order)

    @classmethod
    def x(cls, ring, order):
        return cls(ring, [ring.zero(), ring.one()], order)

    @classmethod
    def from_scalars(cls, ring, scalars, order):
        return cls(ring, [ring.scalar(q) for q in scalars], order)

    # -- basics ----------------------------------------------------------

    def __getitem__(self, k: int) -> GradedPoly:
        if 0 <= k <= self.order:
            return self.coeffs[k]
        raise DomainError(f"coefficient x^{k} beyond truncation order {self.order}")

    def __eq__(self, other):
        return (
            isinstance(other, Series1)
            and self.ring == other.ring
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def valuation(self):
        """Index of the first nonzero coefficient, or None for the zero series."""
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                return k
        return None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        _check_compat(self, other)
        return Series1(self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other):
        _check_compat(self, other)
        return Series1(self.ring, [a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self):
        return Series1(self.ring, [-c for c in self.coeffs], self.order)

    def scale(self, q):
        return Series1(self.ring, [c.scale(q) for c in self.coeffs], self.order)

    def scale_poly(self, p):
        """Multiply every coefficient by a ring element."""
        return Series1(self.ring, [c * p for c in self.coeffs], self.order)

    def __mul__(self, other):
        if not isinstance(other, Series1):
            return self.scale(other)
        _check_compat(self, other)
        n = self.order
        out = [self.ring.zero() for _ in range(n + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(0, n + 1 - i):
                b = other.coeffs[j]
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return Series1(self.ring, out, n)

    __rmul__ = scale

    def derivative(self) -> Series1:
        """Term-by-term derivative; the top coefficient is no longer reliable
        and is truncated away (order drops by one, then re-padded)."""
        out = [self.coeffs[k + 1].scale(k + 1) for k in range(self.order)]
        return Series1(self.ring, out, self.order)

    def integrate(self) -> Series1:
        """Antiderivative with zero constant term."""
        out = [self.ring.zero()]
        for k in range(self.order):
            out.append(self.coeffs[k].scale(Q(1, k + 1)))
        return Series1(self.ring, out, self.order)

    # -- composition -----------------------------------------------------

    def compose(self, inner: Series1) -> Series1:
        """self(inner(x)); inner must have zero constant term."""
        _check_compat(self, inner)
        if not inner.coeffs[0].is_zero():
            raise DomainError("composition requires inner series with zero constant term")
        # Horner from the top coefficient down.
        ring, n = self.ring, self.order
        result = Series1(ring, [self.coeffs[n]], n)
        for k in range(n - 1, -1, -1):
            result = result * inner
            result = Series1(
                ring, [result.coeffs[0] + self.coeffs[k]] + list(result.coeffs[1:]), n
            )
        return result

    def reversion(self) -> Series1:
        """Compositional inverse g with g(self(x)) = x up to the order.

        Requires self = x + higher-order terms.
        """
        ring, n = self.ring, self.order
        if not self.coeffs[0].is_zero():
            raise DomainError("reversion requires zero constant term")
        if self.coeffs[1] != ring.one():
            raise DomainError("reversion requires unit linear coefficient (normalize first)")
        g = [ring.zero(), ring.one()] + [ring.zero()] * (n - 1)
        for m in range(2, n + 1):
            # With g_m = 0 the coefficient of x^m in g(self(x)) is the defect.
            partial = Series1(ring, g, n)
            defect = partial.compose(self).coeffs[m]
            g[m] = -defect
        return Series1(ring, g, n)

    def inverse(self) -> Series1:
        """Multiplicative inverse; requires constant coefficient 1."""
        ring, n = self.ring, self.order
        if self.coeffs[0] != ring.one():
            raise DomainError("series inverse requires constant coefficient 1")
        inv = [ring.one()] + [ring.zero()] * n
        for m in range(1, n + 1):
            acc = ring.zero()
            for k in range(1, m + 1):
                acc = acc + self.coeffs[k] * inv[m - k]
            inv[m] = -acc
        return Series1(ring, inv, n)

    # -- grading -----------------------------------------------------------

    def check_weights(self, offset: int):
        """Assert coefficient of x^k is homogeneous of weight k + offset (or 0)."""
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            w = c.homogeneous_weight()
            if w != k + offset:
                raise DomainError(
                    f"grading violation: coefficient of x^{k} has weight {w}, "
                    f"expected {k + offset}"
                )

    def to_text(self, var: str = "x") -> str:
        pieces = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = "1" if k == 0 else (var if k == 1 else f"{var}^{k}")
            pieces.append(f"({c.to_text()})*{mono}")
        return " + ".join(pieces) if pieces else "0"

    def __repr__(self):
        return f"<Series1 {self.to_text()} + O(x^{self.order + 1})>"


class BiSeries:
    """sum c_ij x^i y^j with GradedPoly coefficients, kept for i+j <= order."""

    __slots__ = ("ring", "terms", "order")

    def __init__(self, ring: GradedRing, terms: dict, order: int, clean: bool = True):
        if order < 0:
            raise ConfigError("order must be non-negative")
        if clean:
            terms = {
                ij: c
                for ij, c in terms.items()
                if ij[0] + ij[1] <= order and not c.is_zero()
            }
        self.ring = ring
        self.terms = terms
        self.order = order

    @classmethod
    def zero(cls, ring, order):
        return cls(ring, {}, order)

    @classmethod
    def from_series_x(cls, s: Series1, order: int) -> BiSeries:
        return cls(s.ring, {(k, 0): c for k, c in enumerate(s.coeffs) if k <= order}, order)

    @classmethod
    def from_series_y(cls, s: Series1, order: int) -> BiSeries:
        return cls(s.ring, {(0, k): c for k, c in enumerate(s.coeffs) if k <= order}, order)

    def coeff(self, i: int, j: int) -> GradedPoly:
        if i + j > self.order:
            raise DomainError(f"coefficient x^{i}y^{j} beyond truncation order {self.order}")
        return self.terms.get((i, j), self.ring.zero())

    def __eq__(self, other):
        return (
            isinstance(other, BiSeries)
            and self.ring == other.ring
            and self.order == other.order
            and self.terms == other.terms
        )

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        _check_compat(self, other)
        terms = dict(self.terms)
        for ij, c in other.terms.items():
            s = terms.get(ij)
            s = c if s is None else s + c
            if s.is_zero():
                terms.pop(ij, None)
            else:
                terms[ij] = s
        return BiSeries(self.ring, terms, self.order, clean=False)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return BiSeries(self.ring, {ij: -c for ij, c in self.terms.items()}, self.order, clean=False)

    def scale(self, q):
        q = Q(q)
        if q == 0:
            return BiSeries.zero(self.ring, self.order)
        return BiSeries(
            self.ring, {ij: c.scale(q) for ij, c in self.terms.items()}, self.order, clean=False
        )

    def scale_poly(self, p: GradedPoly) -> BiSeries:
        return BiSeries(
            self.ring, {ij: c * p for ij, c in self.terms.items()}, self.order
        )

    def __mul__(self, other):
        if not isinstance(other, BiSeries):
            return self.scale(other)
        _check_compat(self, other)
        order = self.order
        out: dict = {}
        for (ia, ja), ca in self.terms.items():
            da = ia + ja
            for (ib, jb), cb in other.terms.items():
                if da + ib + jb > order:
                    continue
                key = (ia + ib, ja + jb)
                prod = ca * cb
                if prod.is_zero():
                    continue
                acc = out.get(key)
                acc = prod if acc is None else acc + prod
                if acc.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = acc
        return BiSeries(self.ring, out, order, clean=False)

    __rmul__ = scale

    def swap(self) -> BiSeries:
        """Exchange the roles of x and y."""
        return BiSeries(
            self.ring, {(j, i): c for (i, j), c in self.terms.items()}, self.order, clean=False
        )

    def compose_series(self, outer: Series1) -> BiSeries:
        """outer(self); self must have zero constant term."""
        if outer.ring != self.ring or outer.order != self.order:
            raise ConfigError("series operands disagree in ring or truncation order")
        if (0, 0) in self.terms:
            raise DomainError("composition requires zero constant term")
        n = self.order
        result = BiSeries(self.ring, {(0, 0): outer.coeffs[n]}, n)
        for k in range(n - 1, -1, -1):
            result = result * self
            result = result + BiSeries(self.ring, {(0, 0): outer.coeffs[k]}, n)
        return result

    def eval_series(self, sx: Series1, sy: Series1) -> Series1:
        """Evaluate at univariate series (both with zero constant term)."""
        if sx.valuation() == 0 or sy.valuation() == 0:
            raise DomainError("evaluation requires zero constant terms")
        n = sx.order
        ring = self.ring
        # Precompute powers.
        px = [Series1(ring, [ring.one()], n)]
        py = [Series1(ring, [ring.one()], n)]
        for _ in range(self.order):
            px.append(px[-1] * sx)
            py.append(py[-1] * sy)
        out = Series1.zero(ring, n)
        for (i, j), c in self.terms.items():
            term = px[i] * py[j]
            out = out + Series1(ring, [c * t for t in term.coeffs], n)
        return out

    def check_fgl_weights(self):
        """Assert coefficient of x^i y^j is homogeneous of weight i + j - 1."""
        for (i, j), c in self.terms.items():
            w = c.homogeneous_weight()
            if w != i + j - 1:
                raise DomainError(
                    f"grading violation at x^{i}y^{j}: weight {w}, expected {i + j - 1}"
                )

    def to_text(self) -> str:
        pieces = []
        for (i, j), c in sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0])):
            mono = "*".join(
                p
                for p in (
                    "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                    "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
                )
                if p
            )
            pieces.append(f"({c.to_text()})" + (f"*{mono}" if mono else ""))
        return " + ".join(pieces) if pieces else "0"

    def __repr__(self):
        return f"<BiSeries order={self.order}>"


# -- exact division ------------------------------------------------------


def _divide_monomial(num: BiSeries, a: int, b: int) -> BiSeries:
    """Exact division by x^a y^b; error if any low coefficient survives."""
    out = {}
    for (i, j), c in num.terms.items():
        if i < a or j < b:
            raise NotDivisibleError(i + j, f"coefficient at x^{i}y^{j} blocks division by x^{a}y^{b}")
        out[(i - a, j - b)] = c
    return BiSeries(num.ring, out, num.order - a - b, clean=False)

def _divide_x_minus_y(num: BiSeries) -> BiSeries:
    """Exact division by (x - y), degree by degree."""
    order = num.order - 1
    out: dict = {}
    # num_{i+1,j} = q_{i,j} - q_{i+1,j-1}  =>  q_{i,j} = num_{i+1,j} + q_{i+1,j-1}
    for j in range(0, order + 1):
        for i in range(order - j, -1, -1):
            c = num.terms.get((i + 1, j), num.ring.zero())
            if j > 0:
                c = c + out.get((i + 1, j - 1), num.ring.zero())
            if not c.is_zero():
                out[(i, j)] = c
    # Remainder check: the pure-y column must match.
    for d in range(0, num.order + 1):
        rem = num.terms.get((0, d), num.ring.zero())
        if d > 0:
            rem = rem + out.get((0, d - 1), num.ring.zero())
        if not rem.is_zero():
            raise NotDivisibleError(d, f"nonzero remainder at total degree {d} dividing by (x-y)")
    return BiSeries(num.ring, out, order, clean=False)


def _invert_unit(u: BiSeries) -> BiSeries:
    """Inverse of a biseries with constant coefficient 1."""
    ring, n = u.ring, u.order
    if u.terms.get((0, 0)) != ring.one():
        raise DomainError("unit inversion requires constant coefficient 1")
    rest = BiSeries(u.ring, {ij: c for ij, c in u.terms.items() if ij != (0, 0)}, n, clean=False)
    # 1/(1+r) = 1 - r + r^2 - ...; r has positive valuation so this terminates.
    out = BiSeries(ring, {(0, 0): ring.one()}, n)
    power = BiSeries(ring, {(0, 0): ring.one()}, n)
    for k in range(1, n + 1):
        power = power * rest
        if power.is_zero():
            break
        out = out + (power if k % 2 == 0 else -power)
    return out


def biseries_divide(num: BiSeries, den: BiSeries, monomial=(0, 0), xmy: int = 0) -> BiSeries:
    """Exact quotient num/den.

    The caller names the non-unit content of den: a monomial factor x^a y^b
    and a power of (x - y).  After removing that content den must be a unit
    (constant coefficient 1).  Divisibility of num is verified term by term;
    a nonzero remainder raises NotDivisibleError carrying the failing degree.
    """
    _check_compat(num, den)
    a, b = monomial
    den_core = den
    for _ in range(xmy):
        den_core = _divide_x_minus_y(den_core)
    if a or b:
        den_core = _divide_monomial(den_core, a, b)
    num_core = num
    for _ in range(xmy):
        num_core = _divide_x_minus_y(num_core)
    if a or b:
        num_core = _divide_monomial(num_core, a, b)
    return num_core * _invert_unit(den_core)
