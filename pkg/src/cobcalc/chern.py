"""Chern numbers and s-numbers on the monomial basis of the rationalized
cobordism ring, with the derived operators: Chern-vector coordinates, the
first-Chern-class boundary, W/SU membership, the twisted * product, and
per-degree W bases.

A homogeneous GradedPoly of weight n plays the role of a cobordism class in
complex degree n; P_{n1}...P_{nr} stands for a product of projective spaces
and everything else extends linearly.
"""

from __future__ import annotations

from .errors import DomainError
from .linalg import nullspace, solve
from .partitions import partitions
from .rationals import Q, rat_json
from .ring import GradedPoly, GradedRing

__all__ = ["ChernEngine", "partition_of_exps", "exps_of_partition"]


def partition_of_exps(ring: GradedRing, exps) -> tuple[int, ...]:
    """Monomial exponent vector -> partition (part i repeated exps[i-1] times)."""
    parts = []
    for idx, e in enumerate(exps):
        parts.extend([idx + 1] * e)
    return tuple(sorted(parts, reverse=True))


def exps_of_partition(ring: GradedRing, mu) -> tuple[int, ...]:
    exps = [0] * ring.nvars
    for part in mu:
        if part > ring.nvars:
            raise DomainError(f"part {part} exceeds the ring's generator range")
        exps[part - 1] += 1
    return tuple(exps)


# -- truncated polynomials in the tangent roots t_1..t_r ---------------------


def _tmul(a: dict, b: dict, bounds: tuple[int, ...]) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if any(v > m for v, m in zip(e, bounds)):
                continue
            out[e] = out.get(e, 0) + ca * cb
            if out[e] == 0:
                del out[e]
    return out


def _tparts(poly: dict, upto: int) -> list[dict]:
    """Split a t-polynomial into graded pieces by total degree."""
    parts = [dict() for _ in range(upto + 1)]
    for e, c in poly.items():
        d = sum(e)
        if d <= upto:
            parts[d][e] = c
    return parts


class ChernEngine:
    """All Chern-number machinery at one truncation cap, with caches."""

    def __init__(self, ring: GradedRing, v_class: GradedPoly | None = None):
        self.ring = ring
        self.cap = ring.cap
        # [V] of the * product; wired to alpha(1,2) by the context.
        self.v_class = v_class
        self._chern_cache: dict = {}
        self._boundary_rows: dict = {}
        self._matrix_cache: dict = {}
        self._w_basis_cache: dict = {}
        self._su_basis_cache: dict = {}

    # -- per-monomial tables -------------------------------------------------

    def _tables(self, mu: tuple[int, ...]):
        """(chern parts, s-polynomial top value, boundary parts) for X_mu."""
        cached = self._chern_cache.get(mu)
        if cached is not None:
            return cached
        n = sum(mu)
        bounds = tuple(mu)
        one = {(0,) * len(mu): 1} if mu else {(): 1}
        total = one
        for i, part in enumerate(mu):
            # (1 + t_i)^{part+1} truncated at t_i^{part+1} = 0
            binom = 1
            factor = {}
            for k in range(0, part + 1):
                e = [0] * len(mu)
                e[i] = k
                factor[tuple(e)] = binom
                binom = binom * (part + 1 - k) // (k + 1)
            total = _tmul(total, factor, bounds)
        cparts = _tparts(total, n)
        # Newton's identities: p_k = c_1 p_{k-1} - c_2 p_{k-2} + ... -(-1)^k k c_k
        p = [None] * (n + 1)
        for k in range(1, n + 1):
            acc: dict = {}
            sign = 1
            for i in range(1, k):
                term = _tmul(cparts[i], p[k - i], bounds)
                for e, c in term.items():
                    acc[e] = acc.get(e, 0) + sign * c
                sign = -sign
            for e, c in cparts[k].items():
                acc[e] = acc.get(e, 0) + sign * k * c
            p[k] = {e: c for e, c in acc.items() if c != 0}
        top = tuple(mu)
        s_top = Q(p[n].get(top, 0)) if n >= 1 else Q(0)
        # c(X)/(1+c1), for the boundary operator's Chern numbers.
        inv = dict(one)
        c1 = cparts[1] if n >= 1 else {}
        power = dict(one)
        for k in range(1, n + 1):
            power = _tmul(power, c1, bounds)
            if not power:
                break
            for e, c in power.items():
                inv[e] = inv.get(e, 0) + ((-1) ** k) * c
        dparts = _tparts(_tmul(total, inv, bounds), n)
        result = (cparts, s_top, dparts, bounds, c1)
        self._chern_cache[mu] = result
        return result

    def _c_omega_monomial(self, mu: tuple[int, ...], omega: tuple[int, ...]) -> Q:
        """c_omega[X_mu], both of the same degree."""
        cparts, _, _, bounds, _ = self._tables(mu)
        prod = {(0,) * len(mu): 1} if mu else {(): 1}
        for part in omega:
            prod = _tmul(prod, cparts[part], bounds)
            if not prod:
                break
        return Q(prod.get(tuple(mu), 0))

    def _boundary_omega_monomial(self, mu: tuple[int, ...], omega: tuple[int, ...]) -> Q:
        """c_omega[boundary(X_mu)] = <[c/(1+c1)]_omega * c1>[X_mu]."""
        _, _, dparts, bounds, c1 = self._tables(mu)
        prod = _tmul({(0,) * len(mu): 1} if mu else {(): 1}, c1, bounds)
        for part in omega:
            if not prod:
                break
            prod = _tmul(prod, dparts[part], bounds)
        return Q(prod.get(tuple(mu), 0))

    # -- class-level operations ------------------------------------------------

    def _weight_of(self, z: GradedPoly) -> int:
        w = z.homogeneous_weight()
        if w is None:
            raise DomainError("the zero class has no definite degree here")
        return w

    def chern_number(self, z: GradedPoly, omega: tuple[int, ...]) -> Q:
        omega = tuple(sorted(omega, reverse=True))
        n = sum(omega)
        if not z.is_zero() and self._weight_of(z) != n:
            raise DomainError(
                f"degree mismatch: class of weight {z.homogeneous_weight()} vs partition of {n}"
            )
        total = Q(0)
        for exps, q in z.terms.items():
            mu = partition_of_exps(self.ring, exps)
            total += q * self._c_omega_monomial(mu, omega)
        return total

    def chern_vector(self, z: GradedPoly) -> dict[tuple[int, ...], Q]:
        n = self._weight_of(z)
        return {omega: self.chern_number(z, omega) for omega in partitions(n)}

    def chern_vector_json(self, z: GradedPoly) -> dict:
        n = self._weight_of(z)
        numbers = {
            ",".join(map(str, sorted(omega))): rat_json(self.chern_number(z, omega))
            for omega in partitions(n)
        }
        return {"degree": n, "numbers": numbers}

    def s_number(self, z: GradedPoly) -> Q:
        if z.is_zero():
            return Q(0)
        self._weight_of(z)
        total = Q(0)
        for exps, q in z.terms.items():
            mu = partition_of_exps(self.ring, exps)
            total += q * self._tables(mu)[1]
        return total

    def chern_matrix(self, n: int) -> list[list[Q]]:
        """Rows indexed by partitions(n) (omega), columns by partitions(n) (mu)."""
        cached = self._matrix_cache.get(n)
        if cached is not None:
            return cached
        ps = partitions(n)
        matrix = [[self._c_omega_monomial(mu, omega) for mu in ps] for omega in ps]
        self._matrix_cache[n] = matrix
        return matrix

    def class_from_chern(self, n: int, numbers: dict) -> GradedPoly:
        """The unique class with the given complete Chern-number vector."""
        ps = partitions(n)
        vec = {tuple(sorted(om, reverse=True)): Q(v) for om, v in numbers.items()}
        missing = [om for om in ps if om not in vec]
        if missing:
            raise DomainError(f"incomplete Chern vector: missing {missing[0]}")
        rhs = [vec[om] for om in ps]
        x = solve(self.chern_matrix(n), rhs)
        if x is None:
            raise DomainError("singular Chern pairing; this should be impossible")
        out = self.ring.zero()
        for coeff, mu in zip(x, ps):
            if coeff != 0:
                out = out + self.ring.monomial(exps_of_partition(self.ring, mu), coeff)
        return out

    def boundary(self, z: GradedPoly) -> GradedPoly:
        """Class of the submanifold dual to c1; lowers the degree by one."""
        n = self._weight_of(z)
        if n < 1:
            raise DomainError("boundary needs a class of positive degree")
        numbers = {}
        for omega in partitions(n - 1):
            total = Q(0)
            for exps, q in z.terms.items():
                mu = partition_of_exps(self.ring, exps)
                total += q * self._boundary_omega_monomial(mu, omega)
            numbers[omega] = total
        if n == 1:
            return self.ring.scalar(numbers[()])
        return self.class_from_chern(n - 1, numbers)

    def _boundary_or_zero(self, z: GradedPoly) -> GradedPoly:
        if z.is_zero() or z.homogeneous_weight() == 0:
            return self.ring.zero()
        return self.boundary(z)

    def is_w_class(self, z: GradedPoly) -> bool:
        """True iff every Chern number with a c1^2 factor vanishes."""
        if z.is_zero():
            return True
        n = self._weight_of(z)
        return all(
            self.chern_number(z, omega) == 0
            for omega in partitions(n)
            if omega.count(1) >= 2
        )

    def is_su_class(self, z: GradedPoly) -> bool:
        """True iff every Chern number with a c1 factor vanishes."""
        if z.is_zero():
            return True
        n = self._weight_of(z)
        return all(
            self.chern_number(z, omega) == 0
            for omega in partitions(n)
            if omega and omega[-1] == 1
        )

    def star(self, a: GradedPoly, b: GradedPoly) -> GradedPoly:
        """a*b = ab + 2[V] (boundary a)(boundary b), with [V] = alpha(1,2)."""
        if self.v_class is None:
            raise DomainError("no [V] class wired into this engine")
        if not self.is_w_class(a) or not self.is_w_class(b):
            raise DomainError("* product requires both factors in W")
        wa = 0 if a.is_zero() else a.homogeneous_weight()
        wb = 0 if b.is_zero() else b.homogeneous_weight()
        if wa + wb > self.cap:
            raise DomainError("* product would exceed the truncation cap")
        out = a * b + self.v_class.scale(2) * self._boundary_or_zero(a) * self._boundary_or_zero(b)
        if not self.is_w_class(out):
            raise DomainError("* product left W; convention violation")
        return out

    def w_basis(self, n: int) -> list[GradedPoly]:
        """Basis of the degree-n piece of W (c1^2 constraints), deterministic."""
        return self._constrained_basis(n, min_ones=2, cache=self._w_basis_cache)

    def su_basis(self, n: int) -> list[GradedPoly]:
        """Basis of the degree-n piece of the SU subspace (c1 constraints)."""
        return self._constrained_basis(n, min_ones=1, cache=self._su_basis_cache)

    def _constrained_basis(self, n: int, min_ones: int, cache: dict) -> list[GradedPoly]:
        cached = cache.get(n)
        if cached is not None:
            return cached
        ps = partitions(n)
        rows = [
            [self._c_omega_monomial(mu, omega) for mu in ps]
            for omega in ps
            if omega.count(1) >= min_ones
        ]
        if not rows:
            vectors = [[Q(1) if i == j else Q(0) for j in range(len(ps))] for i in range(len(ps))]
        else:
            vectors = nullspace(rows)
        basis = []
        for vec in vectors:
            p = self.ring.zero()
            for coeff, mu in zip(vec, ps):
                if coeff != 0:
                    p = p + self.ring.monomial(exps_of_partition(self.ring, mu), coeff)
            basis.append(p)
        cache[n] = basis
        return basis

    def constraint_rows(self, n: int, min_ones: int) -> list[list[Q]]:
        """Chern-number rows (over the monomial basis) that must vanish."""
        ps = partitions(n)
        return [
            [self._c_omega_monomial(mu, omega) for mu in ps]
            for omega in partitions(n)
            if omega.count(1) >= min_ones
        ]

    def class_to_vector(self, z: GradedPoly, n: int) -> list[Q]:
        """Coordinates of a weight-n class over the fixed monomial basis."""
        if not z.is_zero() and z.homogeneous_weight() != n:
            raise DomainError("weight mismatch")
        ps = partitions(n)
        coords = {exps_of_partition(self.ring, mu): i for i, mu in enumerate(ps)}
        vec = [Q(0)] * len(ps)
        for exps, q in z.terms.items():
            vec[coords[exps]] = q
        return vec

    def vector_to_class(self, vec, n: int) -> GradedPoly:
        ps = partitions(n)
        out = self.ring.zero()
        for coeff, mu in zip(vec, ps):
            if coeff != 0:
                out = out + self.ring.monomial(exps_of_partition(self.ring, mu), coeff)
        return out
