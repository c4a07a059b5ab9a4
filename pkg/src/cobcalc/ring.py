"""Weighted-graded polynomial rings with exact rational coefficients.

A GradedRing fixes a tuple of named generators with positive weights and a
truncation cap D.  GradedPoly values are sparse maps from exponent vectors to
rationals; every arithmetic operation silently drops terms of weight > D
(the truncation rule all higher modules rely on).  Values are immutable.
"""

from __future__ import annotations

from .errors import ConfigError, DomainError
from .rationals import Q, rat_from_str, rat_text

__all__ = ["GradedRing", "GradedPoly", "mu_ring"]


class GradedRing:
    """A polynomial ring Q[g_1, ..., g_r] with weights, truncated at cap."""

    __slots__ = ("names", "weights", "cap", "_index", "_zero", "_one")

    def __init__(self, gens, cap: int):
        if cap < 0:
            raise ConfigError("cap must be non-negative")
        names = tuple(name for name, _ in gens)
        weights = tuple(int(w) for _, w in gens)
        if len(set(names)) != len(names):
            raise ConfigError("duplicate generator names")
        if any(w <= 0 for w in weights):
            raise ConfigError("generator weights must be positive")
        self.names = names
        self.weights = weights
        self.cap = cap
        self._index = {name: i for i, name in enumerate(names)}
        self._zero = GradedPoly(self, {})
        self._one = GradedPoly(self, {(0,) * len(names): Q(1)})

    @property
    def nvars(self) -> int:
        return len(self.names)

    def weight(self, exps) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))

    def zero(self) -> GradedPoly:
        return self._zero

    def one(self) -> GradedPoly:
        return self._one

    def scalar(self, q) -> GradedPoly:
        q = Q(q)
        if q == 0:
            return self._zero
        return GradedPoly(self, {(0,) * self.nvars: q})

    def gen(self, name: str) -> GradedPoly:
        i = self._index.get(name)
        if i is None:
            raise ConfigError(f"no generator named {name!r}")
        exps = [0] * self.nvars
        exps[i] = 1
        return self.monomial(tuple(exps))

    def monomial(self, exps, coeff=1) -> GradedPoly:
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ConfigError("bad exponent vector")
        coeff = Q(coeff)
        if coeff == 0 or self.weight(exps) > self.cap:
            return self._zero
        return GradedPoly(self, {exps: coeff})

    def __eq__(self, other):
        return (
            isinstance(other, GradedRing)
            and self.names == other.names
            and self.weights == other.weights
            and self.cap == other.cap
        )

    def __hash__(self):
        return hash((self.names, self.weights, self.cap))

    def __repr__(self):
        gens = ", ".join(f"{n}:{w}" for n, w in zip(self.names, self.weights))
        return f"GradedRing([{gens}], cap={self.cap})"


def mu_ring(cap: int) -> GradedRing:
    """The rationalized cobordism ring Q[P1..Pcap], weight(Pn) = n."""
    return GradedRing([(f"P{n}", n) for n in range(1, cap + 1)], cap)


def _check_same_ring(a: GradedPoly, b: GradedPoly):
    if a.ring != b.ring:
        raise ConfigError("operands live in different rings (cap or generator mismatch)")


class GradedPoly:
    """Sparse polynomial over Q; terms of weight > ring.cap are never stored."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: GradedRing, terms: dict, clean: bool = True):
        self.ring = ring
        if clean:
            cap = ring.cap
            wt = ring.weight
            terms = {e: q for e, q in terms.items() if q != 0 and wt(e) <= cap}
        self.terms = terms

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, GradedPoly):
            return NotImplemented
        _check_same_ring(self, other)
        terms = dict(self.terms)
        for e, q in other.terms.items():
            s = terms.get(e, 0) + q
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return GradedPoly(self.ring, terms, clean=False)

    def __sub__(self, other):
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return GradedPoly(self.ring, {e: -q for e, q in self.terms.items()}, clean=False)

    def __mul__(self, other):
        if not isinstance(other, GradedPoly):
            return self.scale(other)
        _check_same_ring(self, other)
        ring = self.ring
        cap = ring.cap
        weights = ring.weights
        out: dict = {}
        for ea, qa in self.terms.items():
            wa = ring.weight(ea)
            for eb, qb in other.terms.items():
                wb = wa + sum(e * w for e, w in zip(eb, weights))
                if wb > cap:
                    continue
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, 0) + qa * qb
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return GradedPoly(ring, out, clean=False)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, q) -> GradedPoly:
        q = Q(q)
        if q == 0:
            return self.ring.zero()
        return GradedPoly(self.ring, {e: q * c for e, c in self.terms.items()}, clean=False)

    def __pow__(self, n: int) -> GradedPoly:
        if n < 0:
            raise DomainError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def __eq__(self, other):
        return (
            isinstance(other, GradedPoly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    # -- grading -------------------------------------------------------

    def weights_present(self) -> set[int]:
        wt = self.ring.weight
        return {wt(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.weights_present()) <= 1

    def homogeneous_weight(self):
        """The single weight of a homogeneous value; None for 0; raises if mixed."""
        ws = self.weights_present()
        if not ws:
            return None
        if len(ws) > 1:
            raise DomainError(f"not homogeneous: weights {sorted(ws)}")
        return ws.pop()

    def homogeneous_part(self, w: int) -> GradedPoly:
        wt = self.ring.weight
        return GradedPoly(
            self.ring, {e: q for e, q in self.terms.items() if wt(e) == w}, clean=False
        )

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, Q(0))

    # -- serialization ---------------------------------------------------

    def sorted_terms(self):
        """Terms sorted by (weight, descending-lex exponent); fixed canonical order."""
        wt = self.ring.weight
        return sorted(self.terms.items(), key=lambda kv: (wt(kv[0]), tuple(-e for e in kv[0])))

    def to_text(self) -> str:
        """Canonical text form, e.g. '-5/2*P1^3+4*P1*P2-3/2*P3'."""
        if not self.terms:
            return "0"
        pieces = []
        for exps, q in self.sorted_terms():
            factors = []
            for name, e in zip(self.ring.names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                body = rat_text(q)
            elif q == 1:
                body = "*".join(factors)
            elif q == -1:
                body = "-" + "*".join(factors)
            else:
                body = rat_text(q) + "*" + "*".join(factors)
            if pieces and not body.startswith("-"):
                pieces.append("+" + body)
            else:
                pieces.append(body)
        return "".join(pieces)

    @classmethod
    def from_text(cls, ring: GradedRing, text: str) -> GradedPoly:
        """Parse the canonical text form back into a polynomial."""
        from .exprparse import parse_poly

        return parse_poly(ring, text)

    def __repr__(self):
        return f"<GradedPoly {self.to_text()}>"


def poly_from_json(ring: GradedRing, data: dict) -> GradedPoly:
    """Inverse of poly_to_json."""
    terms = {}
    for key, val in data.items():
        exps = tuple(int(x) for x in key.split(",")) if key else (0,) * ring.nvars
        terms[exps] = rat_from_str(val)
    return GradedPoly(ring, terms)
