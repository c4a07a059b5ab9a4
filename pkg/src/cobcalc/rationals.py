"""Exact rational scalars.

gmpy2.mpq is used when available (it is an order of magnitude faster than
fractions.Fraction in the inner loops); fractions.Fraction is the fallback.
Both expose .numerator/.denominator and normalize to lowest terms with a
positive denominator, which is all the rest of the code relies on.
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    Q = Fraction

ZERO = Q(0)
ONE = Q(1)


def rat(num, den=1):
    """Build a rational, rejecting zero denominators with a clear message."""
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Q(num, den)


def rat_text(q) -> str:
    """Compact form used in pretty-printed polynomials: '4', '-9/8'."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rat_json(q) -> str:
    """Wire form used in every JSON payload: always 'num/den'."""
    return f"{q.numerator}/{q.denominator}"


def rat_from_str(s: str):
    """Parse 'num' or 'num/den' strings (the inverse of rat_json/rat_text)."""
    s = s.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return rat(int(num), int(den))
    return Q(int(s))
