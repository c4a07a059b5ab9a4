"""Partition enumeration and weighted Hilbert-series dimension counts.

Partitions are tuples with non-increasing parts.  The enumeration order is
fixed once (descending lexicographic on the part tuples) so that every
vector/matrix layout built on top of it is stable across runs.
"""

from functools import lru_cache


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All partitions of n with parts <= max_part, descending-lex order."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    if max_part is None or max_part > n:
        max_part = n
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partition_count(n: int) -> int:
    return len(partitions(n))


@lru_cache(maxsize=None)
def restricted_partitions(n: int, parts: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Partitions of n using only the given part sizes, descending-lex order."""
    parts = tuple(sorted(set(parts), reverse=True))

    def rec(m, allowed):
        if m == 0:
            return [()]
        out = []
        for idx, a in enumerate(allowed):
            if a <= m:
                for rest in rec(m - a, allowed[idx:]):
                    out.append((a,) + rest)
        return out

    return tuple(rec(n, parts))


def weighted_ring_dims(weights: list[int], upto: int) -> list[int]:
    """Graded dimensions of a polynomial ring on generators of given weights.

    Returns [dim_0, ..., dim_upto], i.e. coefficients of prod 1/(1-t^w).
    """
    dims = [0] * (upto + 1)
    dims[0] = 1
    for w in weights:
        if w <= 0:
            raise ValueError("generator weights must be positive")
        for n in range(w, upto + 1):
            dims[n] += dims[n - w]
    return dims
