"""Partition counting: brute-force enumeration, recurrences and generating functions.

The enumerator is the ground truth.  Every generating function built here is
checked against it in the test suite, and the identity verifiers use both
routes independently.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from . import kernels
from .errors import DomainError, OracleLimitExceeded
from .fps import Series, div, mul, prod_pow

DEFAULT_ORACLE_LIMIT = 60
ORACLE_LIMIT_ENV = "QSERIES_ORACLE_LIMIT"

_limit_override: int | None = None


def oracle_limit() -> int:
    """Largest n the brute-force enumerator accepts.

    An explicit :func:`set_oracle_limit` wins over the ``QSERIES_ORACLE_LIMIT``
    environment variable, which wins over the default of 60.
    """
    if _limit_override is not None:
        return _limit_override
    env = os.environ.get(ORACLE_LIMIT_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise DomainError(f"{ORACLE_LIMIT_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_ORACLE_LIMIT


def set_oracle_limit(limit: int | None) -> None:
    global _limit_override
    if limit is not None and limit < 0:
        raise DomainError("oracle limit must be nonnegative")
    _limit_override = limit


def _check_positive(name, n):
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"{name} must be a positive integer, got {n!r}")


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        ps = tuple(self.parts)
        object.__setattr__(self, "parts", ps)
        if any(p < 1 for p in ps) or any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
            raise DomainError(f"not a partition: {ps}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)


@dataclass(frozen=True)
class DurfeeProfile:
    square: int
    max_rectangle_height: int


def _iter_parts(n: int) -> Iterator[tuple[int, ...]]:
    # Zoghbi-Stojmenovic ZS1: partitions in lexicographically decreasing order.
    if n == 0:
        yield ()
        return
    x = [1] * (n + 1)
    x[0] = n
    m = h = 0
    yield (n,)
    while x[0] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield tuple(x[: m + 1])


def _check_oracle(n, limit):
    limit = oracle_limit() if limit is None else limit
    if n > limit:
        raise OracleLimitExceeded(n, limit)


def enumerate_partitions(n: int, limit: int | None = None) -> list[Partition]:
    """All partitions of n, lexicographically decreasing; ``[Partition(())]`` for n = 0."""
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    _check_oracle(n, limit)
    return [Partition(p) for p in _iter_parts(n)]


def durfee_profile(p: Partition | tuple[int, ...]) -> DurfeeProfile:
    parts = p.parts if isinstance(p, Partition) else tuple(p)
    return _profile(parts)


def _profile(parts):
    s = 0
    while s < len(parts) and parts[s] >= s + 1:
        s += 1
    if s == 0:
        return DurfeeProfile(0, 0)
    m = 0
    while s + m < len(parts) and parts[s + m] >= s:
        m += 1
    return DurfeeProfile(s, m)


# ---------------------------------------------------------------------------
# recurrence / generating-function counters

_p_table: list[int] = [1]


def count_partitions(n: int) -> int:
    """p(n) from the pentagonal-number recurrence."""
    global _p_table
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    if n >= len(_p_table):
        _p_table = kernels.pentagonal_partition_numbers(max(n, 2 * len(_p_table)))
    return _p_table[n]


_parts_rows: list[list[int]] = [[1]]


def _parts_row(n):
    # row n holds p_k(n) for k = 0..n
    while len(_parts_rows) <= n:
        m = len(_parts_rows)
        row = [0] * (m + 1)
        for k in range(1, m + 1):
            prev = _parts_rows[m - 1]
            left = prev[k - 1] if k - 1 <= m - 1 else 0
            mk = _parts_rows[m - k]
            right = mk[k] if k <= m - k else 0
            row[k] = left + right
        _parts_rows.append(row)
    return _parts_rows[n]


def count_by_parts(a: int, n: int) -> int:
    """p_a(n): partitions of n into exactly a parts."""
    _check_positive("a", a)
    _check_positive("n", n)
    if a > n:
        return 0
    return _parts_row(n)[a]


def count_by_parts_hat(a: int, n: int) -> int:
    """Partitions of n whose number of parts is a positive multiple of a."""
    _check_positive("a", a)
    _check_positive("n", n)
    row = _parts_row(n)
    return sum(row[k] for k in range(a, n + 1, a))


@lru_cache(maxsize=None)
def _distinct_series(order):
    acc = Series.one(order)
    one = Series.one(order)
    for k in range(1, order + 1):
        acc = mul(acc, one + Series.monomial(k, order))
    return acc


def _cache_order(n):
    size = 64
    while size < n:
        size *= 2
    return size


def count_distinct(n: int) -> int:
    """Q(n): partitions of n into distinct parts, read off prod (1 + q**k)."""
    _check_positive("n", n)
    return int(_distinct_series(_cache_order(n))[n])


def count_distinct_enumerated(n: int, limit: int | None = None) -> int:
    """Q(n) by brute-force enumeration."""
    _check_positive("n", n)
    _check_oracle(n, limit)
    return sum(1 for p in _iter_parts(n) if len(set(p)) == len(p))


def count_uniform_multiplicity(n: int, limit: int | None = None) -> int:
    """Partitions of n in which every part value occurs equally often.

    Counted by enumeration up to the oracle limit and taken from the
    generating function above it.
    """
    _check_positive("n", n)
    limit = oracle_limit() if limit is None else limit
    if n <= limit:
        return sum(1 for p in _iter_parts(n) if len(set(Counter(p).values())) == 1)
    return int(_fq_hat_cached(_cache_order(n))[n])


@lru_cache(maxsize=256)
def _rectangle_histogram(n):
    hist = Counter()
    for parts in _iter_parts(n):
        prof = _profile(parts)
        if prof.square:
            hist[prof.max_rectangle_height] += 1
    return dict(hist)


def count_durfee(a: int, n: int, limit: int | None = None) -> int:
    """Partitions of n with a Durfee square and a Durfee rectangle of height >= a."""
    _check_positive("a", a)
    _check_positive("n", n)
    _check_oracle(n, limit)
    return sum(c for m, c in _rectangle_histogram(n).items() if m >= a)


def count_durfee_hat(a: int, n: int, limit: int | None = None) -> int:
    """As :func:`count_durfee`, counting each partition once per height a*k it reaches."""
    _check_positive("a", a)
    _check_positive("n", n)
    _check_oracle(n, limit)
    return sum((m // a) * c for m, c in _rectangle_histogram(n).items())


def durfee_distribution(n: int, limit: int | None = None) -> dict[tuple[int, int], int]:
    """Number of partitions of n for each (square, max rectangle height)."""
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    _check_oracle(n, limit)
    dist = Counter()
    for parts in _iter_parts(n):
        prof = _profile(parts)
        dist[(prof.square, prof.max_rectangle_height)] += 1
    return dict(sorted(dist.items()))


# ---------------------------------------------------------------------------
# generating functions


@lru_cache(maxsize=32)
def _inverse_pochhammers(order):
    """(1/(q)_m for m = 0..order), each truncated at ``order``."""
    one = Series.one(order)
    out = [one]
    for m in range(1, order + 1):
        out.append(div(out[-1], one - Series.monomial(m, order)))
    return tuple(out)


@lru_cache(maxsize=32)
def _inverse_pochhammer_squares(order):
    one = Series.one(order)
    out = [one]
    for m in range(1, order + 1):
        factor = one - Series.monomial(m, order)
        out.append(div(div(out[-1], factor), factor))
    return tuple(out)


def _check_order(order):
    if not isinstance(order, int) or order < 0:
        raise DomainError(f"order must be a nonnegative integer, got {order!r}")


def series_p(order: int) -> Series:
    """sum p(n) q**n, built as 1 + sum_{n >= 1} q**(n*n) / (q)_n**2."""
    _check_order(order)
    inv = _inverse_pochhammer_squares(order)
    acc = Series.one(order)
    n = 1
    while n * n <= order:
        acc = acc + inv[n].shift(n * n)
        n += 1
    return acc


def series_pa(a: int, order: int) -> Series:
    """sum p_a(n) q**n = q**a / (q)_a."""
    _check_positive("a", a)
    _check_order(order)
    if a > order:
        return Series.zero(order)
    return _inverse_pochhammers(order)[a].shift(a)


def series_pa_hat(a: int, order: int) -> Series:
    """sum_j q**(a*j) / (q)_(a*j): partitions whose part count is a multiple of a."""
    _check_positive("a", a)
    _check_order(order)
    inv = _inverse_pochhammers(order)
    acc = Series.zero(order)
    for m in range(a, order + 1, a):
        acc = acc + inv[m].shift(m)
    return acc


def series_fq(order: int) -> Series:
    """sum_{n >= 1} Q(n) q**n = prod (1 + q**k) - 1."""
    _check_order(order)
    return _distinct_series(order) - Series.one(order)


def series_fq_hat(order: int) -> Series:
    """sum_{n >= 1} Q-hat(n) q**n.

    A uniform-multiplicity partition with common multiplicity m is a
    distinct-parts partition with every part repeated m times, so the
    generating function is sum_m (prod (1 + q**(m*k)) - 1).
    """
    _check_order(order)
    d = series_fq(order)
    acc = Series.zero(order)
    for m in range(1, order + 1):
        acc = acc + d.substitute_power(m)
    return acc


@lru_cache(maxsize=8)
def _fq_hat_cached(order):
    return series_fq_hat(order)


def distinct_over_index(n: int) -> Fraction:
    """Q(n) / n, the exponent sequence of the distinct-parts product."""
    return Fraction(count_distinct(n), n)


def series_psi_q(order: int) -> Series:
    """prod_{n >= 1} (1 - q**n) ** (Q(n)/n)."""
    _check_order(order)
    return prod_pow(distinct_over_index, order)


def series_b(a: int, order: int) -> Series:
    """sum_{n >= 1} q**(n*n + a*n) / (q)_n**2."""
    _check_positive("a", a)
    _check_order(order)
    inv = _inverse_pochhammer_squares(order)
    acc = Series.zero(order)
    n = 1
    while n * n + a * n <= order:
        acc = acc + inv[n].shift(n * n + a * n)
        n += 1
    return acc


def series_b_hat(a: int, order: int) -> Series:
    """sum_{n >= 1} q**(n*n + a*n) / ((q)_n**2 (1 - q**(a*n)))."""
    _check_positive("a", a)
    _check_order(order)
    inv = _inverse_pochhammer_squares(order)
    one = Series.one(order)
    acc = Series.zero(order)
    n = 1
    while n * n + a * n <= order:
        term = div(inv[n], one - Series.monomial(a * n, order))
        acc = acc + term.shift(n * n + a * n)
        n += 1
    return acc
