"""Möbius function, divisors, divisor-sum transforms and family inversion."""

from __future__ import annotations

from math import isqrt
from typing import Callable, Sequence, Union

from . import kernels
from .errors import DomainError

#: mu(n) for n up to this bound comes from the sieve table; beyond it, trial division.
SIEVE_BOUND = 10**5

_mu_table: list[int] = [0, 1]


def _check_positive(n):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"expected a positive integer, got {n!r}")


def mobius_table(bound: int) -> list[int]:
    """[0, mu(1), ..., mu(bound)].  Index 0 is a placeholder."""
    global _mu_table
    if bound >= len(_mu_table):
        _mu_table = kernels.mobius_sieve(max(bound, 2 * len(_mu_table)))
    return _mu_table[: bound + 1]


def _mobius_trial(n):
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1 if p == 2 else 2
    if n > 1:
        result = -result
    return result


def mobius(n: int) -> int:
    _check_positive(n)
    if n <= SIEVE_BOUND:
        if n >= len(_mu_table):
            mobius_table(n)
        return _mu_table[n]
    return _mobius_trial(n)


def divisors(n: int) -> list[int]:
    _check_positive(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def mobius_sum(n: int) -> int:
    """sum of mu(d) over the divisors d of n; 1 when n == 1, else 0."""
    return sum(mobius(d) for d in divisors(n))


class ArithmeticFunction:
    """Values f(1), ..., f(bound) of an arithmetic function.

    Call it or index it with n (1-based).
    """

    __slots__ = ("values",)

    def __init__(self, values: Sequence):
        self.values = tuple(values)

    @classmethod
    def tabulate(cls, f: "FunctionLike", bound: int) -> ArithmeticFunction:
        if isinstance(f, ArithmeticFunction):
            if f.bound < bound:
                raise DomainError(f"function only defined up to {f.bound}, need {bound}")
            return cls(f.values[:bound])
        if callable(f):
            return cls(f(n) for n in range(1, bound + 1))
        vals = list(f)
        if len(vals) < bound:
            raise DomainError(f"function only defined up to {len(vals)}, need {bound}")
        return cls(vals[:bound])

    @property
    def bound(self) -> int:
        return len(self.values)

    def __call__(self, n: int):
        _check_positive(n)
        return self.values[n - 1]

    __getitem__ = __call__

    def __eq__(self, other):
        if isinstance(other, ArithmeticFunction):
            return self.values == other.values
        return NotImplemented

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"ArithmeticFunction({list(self.values)!r})"


FunctionLike = Union[ArithmeticFunction, Callable[[int], object], Sequence]


def divisor_transform(f: FunctionLike, bound: int) -> ArithmeticFunction:
    """g(n) = sum_{d | n} f(d) for 1 <= n <= bound."""
    vals = ArithmeticFunction.tabulate(f, bound).values
    out = kernels.dirichlet_convolve([0, *vals], [0] + [1] * bound, bound)
    return ArithmeticFunction(out[1:])


def mobius_invert(g: FunctionLike, bound: int) -> ArithmeticFunction:
    """f(n) = sum_{d | n} mu(d) g(n/d) for 1 <= n <= bound."""
    vals = ArithmeticFunction.tabulate(g, bound).values
    out = kernels.dirichlet_convolve(mobius_table(bound), [0, *vals], bound)
    return ArithmeticFunction(out[1:])


class IndexedFamily:
    """A two-index family f(a; n) of integers with f(a; n) = 0 whenever a > n.

    The vanishing threshold is enforced here: ``func`` is never consulted for
    a > n.  It is what keeps every family sum finite coefficient by coefficient.
    """

    __slots__ = ("func",)

    def __init__(self, func: Callable[[int, int], int]):
        self.func = func

    def __call__(self, a: int, n: int) -> int:
        _check_positive(a)
        _check_positive(n)
        if a > n:
            return 0
        return self.func(a, n)

    def hat(self) -> IndexedFamily:
        """The family f-hat(a; n) = sum_{j >= 1} f(aj; n)."""
        return IndexedFamily(lambda a, n: family_hat(self, a, n))


def family_hat(f: Callable[[int, int], int], a: int, n: int) -> int:
    """sum_{j=1}^{n // a} f(a*j; n); terms beyond that vanish."""
    _check_positive(a)
    _check_positive(n)
    return sum(f(a * j, n) for j in range(1, n // a + 1))


def family_invert(fhat: Callable[[int, int], int], a: int, n: int) -> int:
    """Recover f(a; n) = sum_{j=1}^{n // a} mu(j) fhat(a*j; n)."""
    _check_positive(a)
    _check_positive(n)
    total = 0
    for j in range(1, n // a + 1):
        m = mobius(j)
        if m:
            total += m * fhat(a * j, n)
    return total
