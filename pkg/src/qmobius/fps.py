"""Truncated formal power series in q with exact rational coefficients.

A :class:`Series` of order N stores the coefficients of q**0 .. q**N.
Binary operations truncate to the smaller operand order.  Coefficients are
``fractions.Fraction`` kept in lowest terms, so equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Union

from . import kernels
from ._rational import from_coprime
from .errors import DivisionByNonUnit, DomainError, ExpOfNonZero, LogOfNonOne

Rational = Union[int, Fraction]
ExponentSequence = Callable[[int], Rational]

_ZERO = Fraction(0)


def _integral(coeffs):
    """Return the coefficients as plain ints if every one is integral, else None."""
    out = []
    for c in coeffs:
        if c.denominator != 1:
            return None
        out.append(c.numerator)
    return out


class Series:
    """Immutable truncated power series."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Rational]):
        cs = tuple(c if type(c) is Fraction else Fraction(c) for c in coeffs)
        if not cs:
            raise DomainError("a series needs at least the constant coefficient")
        self._coeffs = cs

    @classmethod
    def _trusted(cls, coeffs) -> Series:
        # coeffs must already be a nonempty sequence of Fraction
        self = object.__new__(cls)
        self._coeffs = tuple(coeffs)
        return self

    @classmethod
    def _from_ints(cls, ints) -> Series:
        return cls._trusted([from_coprime(c, 1) if c else _ZERO for c in ints])

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls._trusted([_ZERO] * (order + 1))

    @classmethod
    def one(cls, order: int) -> Series:
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff: Rational = 1) -> Series:
        """``coeff * q**power`` truncated at ``order`` (zero if power > order)."""
        cs = [_ZERO] * (order + 1)
        if power <= order:
            cs[power] = Fraction(coeff)
        return cls._trusted(cs)

    @classmethod
    def from_terms(cls, terms: dict[int, Rational], order: int) -> Series:
        """Build from a sparse ``{power: coeff}`` map; powers above order are dropped."""
        cs = [_ZERO] * (order + 1)
        for k, c in terms.items():
            if 0 <= k <= order:
                cs[k] += c
        return cls(cs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, k):
        return self._coeffs[k]

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"Series({format_coeffs(self._coeffs)!r}, order={self.order})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"({abs(c)})*{mono}" if c.denominator != 1 else f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            s = "0"
        else:
            s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
            s += "".join(f" {sign} {body}" for sign, body in terms[1:])
        return f"{s} + O(q^{self.order + 1})"

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise DomainError(f"cannot extend a series of order {self.order} to {order}")
        return Series(self._coeffs[: order + 1])

    def scale(self, c: Rational) -> Series:
        c = Fraction(c)
        return Series([c * x for x in self._coeffs])

    def shift(self, k: int) -> Series:
        """Multiply by q**k, keeping the same order."""
        if k < 0:
            raise DomainError("negative shifts are not power series")
        n = self.order
        return Series([_ZERO] * min(k, n + 1) + list(self._coeffs[: max(n + 1 - k, 0)]))

    def substitute_power(self, m: int) -> Series:
        """f(q**m) at the same order."""
        if m < 1:
            raise DomainError("substitution exponent must be positive")
        cs = [_ZERO] * (self.order + 1)
        for k in range(0, self.order // m + 1):
            cs[k * m] = self._coeffs[k]
        return Series(cs)

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return add(self, other)

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return div(self, other)

    def __neg__(self):
        return Series._trusted([-c if c else c for c in self._coeffs])

    def __sub__(self, other):
        return add(self, -other)


def format_coeff(c: Fraction) -> str:
    """``num/den`` with the denominator omitted when it is 1."""
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_coeffs(coeffs) -> str:
    return ", ".join(format_coeff(Fraction(c)) for c in coeffs)


def add(f: Series, g: Series) -> Series:
    n = min(f.order, g.order)
    fc, gc = f.coeffs, g.coeffs
    return Series._trusted([fc[k] + gc[k] if gc[k] else fc[k] for k in range(n + 1)])


def mul(f: Series, g: Series) -> Series:
    n = min(f.order, g.order)
    fi, gi = _integral(f.coeffs), _integral(g.coeffs)
    if fi is not None and gi is not None:
        return Series._from_ints(kernels.convolve(fi, gi, n))
    return Series._trusted(kernels.rconvolve(f.coeffs, g.coeffs, n))


def div(f: Series, g: Series) -> Series:
    """The series h with h * g == f through the common order."""
    g0 = g[0]
    if not g0:
        raise DivisionByNonUnit("divisor has zero constant term")
    n = min(f.order, g.order)
    if abs(g0) == 1:
        fi, gi = _integral(f.coeffs), _integral(g.coeffs)
        if fi is not None and gi is not None:
            return Series._from_ints(kernels.divide(fi, gi, n, int(g0)))
    return Series._trusted(kernels.rdivide(f.coeffs, g.coeffs, n))


def q_derivative(f: Series) -> Series:
    """Apply q d/dq: the coefficient of q**k becomes k * f_k."""
    return Series._trusted([k * c if c else c for k, c in enumerate(f.coeffs)])


def log_derivative(f: Series) -> Series:
    """q f'(q) / f(q)."""
    if not f[0]:
        raise DivisionByNonUnit("logarithmic derivative needs a nonzero constant term")
    return div(q_derivative(f), f)


def log(f: Series) -> Series:
    if f[0] != 1:
        raise LogOfNonOne(f"constant term is {format_coeff(f[0])}, not 1")
    h = log_derivative(f)
    return Series._trusted([_ZERO] + [h[k] / k if h[k] else _ZERO for k in range(1, f.order + 1)])


def exp(f: Series) -> Series:
    if f[0]:
        raise ExpOfNonZero(f"constant term is {format_coeff(f[0])}, not 0")
    return Series._trusted(kernels.rexp(f.coeffs, f.order))


def prod_pow(a: ExponentSequence, order: int) -> Series:
    """prod_{n=1..order} (1 - q**n) ** a(n), truncated at ``order``.

    Evaluated as exp(sum a(n) log(1 - q**n)) so rational exponents work;
    factors with n > order are identically 1 at this precision.
    """
    if order < 0:
        raise DomainError("order must be nonnegative")
    total = [_ZERO] * (order + 1)
    one = Series.one(order)
    for n in range(1, order + 1):
        e = Fraction(a(n))
        if not e:
            continue
        lg = log(one - Series.monomial(n, order))
        for k, c in enumerate(lg.coeffs):
            if c:
                total[k] += e * c
    return exp(Series(total))


def log_deriv_of_product(a: ExponentSequence, order: int) -> Series:
    """Logarithmic derivative of ``prod_pow(a, order)`` by direct divisor sums.

    The coefficient of q**n is -sum_{d | n} d * a(d).  No series division is
    involved, which keeps this independent of :func:`log_derivative`.
    """
    if order < 0:
        raise DomainError("order must be nonnegative")
    weights = [0] + [d * Fraction(a(d)) for d in range(1, order + 1)]
    ones = [0] + [1] * order
    sums = kernels.dirichlet_convolve(ones, weights, order)
    return Series._trusted([_ZERO] + [-s for s in sums[1:]])


def pochhammer(n: int, order: int) -> Series:
    """(q)_n = (1 - q)(1 - q**2)...(1 - q**n) truncated at ``order``."""
    if n < 0:
        raise DomainError("pochhammer index must be nonnegative")
    acc = Series.one(order)
    one = Series.one(order)
    for k in range(1, min(n, order) + 1):
        acc = mul(acc, one - Series.monomial(k, order))
    return acc


def geometric(step: int, order: int) -> Series:
    """1 / (1 - q**step)."""
    return div(Series.one(order), Series.one(order) - Series.monomial(step, order))
