"""Named identities, each checked coefficientwise through two independent routes.

Every verifier returns a :class:`VerificationReport`.  A verifier may check
several claims; the report carries the lowest-power mismatch across all of
them.  Input tables (partition counts and the like) can be perturbed through
the ``corrupt`` argument, which is how the fault-injection tests confirm that
a broken input is actually caught.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from . import arith, partitions
from .fps import ExponentSequence, Series, div, log_deriv_of_product, log_derivative, prod_pow

#: Combinatorial cross-checks enumerate partitions up to this order unless told otherwise.
DEFAULT_CROSSCHECK_ORDER = 40

Corruption = Mapping[str, Mapping[int, int]]

PARAMETERIZED_TABLES = ("pa", "paHat", "ba", "baHat")
PLAIN_TABLES = ("Q", "Qhat", "p")


@dataclass(frozen=True)
class Mismatch:
    power: int
    lhs: Fraction
    rhs: Fraction
    claim: str


@dataclass(frozen=True)
class VerificationReport:
    name: str
    order: int
    status: str
    params: dict = field(default_factory=dict)
    claims: tuple[str, ...] = ()
    first_mismatch: Mismatch | None = None
    notes: tuple[str, ...] = ()
    diffs: tuple[Mismatch, ...] = ()
    error: str | None = None
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def label(self) -> str:
        if not self.params:
            return self.name
        inner = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.name}[{inner}]"


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    description: str
    parameter: str | None
    run: Callable[..., VerificationReport] = field(repr=False)
    max_order_supported: int | None = None


def table_key(name: str, level: int | None = None) -> str:
    return name if level is None else f"{name}@{level}"


def normalize_corruption(corrupt: Corruption | None) -> dict[str, dict[int, int]]:
    """Validate table names; a bare parameterized name means level 1."""
    out: dict[str, dict[int, int]] = {}
    for key, edits in (corrupt or {}).items():
        name, _, level = key.partition("@")
        if name in PLAIN_TABLES and not level:
            norm = name
        elif name in PARAMETERIZED_TABLES:
            lvl = int(level) if level else 1
            if lvl < 1:
                raise ValueError(f"table level must be positive: {key!r}")
            norm = table_key(name, lvl)
        else:
            raise ValueError(f"unknown input table {key!r}")
        slot = out.setdefault(norm, {})
        for idx, delta in edits.items():
            slot[int(idx)] = slot.get(int(idx), 0) + delta
    return out


class _Tables:
    """Lazily built, optionally corrupted input tables, indexed by n (index 0 unused)."""

    def __init__(self, order, corrupt):
        self.order = order
        self.corrupt = normalize_corruption(corrupt)
        self._cache = {}

    def get(self, key, build):
        if key not in self._cache:
            values = list(build())
            for idx, delta in self.corrupt.get(key, {}).items():
                if 0 <= idx < len(values):
                    values[idx] += delta
            self._cache[key] = values
        return self._cache[key]


def _compare(claim, lhs, rhs, start=0):
    out = []
    for k in range(start, min(len(lhs), len(rhs))):
        if lhs[k] != rhs[k]:
            out.append(Mismatch(k, Fraction(lhs[k]), Fraction(rhs[k]), claim))
    return out


def _report(name, order, params, claims, mismatches, started, notes=(), full_diff=False):
    mismatches = sorted(mismatches, key=lambda m: (m.power, claims.index(m.claim)))
    return VerificationReport(
        name=name,
        order=order,
        status="fail" if mismatches else "pass",
        params=dict(params),
        claims=tuple(claims),
        first_mismatch=mismatches[0] if mismatches else None,
        notes=tuple(notes),
        diffs=tuple(mismatches) if full_diff else (),
        elapsed=time.perf_counter() - started,
    )


def _crosscheck_order(order, requested):
    cap = DEFAULT_CROSSCHECK_ORDER if requested is None else requested
    return max(0, min(order, cap, partitions.oracle_limit()))


def _crosscheck_note(order, upto):
    if upto >= order:
        return f"combinatorial cross-check through n={upto}"
    return f"combinatorial cross-check through n={upto}; series-only above"


def _check_order(order):
    if not isinstance(order, int) or order < 1:
        raise ValueError(f"order must be a positive integer, got {order!r}")


# ---------------------------------------------------------------------------
# verifiers

LEMMA1_SEQUENCES: dict[str, ExponentSequence] = {
    "one": lambda n: 1,
    "Q/n": partitions.distinct_over_index,
    "mobius": arith.mobius,
}


def verify_lemma1(a: ExponentSequence | str, order: int, *, label: str | None = None,
                  full_diff: bool = False) -> VerificationReport:
    """Log-derivative of prod (1 - q**n)**a(n) against direct divisor sums."""
    _check_order(order)
    started = time.perf_counter()
    if isinstance(a, str):
        label = label or a
        a = LEMMA1_SEQUENCES[a]
    lhs = log_derivative(prod_pow(a, order))
    rhs = log_deriv_of_product(a, order)
    claims = ["log-derivative"]
    params = {"sequence": label} if label else {}
    return _report("lemma1", order, params, claims, _compare(claims[0], lhs, rhs), started,
                   full_diff=full_diff)


def verify_theorem1(order: int, *, corrupt: Corruption | None = None, crosscheck: int | None = None,
                    full_diff: bool = False) -> VerificationReport:
    """Log-derivative of the distinct-parts product, and Möbius inversion of Q-hat."""
    _check_order(order)
    started = time.perf_counter()
    tables = _Tables(order, corrupt)
    q = tables.get("Q", lambda: [0] + [partitions.count_distinct(n) for n in range(1, order + 1)])
    qhat = tables.get("Qhat", lambda: [0] + list(partitions.series_fq_hat(order).coeffs[1:]))

    claims = ["log-derivative", "mobius-inversion", "combinatorial"]
    psi = prod_pow(lambda n: Fraction(q[n], n), order)
    mismatches = _compare("log-derivative", log_derivative(psi), [-c for c in qhat])

    inverted = [0, *arith.mobius_invert(qhat[1:], order).values]
    mismatches += _compare("mobius-inversion", inverted, q, start=1)

    upto = _crosscheck_order(order, crosscheck)
    enum_q = [0] + [partitions.count_distinct_enumerated(n) for n in range(1, upto + 1)]
    enum_qhat = [0] + [partitions.count_uniform_multiplicity(n) for n in range(1, upto + 1)]
    mismatches += _compare("combinatorial", enum_q, q, start=1)
    mismatches += _compare("combinatorial", enum_qhat, qhat, start=1)
    return _report("theorem1", order, {}, claims, mismatches, started,
                   notes=[_crosscheck_note(order, upto)], full_diff=full_diff)


def verify_theorem2(a: int, order: int, *, corrupt: Corruption | None = None,
                    full_diff: bool = False) -> VerificationReport:
    """Exactly-a-parts counts recovered from the multiple-of-a counts, series and scalar forms."""
    _check_order(order)
    if a < 1:
        raise ValueError("a must be positive")
    started = time.perf_counter()
    tables = _Tables(order, corrupt)

    def hat_table(b):
        return tables.get(table_key("paHat", b),
                          lambda: [0] + [partitions.count_by_parts_hat(b, n) for n in range(1, order + 1)])

    pa = tables.get(table_key("pa", a),
                    lambda: [0] + [partitions.count_by_parts(a, n) for n in range(1, order + 1)])

    claims = ["series", "scalar", "generating-function"]
    # P-hat_{aj} starts at q**(aj), so j <= order // a covers every coefficient
    rhs = [Fraction(0)] * (order + 1)
    for j in range(1, order // a + 1):
        m = arith.mobius(j)
        if m:
            t = hat_table(a * j)
            for k in range(1, order + 1):
                rhs[k] += m * t[k]
    lhs = partitions.series_pa(a, order)
    mismatches = _compare("series", lhs, rhs)

    fhat = arith.IndexedFamily(lambda b, n: hat_table(b)[n])
    recovered = [0] + [arith.family_invert(fhat, a, n) for n in range(1, order + 1)]
    mismatches += _compare("scalar", pa, recovered, start=1)
    mismatches += _compare("generating-function", partitions.series_pa_hat(a, order), hat_table(a), start=1)

    if a == 1:
        claims.append("closed-form")
        closed = [Fraction(0)] + [Fraction(1)] * order
        mismatches += _compare("closed-form", closed, rhs)
        mismatches += _compare("closed-form", closed, recovered, start=1)
    return _report("theorem2", order, {"a": a}, claims, mismatches, started, full_diff=full_diff)


def verify_theorem3(a: int, order: int, *, corrupt: Corruption | None = None, crosscheck: int | None = None,
                    full_diff: bool = False) -> VerificationReport:
    """Durfee-rectangle series: hat sum, Möbius inversion, and agreement with enumeration."""
    _check_order(order)
    if a < 1:
        raise ValueError("a must be positive")
    started = time.perf_counter()
    tables = _Tables(order, corrupt)
    claims = ["hat-sum", "series-inversion", "combinatorial"]

    # B_b and B-hat_b start at q**(1 + b): only b <= order - 1 contribute
    top = (order - 1) // a
    b_a = partitions.series_b(a, order)
    bhat_a = partitions.series_b_hat(a, order)

    hat_sum = Series.zero(order)
    for j in range(1, top + 1):
        hat_sum = hat_sum + partitions.series_b(a * j, order)
    mismatches = _compare("hat-sum", bhat_a, hat_sum)

    inversion = Series.zero(order)
    for j in range(1, top + 1):
        m = arith.mobius(j)
        if m:
            inversion = inversion + partitions.series_b_hat(a * j, order).scale(m)
    mismatches += _compare("series-inversion", b_a, inversion)

    upto = _crosscheck_order(order, crosscheck)

    def b_table(b):
        return tables.get(table_key("ba", b),
                          lambda: [0] + [partitions.count_durfee(b, n) for n in range(1, upto + 1)])

    def bhat_table(b):
        return tables.get(table_key("baHat", b),
                          lambda: [0] + [partitions.count_durfee_hat(b, n) for n in range(1, upto + 1)])

    if upto >= 1:
        cb, cbhat = b_table(a), bhat_table(a)
        mismatches += _compare("combinatorial", cb, b_a.coeffs[: upto + 1], start=1)
        mismatches += _compare("combinatorial", cbhat, bhat_a.coeffs[: upto + 1], start=1)
        enum_hat_sum = [0] * (upto + 1)
        for j in range(1, upto // a + 1):
            t = b_table(a * j)
            for n in range(1, upto + 1):
                enum_hat_sum[n] += t[n]
        mismatches += _compare("combinatorial", cbhat, enum_hat_sum, start=1)
        fhat = arith.IndexedFamily(lambda b, n: bhat_table(b)[n])
        recovered = [0] + [arith.family_invert(fhat, a, n) for n in range(1, upto + 1)]
        mismatches += _compare("combinatorial", cb, recovered, start=1)
    return _report("theorem3", order, {"a": a}, claims, mismatches, started,
                   notes=[_crosscheck_note(order, upto)], full_diff=full_diff)


def pentagonal_series(order: int) -> Series:
    """sum over all integers k of (-1)**k q**(k(3k-1)/2)."""
    terms = {}
    k = 0
    while True:
        low = k * (3 * k - 1) // 2
        high = k * (3 * k + 1) // 2  # exponent for -k
        if low > order and high > order:
            break
        terms[low] = (-1) ** k
        if k:
            terms[high] = (-1) ** k
        k += 1
    return Series.from_terms(terms, order)


def jacobi_series(order: int) -> Series:
    """sum_{n >= 0} (-1)**n (2n + 1) q**(n(n+1)/2)."""
    terms = {}
    n = 0
    while n * (n + 1) // 2 <= order:
        terms[n * (n + 1) // 2] = (-1) ** n * (2 * n + 1)
        n += 1
    return Series.from_terms(terms, order)


def verify_euler_pentagonal(order: int, *, full_diff: bool = False) -> VerificationReport:
    _check_order(order)
    started = time.perf_counter()
    claims = ["product"]
    mism = _compare("product", prod_pow(lambda n: 1, order), pentagonal_series(order))
    return _report("euler-pentagonal", order, {}, claims, mism, started, full_diff=full_diff)


def verify_jacobi(order: int, *, full_diff: bool = False) -> VerificationReport:
    _check_order(order)
    started = time.perf_counter()
    claims = ["product"]
    mism = _compare("product", prod_pow(lambda n: 3, order), jacobi_series(order))
    return _report("jacobi", order, {}, claims, mism, started, full_diff=full_diff)


def verify_euler_durfee(order: int, *, full_diff: bool = False) -> VerificationReport:
    """1 / prod (1 - q**n) against 1 + sum q**(n*n) / (q)_n**2."""
    _check_order(order)
    started = time.perf_counter()
    claims = ["durfee-sum"]
    inverse = div(Series.one(order), prod_pow(lambda n: 1, order))
    mism = _compare("durfee-sum", inverse, partitions.series_p(order))
    return _report("euler-durfee", order, {}, claims, mism, started, full_diff=full_diff)


def verify_partition_numbers(order: int, *, corrupt: Corruption | None = None,
                             full_diff: bool = False) -> VerificationReport:
    """Pentagonal-recurrence p(n) against the coefficients of 1 / prod (1 - q**n)."""
    _check_order(order)
    started = time.perf_counter()
    tables = _Tables(order, corrupt)
    p = tables.get("p", lambda: [partitions.count_partitions(n) for n in range(order + 1)])
    claims = ["recurrence"]
    inverse = div(Series.one(order), prod_pow(lambda n: 1, order))
    mism = _compare("recurrence", p, inverse)
    return _report("partition-numbers", order, {}, claims, mism, started, full_diff=full_diff)


REGISTRY: dict[str, IdentityCheck] = {
    c.name: c
    for c in [
        IdentityCheck("lemma1", "log-derivative of an infinite product equals minus a divisor sum",
                      "sequence", verify_lemma1),
        IdentityCheck("theorem1", "distinct-parts product and uniform-multiplicity partitions",
                      None, verify_theorem1),
        IdentityCheck("theorem2", "partitions into exactly a parts by Möbius inversion", "a",
                      verify_theorem2),
        IdentityCheck("theorem3", "Durfee-rectangle series by Möbius inversion", "a", verify_theorem3),
        IdentityCheck("euler-pentagonal", "pentagonal number theorem", None, verify_euler_pentagonal),
        IdentityCheck("jacobi", "cube of the Euler product", None, verify_jacobi),
        IdentityCheck("euler-durfee", "partition generating function as a Durfee-square sum", None,
                      verify_euler_durfee),
        IdentityCheck("partition-numbers", "pentagonal recurrence for p(n) against the product", None,
                      verify_partition_numbers),
    ]
}


def _error_report(name, order, params, exc, started):
    return VerificationReport(name=name, order=order, status="fail", params=dict(params),
                              error=f"{type(exc).__name__}: {exc}",
                              elapsed=time.perf_counter() - started)


def run_check(name: str, order: int, *, a: int | None = None, sequence: str | None = None,
              corrupt: Corruption | None = None, crosscheck: int | None = None,
              full_diff: bool = False) -> VerificationReport:
    """Run one registered identity; exceptions become failed reports."""
    check = REGISTRY[name]
    params = {}
    if check.parameter == "a":
        params["a"] = a
    elif check.parameter == "sequence":
        params["sequence"] = sequence
    started = time.perf_counter()
    try:
        if name == "lemma1":
            return verify_lemma1(sequence, order, full_diff=full_diff)
        if name == "theorem1":
            return verify_theorem1(order, corrupt=corrupt, crosscheck=crosscheck, full_diff=full_diff)
        if name == "theorem2":
            return verify_theorem2(a, order, corrupt=corrupt, full_diff=full_diff)
        if name == "theorem3":
            return verify_theorem3(a, order, corrupt=corrupt, crosscheck=crosscheck, full_diff=full_diff)
        if name == "partition-numbers":
            return verify_partition_numbers(order, corrupt=corrupt, full_diff=full_diff)
        return check.run(order, full_diff=full_diff)
    except Exception as exc:  # reported, not raised: one broken check must not hide the rest
        return _error_report(name, order, params, exc, started)


def run_all(order: int, *, a_values: Iterable[int] = range(1, 6),
            sequences: Sequence[str] = tuple(LEMMA1_SEQUENCES), names: Iterable[str] | None = None,
            corrupt: Corruption | None = None, crosscheck: int | None = None,
            full_diff: bool = False) -> list[VerificationReport]:
    """Every registered identity over the parameter grid, in registry order."""
    a_values = list(a_values)
    selected = list(REGISTRY) if names is None else list(names)
    for name in selected:
        if name not in REGISTRY:
            raise KeyError(name)
    corrupt = normalize_corruption(corrupt)
    reports = []
    for name in REGISTRY:
        if name not in selected:
            continue
        check = REGISTRY[name]
        common = dict(corrupt=corrupt, crosscheck=crosscheck, full_diff=full_diff)
        if check.parameter == "a":
            for a in a_values:
                reports.append(run_check(name, order, a=a, **common))
        elif check.parameter == "sequence":
            for seq in sequences:
                reports.append(run_check(name, order, sequence=seq, **common))
        else:
            reports.append(run_check(name, order, **common))
    return reports
