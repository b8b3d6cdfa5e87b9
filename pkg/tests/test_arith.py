import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qmobius import arith
from qmobius.arith import ArithmeticFunction, IndexedFamily
from qmobius.errors import DomainError
from qmobius.partitions import count_by_parts, count_distinct

from oracles import divisors_naive, mobius_by_factoring


@pytest.mark.parametrize("n,expected", [(1, 1), (12, 0), (30, -1), (2, -1), (6, 1), (49, 0)])
def test_mobius_examples(n, expected):
    assert arith.mobius(n) == expected


def test_mobius_beyond_sieve_uses_trial_division():
    for n in [arith.SIEVE_BOUND + k for k in (1, 2, 3, 7, 11)] + [2 * 3 * 5 * 7 * 11 * 13 * 17, 10**9 + 7]:
        assert arith.mobius(n) == mobius_by_factoring(n)


@pytest.mark.parametrize("bad", [0, -3, 1.5, True])
def test_domain_errors(bad):
    with pytest.raises(DomainError):
        arith.mobius(bad)
    with pytest.raises(DomainError):
        arith.divisors(bad)
    with pytest.raises(DomainError):
        arith.mobius_sum(bad)


def test_mobius_agrees_with_factoring():
    assert [arith.mobius(n) for n in range(1, 2001)] == [mobius_by_factoring(n) for n in range(1, 2001)]


def test_mobius_multiplicative_sampled():
    rng = random.Random(0)
    checked = 0
    while checked < 500:
        m, n = rng.randint(1, 1000), rng.randint(1, 1000)
        if gcd(m, n) == 1:
            assert arith.mobius(m * n) == arith.mobius(m) * arith.mobius(n)
            checked += 1


@pytest.mark.parametrize("n,expected", [(1, [1]), (6, [1, 2, 3, 6]), (49, [1, 7, 49])])
def test_divisors_examples(n, expected):
    assert arith.divisors(n) == expected


def test_divisors_match_naive():
    for n in range(1, 400):
        assert arith.divisors(n) == divisors_naive(n)


def test_mobius_sum_vanishes_except_at_one():
    assert arith.mobius_sum(1) == 1
    assert arith.mobius_sum(6) == 0
    assert arith.mobius_sum(360) == 0
    table = arith.mobius_table(10**4)
    sums = [0] * (10**4 + 1)
    for d in range(1, 10**4 + 1):
        if table[d]:
            for m in range(d, 10**4 + 1, d):
                sums[m] += table[d]
    assert sums[1:] == [1] + [0] * (10**4 - 1)


def test_divisor_transform_examples():
    q = [count_distinct(n) for n in range(1, 7)]
    assert arith.divisor_transform(q, 6).values == (1, 2, 3, 4, 4, 8)
    assert arith.divisor_transform(lambda n: int(n == 1), 6).values == (1,) * 6
    assert arith.divisor_transform(lambda n: 1, 6).values == (1, 2, 2, 3, 2, 4)
    assert arith.divisor_transform(lambda n: 1, 6).values == tuple(len(divisors_naive(n)) for n in range(1, 7))


def test_mobius_invert_examples():
    assert arith.mobius_invert([1, 2, 3, 4, 4, 8], 6).values == (1, 1, 2, 2, 3, 4)
    assert arith.mobius_invert(lambda n: 1, 6).values == (1, 0, 0, 0, 0, 0)


def test_mobius_invert_matches_definition():
    rng = random.Random(7)
    g = [rng.randint(-20, 20) for _ in range(50)]
    f = arith.mobius_invert(g, 50)
    for n in range(1, 51):
        assert f(n) == sum(mobius_by_factoring(d) * g[n // d - 1] for d in divisors_naive(n))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-10**6, 10**6), min_size=200, max_size=200))
def test_transforms_are_mutually_inverse(vals):
    assert arith.divisor_transform(arith.mobius_invert(vals, 200), 200).values == tuple(vals)
    assert arith.mobius_invert(arith.divisor_transform(vals, 200), 200).values == tuple(vals)


def test_arithmetic_function_bounds():
    f = ArithmeticFunction([5, 6, 7])
    assert f(1) == 5 and f[3] == 7 and f.bound == 3
    with pytest.raises(DomainError):
        arith.divisor_transform(f, 4)
    with pytest.raises(DomainError):
        f(0)


# --- indexed families -------------------------------------------------------------

parts_family = IndexedFamily(count_by_parts)


def test_family_hat_examples():
    assert arith.family_hat(parts_family, 1, 5) == 7
    assert arith.family_hat(parts_family, 2, 6) == 3 + 2 + 1
    assert arith.family_hat(parts_family, 9, 4) == 0


def test_family_invert_recovers_single_part_counts():
    hat = parts_family.hat()
    assert [arith.family_invert(hat, 1, n) for n in range(1, 51)] == [1] * 50
    assert arith.family_invert(hat, 7, 3) == 0


def test_family_threshold_is_enforced():
    calls = []
    fam = IndexedFamily(lambda a, n: calls.append((a, n)) or 1)
    assert fam(5, 3) == 0
    assert calls == []


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_family_round_trip(seed):
    rng = random.Random(seed)
    table = {(a, n): rng.randint(-50, 50) for n in range(1, 31) for a in range(1, n + 1)}
    f = IndexedFamily(lambda a, n: table[(a, n)])
    fhat = f.hat()
    for n in range(1, 31):
        for a in range(1, 11):
            assert arith.family_invert(fhat, a, n) == f(a, n)
