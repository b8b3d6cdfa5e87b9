import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qmobius import fps
from qmobius.errors import DivisionByNonUnit, ExpOfNonZero, LogOfNonOne
from qmobius.fps import Series
from qmobius.partitions import distinct_over_index

from oracles import divisors_naive, exp_by_powers, long_division, naive_mul

F = Fraction


def S(*cs):
    return Series(cs)


small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def series_st(min_order=0, max_order=12, unit=None):
    def build(cs):
        cs = list(cs)
        if unit == "one":
            cs[0] = F(1)
        elif unit == "zero":
            cs[0] = F(0)
        elif unit == "nonzero" and cs[0] == 0:
            cs[0] = F(1)
        return Series(cs)
    return st.lists(small_rationals, min_size=min_order + 1, max_size=max_order + 1).map(build)


# --- construction -----------------------------------------------------------

def test_coefficients_are_normalized_fractions():
    s = Series([2, F(4, 6), F(-3, -9)])
    assert s.coeffs == (F(2), F(2, 3), F(1, 3))
    assert all(c.denominator > 0 for c in s)
    assert s.order == 2


def test_equality_needs_equal_orders():
    assert S(1, 0) != S(1, 0, 0)
    assert S(1, 2) == Series([F(2, 2), 2])


# --- add / mul ---------------------------------------------------------------

def test_add_examples():
    assert S(1, 1) + S(1, -1) == S(2, 0)
    f = S(1, 2, 3, 4)
    assert f + Series.zero(2) == f.truncate(2)
    assert S(0, 1, 2) + S(0, 1, 1) == S(0, 2, 3)


def test_mul_examples():
    assert S(1, 1, 0) * S(1, -1, 0) == S(1, 0, -1)
    f = S(F(1, 2), -3, 7)
    assert f * Series.one(2) == f
    assert S(1, -1, 0, 0) * S(1, 1, 1, 1) == S(1, 0, 0, 0)


def test_mul_matches_naive_product():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(0, 15)
        a = [F(rng.randint(-4, 4), rng.randint(1, 5)) for _ in range(n + 1)]
        b = [F(rng.randint(-4, 4), rng.randint(1, 5)) for _ in range(n + 1)]
        assert list(fps.mul(Series(a), Series(b)).coeffs) == naive_mul(a, b, n)


@settings(max_examples=60, deadline=None)
@given(series_st(), series_st(), series_st())
def test_ring_laws(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


# --- div -----------------------------------------------------------------------

def test_div_examples():
    n = 8
    geo = fps.div(Series.one(n), Series.one(n) - Series.monomial(1, n))
    assert geo == Series([1] * (n + 1))
    f = S(3, 1, 4, 1, 5)
    assert f / f == Series.one(4)
    one_minus_q = Series.one(n) - Series.monomial(1, n)
    h = fps.div(Series.monomial(2, n), one_minus_q * one_minus_q)
    assert list(h.coeffs) == long_division([0, 0, 1] + [0] * 6, [1, -2, 1] + [0] * 6, n)
    assert h.coeffs == tuple(F(0) if k < 2 else F(k - 1) for k in range(n + 1))
    assert h * (one_minus_q * one_minus_q) == Series.monomial(2, n)


def test_div_by_nonunit_raises():
    with pytest.raises(DivisionByNonUnit):
        fps.div(S(1, 1), S(0, 1))


@settings(max_examples=60, deadline=None)
@given(series_st(max_order=15), series_st(max_order=15, unit="nonzero"))
def test_div_round_trip(f, g):
    n = min(f.order, g.order)
    assert fps.div(f, g) * g == f.truncate(n)


# --- q-derivative / log-derivative ----------------------------------------

def test_q_derivative_examples():
    assert fps.q_derivative(S(1, 1, 1)) == S(0, 1, 2)
    assert fps.q_derivative(S(7, 0, 0)) == Series.zero(2)
    assert fps.q_derivative(Series.monomial(5, 6)) == Series.monomial(5, 6, 5)


def test_log_derivative_examples():
    n = 10
    assert fps.log_derivative(Series.one(n) - Series.monomial(1, n)) == Series([0] + [-1] * n)
    psi = fps.prod_pow(distinct_over_index, 6)
    assert fps.log_derivative(psi) == S(0, -1, -2, -3, -4, -4, -8)


def test_log_derivative_of_nonunit_raises():
    with pytest.raises(DivisionByNonUnit):
        fps.log_derivative(S(0, 1, 2))


@settings(max_examples=30, deadline=None)
@given(series_st(min_order=5, max_order=30, unit="one"), series_st(min_order=5, max_order=30, unit="one"))
def test_leibniz(f, g):
    assert fps.log_derivative(f * g) == fps.log_derivative(f) + fps.log_derivative(g)


# --- log / exp -------------------------------------------------------------------

def test_log_examples():
    n = 9
    assert fps.log(Series.one(n) - Series.monomial(1, n)) == Series([0] + [F(-1, m) for m in range(1, n + 1)])
    assert fps.log(Series.one(n)) == Series.zero(n)
    assert fps.log(fps.exp(S(0, 1, 1, 0, 0, 0))) == S(0, 1, 1, 0, 0, 0)


def test_exp_examples():
    n = 10
    assert fps.exp(Series.zero(n)) == Series.one(n)
    one_minus_q = Series.one(n) - Series.monomial(1, n)
    assert fps.exp(fps.log(one_minus_q)) == one_minus_q
    assert fps.exp(Series.monomial(1, n)) == Series([F(1, factorial(k)) for k in range(n + 1)])


def test_exp_matches_power_series_oracle():
    rng = random.Random(9)
    for _ in range(5):
        n = 8
        f = [F(0)] + [F(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(n)]
        assert list(fps.exp(Series(f)).coeffs) == exp_by_powers(f, n)


def test_log_exp_domain_errors():
    with pytest.raises(LogOfNonOne):
        fps.log(S(2, 1))
    with pytest.raises(ExpOfNonZero):
        fps.exp(S(1, 1))


@settings(max_examples=25, deadline=None)
@given(series_st(min_order=1, max_order=30, unit="zero"))
def test_log_exp_inverse_on_zero_constant(f):
    assert fps.log(fps.exp(f)) == f


@settings(max_examples=25, deadline=None)
@given(series_st(min_order=1, max_order=30, unit="one"))
def test_exp_log_inverse_on_unit_constant(f):
    assert fps.exp(fps.log(f)) == f


# --- infinite products ----------------------------------------------------------

def test_prod_pow_euler_and_jacobi():
    euler = fps.prod_pow(lambda n: 1, 12)
    assert euler == Series.from_terms({0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1}, 12)
    jac = fps.prod_pow(lambda n: 3, 10)
    assert jac == Series.from_terms({0: 1, 1: -3, 3: 5, 6: -7, 10: 9}, 10)


def test_prod_pow_distinct_exponents():
    psi = fps.prod_pow(distinct_over_index, 6)
    assert psi == S(1, -1, F(-1, 2), F(-1, 6), F(1, 24), F(43, 120), F(-233, 720))


def test_prod_pow_integer_exponents_match_expanded_product():
    n = 15
    rng = random.Random(4)
    exps = {k: rng.randint(0, 3) for k in range(1, n + 1)}
    expanded = Series.one(n)
    for k, e in exps.items():
        for _ in range(e):
            expanded = expanded * (Series.one(n) - Series.monomial(k, n))
    assert fps.prod_pow(exps.__getitem__, n) == expanded


def test_log_deriv_of_product_examples():
    assert fps.log_deriv_of_product(lambda n: 1, 6) == S(0, -1, -3, -4, -7, -6, -12)
    sigma = [sum(divisors_naive(k)) for k in range(1, 7)]
    assert fps.log_deriv_of_product(lambda n: 1, 6).coeffs[1:] == tuple(F(-s) for s in sigma)
    assert fps.log_deriv_of_product(distinct_over_index, 6) == S(0, -1, -2, -3, -4, -4, -8)


def test_lemma1_on_random_integer_sequences():
    rng = random.Random(11)
    for _ in range(50):
        vals = [rng.randint(-3, 3) for _ in range(41)]
        a = lambda n: vals[n]  # noqa: E731
        assert fps.log_deriv_of_product(a, 40) == fps.log_derivative(fps.prod_pow(a, 40))


def test_pochhammer_examples():
    assert fps.pochhammer(0, 5) == Series.one(5)
    assert fps.pochhammer(1, 5) == Series.one(5) - Series.monomial(1, 5)
    assert fps.pochhammer(2, 3) == S(1, -1, -1, 1)
    assert fps.pochhammer(9, 3) == fps.pochhammer(3, 3)


def test_str_rendering():
    assert str(S(1, -1, F(-1, 2))) == "1 - q - (1/2)*q^2 + O(q^3)"
    assert str(Series.zero(1)) == "0 + O(q^2)"


def test_shift_and_substitute():
    f = S(1, 2, 3, 4)
    assert f.shift(2) == S(0, 0, 1, 2)
    assert f.shift(9) == Series.zero(3)
    assert f.substitute_power(2) == S(1, 0, 2, 0)
