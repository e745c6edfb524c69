"""Series engine: every fast routine against its independent oracle."""
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from cp2lg import series
from cp2lg.series import TruncSeries

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def series_strategy(order, constant=None):
    def build(cs):
        if constant is not None:
            cs = [Fraction(constant)] + cs[1:]
        return TruncSeries(cs, order)
    return st.lists(fractions, min_size=order + 1, max_size=order + 1).map(build)


def tail_strategy(order):
    """g(0) = 0, g'(0) != 0."""
    def build(cs):
        cs = [Fraction(0)] + cs[1:]
        if cs[1] == 0:
            cs[1] = Fraction(1)
        return TruncSeries(cs, order)
    return st.lists(fractions, min_size=order + 1, max_size=order + 1).map(build)


@settings(max_examples=40, deadline=None)
@given(series_strategy(8), tail_strategy(8))
def test_compose_matches_substitution(f, g):
    assert series.compose(f, g) == series.compose_brute(f, g)


@settings(max_examples=40, deadline=None)
@given(series_strategy(8))
def test_reciprocal_matches_long_division(g):
    if g.coeffs[0] == 0:
        with pytest.raises(ZeroDivisionError):
            series.reciprocal(g)
        return
    r = series.reciprocal(g)
    assert r == series.reciprocal_long_division(g)
    assert g * r == TruncSeries.constant(Fraction(1), 8)


@settings(max_examples=30, deadline=None)
@given(tail_strategy(7))
def test_reversion_round_trip(f):
    g = series.reversion(f)
    x = TruncSeries.variable(7)
    assert series.compose(f, g) == x
    assert series.compose(g, f) == x
    assert g == series.lagrange_reversion(f)


@settings(max_examples=30, deadline=None)
@given(series_strategy(7, constant=1), fractions)
def test_power_two_routes(g, s):
    assert series.binomial_power(g, s) == series.power_via_potential(g, s)


@settings(max_examples=30, deadline=None)
@given(series_strategy(6, constant=1))
def test_integer_power_against_multiplication(g):
    assert series.binomial_power(g, 3) == g * g * g
    assert series.binomial_power(g, -1) == series.reciprocal(g)


@settings(max_examples=30, deadline=None)
@given(st.lists(fractions, min_size=9, max_size=9))
def test_bell_recurrence_matches_partitions(x):
    x = tuple(x)
    table = series.bell_table(9, x)
    for n in range(1, 10):
        for k in range(1, n + 1):
            assert table[n][k] == series.bell_partial_enumerated(n, k, x)


@settings(max_examples=30, deadline=None)
@given(tail_strategy(7))
def test_exp_derivative(g):
    h = series.exp_series(g)
    lhs = h.derivative()
    rhs = g.derivative() * h.truncate(6)
    assert lhs == rhs


@settings(max_examples=30, deadline=None)
@given(series_strategy(6), fractions, fractions)
def test_taylor_shift_evaluates_consistently(f, c, u):
    assert series.taylor_shift(f, c)(u) == f(c + u)


@settings(max_examples=25, deadline=None)
@given(series_strategy(6), series_strategy(6))
def test_compose_at_general_constant(f, g):
    # f(g) with g(0) != 0 equals substitution into the shifted polynomial
    out = series.compose_at(f, g)
    shifted = series.taylor_shift(f, g.coeffs[0])
    tail = TruncSeries([Fraction(0)] + list(g.coeffs[1:]))
    assert out == series.compose_brute(shifted, tail)


def test_bell_small_values():
    # B_{4,2}(x) = 4 x1 x3 + 3 x2^2
    x = (Fraction(2), Fraction(3), Fraction(5), Fraction(7))
    assert series.bell_partial(4, 2, x) == 4 * 2 * 5 + 3 * 9
    # complete Bell numbers with all x = 1
    ones = tuple([Fraction(1)] * 8)
    assert [series.bell_complete(n, ones) for n in range(1, 9)] == [1, 2, 5, 15, 52, 203, 877, 4140]


def test_potential_poly_is_binomial():
    # (1 + t)^s: x_1 = 1, others 0, so C_{n,s} = (s)_n
    s = Fraction(1, 3)
    x = (Fraction(1),) + (Fraction(0),) * 5
    for n in range(1, 6):
        assert series.potential_poly(n, s, x) == series.falling_factorial(s, n)


def test_exp_of_x_is_exponential():
    e = series.exp_series(TruncSeries.variable(8))
    assert e.coeffs == tuple(Fraction(1, factorial(n)) for n in range(9))


def test_errors():
    with pytest.raises(ValueError):
        series.reversion(TruncSeries([1, 1], 3))
    with pytest.raises(ValueError):
        series.reversion(TruncSeries([0, 0, 1], 3))
    with pytest.raises(ValueError):
        series.binomial_power(TruncSeries([2, 1], 3), Fraction(1, 2))
    with pytest.raises(ValueError):
        series.bell_partial(3, 1, (1, 2))
    with pytest.raises(ValueError):
        TruncSeries([1], -1)


def test_mixed_order_truncates_to_smaller():
    a = TruncSeries([1, 1, 1], 2)
    b = TruncSeries([1, 1, 1, 1, 1], 4)
    assert (a * b).order == 2
