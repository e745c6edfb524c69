"""Exact arithmetic in Q(zeta_12)."""
import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cp2lg.cyclotomic import I, SQRT3, SQRT_M3, ZETA3, ZETA6, Cyclo

fr = st.fractions(min_value=-6, max_value=6, max_denominator=9)
cyclos = st.tuples(fr, fr, fr, fr).map(Cyclo)


def test_constants():
    assert ZETA3 ** 3 == 1
    assert ZETA6 ** 6 == 1
    assert ZETA6 ** 2 == ZETA3
    assert 1 + ZETA3 + ZETA3 ** 2 == 0
    assert SQRT3 * SQRT3 == 3
    assert SQRT_M3 * SQRT_M3 == -3
    assert I * I == -1
    assert ZETA3 == (-1 + SQRT_M3) / 2
    assert abs(complex(ZETA3) - cmath.exp(2j * cmath.pi / 3)) < 1e-15


@settings(max_examples=60, deadline=None)
@given(cyclos, cyclos, cyclos)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert abs(complex(a * b) - complex(a) * complex(b)) < 1e-9 * (1 + abs(complex(a) * complex(b)))


@settings(max_examples=60, deadline=None)
@given(cyclos)
def test_inverse(a):
    if not a:
        with pytest.raises(ZeroDivisionError):
            a.inverse()
        return
    assert a * a.inverse() == 1
    assert a / a == 1


@settings(max_examples=60, deadline=None)
@given(fr, fr, fr, fr)
def test_coordinates_round_trip(a, b, c, d):
    x = Cyclo.from_coordinates(a, b, c, d)
    assert x.coordinates() == (a, b, c, d)


@settings(max_examples=40, deadline=None)
@given(cyclos)
def test_conjugate_matches_complex(a):
    assert abs(complex(a.conjugate()) - complex(a).conjugate()) < 1e-9 * (1 + abs(complex(a)))


def test_hash_and_rational_equality():
    assert Cyclo(Fraction(1, 2)) == Fraction(1, 2)
    assert hash(Cyclo(3)) == hash(Cyclo((3, 0, 0, 0)))
