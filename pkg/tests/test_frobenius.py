"""Canonical coordinates and the transition matrix."""
import cmath
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cp2lg import frobenius

# exact canonical series coefficients (derived by the cubic route, frozen;
# the numeric contour fit is the independent oracle)
FROZEN = (Fraction(3), Fraction(1), Fraction(1, 6), Fraction(5, 54), Fraction(11, 324),
          Fraction(1, 90), Fraction(119, 21870), Fraction(4301, 1837080))


def test_exact_series_frozen():
    assert tuple(frobenius.canonical_series_exact(8)) == FROZEN


def test_exact_series_against_contour_fit():
    fit = frobenius.canonical_coefficients_fit(6, 0.4, order=12)
    for a, b in zip(fit, FROZEN):
        assert abs(a - float(b)) < 1e-9


params = st.tuples(st.floats(-1, 1), st.floats(0.3, 2.0), st.floats(-3.0, 3.0))


@settings(max_examples=10, deadline=None)
@given(params)
def test_small_phase_roots(p):
    t1, r, arg = p
    Q = r * cmath.exp(1j * arg)
    u = frobenius.canonical_numeric(t1, Q, 0, order=8)
    q13 = frobenius.principal_cube_root(Q)
    for k, w in enumerate(frobenius.LABEL_PHASES):
        assert abs(u[k] - (t1 + 3 * q13 * w)) < 1e-10


def test_series_against_tracking_order_three():
    coeffs = [complex(c) for c in FROZEN]
    errs = []
    for t3 in (1e-2, 1e-3):
        u = frobenius.canonical_numeric(0.3, 1.0, t3, order=12)
        s = frobenius.evaluate_canonical_series(coeffs, 0.3, 1.0, t3, order=3)
        errs.append(max(abs(a - b) for a, b in zip(u, s)))
    slope = np.log10(errs[0] / errs[1])
    assert slope >= 3.5


def test_spectral_residual_small():
    u = frobenius.canonical_numeric(0.1, 1.2, 0.05, order=12)
    for uk in u:
        assert frobenius.spectral_residual(0.1, 1.2, 0.05, uk, order=12) < 1e-10


def test_transition_matrix_two_routes():
    closed = frobenius.transition_matrix(0.2, 1.1, 0.05, order=12)
    eigen = frobenius.transition_matrix_eigen(0.2, 1.1, 0.05, order=12)
    for i in range(3):
        # rows agree up to sign
        d = min(np.max(np.abs(closed[i] - eigen[i])), np.max(np.abs(closed[i] + eigen[i])))
        assert d < 1e-8
    eta = frobenius.ETA
    assert np.max(np.abs(closed.T @ closed - eta)) < 1e-8


def test_small_phase_psi_is_orthogonal():
    psi = frobenius.small_phase_psi(1.7)
    assert np.max(np.abs(psi.T @ psi - frobenius.ETA)) < 1e-12


def test_transition_matrix_singular_at_zero():
    with pytest.raises(ValueError):
        frobenius.transition_matrix(0, 1, 0)


def test_cross_ratio_two_routes():
    coeffs = frobenius.canonical_series_exact(7)
    assert frobenius.cross_ratio_series(coeffs, 5) == frobenius.cross_ratio_direct(coeffs, 5)


def test_a1_cubed_reconciliation():
    _, n1 = frobenius.printed_recursion(6, Fraction(3))
    assert n1["true_a1_cubed"] == 27
    assert n1["recursion_a1_cubed"] == 3
    assert n1["triple_sum_a1_cubed"] == 9
