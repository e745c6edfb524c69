"""Landau-Ginzburg superpotentials, small and big."""
import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cp2lg import frobenius, modular
from cp2lg import superpotential as sp
from cp2lg.cli import eisenstein_text


@pytest.fixture(scope="module")
def big():
    (conv, q1), report = sp.convention_report()
    return sp.big_J_coefficients(sp.milanov_coeffs(conv, q1)), (conv, q1), report


def test_small_critical_values_are_canonical():
    lg = sp.SmallLG(0.3 - 0.2j, 0.8 + 0.4j)
    anchor = frobenius.canonical_anchor(lg.t1, lg.Q, lg.q13)
    data = sp.small_critical_data(lg)
    for i, p in enumerate(sp.CRITICAL_POINTS):
        assert abs(modular.qmf_values(p)["E6"]) < 1e-10
        assert abs(data["values"][i] - anchor[i]) < 1e-10
        assert data["lambda_ww"][i] == pytest.approx(data["lambda_ww_ring"][i], rel=1e-6)


def test_small_weights_are_psi_squared():
    lg = sp.SmallLG(0.0, 1.3)
    psi = frobenius.small_phase_psi(lg.Q, lg.q13)
    data = sp.small_critical_data(lg)
    for i in range(3):
        assert data["weights"][i] == pytest.approx(psi[i, 0] ** 2, rel=1e-6)


taus = st.builds(complex, st.floats(-0.5, 0.5), st.floats(0.7, 1.6))


@settings(max_examples=15, deadline=None)
@given(taus)
def test_small_lambda_invariant_under_index_three_subgroup(tau):
    lg = sp.SmallLG(0.1, 1.0)
    assert sp.gamma3_invariance(lg, tau) < 1e-8 * max(1.0, abs(sp.small_lambda(tau, lg)))


def test_period_point_round_trip():
    tau = 0.15 + 1.05j
    t1, Q, q13 = sp.inverse_period_small(tau, 0.7 + 0.2j)
    lg = sp.SmallLG(t1, Q, q13)
    assert abs(sp.small_lambda(tau, lg)) < 1e-9 * abs(t1)


def test_flat_derivative_ratio_constant():
    lg = sp.SmallLG(0.2, 1.1)
    a = sp.flat_derivative_ratio(0.1 + 1.1j, lg)
    b = sp.flat_derivative_ratio(-0.3 + 0.9j, lg)
    assert a == pytest.approx(b, rel=1e-6)


def test_convention_is_resolved(big):
    _, conv, report = big
    assert conv == ("tau", Fraction(1, 104))
    assert report[conv] < 1e-8
    assert all(e > 1e-6 for k, e in report.items() if k != conv)


def test_zero_identity_exact(big):
    data = big[0]
    assert all(not c for c in sp.zero_identity_residual(data).coeffs)


# W^{n+1} J_n in Q[E2, E4, E6]: derived in the ring (frozen); the numeric
# fit of Delta^{(n+1)/3} J_n below is the independent route
FROZEN_J = {
    0: "(1) E4",
    1: "(1/3) E4^2 + (-1/3) E2 E6",
    2: "(1/12) E6^2 + (1/18) E4^3 + (-1/4) E2 E4 E6 + (1/12) E2^2 E4^2 + (1/36) E2^3 E6",
}


def test_J_coefficients_frozen(big):
    data = big[0]
    for n, text in FROZEN_J.items():
        assert eisenstein_text(data.J_scaled(n).to_eisenstein()) == text


@pytest.mark.parametrize("n", [0, 1, 2])
def test_delta_power_fit(big, n):
    _, r = sp.delta_power_fit(big[0], n, n + 1)
    assert r < 1e-8


def test_tau_maps_round_trip_and_delta(big):
    maps = sp.tau12_maps(big[0])
    assert all(not c for c in sp.round_trip_residual(maps).coeffs)
    assert maps["delta_via_maps"] == maps["delta"]


def test_big_critical_values_match_canonical_series(big):
    data = big[0]
    coeffs = [complex(c) for c in frobenius.canonical_series_exact(4)]
    t1, Q, t3 = 0.1, 1.2, 3e-3
    vals = sp.big_critical_values(data, t1, Q, t3)
    target = frobenius.evaluate_canonical_series(coeffs, t1, Q, t3, order=2)
    assert max(abs(a - b) for a, b in zip(vals, target)) < 1e-7


def test_big_lambda_reduces_to_small(big):
    data = big[0]
    r = sp.big_lambda(0.1 + 1.1j, 0.2, 1.0, 0.0, data)
    assert r.value == pytest.approx(sp.small_lambda(0.1 + 1.1j, sp.SmallLG(0.2, 1.0)), rel=1e-12)
    assert not r.precision_warning


def test_deformed_s_action_closed_form(big):
    data = big[0]
    S = ((0, -1), (1, 0))
    tau12, x = 0.2 + 1.1j, 2e-3
    image, _ = sp.deformed_action(S, tau12, x, data)
    assert sp.deformed_s_action(tau12, x, data) == pytest.approx(image, rel=1e-6)


def test_deformed_action_invariance(big):
    data = big[0]
    # truncation at order 2 leaves residuals of order x^3
    for g in sp.GAMMA3_GENERATORS.values():
        dj, de = sp.action_invariance(g, 0.1 + 1.2j, 1e-3, data)
        assert dj < 1e-8 and de < 1e-8


@settings(max_examples=30, deadline=None)
@given(st.fractions(-20, 20, max_denominator=9), st.fractions(-20, 20, max_denominator=9), st.fractions(-20, 20, max_denominator=9))
def test_quadratic_relations(a, b, y):
    assert sp.quadratic_form(sp.w_coordinates_small(a, y)) == 0
    assert sp.quadratic_form(sp.w_coordinates_big(a, b, y)) == (a - b) ** 2 * y * y


def test_density_constant():
    assert sp.DW_CONSTANT == pytest.approx(1j * math.sqrt(2) / (2 * math.pi))
    assert sp.T3_NORMALIZATION == Fraction(-1, 32)


def test_bad_q():
    with pytest.raises(ValueError):
        sp.SmallLG(0, 0)
