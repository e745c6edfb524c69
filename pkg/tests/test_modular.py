"""Eisenstein series, eta, j and the modular lambda."""
import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from cp2lg import modular
from cp2lg.errors import PrecisionError
from cp2lg.modular import RHO

G14 = math.gamma(1 / 4)
G13 = math.gamma(1 / 3)


def test_values_at_i():
    e2, e4, e6 = modular.eisenstein_triple(1j)
    assert e2 == pytest.approx(3 / math.pi, rel=1e-12)
    assert e4 == pytest.approx(3 * G14 ** 8 / (2 * math.pi) ** 6, rel=1e-12)
    assert abs(e6) < 1e-12
    assert modular.j_family(1j)[0] == pytest.approx(1728, rel=1e-11)


def test_values_at_rho():
    e2, e4, e6 = modular.eisenstein_triple(RHO)
    assert e2 == pytest.approx(2 * math.sqrt(3) / math.pi, rel=1e-12)
    assert abs(e4) < 1e-12
    assert e6 == pytest.approx(27 * G13 ** 18 / (2 ** 9 * math.pi ** 12), rel=1e-11)
    assert abs(modular.j_family(RHO)[0]) < 1e-8


def test_lattice_sum_oracle():
    tau = 0.2 + 1.1j
    for k, zeta in ((4, math.pi ** 4 / 90), (6, math.pi ** 6 / 945)):
        g = modular.eisenstein_lattice_sum(k, tau, radius=150)
        assert g / (2 * zeta) == pytest.approx(modular.eisenstein_eval(k, tau), rel=2e-5)   # square truncation error ~ R^(2-k)


def test_q_coefficients():
    assert modular.eisenstein_q_coefficients(4, 4) == [1, 240, 2160, 6720, 17520]
    assert modular.eisenstein_q_coefficients(6, 3) == [1, -504, -16632, -122976]
    assert modular.eisenstein_q_coefficients(2, 3) == [1, -24, -72, -96]


def test_j_routes_agree():
    a = modular.j_q_expansion(30, route="eisenstein")
    b = modular.j_q_expansion(30, route="eta")
    assert a == b
    assert a[:4] == [1, 744, 196884, 21493760]


def test_delta_three_routes():
    for tau in (0.1 + 0.5j, -0.4 + 1.2j, 0.3 + 1.9j):
        _, d_eta, d_eis = modular.eta_delta(tau)
        d_half = modular.delta_from_half_periods(tau)
        assert d_eis == pytest.approx(d_eta, rel=1e-9)
        assert d_half == pytest.approx(d_eta, rel=1e-9)


def test_weber_functions():
    for tau in (0.1 + 1.1j, -0.35 + 0.8j):
        j, _, g2, g3 = modular.j_family(tau)
        assert g2 ** 3 == pytest.approx(j, rel=1e-10)
        assert g3 ** 2 == pytest.approx(j - 1728, rel=1e-10)
        assert g2 ** 3 - g3 ** 2 == pytest.approx(1728, rel=1e-8)


def test_lambda_two_routes_and_rho():
    for tau in (0.1 + 1.1j, -0.35 + 0.8j):
        assert modular.modular_lambda(tau) == pytest.approx(modular.modular_lambda_theta(tau), rel=1e-11)
    assert modular.modular_lambda(RHO) == pytest.approx(cmath.exp(-1j * math.pi / 3), abs=1e-12)


taus = st.builds(complex, st.floats(-0.5, 0.5), st.floats(0.6, 2.0))


@settings(max_examples=20, deadline=None)
@given(taus)
def test_eta_inversion(tau):
    lhs = modular.eta(-1 / tau)
    rhs = cmath.sqrt(-1j * tau) * modular.eta(tau)
    assert abs(lhs - rhs) <= 1e-10 * abs(rhs)


@settings(max_examples=20, deadline=None)
@given(taus)
def test_e4_weight_four(tau):
    lhs = modular.eisenstein_eval(4, -1 / tau)
    rhs = tau ** 4 * modular.eisenstein_eval(4, tau)
    assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(rhs))


@settings(max_examples=20, deadline=None)
@given(taus)
def test_e2_quasimodular(tau):
    lhs = modular.eisenstein_eval(2, -1 / tau)
    rhs = tau ** 2 * modular.eisenstein_eval(2, tau) + 6 * tau / (math.pi * 1j)
    assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(rhs))


def test_lower_half_plane_rejected():
    with pytest.raises(PrecisionError):
        modular.eta(0.1 + 0.01j)
