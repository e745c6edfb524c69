"""Equianharmonic uniformization and the universal covering v(tau)."""
import pytest
from hypothesis import given, settings, strategies as st

from cp2lg import cohn
from cp2lg.errors import BranchError

taus = st.builds(complex, st.floats(-0.45, 0.45), st.floats(0.6, 1.6))


@settings(max_examples=10, deadline=None)
@given(taus)
def test_identities_pointwise(tau):
    v = cohn.v_pointwise(tau)
    r1, r2 = cohn.cohn_residuals(tau, v)
    assert r1 < 1e-8
    assert r2 < 1e-6
    wb = cohn.weber_wp_check(tau, v)
    assert wb["gamma2"] < 1e-8
    assert wb["gamma3"] < 1e-8


def test_cohn_lattice_reading_has_sign_issue():
    wb = cohn.weber_wp_check(0.2 + 1.1j)
    assert wb["gamma2_cohn_lattice"] > 1.0     # g2 = -3 4^{4/3} p there


def test_path_and_pointwise_agree():
    out = cohn.v_of_tau(0.3 + 0.9j)
    assert out["gap"] < 1e-7
    # frozen derived value of the pointwise branch
    assert out["pointwise"] == pytest.approx(-0.5227824426410348 + 1.6194346602264602j, abs=1e-10)


def test_path_through_waypoints():
    out = cohn.v_of_tau(-0.2 + 0.8j, waypoints=(0.0 + 1.0j,))
    assert out["gap"] < 1e-7


def test_lattice_representative_is_short():
    w1, w2 = cohn.cohn_periods()
    d = 0.1 + 0.05j
    assert cohn.lattice_representative(d + 3 * w1 - 2 * w2) == pytest.approx(d, abs=1e-12)
    assert cohn.lattice_distance(d, d + w1) < 1e-12


def test_uniformization_discriminant():
    chart = cohn.EquianharmonicChart(0.3 + 0.2j, 0.8)
    assert cohn.discriminant_report(chart) < 1e-10
    t1, Q, q13 = cohn.uniformize_small(chart)
    assert q13 ** 3 == pytest.approx(Q, rel=1e-12)


def test_chart_rejects_half_lattice():
    w1, _ = cohn.cohn_periods()
    with pytest.raises(Exception):
        cohn.EquianharmonicChart(w1 / 2, 1.0)


def test_branch_error_when_routes_disagree():
    with pytest.raises(BranchError):
        cohn.v_of_tau(0.3 + 0.9j, tol=-1.0)


@pytest.mark.parametrize("tau", [1j, 1 + 1j, 0.5 + 0.5j])
def test_half_period_points(tau):
    # E6 = 0 puts v on a half period, where inverting p alone loses precision
    v = cohn.v_pointwise(tau)
    assert cohn.weber_wp_check(tau, v)["gamma3"] < 1e-12
    assert cohn.cohn_residuals(tau, v)[1] < 1e-6
