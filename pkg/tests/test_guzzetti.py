"""Flat coordinates from the Omega system near x0 = e^{-pi i/3}."""
import cmath
import math
from fractions import Fraction

import pytest

from cp2lg import guzzetti as g
from cp2lg.cyclotomic import SQRT_M3, Cyclo

F = Fraction


@pytest.fixture(scope="module")
def gm():
    return g.guzzetti_map(6)


def test_x0():
    assert complex(g.X0) == pytest.approx(cmath.exp(-1j * math.pi / 3), abs=1e-15)


def test_omega_two_routes_and_residual():
    a = g.omega_extend(8)
    assert a == g.omega_extend_series(8)
    assert g.omega_residual(a) == 0


def test_omega_printed_orders_one_and_two():
    chk = g.omega_printed_check(g.omega_extend(3))
    for (i, n), (value, printed, equal) in chk.items():
        if n >= 1:
            assert equal, (i, n, value, printed)


def test_omega_order_zero_derived():
    o = g.omega_extend(3)
    assert (o.omega1[0], o.omega2[0], o.omega3[0]) == (-SQRT_M3 / 3, SQRT_M3 / 3, SQRT_M3 / 3)
    # frozen order-3 coefficients
    assert o.omega1[3] == F(1, 18) - SQRT_M3 / 18
    assert o.omega2[3] == -F(1, 18) - SQRT_M3 / 18
    assert o.omega3[3] == Cyclo(F(4, 9))


def test_order_zero_forced_by_order_one():
    # the printed order-0 values propagate to order-1 values that differ from the printed ones
    o = g.omega_extend(2, initial=g.OMEGA0_PRINTED)
    assert o.omega3[1] != Cyclo(F(-1, 3))


def test_mu_selection(gm):
    assert gm.mu == -1
    report = gm.notes["mu_report"]
    assert report[1][2] is False and report[1][3]     # b(x0) = 0 for mu = +1


def test_orthogonality_and_eigenvectors(gm):
    assert g.eta_residual(gm.E) == 0
    res, _ = g.eigenvector_residual(gm.omega, gm.E, gm.mu)
    assert res == 0


def test_flat_leading_terms(gm):
    assert gm.a.coeffs[0] == F(1, 2) - SQRT_M3 / 6
    assert gm.a.coeffs[1] == Cyclo(F(1, 3))
    assert gm.t3H.coeffs[:2] == (Cyclo(0), Cyclo(-9))
    assert gm.q_over_h3.coeffs[0] == SQRT_M3 / 243
    assert gm.q_over_h3.coeffs[1] / gm.q_over_h3.coeffs[0] == SQRT_M3
    assert gm.y.coeffs[:3] == g.PRINTED_Y


def test_qt3_first_coefficients(gm):
    qs = gm.qt3()
    assert qs.coeffs[1] == F(3, 2) - SQRT_M3 / 2
    assert qs.coeffs[2] == -(F(1, 2) + SQRT_M3 / 2)
    # frozen higher orders
    assert qs.coeffs[3] == -F(1, 2) + SQRT_M3 / 6
    assert qs.coeffs[4] == F(13, 72) + F(13, 72) * SQRT_M3


def test_qt3_matches_cross_ratio_reversion():
    assert g.qt3_of_x(6) == g.qt3_of_x_cross_ratio(6)


def test_small_phase_constants():
    found = g.small_phase_constants()
    assert found[0]["phases"][0] == 1
    assert found[0]["Q_over_H3"] == SQRT_M3 / 243


def test_x_taylor_against_lambda():
    c = g.x_taylor_at_rho(8)
    h = 0.01 * cmath.exp(0.7j)
    approx = sum(complex(a) * h ** n for n, a in enumerate(c.coeffs))
    from cp2lg.modular import RHO, modular_lambda
    assert abs(approx - modular_lambda(RHO + h)) < 1e-12
    r1, r2 = g.x_finite_difference_check()
    assert r1 < 1e-8 and r2 < 1e-8


def test_x_prime_relation():
    c = g.x_taylor_at_rho(2)
    assert min(abs(c.coeffs[1] - r) for r in g.x_prime_candidates()) < 1e-12


def test_bell_composition_matches_substitution():
    a = g.qt3_of_z(6)
    b = g.qt3_of_z_direct(6)
    for x, y in zip(a.coeffs, b.coeffs):
        assert abs(x - y) < 1e-9 * max(1.0, abs(y))


def test_end_to_end_numeric_route():
    from cp2lg.modular import RHO
    coeffs = g.qt3_of_z(8)
    z = RHO + 0.004 * cmath.exp(1.1j)
    series_value = sum(c * (z - RHO) ** n for n, c in enumerate(coeffs.coeffs))
    assert abs(series_value - g.qt3_numeric_route(z, order=12)) < 1e-5


def test_order_caps():
    with pytest.raises(ValueError):
        g.omega_extend(g.OMEGA_CAP + 1)
    with pytest.raises(ValueError):
        g.x_taylor_at_rho(g.X_TAYLOR_CAP + 1)
