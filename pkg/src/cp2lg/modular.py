"""Numeric modular forms on the upper half-plane.

Eisenstein series, eta, the discriminant, the j family, Weber functions,
the Weierstrass pair for the lattice Z + tau Z, and the modular lambda.
All q-series are truncated adaptively so that a crude tail bound falls
below ``tol``.

Weber branches: gamma2 = E4/eta^8 and gamma3 = E6/eta^12 are built from
eta^8 and eta^12, which are single-valued on the upper half-plane, so no
pointwise cube or square root is ever taken.  gamma2 is real-positive on
the imaginary axis above i.
"""
from __future__ import annotations

import cmath
import math
import threading
from fractions import Fraction

import numpy as np

from .errors import PoleError, PrecisionError

MIN_IM_TAU = 0.05
MAX_TERMS = 10 ** 6
DEFAULT_TOL = 1e-13
RHO = cmath.exp(2j * math.pi / 3)        # e^{2 pi i/3}
RHO6 = cmath.exp(1j * math.pi / 3)       # e^{pi i/3}

_SIGMA_LOCK = threading.Lock()
_SIGMA_CACHE = {}                        # power -> float array sigma_power(0..M)
_EIS_NORMALIZATION = {2: -24, 4: 240, 6: -504}


def _check_tau(tau):
    tau = complex(tau)
    if tau.imag < MIN_IM_TAU:
        raise PrecisionError(f"Im tau = {tau.imag:g} below the floor {MIN_IM_TAU}")
    return tau


def divisor_sigma_array(power, M):
    """sigma_power(n) for n = 0..M as float64 (index 0 unused)."""
    with _SIGMA_LOCK:
        cached = _SIGMA_CACHE.get(power)
        if cached is not None and len(cached) > M:
            return cached[: M + 1]
        size = max(M, 2 * (len(cached) if cached is not None else 0), 64)
        arr = np.zeros(size + 1)
        for d in range(1, size + 1):
            arr[d::d] += float(d) ** power
        _SIGMA_CACHE[power] = arr
        return arr[: M + 1]


def divisor_sigma_exact(power, M):
    """Exact sigma_power(n), n = 0..M, as Python integers."""
    out = [0] * (M + 1)
    for d in range(1, M + 1):
        dp = d ** power
        for m in range(d, M + 1, d):
            out[m] += dp
    return out


def eisenstein_q_coefficients(k, M):
    """Exact integer q-expansion coefficients of E_k, orders 0..M."""
    if k not in _EIS_NORMALIZATION:
        raise ValueError("k must be 2, 4 or 6")
    sig = divisor_sigma_exact(k - 1, M)
    return [1] + [_EIS_NORMALIZATION[k] * s for s in sig[1:]]


def _truncation(r, growth, tol, scale=1.0):
    """Smallest M with scale * sum_{n>M} n^growth r^n below tol (rough bound)."""
    if r <= 0:
        return 1
    logr = math.log(r)
    n = max(1, int(math.ceil(growth / -logr)) + 1)
    while n <= MAX_TERMS:
        term = scale * (n + 1) ** growth * r ** (n + 1)
        ratio = r * ((n + 2) / (n + 1)) ** growth
        if ratio < 1 and term / (1 - ratio) < tol:
            return n
        n = int(n * 1.2) + 1
    raise PrecisionError(f"tolerance {tol:g} needs more than {MAX_TERMS} terms at |q| = {r:.6g}")


def eisenstein_eval(k, tau, tol=DEFAULT_TOL):
    """E_k(tau), k in {2, 4, 6}, normalized to constant term 1."""
    if k not in _EIS_NORMALIZATION:
        raise ValueError("k must be 2, 4 or 6")
    tau = _check_tau(tau)
    r = math.exp(-2 * math.pi * tau.imag)
    # sigma_{k-1}(n) <= 2 n^{k-1} (1 + log n) covers k = 2 too
    M = _truncation(r, k, tol, scale=2 * abs(_EIS_NORMALIZATION[k]))
    sig = divisor_sigma_array(k - 1, M)
    n = np.arange(1, M + 1)
    qn = np.exp(2j * np.pi * tau * n)
    return complex(1 + _EIS_NORMALIZATION[k] * np.sum(sig[1:] * qn))


def eisenstein_triple(tau, tol=DEFAULT_TOL):
    return tuple(eisenstein_eval(k, tau, tol) for k in (2, 4, 6))


def eta(tau, tol=DEFAULT_TOL):
    """Dedekind eta via the pentagonal-number series."""
    tau = _check_tau(tau)
    r = math.exp(-2 * math.pi * tau.imag)
    total = 1 + 0j
    k = 1
    while True:
        e1, e2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
        if r ** e1 < tol * 1e-3:
            break
        sign = -1 if k % 2 else 1
        total += sign * (cmath.exp(2j * math.pi * tau * e1) + cmath.exp(2j * math.pi * tau * e2))
        k += 1
        if k > MAX_TERMS:
            raise PrecisionError("eta series did not converge")
    return cmath.exp(2j * math.pi * tau / 24) * total


def eta_delta(tau, tol=DEFAULT_TOL):
    """(eta, (2 pi)^12 eta^24, (2 pi)^12 (E4^3 - E6^2)/1728)."""
    h = eta(tau, tol)
    e4 = eisenstein_eval(4, tau, tol)
    e6 = eisenstein_eval(6, tau, tol)
    c = (2 * math.pi) ** 12
    return h, c * h ** 24, c * (e4 ** 3 - e6 ** 2) / 1728


def W_value(tau, tol=DEFAULT_TOL):
    """W = 12 eta^8, the cube root of E4^3 - E6^2 used by the exact ring."""
    return 12 * eta(tau, tol) ** 8


def qmf_values(tau, tol=DEFAULT_TOL):
    """Generator values for QMF.evaluate."""
    e2, e4, e6 = eisenstein_triple(tau, tol)
    return {"E2": e2, "E4": e4, "E6": e6, "W": W_value(tau, tol)}


def j_family(tau, tol=DEFAULT_TOL):
    """(j, J, gamma2, gamma3) with gamma2 = E4/eta^8, gamma3 = E6/eta^12.

    gamma2^3 = j and gamma3^2 = j - 1728.
    """
    _, e4, e6 = eisenstein_triple(tau, tol)
    h = eta(tau, tol)
    j = 1728 * e4 ** 3 / (e4 ** 3 - e6 ** 2)
    return j, j / 1728, e4 / h ** 8, e6 / h ** 12


def weber_gamma3_alt(tau, tol=DEFAULT_TOL):
    """The i-multiplied normalization i E6/eta^12 (so its square is 1728 - j)."""
    return 1j * j_family(tau, tol)[3]


def j_q_expansion(M, route="eisenstein"):
    """Exact coefficients of q j(q): list c with j = sum_n c[n] q^{n-1}, n = 0..M.

    route 'eisenstein' uses Delta = (E4^3 - E6^2)/1728, route 'eta' uses the
    product q prod (1 - q^n)^24.
    """
    e4 = eisenstein_q_coefficients(4, M + 1)
    e4cubed = _int_series_mul(_int_series_mul(e4, e4, M + 1), e4, M + 1)
    if route == "eisenstein":
        e6 = eisenstein_q_coefficients(6, M + 1)
        e6sq = _int_series_mul(e6, e6, M + 1)
        delta = [Fraction(a - b, 1728) for a, b in zip(e4cubed, e6sq)]
    elif route == "eta":
        prod = [1] + [0] * (M + 1)
        for n in range(1, M + 2):
            for _ in range(24):
                for m in range(M + 1, n - 1, -1):
                    prod[m] -= prod[m - n]
        delta = [0] + prod[: M + 1]
    else:
        raise ValueError("route must be 'eisenstein' or 'eta'")
    if delta[0] != 0 or delta[1] != 1:
        raise ArithmeticError("discriminant must start with q")
    # (Delta/q)^{-1} times E4^3
    d = [Fraction(x) for x in delta[1:]]
    inv = [Fraction(1)]
    for n in range(1, M + 1):
        inv.append(-sum(d[i] * inv[n - i] for i in range(1, n + 1)))
    out = []
    for n in range(M + 1):
        v = sum(e4cubed[i] * inv[n - i] for i in range(n + 1))
        out.append(int(v) if Fraction(v).denominator == 1 else v)
    return out


def _int_series_mul(a, b, M):
    return [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(M + 1)]


def g2_g3(tau, tol=DEFAULT_TOL):
    """Invariants of Z + tau Z: g2 = (4 pi^4/3) E4, g3 = (8 pi^6/27) E6."""
    e4 = eisenstein_eval(4, tau, tol)
    e6 = eisenstein_eval(6, tau, tol)
    return 4 * math.pi ** 4 / 3 * e4, 8 * math.pi ** 6 / 27 * e6


def eisenstein_lattice_sum(k, tau, radius=200):
    """Slow oracle: G_k = sum' (m + n tau)^{-k} over a square of the given radius."""
    tau = complex(tau)
    m = np.arange(-radius, radius + 1)
    mm, nn = np.meshgrid(m, m)
    w = mm + nn * tau
    w = w[(mm != 0) | (nn != 0)]
    return complex(np.sum(w ** (-float(k))))


def _reduce_to_cell(v, tau):
    n = round(v.imag / tau.imag)
    v = v - n * tau
    return v - round(v.real)


def wp_pair(v, tau, tol=DEFAULT_TOL):
    """Weierstrass (p, p') for the lattice Z + tau Z via the q-series."""
    tau = _check_tau(tau)
    v = _reduce_to_cell(complex(v), tau)
    if abs(v) < 1e-8:
        raise PoleError("argument within 1e-8 of a lattice point")
    q = cmath.exp(2j * math.pi * tau)
    u = cmath.exp(2j * math.pi * v)
    r = abs(q)
    # |q^n u^{+-1}| <= |q|^{n - 1/2} after reduction
    M = _truncation(r, 2, tol, scale=4 / math.sqrt(r) * (2 * math.pi) ** 3)
    n = np.arange(1, M + 1)
    qn = q ** n
    w, wp_ = qn * u, qn / u
    two_pi_i = 2j * math.pi
    p = 1 / 12 + u / (1 - u) ** 2 + np.sum(w / (1 - w) ** 2 + wp_ / (1 - wp_) ** 2 - 2 * qn / (1 - qn) ** 2)
    dp = u * (1 + u) / (1 - u) ** 3 + np.sum(w * (1 + w) / (1 - w) ** 3 - wp_ * (1 + wp_) / (1 - wp_) ** 3)
    return complex(two_pi_i ** 2 * p), complex(two_pi_i ** 3 * dp)


def wp_general(v, omega1, omega2, tol=DEFAULT_TOL):
    """(p, p') for the lattice omega1 Z + omega2 Z by homothety to Z + tau Z."""
    omega1, omega2 = complex(omega1), complex(omega2)
    tau = omega2 / omega1
    if tau.imag < 0:
        tau = -tau
    p, dp = wp_pair(complex(v) / omega1, tau, tol)
    return p / omega1 ** 2, dp / omega1 ** 3


def half_period_values(tau, tol=DEFAULT_TOL):
    """(e1, e2, e3) = p(1/2), p(tau/2), p((1 + tau)/2)."""
    tau = complex(tau)
    return tuple(wp_pair(h, tau, tol)[0] for h in (0.5, tau / 2, (1 + tau) / 2))


def delta_from_half_periods(tau, tol=DEFAULT_TOL):
    e1, e2, e3 = half_period_values(tau, tol)
    return 16 * ((e1 - e2) * (e1 - e3) * (e3 - e2)) ** 2


def modular_lambda(tau, tol=DEFAULT_TOL):
    """x(tau) = (e3 - e2)/(e1 - e2)."""
    e1, e2, e3 = half_period_values(tau, tol)
    return (e3 - e2) / (e1 - e2)


def _theta2_theta3(tau, tol):
    tau = _check_tau(tau)
    nq = cmath.exp(1j * math.pi * tau)
    r = abs(nq)
    t2 = t3 = 0j
    n = 0
    while True:
        a = r ** (n * n)
        if n > 0 and a < tol * 1e-3:
            break
        t3 += (2 if n else 1) * nq ** (n * n)
        t2 += 2 * cmath.exp(1j * math.pi * tau * (n + 0.5) ** 2)
        n += 1
    return t2, t3


def modular_lambda_theta(tau, tol=DEFAULT_TOL):
    """Independent route: lambda = theta2^4/theta3^4."""
    t2, t3 = _theta2_theta3(tau, tol)
    return (t2 / t3) ** 4


def apply_sl2(g, tau):
    (a, b), (c, d) = g
    return (a * tau + b) / (c * tau + d)
