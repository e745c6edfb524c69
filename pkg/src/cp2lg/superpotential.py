"""Landau-Ginzburg superpotential: small quantum cohomology and its deformation.

Small: lambda(tau) = t1 + 3 Q^{1/3} J^{1/3}(tau) with J^{1/3} = E4/W, W = 12 eta^8.
Writing J^{1/3} through eta^8 fixes its branch once and for all: it is a
Hauptmodul for the index-3 subgroup and needs no tracking.

Big: the inverse period map of big quantum cohomology is a series in
eps = (tau1 - tau2)^2 whose coefficients t1_n, Q_n are quasi-modular in
tau12.  The superpotential coefficients J_n (of x^n, x = Q^{1/3} t3) follow by
series reversion, exactly, over the ring of `cp2lg.qmf`.

Branch ledger (single anchor, positive imaginary axis):
  Q^{1/3}        user-supplied tag, principal by default
  Qs^{1/3}       W (Qs/W^3)^{1/3}, the binomial series anchored at W
  Delta^{1/3}    (2 pi)^4 eta^8 = (2 pi)^4 W/12
  Delta^{1/6}    (2 pi)^2 eta^4
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import qmf
from .errors import BranchError, PrecisionError
from .modular import MIN_IM_TAU, apply_sl2, eta, qmf_values
from .qmf import E2, E4, E6, PI2, QMF, QMFFrac, W
from .series import TruncSeries, binomial_power, compose, reciprocal, reversion

TWO_PI = 2 * math.pi
ORDER_CAP = 2

# Generators of the index-3 subgroup on which lambda is invariant.
GAMMA3_GENERATORS = {
    "r1": ((0, -1), (1, 0)),
    "r2": ((1, -1), (2, -1)),
    "r3": ((-1, 2), (-1, 1)),
}

# Critical points in the label order of the canonical coordinates u1, u2, u3.
CRITICAL_POINTS = (1j, 1 + 1j, -1 + 1j)

# dw2/dtau = C Delta^{1/6} Q^{-1/6}.  The derived constant makes
# 1/lambda'' equal psi_{i1}^2; the printed one is kept for comparison.
DW_CONSTANT = 1j * math.sqrt(2) / TWO_PI
DW_CONSTANT_PRINTED = -(2 ** 2.5) / TWO_PI

# Coefficient of d^2 Q_0 in Q_1: as printed, and as fixed by critical values.
Q1_PRINTED = Fraction(1, 140)
Q1_DERIVED = Fraction(1, 104)

# t3 = T3_NORMALIZATION * eps * y^2 in the chart where the intersection form
# pulls back to the canonical one.  The printed chart has factor 1.
T3_NORMALIZATION = Fraction(-1, 32)


def _tau(tau):
    tau = complex(tau)
    if tau.imag < MIN_IM_TAU:
        raise ValueError(f"Im tau = {tau.imag:g} below {MIN_IM_TAU}")
    return tau


def j_cube_root(tau):
    """J^{1/3} = E4/W = gamma2/12."""
    v = qmf_values(_tau(tau))
    return v["E4"] / v["W"]


def delta_root(tau, k):
    """Delta^{k/6} on the eta branch, Delta = (2 pi)^12 eta^24."""
    return ((TWO_PI ** 2) * eta(_tau(tau)) ** 4) ** k


# ----------------------------------------------------------------- small LG

@dataclass(frozen=True)
class SmallLG:
    t1: complex
    Q: complex
    q13: complex = None

    def __post_init__(self):
        if self.Q == 0:
            raise ValueError("Q must be nonzero")
        if self.q13 is None:
            object.__setattr__(self, "q13", complex(self.Q) ** (1 / 3))
        elif abs(complex(self.q13) ** 3 - self.Q) > 1e-10 * max(1.0, abs(self.Q)):
            raise BranchError("q13 is not a cube root of Q")


def small_lambda(tau, lg: SmallLG):
    return complex(lg.t1) + 3 * lg.q13 * j_cube_root(tau)


def small_lambda_tau_derivative(tau, lg: SmallLG, k=1):
    """d^k lambda / dtau^k from the ring: D(E4/W) = -E6/(3W)."""
    f = QMFFrac(E4) / W
    return 3 * lg.q13 * (2j * math.pi) ** k * f.D_power(k).evaluate(qmf_values(_tau(tau)))


def inverse_period_small(tau, r):
    """(t1, Q, Q^{1/3}) at the period point (tau, r) of small quantum cohomology.

    t1 = -2 (2 pi)^2 E4/r^2, Q = (8/27)(2 pi)^6 (E4^3 - E6^2)/r^6, and the
    cube root (2/3)(2 pi)^2 W/r^2 is the branch for which lambda(tau) = 0.
    """
    v = qmf_values(_tau(tau))
    t1 = -2 * TWO_PI ** 2 * v["E4"] / r ** 2
    Q = Fraction(8, 27) * TWO_PI ** 6 * (v["E4"] ** 3 - v["E6"] ** 2) / r ** 6
    q13 = Fraction(2, 3) * TWO_PI ** 2 * v["W"] / r ** 2
    return t1, Q, q13


def monodromy_action_small(g, tau, r):
    """(tau, r) -> (g tau, (c tau + d)^2 r)."""
    (_, _), (c, d) = g
    return apply_sl2(g, tau), (c * tau + d) ** 2 * r


def period_point(lg: SmallLG, tol=1e-13, max_iter=60):
    """A tau with lambda(tau) = 0, by Newton on E4/W = -t1/(3 Q^{1/3})."""
    target = -complex(lg.t1) / (3 * lg.q13)
    best, best_err = None, np.inf
    for re in np.linspace(-1.5, 1.5, 13):
        for im in (0.6, 0.9, 1.3, 2.0, 3.0):
            err = abs(j_cube_root(complex(re, im)) - target)
            if err < best_err:
                best, best_err = complex(re, im), err
    tau = best
    f = QMFFrac(E4) / W
    df = f.D()
    for _ in range(max_iter):
        v = qmf_values(tau)
        step = (f.evaluate(v) - target) / (2j * math.pi * df.evaluate(v))
        tau -= step
        if tau.imag < MIN_IM_TAU:
            raise BranchError("Newton left the upper half plane")
        if abs(step) < tol:
            return tau
    raise PrecisionError("period point Newton iteration did not converge")


def gamma3_invariance(lg: SmallLG, tau):
    """max |lambda(g tau) - lambda(tau)| over the three generators."""
    base = small_lambda(tau, lg)
    return max(abs(small_lambda(apply_sl2(g, tau), lg) - base) for g in GAMMA3_GENERATORS.values())


def abelian_density(tau, q13, constant=DW_CONSTANT):
    """dw2/dtau = C Delta^{1/6} Q^{-1/6}; Q^{-1/6} is taken as q13^{-1/2}."""
    return constant * delta_root(tau, 1) / cmath.sqrt(q13)


def small_critical_data(lg: SmallLG, constant=DW_CONSTANT, step=1e-4):
    """Critical points, values, and lambda'' with respect to the flat w2.

    At a critical point lambda_ww = lambda_tautau / (dw2/dtau)^2.
    lambda_tautau is taken by a central second difference along tau and, as
    an oracle, from the ring.
    """
    points, values, second, second_exact = [], [], [], []
    for p in CRITICAL_POINTS:
        lam = lambda s: small_lambda(s, lg)
        d2 = (lam(p + step) - 2 * lam(p) + lam(p - step)) / step ** 2
        w1 = abelian_density(p, lg.q13, constant)
        points.append(p)
        values.append(lam(p))
        second.append(d2 / w1 ** 2)
        second_exact.append(small_lambda_tau_derivative(p, lg, 2) / w1 ** 2)
    return {
        "points": tuple(points),
        "values": tuple(values),
        "lambda_ww": tuple(second),
        "lambda_ww_ring": tuple(second_exact),
        "weights": tuple(1 / s for s in second),
    }


def flat_derivative_ratio(tau, lg: SmallLG, step=1e-5):
    """(d lambda/d w2) Delta^{1/2} / E6 at tau (constant in tau)."""
    dl = (small_lambda(tau + step, lg) - small_lambda(tau - step, lg)) / (2 * step)
    dw = abelian_density(tau, lg.q13)
    v = qmf_values(tau)
    return dl / dw * delta_root(tau, 3) / v["E6"]


# ----------------------------------------------------------------- Milanov coefficients

@dataclass(frozen=True)
class MilanovCoeffs:
    t1: tuple
    Q: tuple
    convention: str
    q1_coefficient: Fraction

    @property
    def order(self):
        return len(self.t1) - 1


def _tau_derivative(convention):
    """Even powers of the printed derivative, as ring maps."""
    if convention == "tau":
        # d/dtau = 2 pi i D, so d^2 = -4 pi^2 D^2
        return lambda f, k: f.D_power(k) * ((-4) ** (k // 2)) * PI2 ** (k // 2)
    if convention == "D":
        return lambda f, k: f.D_power(k)
    raise ValueError("convention must be 'tau' or 'D'")


def milanov_coeffs(convention="tau", q1_coefficient=Q1_PRINTED) -> MilanovCoeffs:
    """The n <= 2 coefficients of (t1, Q) in (tau1 - tau2)^2, as printed."""
    d = _tau_derivative(convention)
    Q0 = W ** 3
    t1 = (E4,
          d(E4, 2) * Fraction(1, 40),
          d(E4, 4) * Fraction(1, 4480) - PI2 ** 2 * Q0 * Fraction(1, 2016))
    Q = (Q0,
         d(Q0, 2) * q1_coefficient + PI2 * E4 * Q0 * Fraction(1, 26),
         d(Q0, 4) * Fraction(1, 24960) + PI2 * E4 * d(Q0, 2) * Fraction(1, 2704)
         + PI2 * Q0 * d(E4, 2) * Fraction(1, 1040) + PI2 ** 2 * E4 ** 2 * Q0 * Fraction(17, 20280))
    return MilanovCoeffs(t1, Q, convention, Fraction(q1_coefficient))


def milanov_candidates():
    """Both derivative conventions, with the printed and the derived Q_1."""
    return {(conv, q1): milanov_coeffs(conv, q1)
            for conv in ("tau", "D") for q1 in (Q1_PRINTED, Q1_DERIVED)}


# ----------------------------------------------------------------- big LG coefficients

@dataclass(frozen=True)
class BigLGData:
    order: int
    milanov: MilanovCoeffs
    J: tuple                        # J_n as QMF (W-denominators)
    x_of_eps: TruncSeries           # x = Q^{1/3} t3 as a series in eps
    eps_of_x: TruncSeries
    qs_cube_root: TruncSeries       # Qs^{1/3} in eps
    delta: TruncSeries              # Delta(tau12, x) in x
    t3_normalization: Fraction
    cache: dict = field(default_factory=dict, compare=False, repr=False)

    def J_scaled(self, n):
        """W^{n+1} J_n, which lies in Q[E2, E4, E6]."""
        return self.J[n] * W ** (n + 1)


def _qs_cube_root(Qs):
    return binomial_power(Qs * (QMF.const(1) / W ** 3), Fraction(1, 3)) * W


def big_J_coefficients(mc: MilanovCoeffs, N=ORDER_CAP, t3_normalization=T3_NORMALIZATION) -> BigLGData:
    """J_n with lambda(tau12; t(tau12, y, eps)) = 0 identically in eps.

    Q^{1/3} = (2/3)(2 pi)^2 Qs^{1/3}/y^2 and t3 = c eps y^2 give
    x = (2/3)(2 pi)^2 c eps Qs^{1/3}; then 3 Q^{1/3} J(x) = -t1 reads
    J(x(eps)) = T(eps)/Qs^{1/3}(eps).
    """
    if N > min(ORDER_CAP, mc.order):
        raise ValueError(f"order {N} exceeds the available Milanov order {mc.order}")
    if N < 1:
        raise ValueError("order must be at least 1")
    T = TruncSeries(mc.t1[: N + 1], N)
    Qs = TruncSeries(mc.Q[: N + 1], N)
    q13 = _qs_cube_root(Qs)
    # (2/3)(2 pi)^2 = (8/3) pi^2
    x_of_eps = TruncSeries([QMF.const(0)] + list(q13.coeffs[:N]), N) * (PI2 * Fraction(8, 3) * t3_normalization)
    eps_of_x = reversion(x_of_eps)
    J = compose(T * reciprocal(q13), eps_of_x)
    # Delta(tau12, x) = (2 pi)^12 Qs(eps(x)) / 1728
    delta = compose(Qs, eps_of_x) * (PI2 ** 6 * Fraction(4096, 1728))
    return BigLGData(N, mc, tuple(J.coeffs), x_of_eps, eps_of_x, q13, delta, Fraction(t3_normalization))


def zero_identity_residual(data: BigLGData):
    """J(x(eps)) - T/Qs^{1/3} as an exact series in eps (identically 0)."""
    Jx = TruncSeries(data.J, data.order)
    T = TruncSeries(data.milanov.t1[: data.order + 1], data.order)
    return compose(Jx, data.x_of_eps) - T * reciprocal(data.qs_cube_root)


def _numeric_series(series, values):
    return TruncSeries([c.evaluate(values) for c in series.coeffs])


def numeric_J_coefficients(tau12, mc: MilanovCoeffs, N=ORDER_CAP, t3_normalization=T3_NORMALIZATION):
    """J_n(tau12) by the same pipeline run on complex numbers (oracle)."""
    v = qmf_values(_tau(tau12))
    T = TruncSeries([c.evaluate(v) for c in mc.t1[: N + 1]])
    Qs = TruncSeries([c.evaluate(v) for c in mc.Q[: N + 1]])
    unit = Qs * (1 / Qs.coeffs[0])
    unit = TruncSeries((1,) + unit.coeffs[1:])
    # Qs_0 = W^3 numerically; anchor the cube root at W
    q13 = binomial_power(unit, Fraction(1, 3)) * v["W"]
    scale = Fraction(8, 3) * math.pi ** 2 * float(t3_normalization)
    x_of_eps = TruncSeries([0j] + [c * scale for c in q13.coeffs[:N]])
    J = compose(T * reciprocal(q13), reversion(x_of_eps))
    return list(J.coeffs)


def evaluate_J(data: BigLGData, tau12, x, order=None, values=None):
    order = data.order if order is None else order
    v = values or qmf_values(_tau(tau12))
    return sum(data.J[n].evaluate(v) * x ** n for n in range(order + 1))


def fit_eisenstein(values, points, weight):
    """Least-squares fit of sampled values by monomials of the given weight.

    Returns (coefficients {(a, b, c): complex}, relative residual).
    """
    monos = qmf.eisenstein_monomials(weight)
    rows = []
    for p in points:
        e2, e4, e6 = (qmf_values(p)[k] for k in ("E2", "E4", "E6"))
        rows.append([e2 ** a * e4 ** b * e6 ** c for (a, b, c) in monos])
    A, y = np.array(rows), np.array(values)
    sol, *_ = np.linalg.lstsq(A, y, rcond=None)
    resid = np.linalg.norm(A @ sol - y) / np.linalg.norm(y)
    return dict(zip(monos, sol)), float(resid)


FIT_POINTS = tuple(complex(re, im) for re, im in
                   [(-0.45, 0.9), (-0.3, 1.3), (-0.2, 0.95), (-0.1, 1.6), (0.0, 1.1), (0.05, 0.85),
                    (0.15, 1.4), (0.25, 1.0), (0.35, 1.25), (0.45, 0.92), (0.1, 2.0), (-0.4, 1.8),
                    (0.3, 1.7), (-0.25, 1.15)])


def delta_power_fit(data: BigLGData, n, delta_exponent, points=FIT_POINTS):
    """Fit Delta^{delta_exponent/3} J_n over the monomials of matching weight.

    The numeric J_n come from `numeric_J_coefficients`, independently of the
    exact ring.  Returns (coefficients, relative residual).
    """
    vals = []
    for p in points:
        Jn = numeric_J_coefficients(p, data.milanov, data.order, data.t3_normalization)[n]
        vals.append(delta_root(p, 2 * delta_exponent) * Jn)
    return fit_eisenstein(vals, points, 4 * delta_exponent)


# ----------------------------------------------------------------- tau-maps

def _taylor_factors(f, kmax):
    """D^k f / k! for k = 0..kmax (the expansion of f(tau + s/(2 pi i)) in s)."""
    out, g = [], f
    for k in range(kmax + 1):
        out.append(g * Fraction(1, math.factorial(k)))
        g = g.D()
    return out


def _shifted(f, shift, order):
    """f(tau + shift/(2 pi i)) for a series `shift` in x with zero constant."""
    return compose(TruncSeries(_taylor_factors(f, order), order), shift)


def tau12_maps(data: BigLGData):
    """The tau~ <-> tau~12 maps, the y~ series and Delta_n.

    Shifts are carried in the q-log variable: tau~ = tau~12 + d(x)/(2 pi i)
    with d(x) = sum d_n(tau~12) x^n, and tau~12 = tau~ + e(x)/(2 pi i) with
    e(x) = sum e_n(tau~) x^n.  Defining relation: J^{1/3}(tau~) = J(tau~12, x),
    i.e. the small superpotential at tau~ equals the big one at tau~12.
    """
    if "maps" in data.cache:
        return data.cache["maps"]
    N = data.order
    zero = QMFFrac(0)
    f = QMFFrac(E4) / W
    df = f.D()
    target = [QMFFrac(c) for c in data.J]
    inverse = [zero] * (N + 1)
    for n in range(1, N + 1):
        trial = _shifted(f, TruncSeries(inverse[:n] + [zero], n), n).coeffs[n]
        inverse[n] = (target[n] - trial) / df
    inverse = TruncSeries(inverse)

    # forward map: e = -sum_k D^k d(tau~) e^k / k!, iterated to order N
    dfactors = [TruncSeries(c, N) for c in zip(*[_taylor_factors(inverse.coeffs[n], N) for n in range(N + 1)])]
    forward = TruncSeries([zero] * (N + 1))
    for _ in range(N):
        acc = TruncSeries([zero] * (N + 1))
        power = TruncSeries([QMFFrac(1)] + [zero] * N)
        for k in range(N + 1):
            acc = acc + dfactors[k] * power
            power = power * forward
        forward = -acc

    # y~/r~: (y~/r~)^2 = Qs^{1/3}(eps(x)) / W(tau~)
    w_shift = _shifted(QMFFrac(W), inverse, N)
    qs13 = compose(data.qs_cube_root.map(QMFFrac), data.eps_of_x.map(QMFFrac))
    ratio_sq = qs13 * reciprocal(w_shift)
    y_ratio = binomial_power(ratio_sq, Fraction(1, 2))

    # Q = Delta(tau~)/r~^6 (up to a constant) = Delta(tau~12, x)/y~^6, so
    # Delta(tau~12, x) = Delta(tau~) (y~/r~)^6.  The printed display divides.
    delta_shift = _shifted(QMFFrac(W ** 3 * PI2 ** 6 * Fraction(4096, 1728)), inverse, N)
    cube = ratio_sq * ratio_sq * ratio_sq
    maps = {"inverse": inverse, "forward": forward, "y_ratio": y_ratio,
            "delta": data.delta.map(QMFFrac),
            "delta_via_maps": delta_shift * cube,
            "delta_printed_quotient": delta_shift * reciprocal(cube)}
    data.cache["maps"] = maps
    return maps


def round_trip_residual(maps):
    """e + d(tau~ + e/(2 pi i)) as an exact series (identically 0)."""
    inverse, forward = maps["inverse"], maps["forward"]
    N = inverse.order
    zero = QMFFrac(0)
    total = forward
    for n in range(1, N + 1):
        shifted = _shifted(inverse.coeffs[n], forward, N)
        xn = TruncSeries([zero] * n + [QMFFrac(1)] + [zero] * (N - n))
        total = total + shifted * xn
    return total


def shift_coefficients(series, tau, values=None):
    """Numeric tau-shift coefficients s_n/(2 pi i) at the point tau."""
    v = values or qmf_values(_tau(tau))
    return [c.evaluate(v) / (2j * math.pi) for c in series.coeffs]


def deformation_coefficients(maps, tau12):
    """The numeric tau12_n, r_n and Delta_n with their Delta^{n/3} factored out."""
    v = qmf_values(_tau(tau12))
    d13 = delta_root(tau12, 2)
    shifts = shift_coefficients(maps["inverse"], tau12, v)
    r = [c.evaluate(v) for c in maps["y_ratio"].coeffs]
    dl = [c.evaluate(v) for c in maps["delta"].coeffs]
    n_range = range(len(shifts))
    return {"tau12_n": [shifts[n] * d13 ** n for n in n_range],
            "r_n": [r[n] * d13 ** n for n in n_range],
            "delta_n": dl}


# ----------------------------------------------------------------- big superpotential

@dataclass(frozen=True)
class BigLambda:
    value: complex
    density: complex
    truncation_estimate: float
    precision_warning: bool


def deformed_delta_root(data: BigLGData, tau12, x, k, values=None):
    """Delta^{k/6}(tau12, x) = Delta^{k/6}(tau12) (Qs(eps(x))/W^3)^{k/6}."""
    v = values or qmf_values(_tau(tau12))
    base = data.delta.coeffs[0].evaluate(v)
    ratio = sum(c.evaluate(v) * x ** n for n, c in enumerate(data.delta.coeffs)) / base
    return delta_root(tau12, k) * ratio ** (k / 6)


def big_lambda(tau12, t1, Q, t3, data: BigLGData, q13=None, order=None, tol=1e-6,
               constant=DW_CONSTANT):
    """t1 + 3 Q^{1/3} J(tau12, Q^{1/3} t3) truncated at `order`."""
    order = data.order if order is None else order
    q13 = complex(Q) ** (1 / 3) if q13 is None else q13
    x = q13 * complex(t3)
    v = qmf_values(_tau(tau12))
    terms = [3 * q13 * data.J[n].evaluate(v) * x ** n for n in range(order + 1)]
    value = complex(t1) + sum(terms)
    if order >= 1 and abs(terms[-2]) > 0:
        est = abs(terms[-1]) * abs(terms[-1] / terms[-2])
    else:
        est = abs(terms[-1]) * abs(x)
    density = constant * deformed_delta_root(data, tau12, x, 1, v) / cmath.sqrt(q13)
    warn = est > tol * max(1.0, abs(value))
    return BigLambda(value, density, float(est), bool(warn))


def big_critical_points(data: BigLGData, x, starts=CRITICAL_POINTS, order=None, tol=1e-13, max_iter=50):
    """Zeros of d/dtau12 J(tau12, x) near the small critical points.

    Returns [(tau12, J value)] in label order.
    """
    order = data.order if order is None else order
    d1 = [c.D() for c in data.J[: order + 1]]
    d2 = [c.D() for c in d1]
    out = []
    for tau in starts:
        tau = complex(tau)
        for _ in range(max_iter):
            v = qmf_values(tau)
            f1 = sum(c.evaluate(v) * x ** n for n, c in enumerate(d1))
            f2 = sum(c.evaluate(v) * x ** n for n, c in enumerate(d2))
            step = f1 / f2 / (2j * math.pi)
            tau -= step
            if abs(step) < tol:
                break
        else:
            raise PrecisionError("critical point search did not converge")
        out.append((tau, evaluate_J(data, tau, x, order)))
    return out


def big_critical_values(data: BigLGData, t1, Q, t3, q13=None, order=None):
    q13 = complex(Q) ** (1 / 3) if q13 is None else q13
    x = q13 * complex(t3)
    return [complex(t1) + 3 * q13 * val for _, val in big_critical_points(data, x, order=order)]


def eps_value(data: BigLGData, tau12, x, values=None):
    v = values or qmf_values(_tau(tau12))
    return sum(c.evaluate(v) * x ** n for n, c in enumerate(data.eps_of_x.coeffs))


def deformed_action(g, tau12, x, data: BigLGData):
    """Image of (tau12, eps) under g acting on tau1, tau2 separately.

    Returns (tau12', eps') with tau_{1,2} = tau12 +- sqrt(eps)/2.
    """
    eps = eps_value(data, tau12, x)
    h = cmath.sqrt(eps) / 2
    a, b = apply_sl2(g, tau12 + h), apply_sl2(g, tau12 - h)
    return (a + b) / 2, (a - b) ** 2


def deformed_s_action(tau12, x, data: BigLGData):
    """Closed form tau12 -> -tau12/(tau12^2 + (2 pi)^2 x/Delta^{1/3}(tau12, x))."""
    d13 = deformed_delta_root(data, tau12, x, 2)
    return -tau12 / (tau12 ** 2 + TWO_PI ** 2 * x / d13)


def deformed_s_action_printed(tau12, x, data: BigLGData):
    """The printed constant -1/4 in place of (2 pi)^2."""
    d13 = deformed_delta_root(data, tau12, x, 2)
    return -tau12 / (tau12 ** 2 - 0.25 * x / d13)


def action_invariance(g, tau12, x, data: BigLGData):
    """(|J(tau12', x) - J(tau12, x)|, |eps' - eps(tau12', x)|)."""
    t2, e2 = deformed_action(g, tau12, x, data)
    dj = abs(evaluate_J(data, t2, x) - evaluate_J(data, tau12, x))
    de = abs(e2 - eps_value(data, t2, x))
    return dj, de


# ----------------------------------------------------------------- quadratic relations

def w_coordinates_small(tau, r):
    return tau ** 2 * r, -2 * tau * r, r


def w_coordinates_big(tau1, tau2, y):
    return tau1 * tau2 * y, -(tau1 + tau2) * y, y


def quadratic_form(w):
    w1, w2, w3 = w
    return w2 * w2 - 4 * w1 * w3


def convention_report(x=2e-3, tau_ref=None):
    """Critical values of each Milanov candidate against the canonical series.

    Returns {candidate: max relative mismatch}.  Raises BranchError unless
    exactly one candidate matches (fail closed).
    """
    from .frobenius import canonical_series_exact, evaluate_canonical_series

    coeffs = [complex(c) for c in canonical_series_exact(4)]
    t1, Q = 0.0, 1.0
    t3 = x
    target = evaluate_canonical_series(coeffs, t1, Q, t3, order=2)
    report = {}
    for key, mc in milanov_candidates().items():
        data = big_J_coefficients(mc)
        try:
            vals = big_critical_values(data, t1, Q, t3)
            report[key] = max(abs(a - b) for a, b in zip(vals, target))
        except PrecisionError:
            report[key] = math.inf
    good = [k for k, e in report.items() if e < 1e-6]
    if len(good) != 1:
        raise BranchError(f"convention unresolved: {report}")
    return good[0], report
