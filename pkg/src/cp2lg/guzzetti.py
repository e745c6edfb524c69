"""Flat coordinates of big quantum cohomology from the Omega system.

Everything up to `qt3_of_x` is exact over Q(zeta_12): the Omega system is
expanded around the regular point x0 = e^{-pi i/3} (the image of t3 = 0),
then pushed through the E matrix, the functions a, b, c and the flat
coordinate formulas.  The Taylor data of the modular lambda at e^{2 pi i/3}
and the final composition are numeric.

Series are in s = x - x0 unless stated otherwise.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .cyclotomic import I, SQRT_M3, ZETA3, Cyclo
from .errors import BranchError
from .modular import RHO, eta, modular_lambda, qmf_values
from .series import (TruncSeries, bell_table, binomial_power, compose_brute,
                     exp_series, reciprocal, reversion)

X0 = (1 - SQRT_M3) / 2                       # e^{-pi i/3}
X0_PRINTED_AT_RHO = (1 + SQRT_M3) / 2         # e^{pi i/3}
OMEGA_CAP = 40
X_TAYLOR_CAP = 10

# order-0 values forced by the printed order-1 coefficients through the ODE
OMEGA0 = (-SQRT_M3 / 3, SQRT_M3 / 3, SQRT_M3 / 3)
OMEGA0_PRINTED = (-SQRT_M3 / 2, SQRT_M3 / 2, SQRT_M3 / 2)
PRINTED_OMEGA = {
    1: (-(Fraction(1, 6) + SQRT_M3 / 6), Fraction(1, 6) - SQRT_M3 / 6, Cyclo(Fraction(-1, 3))),
    2: (SQRT_M3 / 9, -SQRT_M3 / 9, 2 * SQRT_M3 / 9),
}
PRINTED_Y = (Fraction(1, 2) - SQRT_M3 / 6, Cyclo(Fraction(1, 3)), -SQRT_M3 / 3)
PRINTED_T1_LEADING = Fraction(1, 2) - SQRT_M3 / 6
PRINTED_T3H = (Cyclo(0), Cyclo(-9))
PRINTED_Q_PREFACTOR = SQRT_M3 / 143
SPEC_Q_PREFACTOR = -SQRT_M3 / 243
PRINTED_Q_RATIO = SQRT_M3                      # Q/H^3 ~ const (1 + i sqrt3 s)
PRINTED_QT3 = (Fraction(3, 2) - SQRT_M3 / 2, -(Fraction(1, 2) + SQRT_M3 / 2))
MU_CANDIDATES = (-1, 1)


def _cyc(c):
    return Cyclo(c) if isinstance(c, (int, Fraction)) else c


def _series(coeffs, order):
    return TruncSeries([_cyc(c) for c in coeffs], order)


def x_series(order):
    """x = x0 + s."""
    return _series([X0, 1], order)


# ----------------------------------------------------------------- Omega system

@dataclass(frozen=True)
class OmegaSeries:
    order: int
    omega1: tuple
    omega2: tuple
    omega3: tuple

    def series(self):
        return tuple(TruncSeries(list(c), self.order) for c in (self.omega1, self.omega2, self.omega3))


def _conv(a, b, n):
    return sum((a[k] * b[n - k] for k in range(n + 1)), Cyclo(0))


def omega_extend(N, initial=OMEGA0):
    """Coefficients 0..N of Omega_1, Omega_2, Omega_3, term by term.

    Cleared of denominators the system reads
      x O1' = O2 O3,  (1 - x) O2' = O1 O3,  x (x - 1) O3' = O1 O2,
    and each equation at s^n is solved for the coefficient n + 1.
    """
    if not 0 <= N <= OMEGA_CAP:
        raise ValueError(f"order must be in 0..{OMEGA_CAP}")
    o1, o2, o3 = ([_cyc(c)] for c in initial)
    p0, p1 = X0 * X0 - X0, 2 * X0 - 1         # x (x - 1) = p0 + p1 s + s^2
    for n in range(N):
        a = (_conv(o2, o3, n) - n * o1[n]) / (X0 * (n + 1))
        b = (_conv(o1, o3, n) + n * o2[n]) / ((1 - X0) * (n + 1))
        rhs = _conv(o1, o2, n) - p1 * n * o3[n]
        if n >= 1:
            rhs = rhs - (n - 1) * o3[n - 1]
        c = rhs / (p0 * (n + 1))
        o1.append(a)
        o2.append(b)
        o3.append(c)
    return OmegaSeries(N, tuple(o1), tuple(o2), tuple(o3))


def omega_extend_series(N, initial=OMEGA0):
    """Same coefficients through truncated series products and reciprocals (oracle)."""
    if not 0 <= N <= OMEGA_CAP:
        raise ValueError(f"order must be in 0..{OMEGA_CAP}")
    cs = [[_cyc(c)] for c in initial]
    for n in range(N):
        o1, o2, o3 = (_series(c, n) for c in cs)
        x = x_series(n)
        d1 = o2 * o3 * reciprocal(x)
        d2 = o1 * o3 * reciprocal(1 - x)
        d3 = o1 * o2 * reciprocal(x * (x - 1))
        for c, d in zip(cs, (d1, d2, d3)):
            c.append(d.coeffs[n] / (n + 1))
    return OmegaSeries(N, *(tuple(c) for c in cs))


def omega_residual(omega: OmegaSeries):
    """Largest coefficient (as |complex|) of the ODE residual through order N - 1."""
    if omega.order == 0:
        return 0.0
    o1, o2, o3 = omega.series()
    x = x_series(omega.order)
    res = (x * o1.derivative() - o2 * o3,
           (1 - x) * o2.derivative() - o1 * o3,
           x * (x - 1) * o3.derivative() - o1 * o2)
    return max(abs(complex(r.coeffs[n])) for r in res for n in range(omega.order))


def omega_printed_check(omega: OmegaSeries):
    """{(i, n): (computed, printed, equal)} for the printed coefficients."""
    out = {}
    cols = (omega.omega1, omega.omega2, omega.omega3)
    for n, vals in [(0, OMEGA0_PRINTED)] + sorted(PRINTED_OMEGA.items()):
        for i, printed in enumerate(vals):
            value = cols[i][n]
            out[(i + 1, n)] = (value, _cyc(printed), value == _cyc(printed))
    return out


# ----------------------------------------------------------------- E matrix and flat coordinates

def e_matrix(omega: OmegaSeries, mu, literal=False):
    """The 3x3 matrix of series E_ij (Psi = E with the f(u) factors removed).

    E33 is -(O2 O3 - mu O1)/(O1^2 + O3^2); literal=True uses the printed
    mu O3 instead, which breaks Psi^T Psi = eta.
    """
    o1, o2, o3 = omega.series()
    mu = Cyclo(mu)
    m2 = 1 / (2 * mu * mu)
    im = 1 / (I * mu)
    den = reciprocal(o1 * o1 + o3 * o3)
    one = o1 * 0 + Cyclo(1)
    e33_tail = o3 if literal else o1
    return (
        ((o1 * o2 - o3 * mu) * m2, o1 * im, -(o1 * o2 + o3 * mu) * den),
        (-(o1 * o1 + o3 * o3) * m2, o2 * im, one),
        ((o2 * o3 + o1 * mu) * m2, o3 * im, -(o2 * o3 - e33_tail * mu) * den),
    )


def eta_residual(E):
    """Max |(E^T E - eta)_{ab}| over all coefficients (f cancels on the eta pattern)."""
    worst = 0.0
    for a in range(3):
        for b in range(3):
            g = E[0][a] * E[0][b] + E[1][a] * E[1][b] + E[2][a] * E[2][b]
            target = 1 if a + b == 2 else 0
            g = g - target
            worst = max(worst, max(abs(complex(c)) for c in g.coeffs))
    return worst


def eigenvector_residual(omega: OmegaSeries, E, mu):
    """Max residual of V E_col = lambda E_col with lambda = (mu, 0, -mu) up to sign.

    Returns (residual, sign) for the better of the two signs.
    """
    o1, o2, o3 = omega.series()
    zero = o1 * 0
    V = ((zero, -o3, o2), (o3, zero, -o1), (-o2, o1, zero))
    best = None
    for sign in (1, -1):
        worst = 0.0
        for col, lam in zip(range(3), (mu, 0, -mu)):
            for i in range(3):
                lhs = V[i][0] * E[0][col] + V[i][1] * E[1][col] + V[i][2] * E[2][col]
                r = lhs - E[i][col] * Cyclo(sign * lam)
                worst = max(worst, max(abs(complex(c)) for c in r.coeffs))
        if best is None or worst < best[0]:
            best = (worst, sign)
    return best


def small_phase_constants():
    """Exact data of the t3 = 0 locus from u_k = t1 + 3 Q^{1/3} zeta^k.

    Labelings of the three cube-root phases are kept when they send the
    cross ratio to x0; for those, returns the phases, a0 = (t1 - u1)/H,
    Q/H^3 and Q^{1/3}/H.  The first two agree across the three cyclic
    relabelings; Q^{1/3}/H depends on the cube-root branch, and the labeling
    with u1 = t1 + 3 Q^{1/3} comes first.
    """
    roots = (Cyclo(1), ZETA3, ZETA3 * ZETA3)
    found = []
    for p1, p2, p3 in permutations(roots):
        if (p3 - p1) / (p2 - p1) != X0:
            continue
        h = 3 * (p2 - p1)                  # H / Q^{1/3}
        found.append({"phases": (p1, p2, p3), "a0": -3 * p1 / h,
                      "Q_over_H3": 1 / (h * h * h), "q13_over_H": 1 / h})
    if not found:
        raise BranchError("no labeling of the small canonical coordinates gives x0")
    found.sort(key=lambda f: f["phases"][0] != 1)
    keys = ("a0", "Q_over_H3")
    if any(f[k] != found[0][k] for f in found for k in keys):
        raise BranchError("labelings disagree on the small-phase constants")
    return found


@dataclass
class GuzzettiMap:
    mu: int
    order: int
    omega: OmegaSeries
    E: tuple
    a: TruncSeries                  # t1 = u1 + a H
    b: TruncSeries
    c: TruncSeries
    t3H: TruncSeries                # t3 = t3H / H
    q_over_h3: TruncSeries          # Q = q_over_h3 H^3
    q13_over_h: TruncSeries         # Q^{1/3} = q13_over_h H
    y: TruncSeries
    notes: dict = field(default_factory=dict)

    def qt3(self):
        """Q^{1/3} t3 as a series in s."""
        return self.q13_over_h * self.t3H


def flat_from_canonical(omega: OmegaSeries, mu, literal=False):
    """Series of t1, Q, t3 (with their H prefactors) and y for one mu candidate.

    Q = e^{t2} with t2 = 3 ln H + 3 int dx/(x + E21 E22/(E31 E32)); the
    integration constant is the small-phase value of Q/H^3.
    """
    N = omega.order
    E = e_matrix(omega, mu, literal)
    x = x_series(N)
    a = E[1][0] * E[1][2] + x * E[2][0] * E[2][2]
    b = E[1][1] * E[1][0] + x * E[2][1] * E[2][0]
    c = E[1][0] * E[1][0] + x * E[2][0] * E[2][0]
    if not b.coeffs[0]:
        raise BranchError(f"b(x0) = 0 for mu = {mu}: t3 has a pole on the t3 = 0 locus")
    t3H = c * reciprocal(b * b) * (-9)
    ratio = E[1][0] * E[1][1] * reciprocal(E[2][0] * E[2][1])
    integrand = reciprocal(x + ratio) * 3
    log_q = integrand.integral()
    small = small_phase_constants()[0]
    q_norm = exp_series(log_q)
    q_over_h3 = q_norm * small["Q_over_H3"]
    q13_over_h = binomial_power(q_norm, Fraction(1, 3)) * small["q13_over_H"]
    y = _y_series(E, x)
    notes = {"eta_residual": eta_residual(E),
             "eigenvector_residual": eigenvector_residual(omega, E, mu),
             "a0_matches_small_phase": a.coeffs[0] == small["a0"]}
    return GuzzettiMap(mu, N, omega, E, a, b, c, t3H, q_over_h3, q13_over_h, y, notes)


def _y_series(E, x):
    """Root y of sum_i psi_i3^2/(y - x_i) = 0 with (x_1, x_2, x_3) = (0, 1, x).

    sum_i psi_i3^2 = eta_33 = 0 makes the condition linear in y.
    """
    w1, w2, w3 = (E[i][2] * E[i][2] for i in range(3))
    return w1 * x * reciprocal(w1 * (x + 1) + w2 * x + w3)


def select_mu(omega: OmegaSeries, candidates=MU_CANDIDATES):
    """Pick the mu whose t1 leading coefficient equals the printed one.

    Returns (mu, report) with report[mu] = (a0, eta residual, matches, failure).
    """
    report = {}
    for mu in candidates:
        try:
            gm = flat_from_canonical(omega, mu)
        except BranchError as exc:
            report[mu] = (None, None, False, str(exc))
            continue
        report[mu] = (gm.a.coeffs[0], gm.notes["eta_residual"],
                      gm.a.coeffs[0] == PRINTED_T1_LEADING, "")
    matches = [mu for mu, r in report.items() if r[2]]
    if len(matches) != 1:
        raise BranchError(f"mu selection ambiguous: {report}")
    return matches[0], report


def guzzetti_map(N=6):
    omega = omega_extend(N)
    mu, report = select_mu(omega)
    gm = flat_from_canonical(omega, mu)
    gm.notes["mu_report"] = report
    return gm


def qt3_of_x(N=6):
    """Q^{1/3} t3 as a series in s = x - x0, exact to order N."""
    return guzzetti_map(N).qt3()


def qt3_of_x_cross_ratio(N=6):
    """Same series from the exact canonical series: reverse f(X) - x0 = s (oracle)."""
    from .frobenius import canonical_series_exact, cross_ratio_series
    coeffs = canonical_series_exact(N + 1)
    f = cross_ratio_series(coeffs, N)
    if f.coeffs[0] != X0:
        raise BranchError("cross ratio at t3 = 0 is not x0")
    shifted = TruncSeries([Cyclo(0)] + [_cyc(c) for c in f.coeffs[1:]], N)
    return reversion(shifted)


def flat_printed_check(gm: GuzzettiMap):
    """Computed leading terms next to the printed displays."""
    qs = gm.qt3()
    ratio = gm.q_over_h3.coeffs[1] / gm.q_over_h3.coeffs[0]
    return {
        "t1 leading": (gm.a.coeffs[0], PRINTED_T1_LEADING),
        "t1 s-coefficient (printed -i sqrt3/6)": (gm.a.coeffs[1], -SQRT_M3 / 6),
        "t3 H order 0": (gm.t3H.coeffs[0], PRINTED_T3H[0]),
        "t3 H order 1": (gm.t3H.coeffs[1], PRINTED_T3H[1]),
        "Q/H^3 order 0 (printed 143)": (gm.q_over_h3.coeffs[0], PRINTED_Q_PREFACTOR),
        "Q/H^3 order 0 (-i sqrt3/243)": (gm.q_over_h3.coeffs[0], SPEC_Q_PREFACTOR),
        "Q/H^3 order-1 ratio": (ratio, PRINTED_Q_RATIO),
        "Q^(1/3) t3 order 1": (qs.coeffs[1], PRINTED_QT3[0]),
        "Q^(1/3) t3 order 2": (qs.coeffs[2], PRINTED_QT3[1]),
        "y order 0": (gm.y.coeffs[0], PRINTED_Y[0]),
        "y order 1": (gm.y.coeffs[1], PRINTED_Y[1]),
        "y order 2": (gm.y.coeffs[2], PRINTED_Y[2]),
    }


# ----------------------------------------------------------------- modular lambda at rho

def _eisenstein_taylor(N, values):
    """Taylor coefficients in h = tau - rho of (E2, E4, E6) from the Ramanujan system."""
    c = 2j * math.pi
    e2, e4, e6 = [values["E2"]], [values["E4"]], [values["E6"]]
    for n in range(N):
        def cv(a, b):
            return sum(a[k] * b[n - k] for k in range(n + 1))
        d2 = (cv(e2, e2) - e4[n]) / 12
        d4 = (cv(e2, e4) - e6[n]) / 3
        d6 = (cv(e2, e6) - cv(e4, e4)) / 2
        e2.append(c * d2 / (n + 1))
        e4.append(c * d4 / (n + 1))
        e6.append(c * d6 / (n + 1))
    return e2, e4, e6


def x_prime_candidates():
    """The six roots x' of (x')^6 = -2^8 pi^6 eta^24 x^4 (x - 1)^4 at rho.

    The constant follows from lambda = 16 q^{1/2} + O(q) at the cusp.
    """
    x0 = complex(X0)
    rhs = -(2 ** 8) * math.pi ** 6 * eta(RHO) ** 24 * x0 ** 4 * (x0 - 1) ** 4
    r = abs(rhs) ** (1 / 6)
    base = cmath.phase(rhs) / 6
    return [r * cmath.exp(1j * (base + k * math.pi / 3)) for k in range(6)]


def x_prime_printed_modulus():
    """|x'(rho)| from the printed relation (2^8/3^3)(2 pi)^-12 Delta = (x')^6/(x^4 (x-1)^4).

    Delta(rho) is taken from the printed E6(rho) = Gamma(1/3)^18/4^6.
    """
    e6 = math.gamma(1 / 3) ** 18 / 4 ** 6
    delta = (2 * math.pi) ** 12 * (-(e6 ** 2)) / 1728
    x0 = complex(X0)
    return (2 ** 8 / 3 ** 3 * (2 * math.pi) ** -12 * abs(delta) * abs(x0) ** 4 * abs(x0 - 1) ** 4) ** (1 / 6)


def _finite_difference_derivative(step=1e-4):
    f = modular_lambda
    return (8 * (f(RHO + step) - f(RHO - step)) - (f(RHO + 2 * step) - f(RHO - 2 * step))) / (12 * step)


def x_taylor_at_rho(N=6, branch_tol=1e-6):
    """Taylor coefficients c_m of the modular lambda in h = z - e^{2 pi i/3}.

    The logarithmic derivative of (x')^6/(x^4 (x - 1)^4) ~ Delta gives
      6 x'' x (x - 1) = x' (2 pi i E2 x (x - 1) + 4 (2x - 1) x'),
    solved order by order with E2 from the Ramanujan system.  x(rho) is
    e^{-pi i/3}; the branch of x' is the sixth root nearest a finite
    difference of the modular lambda.
    """
    if not 1 <= N <= X_TAYLOR_CAP:
        raise ValueError(f"order must be in 1..{X_TAYLOR_CAP}")
    values = qmf_values(RHO)
    x0 = modular_lambda(RHO)
    if abs(x0 - complex(X0)) > 1e-10:
        raise BranchError(f"modular lambda at rho is {x0}, not e^(-pi i/3)")
    fd = _finite_difference_derivative()
    cands = x_prime_candidates()
    x1 = min(cands, key=lambda c: abs(c - fd))
    if abs(x1 - fd) > branch_tol * max(1.0, abs(x1)):
        raise BranchError(f"no sixth root within {branch_tol} of the finite difference")
    e2 = _eisenstein_taylor(N, values)[0]
    xs = [complex(X0), x1]
    for n in range(N - 1):
        K = n + 1
        X = TruncSeries(xs[: K + 1] + [0j] * max(0, K + 1 - len(xs)), K)
        Xd = X.derivative()
        E2 = TruncSeries(e2[:K], n)
        xx1 = X * (X - 1)
        rhs = Xd.truncate(n) * (E2 * xx1.truncate(n) * (2j * math.pi) + (X * 2 - 1).truncate(n) * Xd.truncate(n) * 4)
        quot = rhs * reciprocal(xx1.truncate(n) * 6)
        # x'' = quot, so (n + 2)(n + 1) c_{n+2} = [h^n] quot
        xs.append(quot.coeffs[n] / ((n + 2) * (n + 1)))
    return TruncSeries(xs[: N + 1], N)


def x_derivatives_at_rho(N=6):
    """x_m = m! c_m, the derivative normalization used by the Bell formula."""
    c = x_taylor_at_rho(N)
    return [c.coeffs[m] * math.factorial(m) for m in range(N + 1)]


def x_finite_difference_check(order=2, step=1e-3):
    """|c_m - finite-difference estimate| for m = 1, 2 (relative)."""
    c = x_taylor_at_rho(max(order, 2))
    f = modular_lambda
    d1 = (8 * (f(RHO + step) - f(RHO - step)) - (f(RHO + 2 * step) - f(RHO - 2 * step))) / (12 * step)
    d2 = (-f(RHO + 2 * step) + 16 * f(RHO + step) - 30 * f(RHO) + 16 * f(RHO - step)
          - f(RHO - 2 * step)) / (12 * step ** 2)
    return abs(c.coeffs[1] - d1) / abs(d1), abs(2 * c.coeffs[2] - d2) / abs(d2)


# ----------------------------------------------------------------- composition in z

def qt3_of_z(N=6, qt3=None):
    """Coefficients of Q^{1/3} t3 in h = z - e^{2 pi i/3} by the Bell formula.

    Q~_n = sum_k k! Q_k B_{n,k}(x_1, .., x_n)/n! with Q_k the Taylor
    coefficients in s and x_m the derivatives of the modular lambda.
    """
    qt3 = qt3_of_x(N) if qt3 is None else qt3
    Qk = [complex(c) for c in qt3.coeffs[: N + 1]]
    xd = x_derivatives_at_rho(N)[1:]
    table = bell_table(N, xd)
    out = [Qk[0]]
    for n in range(1, N + 1):
        acc = sum(math.factorial(k) * Qk[k] * table[n][k] for k in range(1, n + 1))
        out.append(acc / math.factorial(n))
    return TruncSeries(out, N)


def qt3_of_z_direct(N=6, qt3=None):
    """Same coefficients by direct substitution of the series (oracle)."""
    qt3 = qt3_of_x(N) if qt3 is None else qt3
    f = TruncSeries([complex(c) for c in qt3.coeffs[: N + 1]], N)
    xs = x_taylor_at_rho(N)
    g = TruncSeries([0j] + list(xs.coeffs[1:]), N)
    return compose_brute(f, g)


def qt3_numeric_route(z, t1=0, Q=1, order=30, steps=12, tol=1e-12, max_iter=30):
    """Q^{1/3} t3 at z from the canonical coordinates, without the series in s.

    Solves cross_ratio(u(t1, Q, t3)) = lambda(z) for t3 by the secant method,
    with u from root tracking of det(g - u eta) = 0.
    """
    from .frobenius import canonical_numeric, principal_cube_root
    target = modular_lambda(z)
    q13 = principal_cube_root(Q)

    def residual(t3):
        u1, u2, u3 = canonical_numeric(t1, Q, t3, order=order, steps=steps)
        return (u3 - u1) / (u2 - u1) - target

    seed = complex(qt3_of_x(3).map(complex)(target - complex(X0))) / q13
    a, b = seed, seed * (1 + 1e-3) + 1e-6
    fa, fb = residual(a), residual(b)
    for _ in range(max_iter):
        if fb == fa:
            break
        a, b, fa = b, b - fb * (b - a) / (fb - fa), fb
        fb = residual(b)
        if abs(b - a) < tol * max(1.0, abs(b)):
            break
    return q13 * b
