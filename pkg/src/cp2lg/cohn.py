"""Equianharmonic uniformization of the small superpotential.

The lattice Z + rho6 Z (rho6 = e^{pi i/3}) has g2 = 0 and g3 > 0.  Two
homotheties of it are used:

* the Cohn lattice  mu (Z + rho6 Z), mu = i g3^{1/6}:  g3 = -1, so that
  p'^2 = 4 p^3 + 1 and the spectral cubic matches 27 Q = -1/(4 (2 omega)^6);
* the Weber lattice mu_w (Z + rho6 Z), mu_w = g3^{1/6}:  g3 = +1.

p_Cohn(v) = -p_Weber(i v), which converts between the two readings.

The covering v(tau) is fixed by p_Cohn(v) = -J^{1/3}/4^{1/3} together with
p_Cohn'(v) = -i E6/W^{3/2} (W^{3/2} = 12^{3/2} eta^12); then
v'(tau) = c Delta^{1/6} with c = -sqrt(12)/(3 4^{1/3} 2 pi).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp

from .errors import BranchError, DiscriminantError, PrecisionError
from .modular import MIN_IM_TAU, eta, g2_g3, j_family, qmf_values, wp_general

RHO6 = cmath.exp(1j * math.pi / 3)
G3_UNIT = g2_g3(RHO6)[1].real                 # g3 of Z + rho6 Z
MU_WEBER = G3_UNIT ** (1 / 6)
MU_COHN = 1j * MU_WEBER
CUBE_ROOT_4 = 4 ** (1 / 3)
COVERING_CONSTANT = -math.sqrt(12) / (3 * CUBE_ROOT_4 * 2 * math.pi)


def wp_cohn(v):
    """(p, p') of the Cohn-normalized lattice (g2 = 0, g3 = -1)."""
    return wp_general(v, MU_COHN, MU_COHN * RHO6)


def wp_weber(v):
    """(p, p') of the Weber-normalized lattice (g2 = 0, g3 = +1)."""
    return wp_general(v, MU_WEBER, MU_WEBER * RHO6)


def cohn_periods():
    return MU_COHN, MU_COHN * RHO6


def half_period_values_cohn():
    w1, w2 = cohn_periods()
    return tuple(wp_cohn(h)[0] for h in (w1 / 2, w2 / 2, (w1 + w2) / 2))


def _reduce(v, periods):
    """v modulo the lattice spanned by `periods` (into the fundamental cell)."""
    w1, w2 = periods
    m = np.linalg.solve(np.array([[w1.real, w2.real], [w1.imag, w2.imag]]), [v.real, v.imag])
    return v - math.floor(m[0]) * w1 - math.floor(m[1]) * w2


def lattice_representative(d, periods=None):
    """The shortest vector congruent to d modulo the lattice."""
    w1, w2 = periods or cohn_periods()
    d = _reduce(complex(d), (w1, w2))
    return min((d - m * w1 - n * w2 for m in (0, 1) for n in (0, 1)), key=abs)


def lattice_distance(a, b, periods=None):
    """|a - b| modulo the lattice."""
    return abs(lattice_representative(complex(a - b), periods))


def half_lattice_distance(v, periods=None):
    w1, w2 = periods or cohn_periods()
    return lattice_distance(2 * v, 0, (w1, w2)) / 2


# ----------------------------------------------------------------- uniformization

@dataclass(frozen=True)
class EquianharmonicChart:
    v0: complex
    omega: complex

    def __post_init__(self):
        if self.omega == 0:
            raise ValueError("omega must be nonzero")
        if half_lattice_distance(self.v0) < 1e-6:
            raise DiscriminantError("v0 on the half-lattice: p'(v0)^2 = 0", self.v0)


def uniformize_small(chart: EquianharmonicChart):
    """(t1, Q) = (-p(v0)/(2 omega)^2, -1/(108 (2 omega)^6)).

    Also returns the cube root Q^{1/3} = -1/(108^{1/3} (2 omega)^2) for which
    lambda = t1 + 3 Q^{1/3} J^{1/3} matches the elliptic family.
    """
    s = (2 * chart.omega) ** 2
    p0 = wp_cohn(chart.v0)[0]
    t1 = -p0 / s
    Q = -1 / (108 * s ** 3)
    q13 = -1 / (108 ** (1 / 3) * s)
    return t1, Q, q13


def elliptic_lambda(v, chart: EquianharmonicChart):
    s = (2 * chart.omega) ** 2
    return (wp_cohn(v)[0] - wp_cohn(chart.v0)[0]) / s


def discriminant_report(chart: EquianharmonicChart):
    """|(t1^3 + 27 Q) + p'(v0)^2/(4 (2 omega)^6)|, relative."""
    t1, Q, _ = uniformize_small(chart)
    dp = wp_cohn(chart.v0)[1]
    lhs = t1 ** 3 + 27 * Q
    rhs = -dp ** 2 / (4 * (2 * chart.omega) ** 6)
    return abs(lhs - rhs) / max(abs(lhs), 1e-300)


# ----------------------------------------------------------------- inversion of p

def _seed_grid(target, periods, n=24):
    w1, w2 = periods
    best, err = None, math.inf
    for a in np.linspace(0.02, 0.98, n):
        for b in np.linspace(0.02, 0.98, n):
            v = a * w1 + b * w2
            e = abs(wp_cohn(v)[0] - target)
            if e < err:
                best, err = v, e
    return best


def invert_wp(target, derivative_hint=None, tol=1e-14, max_iter=80):
    """v with p_Cohn(v) = target, sign chosen so p'(v) is closest to the hint.

    Damped Newton from the best point of a coarse grid over the cell.
    """
    periods = cohn_periods()
    v = _seed_grid(target, periods)
    for _ in range(max_iter):
        p, dp = wp_cohn(v)
        if dp == 0:
            raise PrecisionError("p' vanished during inversion")
        step = (p - target) / dp
        damp = 1.0
        while damp > 1e-4:
            trial = v - damp * step
            if abs(wp_cohn(trial)[0] - target) <= abs(p - target):
                break
            damp /= 2
        v = trial
        if abs(damp * step) < tol * max(1.0, abs(v)) or abs(wp_cohn(v)[0] - target) < 1e-15 * max(1.0, abs(target)):
            break
    else:
        raise PrecisionError("p inversion did not converge")
    if derivative_hint is not None:
        if abs(wp_cohn(-v)[1] - derivative_hint) < abs(wp_cohn(v)[1] - derivative_hint):
            v = -v
        v = _polish(v, target, derivative_hint)
    return _reduce(v, periods)


def _polish(v, target, dp_target, steps=3):
    """Newton on p = target or on p' = dp_target, whichever is better conditioned.

    Near a half period p' vanishes and the p equation only fixes v to half
    precision; there p'' = 6 p^2 (g2 = 0) is large and the p' equation is used.
    """
    for _ in range(steps):
        p, dp = wp_cohn(v)
        ddp = 6 * p * p
        if abs(dp) >= abs(ddp):
            v = v - (p - target) / dp
        else:
            v = v - (dp - dp_target) / ddp
    return v


def wp_prime_branch(tau):
    """p_Cohn'(v(tau)) = -i E6/W^{3/2} with W^{3/2} = 12^{3/2} eta^12."""
    v = qmf_values(tau)
    return -1j * v["E6"] / (12 ** 1.5 * eta(tau) ** 12)


def v_pointwise(tau):
    """v(tau) modulo the lattice, from p(v) = -J^{1/3}/4^{1/3}."""
    tau = complex(tau)
    if tau.imag < MIN_IM_TAU:
        raise ValueError("Im tau below the floor")
    v = qmf_values(tau)
    target = -(v["E4"] / v["W"]) / CUBE_ROOT_4
    return invert_wp(target, wp_prime_branch(tau))


def covering_derivative(tau):
    """v'(tau) = c Delta^{1/6}, Delta^{1/6} = (2 pi)^2 eta^4."""
    return COVERING_CONSTANT * (2 * math.pi) ** 2 * eta(tau) ** 4


# ----------------------------------------------------------------- path route

@dataclass
class CoveringPath:
    base: complex
    v_base: complex
    taus: list = field(default_factory=list)
    values: list = field(default_factory=list)

    @classmethod
    def start(cls, base):
        v0 = v_pointwise(base)
        return cls(complex(base), v0, [complex(base)], [v0])

    def extend(self, tau_end, rtol=1e-12, atol=1e-14):
        """Integrate v' = c Delta^{1/6} along the segment to tau_end."""
        a, b = self.taus[-1], complex(tau_end)
        if min(a.imag, b.imag) < MIN_IM_TAU:
            raise ValueError("path leaves Im tau >= 0.05")
        d = b - a

        def rhs(s, y):
            return [covering_derivative(a + s * d) * d]

        sol = solve_ivp(rhs, (0.0, 1.0), [complex(self.values[-1])], method="DOP853",
                        rtol=rtol, atol=atol)
        if not sol.success:
            raise PrecisionError(sol.message)
        self.taus.append(b)
        self.values.append(complex(sol.y[0, -1]))
        return self.values[-1]


BASE_POINT = 0.1 + 1.2j      # generic: E4, E6 nonzero


def v_of_tau(tau, path_from=BASE_POINT, waypoints=(), tol=1e-7):
    """v(tau) by both routes; raises BranchError if they disagree mod the lattice."""
    path = CoveringPath.start(path_from)
    for w in list(waypoints) + [tau]:
        path.extend(w)
    v_path = path.values[-1]
    v_point = v_pointwise(tau)
    gap = lattice_distance(v_path, v_point)
    if gap > tol:
        raise BranchError(f"routes disagree by {gap:.3g} at tau = {tau}")
    return {"path": v_path, "pointwise": v_point, "gap": gap}


def cohn_residuals(tau, v=None):
    """(|1 - J - (4 p^3 + 1)|, |(v')^6 - c^6 Delta|/|Delta|)."""
    v = v_pointwise(tau) if v is None else v
    J = j_family(tau)[1]
    p = wp_cohn(v)[0]
    r1 = abs((1 - J) - (4 * p ** 3 + 1))
    h = 1e-5
    # pointwise values are reduced mod the lattice; difference them mod it too
    dv = lattice_representative(v_pointwise(tau + h) - v_pointwise(tau - h)) / (2 * h)
    delta = (2 * math.pi) ** 12 * eta(tau) ** 24
    r2 = abs(dv ** 6 - COVERING_CONSTANT ** 6 * delta) / abs(COVERING_CONSTANT ** 6 * delta)
    return r1, r2


def weber_wp_check(tau, v=None):
    """Residuals of gamma2 = 3 4^{4/3} p(v^) and gamma3 = 3^{3/2} 4^{3/2} p'(v^).

    Read on the Weber lattice at v^ = i v.  Also returns the Cohn-lattice
    reading of the gamma2 identity, which has the opposite sign.
    """
    v = v_pointwise(tau) if v is None else v
    _, _, g2, g3 = j_family(tau)
    p, dp = wp_weber(1j * v)
    r2 = abs(g2 - 3 * 4 ** (4 / 3) * p) / abs(g2)
    r3 = abs(g3 - 3 ** 1.5 * 4 ** 1.5 * dp) / max(abs(g3), 1.0)
    cohn_reading = abs(g2 - 3 * 4 ** (4 / 3) * wp_cohn(v)[0]) / abs(g2)
    return {"gamma2": r2, "gamma3": r3, "gamma2_cohn_lattice": cohn_reading,
            "j_consistency": abs(g2 ** 3 - g3 ** 2 - 1728) / 1728}
