"""The verification suite: one function per acceptance criterion.

Each criterion returns a CriterionResult holding two kinds of record:

* checks: derived identities that must hold (they decide `verify` exit codes);
* literal: printed values compared as printed.  Some of these are known to be
  misprints; they are reported, and a criterion whose literal record fails is
  shown as FAIL, but they never silently replace the derived value.
"""
from __future__ import annotations

import cmath
import math
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from . import cohn, frobenius, gw, guzzetti, modular, monodromy, series, superpotential as sp
from .cyclotomic import SQRT_M3
from .qmf import E2, E4, E6

RHO = modular.RHO


@dataclass
class Check:
    id: str
    anchor: str
    residual: float
    tolerance: float
    passed: bool = None
    detail: str = ""

    def __post_init__(self):
        r = float(self.residual)
        self.residual = r
        if self.passed is None:
            self.passed = bool(math.isfinite(r) and r <= self.tolerance)

    def as_dict(self):
        return asdict(self)


@dataclass
class CriterionResult:
    number: int
    title: str
    checks: list = field(default_factory=list)
    literal: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def derived_pass(self):
        return all(c.passed for c in self.checks)

    @property
    def literal_pass(self):
        return all(c.passed for c in self.literal)

    @property
    def passed(self):
        return self.derived_pass and self.literal_pass

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        extra = ""
        if not self.literal_pass:
            bad = ", ".join(c.id for c in self.literal if not c.passed)
            extra = f"  (printed value not reproduced: {bad}; derived checks {'pass' if self.derived_pass else 'FAIL'})"
        elif not self.derived_pass:
            bad = ", ".join(c.id for c in self.checks if not c.passed)
            extra = f"  (failing: {bad})"
        return f"criterion {self.number:2d} {status}: {self.title}{extra}"


def _flag(ok):
    return 0.0 if ok else 1.0


def _rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


# ----------------------------------------------------------------- 1-3 Gromov-Witten

def criterion_01():
    res = CriterionResult(1, "GW recursion N_1..N_6")
    expected = (1, 1, 12, 620, 87304, 26312976)
    table = gw.kontsevich_table(6)
    got = tuple(table[d] for d in range(1, 7))
    res.checks.append(Check("gw.values", "recursion for N_d", sum(a != b for a, b in zip(got, expected)), 0,
                            detail=str(got)))
    res.checks.append(Check("gw.seed", "N_1 = 1", _flag(table[1] == 1), 0))
    t = time.perf_counter()
    gw.kontsevich_table(100)
    res.checks.append(Check("gw.runtime_D100", "recursion cost", time.perf_counter() - t, 1.0))
    return res


def criterion_02(order=30):
    res = CriterionResult(2, f"associativity residual exact through order {order}")
    r = gw.wdvv_residual(order)
    res.checks.append(Check("gw.wdvv", "associativity ODE", sum(1 for c in r.coeffs if c != 0), 0,
                            detail=f"{len(r.coeffs)} coefficients"))
    return res


def criterion_03():
    res = CriterionResult(3, "asymptotics a, b over k in [20, 60]")
    a, b = gw.fit_asymptotics(gw.kontsevich_table(60), 20, 60)
    res.checks.append(Check("gw.fit_a", "a ~ 0.138", max(0.0, 0.131 - a, a - 0.145), 0, detail=f"a = {a:.6f}"))
    res.checks.append(Check("gw.fit_b", "b ~ 6.1", max(0.0, 5.2 - b, b - 7.0), 0, detail=f"b = {b:.6f}"))
    res.info.update(a=a, b=b)
    return res


# ----------------------------------------------------------------- 4-7 modular forms

TAU_POINTS = (0.1 + 1.0j, -0.3 + 0.8j, 0.25 + 1.3j, 0.45 + 0.7j, -0.05 + 1.7j)


def _q_derivative(c):
    return [n * x for n, x in enumerate(c)]


def _q_mul(a, b):
    return [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(len(a))]


def criterion_04(M=60, step=1e-5):
    res = CriterionResult(4, "Ramanujan identities")
    e2, e4, e6 = (modular.eisenstein_q_coefficients(k, M) for k in (2, 4, 6))
    rhs = {
        "E2": [Fraction(x - y, 12) for x, y in zip(_q_mul(e2, e2), e4)],
        "E4": [Fraction(x - y, 3) for x, y in zip(_q_mul(e2, e4), e6)],
        "E6": [Fraction(x - y, 2) for x, y in zip(_q_mul(e2, e6), _q_mul(e4, e4))],
    }
    for name, c in (("E2", e2), ("E4", e4), ("E6", e6)):
        bad = sum(1 for x, y in zip(_q_derivative(c), rhs[name]) if x != y)
        res.checks.append(Check(f"ramanujan.q_expansion.{name}", "Ramanujan identities", bad, 0,
                                detail=f"q-coefficients 0..{M}"))
    worst = 0.0
    for tau in TAU_POINTS:
        v = modular.qmf_values(tau)
        for k, f in ((2, E2), (4, E4), (6, E6)):
            ring = 2j * math.pi * f.D().evaluate(v)
            fd = (modular.eisenstein_eval(k, tau + step) - modular.eisenstein_eval(k, tau - step)) / (2 * step)
            worst = max(worst, _rel(fd, ring))
    res.checks.append(Check("ramanujan.numeric", "Ramanujan identities", worst, 1e-6))
    return res


def delta_grid(n=20):
    rng = np.random.default_rng(4)
    return [complex(x, y) for x, y in zip(rng.uniform(-0.5, 0.5, n), rng.uniform(0.3, 2.0, n))]


def criterion_05():
    res = CriterionResult(5, "three routes to Delta")
    worst = [0.0, 0.0, 0.0]
    for tau in delta_grid():
        _, d_eta, d_eis = modular.eta_delta(tau)
        d_half = modular.delta_from_half_periods(tau)
        for i, (a, b) in enumerate(((d_eta, d_eis), (d_eta, d_half), (d_eis, d_half))):
            worst[i] = max(worst[i], _rel(a, b))
    for name, w in zip(("eta_vs_eisenstein", "eta_vs_half_periods", "eisenstein_vs_half_periods"), worst):
        res.checks.append(Check(f"delta.{name}", "discriminant", w, 1e-8))
    return res


E6_RHO_PRINTED = math.gamma(1 / 3) ** 18 / 4 ** 6
E6_RHO_DERIVED = 27 * math.gamma(1 / 3) ** 18 / (2 ** 9 * math.pi ** 12)


def criterion_06():
    res = CriterionResult(6, "special values at e^{2 pi i/3}")
    e2, e4, e6 = modular.eisenstein_triple(RHO)
    res.checks.append(Check("special.E2", "E2(rho) = 2 sqrt3/pi", abs(e2 - 2 * math.sqrt(3) / math.pi), 1e-8))
    res.checks.append(Check("special.E4", "E4(rho) = 0", abs(e4), 1e-8))
    res.checks.append(Check("special.E6_derived", "E6(rho) = 27 Gamma(1/3)^18/(2^9 pi^12)",
                            _rel(e6, E6_RHO_DERIVED), 1e-8, detail=f"E6(rho) = {e6.real:.12f}"))
    res.literal.append(Check("special.E6_printed", "E6(rho) = Gamma(1/3)^18/4^6", _rel(e6, E6_RHO_PRINTED), 1e-8,
                             detail=f"printed {E6_RHO_PRINTED:.6g} vs {e6.real:.6g}"))
    return res


def criterion_07():
    res = CriterionResult(7, "j expansion")
    a = modular.j_q_expansion(4, "eisenstein")
    b = modular.j_q_expansion(4, "eta")
    res.checks.append(Check("j.pole", "j = 1/q + 744 + O(q)", _flag(a[0] == 1 and b[0] == 1), 0))
    res.checks.append(Check("j.constant", "j = 1/q + 744 + O(q)", _flag(a[1] == 744 and b[1] == 744), 0))
    res.checks.append(Check("j.next_cross_route", "two Delta routes", _rel(float(a[2]), float(b[2])), 1e-8,
                            detail=f"q coefficient {a[2]}"))
    return res


# ----------------------------------------------------------------- 8-9 canonical coordinates

def criterion_08(n=10, seed=8):
    res = CriterionResult(8, "small canonical coordinates")
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(n):
        t1 = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        Q = cmath.rect(rng.uniform(0.3, 3), rng.uniform(-3, 3))
        g = frobenius.intersection_form(t1, Q, 0.0)
        roots = list(np.linalg.eigvals(frobenius.ETA @ g))
        for u in frobenius.canonical_anchor(t1, Q):
            k = min(range(len(roots)), key=lambda i: abs(roots[i] - u))
            worst = max(worst, abs(roots.pop(k) - u) / max(1.0, abs(u)))
    res.checks.append(Check("canon.small_roots", "u_k = t1 + 3 Q^{1/3} zeta^k", worst, 1e-10))
    return res


def criterion_09(t1=0.3, Q=1.0, steps=(1e-2, 5e-3, 1e-3)):
    res = CriterionResult(9, "canonical series against root tracking")
    coeffs = [complex(c) for c in frobenius.canonical_series_exact(4)]
    errs = []
    for t3 in steps:
        u_num = frobenius.canonical_numeric(t1, Q, t3)
        u_ser = frobenius.evaluate_canonical_series(coeffs, t1, Q, t3, order=3)
        errs.append(max(abs(a - b) for a, b in zip(u_num, u_ser)))
    slope = np.polyfit(np.log(steps), np.log(errs), 1)[0]
    res.checks.append(Check("canon.error_slope", "order-3 truncation", max(0.0, 3.5 - slope), 0,
                            detail=f"slope {slope:.3f}, errors {', '.join(f'{e:.2e}' for e in errs)}"))
    cs = frobenius.canonical_series(N=6)
    fit_vs_exact = max(abs(a - complex(b)) for a, b in zip(cs.coeffs, cs.exact))
    res.checks.append(Check("canon.fit_vs_exact", "Cauchy fit vs exact cubic", fit_vs_exact, 1e-8))
    res.info["reconciliation"] = cs.metadata["printed_over_fit_by_family"]
    res.info["a1_cubed"] = {k: str(v) for k, v in cs.metadata["n1_consistency"].items()}
    return res


# ----------------------------------------------------------------- 10 small LG

def richardson_second_difference(f, p, h):
    def d2(s):
        return (f(p + s) - 2 * f(p) + f(p - s)) / s ** 2
    return (4 * d2(h / 2) - d2(h)) / 3


def criterion_10(t1=0.2 + 0.1j, Q=1.3, step=1e-4):
    res = CriterionResult(10, "small LG critical structure")
    lg = sp.SmallLG(t1, Q)
    anchor = frobenius.canonical_anchor(t1, Q, lg.q13)
    psi = frobenius.small_phase_psi(Q, lg.q13)
    e6_worst = val_worst = w_worst = 0.0
    for i, p in enumerate(sp.CRITICAL_POINTS):
        e6_worst = max(e6_worst, abs(modular.qmf_values(p)["E6"]))
        val_worst = max(val_worst, abs(sp.small_lambda(p, lg) - anchor[i]))
        d2 = richardson_second_difference(lambda s: sp.small_lambda(s, lg), p, step)
        lam_ww = d2 / sp.abelian_density(p, lg.q13) ** 2
        w_worst = max(w_worst, _rel(1 / lam_ww, psi[i, 0] ** 2))
    res.checks.append(Check("lg.critical_points_E6", "critical points at E6 zeros", e6_worst, 1e-10))
    res.checks.append(Check("lg.critical_values", "critical values = u_k", val_worst, 1e-8))
    res.checks.append(Check("lg.hessian_psi", "1/lambda'' = psi_i1^2", w_worst, 1e-6,
                            detail="Richardson-extrapolated second difference, derived constant"))
    return res


# ----------------------------------------------------------------- 11 Cohn

def cohn_grid():
    return [complex(re, im) for re in np.linspace(-0.45, 0.45, 5) for im in (0.6, 0.85, 1.1, 1.4)]


def criterion_11():
    res = CriterionResult(11, "Cohn and Weber identities")
    w = np.zeros(5)
    for tau in cohn_grid():
        v = cohn.v_pointwise(tau)
        r1, r2 = cohn.cohn_residuals(tau, v)
        wb = cohn.weber_wp_check(tau, v)
        w = np.maximum(w, [r1, r2, wb["gamma2"], wb["gamma3"], wb["j_consistency"]])
    names = (("cohn.j_identity", "1 - J = 4 p^3 + 1", 1e-8), ("cohn.covering_ode", "(v')^6 = c^6 Delta", 1e-6),
             ("cohn.weber_gamma2", "gamma2 through p", 1e-8), ("cohn.weber_gamma3", "gamma3 through p'", 1e-8),
             ("cohn.gamma_relation", "gamma2^3 - gamma3^2 = 1728", 1e-8))
    for (cid, anchor, tol), r in zip(names, w):
        res.checks.append(Check(cid, anchor, r, tol))
    gap = cohn.v_of_tau(0.3 + 0.9j)["gap"]
    res.checks.append(Check("cohn.path_vs_pointwise", "covering by integration", gap, 1e-7))
    return res


# ----------------------------------------------------------------- 12-13 big LG

BIG_GRID = tuple(complex(re, im) for re, im in
                 [(-0.4, 0.9), (-0.2, 1.2), (0.0, 1.0), (0.15, 1.5), (0.3, 0.95),
                  (0.45, 1.1), (-0.1, 1.8), (0.2, 1.3), (-0.35, 1.4), (0.05, 0.85)])


def big_data():
    (conv, q1), _ = sp.convention_report()
    mc = sp.milanov_coeffs(conv, q1)
    return sp.big_J_coefficients(mc), (conv, q1)


def numeric_zero_identity(data, tau12):
    """Coefficients of J(x(eps)) - T/Qs^{1/3} with the exact J_n evaluated at tau12."""
    v = modular.qmf_values(tau12)
    N = data.order
    T = series.TruncSeries([c.evaluate(v) for c in data.milanov.t1[: N + 1]])
    Qs = series.TruncSeries([c.evaluate(v) for c in data.milanov.Q[: N + 1]])
    unit = Qs * (1 / Qs.coeffs[0])
    q13 = series.binomial_power(series.TruncSeries((1,) + unit.coeffs[1:]), Fraction(1, 3)) * v["W"]
    x_of_eps = series.TruncSeries([c.evaluate(v) for c in data.x_of_eps.coeffs])
    J = series.TruncSeries([c.evaluate(v) for c in data.J])
    r = series.compose(J, x_of_eps) - T * series.reciprocal(q13)
    return [abs(c) / max(1.0, abs(t)) for c, t in zip(r.coeffs, T.coeffs)]


def criterion_12():
    res = CriterionResult(12, "big LG zero identity and Delta-power fits")
    data, conv = big_data()
    worst = [0.0] * (data.order + 1)
    for tau in BIG_GRID:
        worst = [max(a, b) for a, b in zip(worst, numeric_zero_identity(data, tau))]
    for n, w in enumerate(worst):
        res.checks.append(Check(f"big.zero_order{n}", "lambda = 0 along the period map", w, 1e-8))
    exact_zero = sp.zero_identity_residual(data)
    res.checks.append(Check("big.zero_exact", "lambda = 0 in the ring", sum(1 for c in exact_zero.coeffs if c), 0))
    for n in range(data.order + 1):
        _, r = sp.delta_power_fit(data, n, n + 1)
        res.checks.append(Check(f"big.fit_delta_{n + 1}_3_J{n}", "Delta^{(n+1)/3} J_n quasi-modular", r, 1e-8))
    for n in (1, 2):
        _, r = sp.delta_power_fit(data, n, n)
        res.literal.append(Check(f"big.fit_delta_{n}_3_J{n}", "Delta^{n/3} J_n quasi-modular", r, 1e-8))
    res.info["convention"] = (conv[0], str(conv[1]))
    return res


def criterion_13(n=25, seed=13):
    res = CriterionResult(13, "quadratic relations")
    rng = random.Random(seed)

    def r():
        return Fraction(rng.randint(-50, 50), rng.randint(1, 20))

    small_bad = big_bad = 0
    for _ in range(n):
        tau, rr = r(), r()
        small_bad += sp.quadratic_form(sp.w_coordinates_small(tau, rr)) != 0
        t1, t2, y = r(), r(), r()
        t3 = (t1 - t2) ** 2 * y * y          # chart: t3 = eps y^2 with eps = (tau1 - tau2)^2
        big_bad += sp.quadratic_form(sp.w_coordinates_big(t1, t2, y)) != t3
    res.checks.append(Check("quadratic.small", "w2^2 = 4 w1 w3 at t3 = 0", small_bad, 0))
    res.checks.append(Check("quadratic.big", "t3 = w2^2 - 4 w1 w3", big_bad, 0))
    res.info["normalized_chart_factor"] = str(sp.T3_NORMALIZATION)
    return res


# ----------------------------------------------------------------- 14 monodromy

def _chi3_point(g):
    (a, b), (c, d) = g
    if c == 0:
        return 0.1 + 1.1j
    return complex(-d / c + 0.013, 1 / abs(c))


def gamma3_sample(n=20, seed=14):
    rng = random.Random(seed)
    out = [monodromy.r1, monodromy.r2, monodromy.r3, ((1, 1), (0, 1)),
           ((-1, 0), (0, -1)), ((1, 0), (1, 1))]
    while len(out) < n:
        g = monodromy.random_sl2(rng, rng.randint(2, 5))
        if abs(g[1][0]) <= 12 and g not in out:
            out.append(g)
    return out


def criterion_14():
    res = CriterionResult(14, "monodromy relations and the index-3 subgroup")
    rel = monodromy.relations_report()
    for name, ok in sorted(rel.items()):
        target = res.literal if "printed" in name else res.checks
        target.append(Check(f"monodromy.{name}", "monodromy relations", _flag(ok), 0))
    for name, (value, printed, equal) in monodromy.change_of_basis_check().items():
        res.literal.append(Check(f"monodromy.printed {name}", "change of basis images", _flag(equal), 0,
                                 detail=f"computed {value}"))
    for name, ok in monodromy.true_pattern().items():
        res.checks.append(Check(f"monodromy.{name}", "change of basis images", _flag(ok), 0))
    res.checks.append(Check("monodromy.rho_homomorphism", "symmetric square", _flag(monodromy.rho_homomorphism_check()), 0))
    worst = 0.0
    for g in gamma3_sample():
        chi = monodromy.chi3(g, _chi3_point(g))
        member = monodromy.gamma3_membership(g)
        # members: chi3 = 1; non-members: chi3 is a primitive cube root of unity
        worst = max(worst, abs(chi - 1) if member else float(abs(chi - 1) < 0.5))
    res.checks.append(Check("monodromy.gamma3_vs_chi3", "membership by the eta^8 character", worst, 1e-8))
    return res


# ----------------------------------------------------------------- 15-16 Guzzetti

def criterion_15(N=6):
    res = CriterionResult(15, "Guzzetti pipeline")
    omega = guzzetti.omega_extend(N)
    res.checks.append(Check("guzzetti.omega_ode", "Omega system", guzzetti.omega_residual(omega), 0))
    res.checks.append(Check("guzzetti.omega_two_codings", "Omega system",
                            _flag(omega == guzzetti.omega_extend_series(N)), 0))
    for (i, n), (value, printed, equal) in sorted(guzzetti.omega_printed_check(omega).items()):
        target = res.literal if n == 0 else res.checks
        target.append(Check(f"guzzetti.omega{i}_order{n}", "Omega expansion", _flag(equal), 0,
                            detail=f"computed {complex(value):.6f}"))
    mu, report = guzzetti.select_mu(omega)
    gm = guzzetti.flat_from_canonical(omega, mu)
    res.checks.append(Check("guzzetti.eta", "Psi^T Psi = eta", gm.notes["eta_residual"], 0))
    pc = guzzetti.flat_printed_check(gm)
    for key in ("t1 leading", "t3 H order 0", "t3 H order 1", "Q/H^3 order-1 ratio",
                "Q^(1/3) t3 order 1", "Q^(1/3) t3 order 2"):
        value, printed = pc[key]
        res.checks.append(Check(f"guzzetti.{key}", "flat coordinates", _flag(value == printed), 0))
    small = guzzetti.small_phase_constants()[0]
    res.checks.append(Check("guzzetti.Q_prefactor_derived", "Q/H^3 from u_k = t1 + 3 Q^{1/3} zeta^k",
                            _flag(gm.q_over_h3.coeffs[0] == small["Q_over_H3"] == SQRT_M3 / 243), 0,
                            detail="Q/H^3 = +i sqrt3/243"))
    res.checks.append(Check("guzzetti.cross_ratio_route", "reversion of the canonical cross ratio",
                            _flag(guzzetti.qt3_of_x_cross_ratio(N) == gm.qt3()), 0))
    value, printed = pc["Q/H^3 order 0 (-i sqrt3/243)"]
    res.literal.append(Check("guzzetti.Q_prefactor_minus", "Q/H^3 = -i sqrt3/243", _flag(value == printed), 0))
    res.info["mu"] = mu
    res.info["provenance"] = "printed prefactor i sqrt3/143; derived i sqrt3/243"
    return res


def criterion_16(N=8, radius=0.01, angles=(0.7, 2.9)):
    res = CriterionResult(16, "end-to-end composition near e^{2 pi i/3}")
    qz = guzzetti.qt3_of_z(N)
    worst = 0.0
    for a in angles:
        h = radius * cmath.exp(1j * a)
        worst = max(worst, abs(qz(h) - guzzetti.qt3_numeric_route(RHO + h)))
    res.checks.append(Check("guzzetti.end_to_end", "canonical -> cross ratio -> lambda inverse", worst, 1e-5))
    bell, direct = qz, guzzetti.qt3_of_z_direct(N)
    rel = max(abs(a - b) for a, b in zip(bell.coeffs, direct.coeffs)) / max(abs(c) for c in direct.coeffs)
    res.checks.append(Check("guzzetti.bell_vs_direct", "Bell formula vs substitution", rel, 1e-10))
    res.checks.append(Check("guzzetti.first_order", "Q~_1 = Q_1 x_1",
                            _rel(bell.coeffs[1], complex(guzzetti.qt3_of_x(N).coeffs[1])
                                 * guzzetti.x_taylor_at_rho(N).coeffs[1]), 1e-12))
    return res


# ----------------------------------------------------------------- 17 series engine

def random_series(rng, K, zero_constant=False, unit_constant=False):
    c = [Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(K + 1)]
    if zero_constant:
        c[0] = Fraction(0)
        if c[1] == 0:
            c[1] = Fraction(1)
    if unit_constant:
        c[0] = Fraction(1)
    elif not zero_constant and c[0] == 0:
        c[0] = Fraction(2)
    return series.TruncSeries(c, K)


def criterion_17(K=12, n=6, seed=17):
    res = CriterionResult(17, "series engine identities")
    rng = random.Random(seed)
    bad = {"compose": 0, "reciprocal": 0, "reversion": 0, "lagrange": 0}
    for _ in range(n):
        f = random_series(rng, K)
        g = random_series(rng, K, zero_constant=True)
        bad["compose"] += series.compose(f, g) != series.compose_brute(f, g)
        bad["reciprocal"] += series.reciprocal(f) != series.reciprocal_long_division(f)
        inv = series.reversion(g)
        bad["reversion"] += series.compose(g, inv) != series.TruncSeries.variable(K)
        bad["reversion"] += series.compose(inv, g) != series.TruncSeries.variable(K)
        bad["lagrange"] += inv != series.lagrange_reversion(g)
    for name, b in bad.items():
        res.checks.append(Check(f"series.{name}", "series engine", b, 0, detail=f"{n} random series, order {K}"))
    return res


CRITERIA = {n: globals()[f"criterion_{n:02d}"] for n in range(1, 18)}

SUITES = {
    "gw": (1, 2, 3), "modular": (4, 5, 6, 7), "canon": (8, 9), "superpotential": (10, 12, 13),
    "covering": (11,), "monodromy": (14,), "guzzetti": (15, 16), "series": (17,),
}


@dataclass
class VerificationReport:
    suite: str
    checks: list
    notes: list
    criteria: list

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def as_dict(self):
        return {"schema": 1, "suite": self.suite, "pass": self.passed,
                "checks": [c.as_dict() for c in self.checks],
                "printed_value_notes": [c.as_dict() for c in self.notes],
                "criteria": [{"number": r.number, "title": r.title, "derived_pass": r.derived_pass,
                              "literal_pass": r.literal_pass} for r in self.criteria]}


def run_suite(name="all"):
    """Run the criteria of a suite; checks are sorted by id."""
    numbers = sorted(CRITERIA) if name == "all" else SUITES[name]
    results = [CRITERIA[n]() for n in numbers]
    checks = sorted((c for r in results for c in r.checks), key=lambda c: c.id)
    notes = sorted((c for r in results for c in r.literal), key=lambda c: c.id)
    return VerificationReport(name, checks, notes, results)
