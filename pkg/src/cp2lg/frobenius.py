"""Frobenius-manifold data of the quantum cohomology of the projective plane.

Flat coordinates (t1, t2, t3) with Novikov variable Q = e^{t2}; every
series is in X = Q^{1/3} t3, and the potential enters through
Phi(z) with z = X^3 = Q t3^3.

Labeling of the canonical coordinates is fixed once: at t3 = 0
(u1, u2, u3) = t1 + 3 Q^{1/3} (1, zeta^2, zeta), zeta = e^{2 pi i/3},
and labels are carried to t3 != 0 by continuation.  Accordingly the
expansion u_k = t1 + (1/t3) sum_n At_n (omega_k X)^n uses
omega = (1, zeta^2, zeta).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath as mp
import numpy as np

from .cyclotomic import Cyclo, ZETA3
from .errors import DiscriminantError, PrecisionError
from .gw import factorial, kontsevich_table, phi_derivative_series
from .series import TruncSeries, potential_poly

ZETA = cmath.exp(2j * math.pi / 3)
LABEL_PHASES = (1, ZETA ** 2, ZETA)          # omega_k for u1, u2, u3
LABEL_EXPONENTS = (0, 2, 1)                  # omega_k = zeta^e
ETA = np.array([[0, 0, 1], [0, 1, 0], [1, 0, 0]], dtype=complex)
DEFAULT_DPS = 30


def _table(order):
    return kontsevich_table(max(order, 1))


def principal_cube_root(Q):
    return complex(Q) ** (1 / 3)


# ----------------------------------------------------------------- intersection form

def _phi_sums(table, Q, t3, order, ctx):
    """Regular combinations of Phi derivatives, each a polynomial in t3.

    Returns (e00, e01, e11) with
      e00 = 3/t3^3 (9 Phi'' - 9 Phi' + 2 Phi),
      e01 = 2/t3^2 (3 Phi'' - Phi'),
      e11 = Phi''/t3.
    """
    e00 = e01 = e11 = ctx.mpc(0)
    for n in range(1, order + 1):
        c = ctx.mpf(table[n]) / factorial(3 * n - 1)
        qn = ctx.mpc(Q) ** n
        e00 += 3 * (9 * n * n - 9 * n + 2) * c * qn * t3 ** (3 * n - 3)
        e01 += 2 * (3 * n * n - n) * c * qn * t3 ** (3 * n - 2)
        e11 += n * n * c * qn * t3 ** (3 * n - 1)
    return e00, e01, e11


def intersection_form(t1, Q, t3, order=30, dps=DEFAULT_DPS, table=None):
    """g^{ab} at (t1, Q, t3), entries assembled from Phi truncated at `order`.

    The entries with negative powers of t3 are evaluated through their
    regular series, so t3 = 0 is allowed.  Returns a numpy complex matrix.
    """
    return np.array(_intersection_form_mp(t1, Q, t3, order, dps, table).tolist(), dtype=complex)


def _intersection_form_mp(t1, Q, t3, order, dps, table=None):
    table = table or _table(order)
    with mp.workdps(dps):
        t1, t3 = mp.mpc(t1), mp.mpc(t3)
        e00, e01, e11 = _phi_sums(table, Q, t3, order, mp)
        return mp.matrix([[e00, e01, t1], [e01, t1 + e11, 3], [t1, 3, -t3]])


def discriminant_t3_zero(t1, Q):
    """det of g at t3 = 0; equals -(t1^3 + 27 Q)."""
    g = intersection_form(t1, Q, 0.0)
    return complex(np.linalg.det(g))


def _spectral_roots_mp(t1, Q, t3, order, dps, table):
    """Roots of det(g - u eta) = 0 in mpmath precision."""
    with mp.workdps(dps):
        g = _intersection_form_mp(t1, Q, t3, order, dps, table)
        # det(g - u eta) = det(eta) det(eta g - u), det(eta) = -1
        m = mp.matrix(3, 3)
        for i in range(3):
            for j in range(3):
                m[i, j] = g[2 - i, j]
        tr = m[0, 0] + m[1, 1] + m[2, 2]
        minors = (m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0] + m[0, 0] * m[2, 2]
                  - m[0, 2] * m[2, 0] + m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        det = mp.det(m)
        return mp.polyroots([1, -tr, minors, -det], maxsteps=200, extraprec=2 * dps)


def canonical_anchor(t1, Q, q13=None):
    """(u1, u2, u3) at t3 = 0."""
    q13 = principal_cube_root(Q) if q13 is None else q13
    return tuple(complex(t1) + 3 * q13 * w for w in LABEL_PHASES)


def _match(previous, predicted, roots, step_scale):
    roots = list(roots)
    out = []
    for p in predicted:
        k = min(range(len(roots)), key=lambda i: abs(roots[i] - p))
        out.append(roots.pop(k))
    sep = min(abs(out[i] - out[j]) for i in range(3) for j in range(i + 1, 3))
    jump = max(abs(o - p) for o, p in zip(out, previous))
    if sep < 3 * max(jump, step_scale):
        raise DiscriminantError("canonical coordinates too close to label safely")
    return out


def track_canonical(t1, Q, t3_path, order=30, q13=None, dps=DEFAULT_DPS):
    """Label the roots along a polyline of t3 values starting at t3 = 0.

    Returns a list of labeled triples, one per path point.
    """
    table = _table(order)
    t3_path = [complex(t) for t in t3_path]
    if not t3_path or t3_path[0] != 0:
        t3_path = [0j] + t3_path
        drop_first = True
    else:
        drop_first = False
    current = list(canonical_anchor(t1, Q, q13))
    velocity = [0j, 0j, 0j]
    out = [tuple(current)]
    for a, b in zip(t3_path, t3_path[1:]):
        with mp.workdps(dps):
            roots = [complex(r) for r in _spectral_roots_mp(t1, Q, b, order, dps, table)]
        predicted = [c + v * (b - a) for c, v in zip(current, velocity)]
        try:
            new = _match(current, predicted, roots, 1e-12)
        except DiscriminantError as exc:
            raise DiscriminantError(str(exc), location=b) from None
        velocity = [(n - c) / (b - a) for n, c in zip(new, current)]
        current = new
        out.append(tuple(current))
    return out[1:] if drop_first else out


def canonical_numeric(t1, Q, t3, order=30, steps=50, q13=None, dps=DEFAULT_DPS):
    """Canonical coordinates at (t1, Q, t3), labeled by the straight t3 homotopy."""
    t3 = complex(t3)
    if t3 == 0:
        return canonical_anchor(t1, Q, q13)
    path = [t3 * k / steps for k in range(steps + 1)]
    return track_canonical(t1, Q, path, order, q13, dps)[-1]


def spectral_residual(t1, Q, t3, u, order=30):
    g = intersection_form(t1, Q, t3, order)
    return abs(np.linalg.det(g - u * ETA))


# ----------------------------------------------------------------- canonical series

def canonical_series_exact(N, table=None):
    """At_1..At_N exactly, from the cubic satisfied by F(X) = sum At_n X^n.

    The three branches F(omega_k X) have elementary symmetric functions
      sigma1 = Phi'', sigma2 = 6 Phi - 15 Phi' - 9 Phi'',
      sigma3 = 54 Phi - 243 Phi' + 243 Phi'' + 6 Phi Phi'' - 4 Phi'^2
               - 3 Phi' Phi'' - 9 Phi''^2,
    all series in X^3.  At_1 = 3 is the real root of At_1^3 = 27 and
    At_n = -[X^{n+2}] P / 27 with P the cubic evaluated at At_n = 0.
    """
    K = N + 2
    deg = K // 3 + 1
    table = table or _table(deg)
    p = [phi_derivative_series(table, m, deg) for m in range(3)]
    sig = (p[2], 6 * p[0] - 15 * p[1] - 9 * p[2],
           54 * p[0] - 243 * p[1] + 243 * p[2] + 6 * p[0] * p[2]
           - 4 * p[1] * p[1] - 3 * p[1] * p[2] - 9 * p[2] * p[2])

    def in_x(s):
        c = [Fraction(0)] * (K + 1)
        for n, v in enumerate(s.coeffs):
            if 3 * n <= K:
                c[3 * n] = v
        return TruncSeries(c, K)

    s1, s2, s3 = (in_x(s) for s in sig)
    coeffs = [Fraction(0), Fraction(3)]
    for n in range(2, N + 1):
        g = TruncSeries(coeffs + [Fraction(0)] * (K + 1 - len(coeffs)), K)
        P = g * g * g - s1 * g * g + s2 * g - s3
        coeffs.append(-P.coeffs[n + 2] / 27)
    return coeffs[1:]


def canonical_coefficients_fit(N, radius=0.4, samples=64, order=30, dps=DEFAULT_DPS, Q=1, t1=0):
    """At_1..At_N from root tracking on a circle |t3| = radius (Cauchy fit).

    u1 is tracked from t3 = 0 out to the circle and around it; the
    function t3 (u1 - t1) = sum At_n Q^{n/3} t3^n is then read off by a
    discrete Fourier transform.
    """
    if samples <= N + 2:
        raise ValueError("need more samples than coefficients")
    ray = [radius * k / 20 for k in range(21)]
    circle = [radius * cmath.exp(2j * math.pi * k / samples) for k in range(1, samples + 1)]
    path = track_canonical(t1, Q, ray + circle, order, None, dps)
    values = [(p[0] - t1) * t for p, t in zip(path[21:], circle)]
    # values[k] is at angle 2 pi (k+1)/samples; rotate so index 0 is angle 0
    values = values[-1:] + values[:-1]
    q13 = principal_cube_root(Q)
    spectrum = np.fft.fft(np.array(values)) / samples
    return [complex(spectrum[n] / (radius ** n * q13 ** n)) for n in range(1, N + 1)]


def printed_recursion(N, a1, table=None):
    """At_1..At_N from the printed closed recursion, read literally.

    a1 seeds At_1.  At_{3n-2} is computed before At_{3n-1} (which uses it),
    and the single term of the At_{3n-2} formula that contains At_{3n-2}
    itself is evaluated with the unknown set to zero.
    Also returns the At_1^3 values forced at n = 1 by that recursion and by
    the printed triple sum.
    """
    nmax = N // 3 + 2
    table = table or _table(nmax)
    c = {n: Fraction(table[n], factorial(3 * n - 1)) for n in range(1, nmax + 1)}
    A = {1: a1}

    def get(k):
        return A.get(k, 0)

    def cos3(m):
        # 3 cos(2 pi m/3) is 3 or -3/2
        return 3 if m % 3 == 0 else Fraction(-3, 2)

    def delta(n):
        if n == 1:
            return 0
        tot = 0
        for n2 in range(2, n + 1):
            a, b = n - n2 + 1, n2 - 1
            w = Fraction(6 * b - 3 * a * b * b - 4 * a * b - 9 * a * a * b * b,
                         factorial(3 * n - 3 * n2 + 2) * factorial(3 * n2 - 4))
            tot += w * table[a] * table[b]
        return tot

    n = 1
    while 3 * n - 2 <= N:
        if n > 1:
            bracket = (54 - 243 * n + 243 * n * n) * c[n] + delta(n)
            bracket -= sum(cos3(1 + 2 * n3) * get(3 * n - 1 - n3) * get(1) * get(n3)
                           for n3 in range(2, 3 * n - 1))
            double = sum(cos3(n2 + 2 * n3) * get(3 * n - n2 - n3) * get(n2) * get(n3)
                         for n2 in range(2, 3 * n - 2) for n3 in range(1, 3 * n - n2))
            A[3 * n - 2] = (bracket - double) / (9 * a1 * a1)
        A[3 * n - 1] = ((6 - 15 * n - 9 * n * n) * c[n]
                        - sum(cos3(n2 - 1) * get(3 * n - n2 + 1) * get(n2 - 1)
                              for n2 in range(3, 3 * n))) / (3 * a1)
        A[3 * n] = n * n * c[n]
        n += 1
    recursion_a1_cubed = (54 - 243 + 243) * c[1] / 9
    triple_sum_a1_cubed = (54 - 243 + 243) * c[1] / 3
    return [A[k] for k in range(1, N + 1)], {
        "recursion_a1_cubed": recursion_a1_cubed,
        "triple_sum_a1_cubed": triple_sum_a1_cubed,
        "true_a1_cubed": (54 - 243 + 243) * c[1],
    }


def a3n_printed_forms(n_max, table=None):
    """The two printed forms of At_{3n}: n^2 c_n and n^2 c_n / 3."""
    table = table or _table(n_max)
    out = []
    for n in range(1, n_max + 1):
        stmt = Fraction(n * n * table[n], factorial(3 * n - 1))
        out.append((stmt, stmt / 3))
    return out


@dataclass(frozen=True)
class CanonicalSeries:
    coeffs: tuple                   # At_1..At_N, fit values (complex)
    exact: tuple                    # exact rationals from the cubic route
    printed: tuple                  # printed recursion values
    metadata: dict = field(default_factory=dict)

    @property
    def N(self):
        return len(self.coeffs)


def canonical_series(reference=(0, 1), N=8, gw_order=None, fit_tol=1e-8):
    """Canonical series with the fit as ground truth and both reconciliations.

    reference is (t1, Q) for the root tracking (the coefficients do not
    depend on it).  Raises PrecisionError when two fit radii disagree.
    """
    t1, Q = reference
    gw_order = gw_order or max(30, N // 3 + 2)
    if N > 3 * gw_order:
        raise ValueError("N exceeds 3 * gw_order")
    fit = canonical_coefficients_fit(N, 0.4, order=gw_order, Q=Q, t1=t1)
    fit2 = canonical_coefficients_fit(N, 0.3, order=gw_order, Q=Q, t1=t1)
    spread = max(abs(a - b) / max(1.0, abs(a)) for a, b in zip(fit, fit2))
    if spread > fit_tol:
        raise PrecisionError(f"fit radii disagree by {spread:.3g}")
    exact = canonical_series_exact(N)
    a1 = Fraction(round(fit[0].real))
    printed, n1 = printed_recursion(N, a1)
    ratios = {}
    for fam in (0, 1, 2):
        ratios[fam] = [(n, float(printed[n - 1] / exact[n - 1]))
                       for n in range(1, N + 1) if n % 3 == fam and exact[n - 1]]
    a3n = a3n_printed_forms(N // 3)
    meta = {
        "fit_spread": spread,
        "printed_over_fit_by_family": ratios,
        "a3n_n2c_over_fit": [float(s / exact[3 * k - 1]) for k, (s, _) in enumerate(a3n, 1)],
        "a3n_n2c_third_over_fit": [float(p / exact[3 * k - 1]) for k, (_, p) in enumerate(a3n, 1)],
        "n1_consistency": n1,
    }
    return CanonicalSeries(tuple(fit), tuple(exact), tuple(printed), meta)


def evaluate_canonical_series(coeffs, t1, Q, t3, order=None, q13=None):
    """u_k = t1 + sum_{m=0}^{order} At_{m+1} omega_k^{m+1} Q^{(m+1)/3} t3^m.

    `order` is the power of t3 kept in u (default: all coefficients).
    """
    order = len(coeffs) - 1 if order is None else order
    if order + 1 > len(coeffs):
        raise ValueError("not enough coefficients")
    q13 = principal_cube_root(Q) if q13 is None else q13
    t3 = complex(t3)
    out = []
    for w in LABEL_PHASES:
        s = sum(complex(coeffs[m]) * (w * q13) ** (m + 1) * t3 ** m for m in range(order + 1))
        out.append(complex(t1) + s)
    return tuple(out)


def dz_symmetric_functions(table, z, order=None):
    """(s1, s2, s3) of the cubic for z_i, at the point e^X = z."""
    order = order or table.max_degree
    P = [sum(complex(n ** m * table[n] / factorial(3 * n - 1)) * z ** n for n in range(1, order + 1))
         for m in range(3)]
    p0, p1, p2 = P
    s1 = 27 + 2 * p2
    s2 = 243 + 6 * p0 - 15 * p1 + 27 * p2 + p2 * p2
    s3 = (27 + 2 * p1 - 3 * p2) ** 2
    return (s1, s2, s3), P


# ----------------------------------------------------------------- transition matrix

def transition_matrix(t1, Q, t3, order=30, q13=None, u=None, literal=False):
    """psi_{i alpha} from the closed h_i, z_i formulas (needs t3 != 0).

    Rows follow the canonical labels; z_i = 9 + Phi'' - t3 (u_i - t1) and
    h_i = t3 sqrt(z_i) / (sqrt(z_i - z_j) sqrt(z_i - z_k)).  The default
    columns are the ones that make every row a left eigenvector of g eta:
      psi_i2 = h_i (27 + 2 Phi' - 3 Phi'' - 3 z_i) / (z_i t3),
      psi_i3 = h_i (81 + 6 Phi' - 9 Phi'' - 18 z_i + z_i^2 - z_i Phi'') / (z_i t3^2).
    literal=True gives the variant with the opposite sign in psi_i2 and
    z_i^2 Phi'' in psi_i3, kept for comparison.
    """
    t3 = complex(t3)
    if t3 == 0:
        raise ValueError("the closed formulas are singular at t3 = 0; use transition_matrix_eigen")
    table = _table(order)
    u = u if u is not None else canonical_numeric(t1, Q, t3, order, q13=q13)
    _, (p0, p1, p2) = dz_symmetric_functions(table, complex(Q) * t3 ** 3, order)
    z = [9 + p2 - t3 * (ui - complex(t1)) for ui in u]
    for i in range(3):
        for j in range(i + 1, 3):
            if abs(z[i] - z[j]) < 1e-14:
                raise DiscriminantError("z_i collision")
    psi = np.zeros((3, 3), dtype=complex)
    for i in range(3):
        others = [z[j] for j in range(3) if j != i]
        h = t3 * cmath.sqrt(z[i]) / (cmath.sqrt(z[i] - others[0]) * cmath.sqrt(z[i] - others[1]))
        psi[i, 0] = h
        if literal:
            psi[i, 1] = h * (-27 - 2 * p1 + 3 * p2 + 3 * z[i]) / (z[i] * t3)
            psi[i, 2] = h * (81 + 6 * p1 - 9 * p2 - 18 * z[i] + z[i] ** 2 - z[i] ** 2 * p2) / (z[i] * t3 ** 2)
        else:
            psi[i, 1] = h * (27 + 2 * p1 - 3 * p2 - 3 * z[i]) / (z[i] * t3)
            psi[i, 2] = h * (81 + 6 * p1 - 9 * p2 - 18 * z[i] + z[i] ** 2 - z[i] * p2) / (z[i] * t3 ** 2)
    return psi


def transition_matrix_eigen(t1, Q, t3, order=30, q13=None):
    """psi by eigenvectors: rows v_i with v_i (g eta) = u_i v_i, v_i eta v_i^T = 1.

    Row signs are fixed by making psi_{i1} continuous with the small-phase
    matrix (positive real part of psi_{i1} * sqrt(3) Q^{1/3} omega-phase).
    """
    g = intersection_form(t1, Q, t3, order)
    u = canonical_numeric(t1, Q, t3, order, q13=q13)
    M = g @ ETA
    rows = []
    for ui in u:
        # left eigenvector: null vector of (M - u I)^T
        _, _, vh = np.linalg.svd((M - ui * np.eye(3)).T)
        v = vh[-1].conj()
        v = v / cmath.sqrt(v @ ETA @ v)
        rows.append(v)
    psi = np.array(rows)
    ref = small_phase_psi(Q, q13)
    for i in range(3):
        if (psi[i] @ ref[i].conj()).real < 0:
            psi[i] = -psi[i]
    return psi


def small_phase_psi(Q, q13=None):
    """The t1 = t3 = 0 transition matrix, rows in the label order."""
    q13 = principal_cube_root(Q) if q13 is None else q13
    z6 = cmath.exp(1j * math.pi / 3)
    m = np.array([[1 / q13, 1, q13],
                  [z6.conjugate() / q13, -1, z6 * q13],
                  [z6 / q13, -1, z6.conjugate() * q13]]) / math.sqrt(3)
    return m


# ----------------------------------------------------------------- zeta identities

def _zp(k):
    return ZETA3 ** (k % 3)


def b_tensor(k1, k2):
    return _zp(k1) + _zp(k1 + 2 * k2) + _zp(2 * k1)


def c_tensor(n1, n2, n3):
    return _zp(n1 + 2 * n2)


def c_tilde(n1, n2, n3):
    return (c_tensor(n1, n2, n3) + c_tensor(n1, n3, n2) + c_tensor(n3, n2, n1)
            + c_tensor(n3, n1, n2) + c_tensor(n2, n1, n3) + c_tensor(n2, n3, n1))


def _two_cos(m):
    """2 cos(2 pi m/3) exactly."""
    return Cyclo(2) if m % 3 == 0 else Cyclo(-1)


def zeta_identities(k_range):
    """Exact check of the four families; returns {family: list of failing k}."""
    ks = list(k_range)
    fails = {"power_sum": [], "c_diag": [], "b_pair": [], "c_tilde": []}
    for k in ks:
        if _zp(k) + _zp(2 * k) + _zp(3 * k) != 1 + _two_cos(k):
            fails["power_sum"].append(k)
        if c_tensor(k, k, k) != 1:
            fails["c_diag"].append(k)
    for k1 in ks:
        for k2 in ks:
            lhs = b_tensor(k1 - k2, k2) + b_tensor(k2, k1 - k2)
            rhs = 3 * _two_cos(k2) if k1 % 3 == 0 else Cyclo(0)
            if lhs != rhs:
                fails["b_pair"].append((k1, k2))
            for k3 in ks[:6]:
                lhs = c_tilde(k1 - k2 - k3, k2, k3)
                rhs = 3 * _two_cos(k2 + 2 * k3) if k1 % 3 == 0 else Cyclo(0)
                if lhs != rhs:
                    fails["c_tilde"].append((k1, k2, k3))
    return fails


# ----------------------------------------------------------------- cross ratio

def label_coefficients(coeffs, label):
    """A_n^k = At_n omega_k^n for the label index k in 0, 1, 2."""
    e = LABEL_EXPONENTS[label]
    out = []
    for n, a in enumerate(coeffs, 1):
        if isinstance(a, (Fraction, int, Cyclo)):
            out.append(Cyclo(a) * ZETA3 ** ((e * n) % 3))
        else:
            out.append(complex(a) * LABEL_PHASES[label] ** n)
    return out


def cross_ratio_series(coeffs, N):
    """(u3 - u1)/(u2 - u1) as a series in Q^{1/3} t3 via C_{m,-1}."""
    if len(coeffs) < N + 1:
        raise ValueError("need N + 1 canonical coefficients")
    A1, A2, A3 = (label_coefficients(coeffs[: N + 1], k) for k in range(3))
    den = A2[0] - A1[0]
    if not den:
        raise ZeroDivisionError("A_1^2 = A_1^1: degenerate cross ratio")
    num = [(A3[n] - A1[n]) / den for n in range(N + 1)]
    y = [(A2[n + 1] - A1[n + 1]) / den for n in range(N)]
    # the potential polynomials take derivative-normalized arguments r! y_r
    x = [y[r - 1] * math.factorial(r) for r in range(1, N + 1)]
    c_inv = [potential_poly(m, -1, x[:m]) / math.factorial(m) if m else 1 for m in range(N + 1)]
    f = []
    for n in range(N + 1):
        f.append(sum(num[n - m] * c_inv[m] for m in range(n + 1)))
    return TruncSeries(f, N)


def cross_ratio_direct(coeffs, N):
    """Same series by plain series division (oracle)."""
    A1, A2, A3 = (label_coefficients(coeffs[: N + 1], k) for k in range(3))
    num = TruncSeries([A3[n] - A1[n] for n in range(N + 1)], N)
    den = TruncSeries([A2[n] - A1[n] for n in range(N + 1)], N)
    if not den.coeffs[0]:
        raise ZeroDivisionError("A_1^2 = A_1^1: degenerate cross ratio")
    return num / den
