"""Genus-zero Gromov-Witten invariants of the projective plane.

N_d counts rational plane curves of degree d through 3d - 1 general points.
The potential Phi(X) = sum_d N_d/(3d-1)! e^{dX} is stored as a series in the
variable e^X.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .series import TruncSeries


class _Factorials:
    """Incrementally grown factorial table (built once, then read-only)."""

    def __init__(self):
        self._table = [1]

    def __call__(self, n):
        t = self._table
        while len(t) <= n:
            t.append(t[-1] * len(t))
        return t[n]


factorial = _Factorials()


@dataclass(frozen=True)
class GWTable:
    max_degree: int
    n: tuple  # n[d-1] = N_d

    def __getitem__(self, d):
        if not 1 <= d <= self.max_degree:
            raise IndexError(f"degree {d} outside 1..{self.max_degree}")
        return self.n[d - 1]

    def phi_coeff(self, d):
        """c_d = N_d / (3d - 1)!"""
        return Fraction(self[d], factorial(3 * d - 1))


def _recursion_term(d, m, N):
    return (comb(3 * d - 4, 3 * m - 2) * m * m * (d - m) ** 2
            - comb(3 * d - 4, 3 * m - 3) * m * (d - m) ** 3) * N[m] * N[d - m]


def kontsevich_table(max_degree: int) -> GWTable:
    """N_1..N_D from the associativity recursion seeded with N_1 = 1."""
    if not isinstance(max_degree, int) or max_degree < 1:
        raise ValueError("max_degree must be a positive integer")
    N = [0, 1]
    for d in range(2, max_degree + 1):
        N.append(sum(_recursion_term(d, m, N) for m in range(1, d)))
    return GWTable(max_degree, tuple(N[1:]))


def kontsevich_table_backward(max_degree: int) -> GWTable:
    """Same recursion, summed with m running downwards (independent oracle)."""
    if max_degree < 1:
        raise ValueError("max_degree must be a positive integer")
    N = {1: 1}
    for d in range(2, max_degree + 1):
        total = 0
        m = d - 1
        while m >= 1:
            a, b = m, d - m
            total += comb(3 * d - 4, 3 * a - 2) * a * a * b * b * N[a] * N[b]
            total -= comb(3 * d - 4, 3 * a - 3) * a * b ** 3 * N[a] * N[b]
            m -= 1
        N[d] = total
    return GWTable(max_degree, tuple(N[d] for d in range(1, max_degree + 1)))


def phi_derivative_series(table: GWTable, m: int, order: int) -> TruncSeries:
    """m-th X-derivative of Phi as a series in e^X, truncated at `order`.

    The coefficient of (e^X)^n is n^m N_n / (3n-1)!.
    """
    if m not in (0, 1, 2, 3):
        raise ValueError("derivative order m must be 0..3")
    if order < 0 or order > table.max_degree:
        raise ValueError(f"order {order} exceeds table degree {table.max_degree}")
    coeffs = [Fraction(0)] + [n ** m * table.phi_coeff(n) for n in range(1, order + 1)]
    return TruncSeries(coeffs, order)


def wdvv_residual_from_table(table: GWTable, order: int) -> TruncSeries:
    """-6 Phi + 33 Phi' - 54 Phi'' - Phi''^2 + Phi'''(27 + 2 Phi' - 3 Phi'')."""
    p0, p1, p2, p3 = (phi_derivative_series(table, m, order) for m in range(4))
    return -6 * p0 + 33 * p1 - 54 * p2 - p2 * p2 + p3 * (27 + 2 * p1 - 3 * p2)


def wdvv_residual(max_degree: int) -> TruncSeries:
    """Residual of the associativity ODE for the recursion's table."""
    if max_degree < 1:
        raise ValueError("max_degree must be a positive integer")
    return wdvv_residual_from_table(kontsevich_table(max_degree), max_degree)


def perturbed_table(table: GWTable, degree: int, value: int) -> GWTable:
    n = list(table.n)
    n[degree - 1] = value
    return GWTable(table.max_degree, tuple(n))


def _log_phi_coeff(table, k):
    # log(N_k/(3k-1)!) without converting the huge integers to floats
    num, den = table[k], factorial(3 * k - 1)
    return (num.bit_length() - den.bit_length()) * np.log(2.0) + np.log(
        (num / 2 ** num.bit_length()) / (den / 2 ** den.bit_length()))


def fit_asymptotics(table: GWTable, k_min: int, k_max: int):
    """Least-squares fit of log(N_k/(3k-1)!) = log b + k log a - (7/2) log k.

    Returns (a, b).
    """
    if k_max > table.max_degree:
        raise ValueError("k_max exceeds the table")
    if k_max - k_min < 4 or k_min < 1:
        raise ValueError("fit window must contain at least 5 degrees")
    ks = np.arange(k_min, k_max + 1, dtype=float)
    ys = np.array([_log_phi_coeff(table, int(k)) for k in ks]) + 3.5 * np.log(ks)
    design = np.column_stack([np.ones_like(ks), ks])
    (log_b, log_a), *_ = np.linalg.lstsq(design, ys, rcond=None)
    return float(np.exp(log_a)), float(np.exp(log_b))


def ratio_estimates(table: GWTable, k_min: int, k_max: int):
    """a_k = (c_{k+1}/c_k) (k/(k+1))^{-7/2}, c_k = N_k/(3k-1)!."""
    out = []
    for k in range(k_min, k_max):
        r = table.phi_coeff(k + 1) / table.phi_coeff(k)
        out.append(float(r) * (k / (k + 1)) ** -3.5)
    return out
