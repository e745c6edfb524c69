"""Exact integer-matrix constants of the monodromy of quantum cohomology.

Matrices are tuples of row tuples with int (or Fraction) entries; every
identity is checked with exact arithmetic.
"""
from __future__ import annotations

import cmath
import math
import random
from fractions import Fraction

from .modular import apply_sl2, eta, j_family

# ----------------------------------------------------------------- exact matrix helpers


def mat(rows):
    return tuple(tuple(r) for r in rows)


def identity(n):
    return mat([[int(i == j) for j in range(n)] for i in range(n)])


def mul(a, b):
    n, m, k = len(a), len(b), len(b[0])
    return mat([[sum(a[i][t] * b[t][j] for t in range(m)) for j in range(k)] for i in range(n)])


def neg(a):
    return mat([[-x for x in r] for r in a])


def transpose(a):
    return mat(zip(*a))


def add(a, b):
    return mat([[x + y for x, y in zip(r, s)] for r, s in zip(a, b)])


def scale(c, a):
    return mat([[c * x for x in r] for r in a])


def det(a):
    if len(a) == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    (p, q, r), (s, t, u), (v, w, x) = a
    return p * (t * x - u * w) - q * (s * x - u * v) + r * (s * w - t * v)


def inverse(a):
    """Exact inverse via the adjugate (entries stay integral when det = +-1)."""
    d = det(a)
    if d == 0:
        raise ZeroDivisionError("singular matrix")
    n = len(a)
    if n == 2:
        adj = ((a[1][1], -a[0][1]), (-a[1][0], a[0][0]))
    else:
        def minor(i, j):
            rows = [r for k, r in enumerate(a) if k != i]
            m = [[x for l, x in enumerate(r) if l != j] for r in rows]
            return m[0][0] * m[1][1] - m[0][1] * m[1][0]
        adj = mat([[(-1) ** (i + j) * minor(j, i) for j in range(3)] for i in range(3)])
    if d in (1, -1):
        return scale(d, adj)
    return mat([[Fraction(x, d) for x in r] for r in adj])


def power(a, n):
    if n < 0:
        return power(inverse(a), -n)
    out = identity(len(a))
    for _ in range(n):
        out = mul(out, a)
    return out


def conj(a, b):
    """a b a^{-1}."""
    return mul(mul(a, b), inverse(a))


# ----------------------------------------------------------------- constants

S = mat([[1, 0, 0], [3, 1, 0], [-3, -3, 1]])
R1 = mat([[-1, -3, 3], [0, 1, 0], [0, 0, 1]])
R2 = mat([[1, 0, 0], [-3, -1, 3], [0, 0, 1]])
R3 = mat([[1, 0, 0], [0, 1, 0], [3, 3, -1]])
T = mat([[0, -1, 0], [0, 0, 1], [-1, -3, 3]])
T0 = mat([[0, -1, 0], [0, 0, 1], [1, 0, 0]])
B_LEFT = mat([[1, 2, -1], [0, 1, -1], [1, 1, -2]])
B_RIGHT = mat([[2, -6, 2], [2, 2, -2], [2, -2, -2]])

r1 = mat([[0, -1], [1, 0]])
r2 = mat([[1, -1], [2, -1]])
r3 = mat([[-1, 2], [-1, 1]])

PRINTED_B = {
    "R1": mat([[0, 0, 1], [0, -1, 0], [1, 0, 0]]),
    "T0^4": mat([[0, 0, 1], [0, -1, 1], [1, -2, 1]]),
    "T0^3": neg(identity(3)),
    "R2": mat([[-1, 4, -4], [-1, 3, -2], [-1, 2, -1]]),
    "R3": mat([[-1, 2, -1], [-2, 3, -1], [-4, 4, -1]]),
}
PRINTED_RHO = {
    "r1": mat([[0, 0, 1], [0, -1, 0], [1, 0, 0]]),
    "r3": mat([[-1, 4, -4], [-1, 3, -2], [-1, 2, -1]]),
    "r2": mat([[-1, 2, -1], [-2, 3, -1], [-4, 4, -1]]),
}


def constants():
    return {"S": S, "R1": R1, "R2": R2, "R3": R3, "T": T, "T0": T0,
            "B_left": B_LEFT, "B_right": B_RIGHT, "r1": r1, "r2": r2, "r3": r3}


def reflection(S_matrix, j):
    """R_j from R_j phi^(i) = phi^(i) - (S + S^T)_{ij} phi^(j), on row vectors.

    Column i of the result is e_i - G_{ij} e_j with G = S + S^T.
    """
    G = add(S_matrix, transpose(S_matrix))
    n = len(G)
    m = [[int(r == c) for c in range(n)] for r in range(n)]
    for i in range(n):
        m[j][i] -= G[i][j]
    return mat(m)


def relations_report():
    """{name: (holds, detail)} for the printed and the corrected relations."""
    out = {}
    I3 = identity(3)
    out["T0 = T R1"] = mul(T, R1) == T0
    out["T0^3 = -I"] = power(T0, 3) == neg(I3)
    out["R2 = T0 R1 T0^-1 (printed)"] = conj(T0, R1) == R2
    out["R3 = T0^2 R1 T0^-2 (printed)"] = conj(power(T0, 2), R1) == R3
    out["R2 = T0^-1 R1 T0"] = conj(inverse(T0), R1) == R2
    out["R3 = T0 R1 T0^-1"] = conj(T0, R1) == R3
    for name, R in (("R1", R1), ("R2", R2), ("R3", R3)):
        out[f"{name}^2 = I"] = mul(R, R) == I3
    for j, R in enumerate((R1, R2, R3)):
        Rj = reflection(S, j)
        out[f"reflection formula gives R{j + 1}"] = Rj == R
        out[f"reflection R{j + 1} squares to I"] = mul(Rj, Rj) == I3
    out["det = +-1"] = all(abs(det(m)) == 1 for m in (S, R1, R2, R3, T, T0))
    return out


def change_of_basis(m):
    """B(M) = (1/4) L M R."""
    return scale(Fraction(1, 4), mul(mul(B_LEFT, m), B_RIGHT))


def _as_int(m):
    return mat([[int(x) if Fraction(x).denominator == 1 else x for x in r] for r in m])


def rho(g):
    """Symmetric square of (a b; c d), acting on (tau^2, tau, 1)-type vectors."""
    (a, b), (c, d) = g
    return mat([[a * a, 2 * a * b, b * b],
                [a * c, a * d + b * c, b * d],
                [c * c, 2 * c * d, d * d]])


def change_of_basis_check():
    """Computed images of B and rho next to the printed ones."""
    images = {"R1": R1, "T0^4": power(T0, 4), "T0^3": power(T0, 3), "R2": R2, "R3": R3}
    out = {}
    for name, m in images.items():
        value = _as_int(change_of_basis(m))
        out[f"B({name})"] = (value, PRINTED_B[name], value == PRINTED_B[name])
    for name, g in (("r1", r1), ("r2", r2), ("r3", r3)):
        value = rho(g)
        out[f"rho({name})"] = (value, PRINTED_RHO[name], value == PRINTED_RHO[name])
    return out


def true_pattern():
    """B(R1) = -rho(r1), B(R2) = -rho(r3), B(R3) = -rho(r2)."""
    return {
        "B(R1) = -rho(r1)": _as_int(change_of_basis(R1)) == neg(rho(r1)),
        "B(R2) = -rho(r3)": _as_int(change_of_basis(R2)) == neg(rho(r3)),
        "B(R3) = -rho(r2)": _as_int(change_of_basis(R3)) == neg(rho(r2)),
    }


def random_sl2(rng, length=6):
    gens = [mat([[1, 1], [0, 1]]), mat([[0, -1], [1, 0]])]
    g = identity(2)
    for _ in range(length):
        h = rng.choice(gens)
        g = mul(g, h if rng.random() < 0.5 else inverse(h))
    return g


def rho_homomorphism_check(n=20, seed=0):
    rng = random.Random(seed)
    for _ in range(n):
        A, B = random_sl2(rng), random_sl2(rng)
        if rho(mul(A, B)) != mul(rho(A), rho(B)):
            return False
    return True


# ----------------------------------------------------------------- congruence subgroup

def gamma3_membership(m):
    """m mod 3 is of the form (0 *; * 0) or (* b; b *)."""
    if det(m) != 1:
        raise ValueError("det must be 1")
    (a, b), (c, d) = m
    a, b, c, d = a % 3, b % 3, c % 3, d % 3
    return (a == 0 and d == 0) or b == c


def gamma2_exponent(g):
    (a, b), (c, d) = g
    return a * c - a * b + a * a * c * d - c * d


def gamma2_character_check(g, tau):
    """|gamma2(g tau) - zeta3^{ac - ab + a^2 cd - cd} gamma2(tau)|."""
    if det(g) != 1:
        raise ValueError("det must be 1")
    tau = complex(tau)
    if tau.imag < 0.2:
        raise ValueError("Im tau must be >= 0.2")
    phase = cmath.exp(2j * math.pi * (gamma2_exponent(g) % 3) / 3)
    lhs = j_family(apply_sl2(g, tau))[2]
    rhs = phase * j_family(tau)[2]
    return abs(lhs - rhs)


def chi3(g, tau):
    """eta^8(g tau)/((c tau + d)^4 eta^8(tau)), a cube root of unity."""
    (_, _), (c, d) = g
    tau = complex(tau)
    return eta(apply_sl2(g, tau)) ** 8 / ((c * tau + d) ** 4 * eta(tau) ** 8)
