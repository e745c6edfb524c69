"""Exact arithmetic in the cyclotomic field Q(zeta_12).

The field contains i, sqrt(3), sqrt(-3) and the cube roots of unity, which
is everything the equianharmonic expansions need.  Elements are stored on the
basis 1, z, z^2, z^3 with z = e^{i pi/6} and the reduction z^4 = z^2 - 1.
"""
from __future__ import annotations

import cmath
from fractions import Fraction

_Z = cmath.exp(1j * cmath.pi / 6)


def _reduce(c):
    # c is a list of Fractions of any length; fold z^n down using z^4 = z^2 - 1
    c = list(c)
    for n in range(len(c) - 1, 3, -1):
        a = c[n]
        if a:
            c[n - 2] += a
            c[n - 4] -= a
        c[n] = Fraction(0)
    return tuple((c + [Fraction(0)] * 4)[:4])


class Cyclo:
    __slots__ = ("c",)

    def __init__(self, c=(0, 0, 0, 0)):
        if isinstance(c, Cyclo):
            self.c = c.c
        elif isinstance(c, (int, Fraction)):
            self.c = (Fraction(c), Fraction(0), Fraction(0), Fraction(0))
        else:
            self.c = _reduce([Fraction(v) for v in c])

    @staticmethod
    def _lift(other):
        if isinstance(other, Cyclo):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return complex(self) + other
        return Cyclo(tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(tuple(-a for a in self.c))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return complex(self) * other
        prod = [Fraction(0)] * 7
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        prod[i + j] += a * b
        return Cyclo(prod)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return (1 / self) ** (-n)
        result, base = Cyclo(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugates(self):
        """Images under the Galois group (z -> z^k, k in 1, 5, 7, 11)."""
        out = []
        for k in (1, 5, 7, 11):
            zk = Cyclo([0] * k + [1])
            acc = Cyclo(0)
            p = Cyclo(1)
            for a in self.c:
                acc = acc + p * a
                p = p * zk
            out.append(acc)
        return out

    def inverse(self):
        if self == 0:
            raise ZeroDivisionError("division by zero in Q(zeta_12)")
        conj = self.conjugates()
        other = conj[1] * conj[2] * conj[3]
        norm = (self * other).c[0]  # the field norm is rational
        return other / norm

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return complex(self) / other
        if isinstance(other, (int, Fraction)):
            return Cyclo(tuple(a / Fraction(other) for a in self.c))
        return self * o.inverse()

    def __rtruediv__(self, other):
        return Cyclo(other) * self.inverse()

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def __complex__(self):
        return sum(complex(float(a)) * _Z ** n for n, a in enumerate(self.c))

    def conjugate(self):
        return self.conjugates()[3]

    def __repr__(self):
        a, b, c, d = self.coordinates()
        return f"Cyclo({a} + {b}*i + {c}*sqrt3 + {d}*i*sqrt3)"

    # decompositions useful for printing values in the form p + q i sqrt(3) etc.
    def coordinates(self):
        """Rational (a, b, c, d) with self = a + b i + c sqrt3 + d i sqrt3."""
        # z = (sqrt3 + i)/2, z^2 = (1 + i sqrt3)/2, z^3 = i
        a0, a1, a2, a3 = self.c
        return (a0 + a2 / 2, a3 + a1 / 2, a1 / 2, a2 / 2)

    @classmethod
    def from_coordinates(cls, a=0, b=0, c=0, d=0):
        """a + b i + c sqrt3 + d i sqrt3."""
        return a + b * I + c * SQRT3 + d * I * SQRT3


Z12 = Cyclo((0, 1, 0, 0))
I = Cyclo((0, 0, 0, 1))
ZETA3 = Z12 ** 4               # e^{2 pi i/3}
ZETA6 = Z12 ** 2               # e^{pi i/3}
SQRT3 = Z12 + Z12 ** 11        # 2 cos(pi/6)
SQRT_M3 = I * SQRT3            # i sqrt 3


def zeta3_power(k):
    return ZETA3 ** (k % 3)
