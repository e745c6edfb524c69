"""Exact quasi-modular forms.

Elements of Q[E2, E4, E6] extended by two auxiliary symbols:

* ``W``, a cube root of the normalized discriminant, W^3 = E4^3 - E6^2
  (numerically W = 12 eta^8, weight 4), allowed with negative exponents;
* ``P`` = pi^2, allowed with negative exponents, to carry the pi-powers of
  the inverse period map exactly.

Normal form keeps the E6 exponent at most 1 by rewriting E6^2 = E4^3 - W^3,
so equality of normal forms is equality in the ring.

``D`` is the Ramanujan derivative q d/dq:
  D E2 = (E2^2 - E4)/12, D E4 = (E2 E4 - E6)/3, D E6 = (E2 E6 - E4^2)/2,
  D W = E2 W / 3, D P = 0.
The tau-derivative is 2 pi i D; even powers of it stay in the ring because
(2 pi i)^2 = -4P.
"""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import product

# monomial key: (a, b, c, w, p) meaning E2^a E4^b E6^c W^w P^p
_ZERO_KEY = (0, 0, 0, 0, 0)


def _add_into(terms, key, coeff):
    a, b, c, w, p = key
    if c >= 2:
        # E6^2 = E4^3 - W^3
        _add_into(terms, (a, b + 3, c - 2, w, p), coeff)
        _add_into(terms, (a, b, c - 2, w + 3, p), -coeff)
        return
    v = terms.get(key, 0) + coeff
    if v:
        terms[key] = v
    else:
        terms.pop(key, None)


class QMF:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        out = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    _add_into(out, tuple(key), Fraction(coeff))
        self.terms = out

    @classmethod
    def const(cls, c):
        return cls({_ZERO_KEY: Fraction(c)})

    @staticmethod
    def _lift(other):
        if isinstance(other, QMF):
            return other
        if isinstance(other, (int, Fraction)):
            return QMF.const(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for key, c in o.terms.items():
            _add_into(out, key, c)
        r = QMF()
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = QMF()
        r.terms = {k: -c for k, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in o.terms.items():
                _add_into(out, tuple(x + y for x, y in zip(k1, k2)), c1 * c2)
        r = QMF()
        r.terms = out
        return r

    __rmul__ = __mul__

    def is_monomial(self):
        return len(self.terms) == 1

    def inverse(self):
        """Inverse of a monomial in W and P (E-exponents must vanish)."""
        if not self.is_monomial():
            raise ZeroDivisionError("only W/P monomials are invertible in this ring")
        (key, c), = self.terms.items()
        a, b, e, w, p = key
        if a or b or e:
            raise ZeroDivisionError("E2, E4, E6 are not invertible here")
        return QMF({(0, 0, 0, -w, -p): 1 / c})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * Fraction(1, 1) * (Fraction(1) / Fraction(other))
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return QMF._lift(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = QMF.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        names = ("E2", "E4", "E6", "W", "pi^2")
        parts = []
        for key in sorted(self.terms):
            mono = "*".join(f"{n}^{e}" if e != 1 else n for n, e in zip(names, key) if e)
            parts.append(f"({self.terms[key]})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    # grading
    def weights(self):
        return {2 * a + 4 * b + 6 * c + 4 * w for (a, b, c, w, p) in self.terms}

    def weight(self):
        ws = self.weights()
        if len(ws) != 1:
            raise ValueError(f"not weight-homogeneous: {sorted(ws)}")
        return ws.pop()

    def pi_powers(self):
        return {p for (_, _, _, _, p) in self.terms}

    # derivations
    def D(self):
        out = QMF()
        for (a, b, c, w, p), coeff in self.terms.items():
            # each generator's derivative, times the exponent
            if a:
                out = out + QMF({(a + 1, b, c, w, p): coeff * a / 12, (a - 1, b + 1, c, w, p): -coeff * a / 12})
            if b:
                out = out + QMF({(a + 1, b, c, w, p): coeff * b / 3, (a, b - 1, c + 1, w, p): -coeff * b / 3})
            if c:
                out = out + QMF({(a + 1, b, c, w, p): coeff * c / 2, (a, b + 2, c - 1, w, p): -coeff * c / 2})
            if w:
                out = out + QMF({(a + 1, b, c, w, p): coeff * Fraction(w, 3)})
        return out

    def D_power(self, k):
        f = self
        for _ in range(k):
            f = f.D()
        return f

    # numeric evaluation
    def evaluate(self, values):
        """values: mapping with keys 'E2', 'E4', 'E6', 'W' (complex)."""
        e2, e4, e6, w = values["E2"], values["E4"], values["E6"], values["W"]
        pi2 = math.pi ** 2
        total = 0j
        for (a, b, c, ww, p), coeff in self.terms.items():
            total += float(coeff) * e2 ** a * e4 ** b * e6 ** c * w ** ww * pi2 ** p
        return total

    # conversions
    def to_eisenstein(self):
        """Rewrite as a polynomial in E2, E4, E6 alone: {(a, b, c): Fraction}.

        Requires non-negative W exponents divisible by 3 and no pi-powers.
        """
        out = {}
        for (a, b, c, w, p), coeff in self.terms.items():
            if p:
                raise ValueError("element carries powers of pi")
            if w < 0 or w % 3:
                raise ValueError(f"W^{w} is not a polynomial in E4, E6")
            # W^3 = E4^3 - E6^2 expanded binomially
            m = w // 3
            for j in range(m + 1):
                key = (a, b + 3 * (m - j), c + 2 * j)
                v = out.get(key, 0) + coeff * math.comb(m, j) * (-1) ** j
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return out


E2 = QMF({(1, 0, 0, 0, 0): 1})
E4 = QMF({(0, 1, 0, 0, 0): 1})
E6 = QMF({(0, 0, 1, 0, 0): 1})
W = QMF({(0, 0, 0, 1, 0): 1})
PI2 = QMF({(0, 0, 0, 0, 1): 1})
ONE = QMF.const(1)
Q0 = E4 ** 3 - E6 ** 2          # normal form: W^3


def ramanujan_derive(f: QMF) -> QMF:
    """D = q d/dq applied to f."""
    return f.D()


def tau_derivative_even(f: QMF, k: int) -> QMF:
    """(d/dtau)^k f for even k, using (2 pi i)^2 = -4 pi^2."""
    if k % 2:
        raise ValueError("odd tau-derivatives carry a factor i; use the numeric entry point")
    return f.D_power(k) * ((-4) ** (k // 2)) * PI2 ** (k // 2)


def eval_tau_derivative(f: QMF, k: int, values) -> complex:
    """Numeric (d/dtau)^k f = (2 pi i)^k D^k f."""
    return (2j * math.pi) ** k * f.D_power(k).evaluate(values)


def eisenstein_monomials(weight):
    """All (a, b, c) with 2a + 4b + 6c = weight."""
    out = []
    for c in range(weight // 6 + 1):
        for b in range((weight - 6 * c) // 4 + 1):
            rest = weight - 6 * c - 4 * b
            if rest % 2 == 0:
                out.append((rest // 2, b, c))
    return sorted(out)


def from_eisenstein(poly) -> QMF:
    return QMF({(a, b, c, 0, 0): v for (a, b, c), v in poly.items()})


class QMFFrac:
    """num / E6^k with num a QMF: the localization of the ring at E6.

    Equality is decided by cross-multiplication, so no cancellation is
    needed.  Used for the tau-maps, whose coefficients have E6 denominators.
    """

    __slots__ = ("num", "k")

    def __init__(self, num, k=0):
        self.num = num if isinstance(num, QMF) else QMF.const(num)
        self.k = k

    @staticmethod
    def _lift(other):
        if isinstance(other, QMFFrac):
            return other
        if isinstance(other, (QMF, int, Fraction)):
            return QMFFrac(other, 0)
        return None

    def _align(self, other):
        k = max(self.k, other.k)
        return self.num * E6 ** (k - self.k), other.num * E6 ** (k - other.k), k

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b, k = self._align(o)
        return QMFFrac(a + b, k)

    __radd__ = __add__

    def __neg__(self):
        return QMFFrac(-self.num, self.k)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QMFFrac(self.num * o.num, self.k + o.k)

    __rmul__ = __mul__

    def inverse(self):
        """Inverse when num is c E6^e W^w P^p (a unit of the localized ring)."""
        if not self.num.is_monomial():
            raise ZeroDivisionError("only E6/W/P monomials are invertible")
        (key, c), = self.num.terms.items()
        a, b, e, w, p = key
        if a or b:
            raise ZeroDivisionError("E2 and E4 are not invertible here")
        return QMFFrac(QMF({(0, 0, 0, -w, -p): 1 / c}) * E6 ** self.k, e)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return QMFFrac(self.num / other, self.k)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return QMFFrac._lift(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return QMFFrac(self.num ** n, self.k * n)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b, _ = self._align(o)
        return a == b

    def __hash__(self):
        return hash((self.num, self.k))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"({self.num})/E6^{self.k}" if self.k else repr(self.num)

    def D(self):
        # D(n/E6^k) = (E6 Dn - k n (E2 E6 - E4^2)/2) / E6^{k+1}
        dn = self.num.D()
        if not self.k:
            return QMFFrac(dn, 0)
        top = E6 * dn - self.num * (E2 * E6 - E4 ** 2) * Fraction(self.k, 2)
        return QMFFrac(top, self.k + 1)

    def D_power(self, k):
        f = self
        for _ in range(k):
            f = f.D()
        return f

    def evaluate(self, values):
        return self.num.evaluate(values) / values["E6"] ** self.k
