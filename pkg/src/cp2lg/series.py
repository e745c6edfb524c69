"""Truncated power series and partition-polynomial combinatorics.

Coefficients are stored in the *plain* normalization, ``f = sum f_n x^n``.
The Faa di Bruno formula and the partition polynomials work in the
*derivative* normalization ``f^(n) = n! f_n``.  The only places that convert
between the two are `compose` and `reciprocal`, so factorials never leak into
the rest of the code.

The coefficient type is whatever the caller puts in: ``Fraction``, ``complex``,
`cp2lg.cyclotomic.Cyclo` or `cp2lg.qmf.QMF` all work, as long as they support
``+ - *`` with each other and with integers, and ``/`` where a division is
actually needed (leading coefficients).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

ENUMERATION_CAP = 16


def _zero_like(c):
    return c * 0


def _one_like(c):
    return c * 0 + 1


class TruncSeries:
    """Power series ``c_0 + c_1 x + ... + c_K x^K + O(x^{K+1})``.

    Mixed-order arithmetic truncates to the smaller order.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order=None):
        coeffs = list(coeffs)
        if not coeffs:
            coeffs = [Fraction(0)]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            z = _zero_like(coeffs[0])
            coeffs = (coeffs + [z] * (order + 1))[: order + 1]
        self.coeffs = tuple(coeffs)

    # construction helpers
    @classmethod
    def variable(cls, order, one=Fraction(1)):
        z = one * 0
        return cls([z, one] + [z] * (order - 1), order) if order >= 1 else cls([z], 0)

    @classmethod
    def constant(cls, c, order):
        return cls([c], order)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        return f"TruncSeries({list(self.coeffs)!r})"

    def __eq__(self, other):
        if isinstance(other, TruncSeries):
            k = min(self.order, other.order)
            return all(self.coeffs[n] == other.coeffs[n] for n in range(k + 1))
        return NotImplemented

    __hash__ = None

    def truncate(self, order):
        return TruncSeries(self.coeffs[: order + 1], order)

    def map(self, fn):
        return TruncSeries([fn(c) for c in self.coeffs])

    # ring operations
    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            return other
        return TruncSeries([other], self.order)

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries((self.coeffs[0] + other,) + self.coeffs[1:])
        k = min(self.order, other.order)
        return TruncSeries([self.coeffs[n] + other.coeffs[n] for n in range(k + 1)])

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries([c * other for c in self.coeffs])
        k = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for n in range(k + 1):
            acc = a[0] * b[n]
            for i in range(1, n + 1):
                acc = acc + a[i] * b[n - i]
            out.append(acc)
        return TruncSeries(out)

    def __rmul__(self, other):
        return TruncSeries([other * c for c in self.coeffs])

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return self * reciprocal(other)
        return TruncSeries([c / other for c in self.coeffs])

    def __rtruediv__(self, other):
        return reciprocal(self) * other

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers; use binomial_power")
        result = TruncSeries([_one_like(self.coeffs[0])], self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # calculus
    def derivative(self):
        c = self.coeffs
        if len(c) == 1:
            return TruncSeries([_zero_like(c[0])], 0)
        return TruncSeries([c[n] * n for n in range(1, len(c))])

    def integral(self, constant=None):
        c = self.coeffs
        z = _zero_like(c[0]) if constant is None else constant
        return TruncSeries([z] + [c[n] * Fraction(1, n + 1) for n in range(len(c) - 1)])

    def __call__(self, x):
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc


# ---------------------------------------------------------------------------
# Bell polynomials
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _partitions(n, k):
    """Multiplicity vectors (k_1..k_n) with sum k_j = k and sum j k_j = n."""
    out = []

    def rec(part, remaining, parts_left, largest):
        if remaining == 0:
            if parts_left == 0:
                out.append(tuple(part))
            return
        if parts_left == 0:
            return
        for j in range(min(largest, remaining - parts_left + 1), 0, -1):
            part.append(j)
            rec(part, remaining - j, parts_left - 1, j)
            part.pop()

    rec([], n, k, n)
    vecs = []
    for p in out:
        m = [0] * n
        for j in p:
            m[j - 1] += 1
        vecs.append(tuple(m))
    return tuple(vecs)


def _partition_weight(n, mult):
    den = 1
    for j, kj in enumerate(mult, start=1):
        den *= factorial(kj) * factorial(j) ** kj
    return factorial(n) // den


def bell_partial_enumerated(n, k, x):
    """B_{n,k}(x_1..x_n) by summing over partitions; ``x[r-1]`` is x_r."""
    if n == 0 and k == 0:
        return _one_like(x[0]) if x else Fraction(1)
    if k > n or k == 0 or n == 0:
        return _zero_like(x[0]) if x else Fraction(0)
    total = _zero_like(x[0])
    for mult in _partitions(n, k):
        term = _one_like(x[0]) * _partition_weight(n, mult)
        for j, kj in enumerate(mult, start=1):
            if kj:
                term = term * x[j - 1] ** kj
        total = total + term
    return total


def bell_table(nmax, x):
    """All B_{n,k}(x), 0 <= k <= n <= nmax, by the standard recurrence.

    B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) x_i B_{n-i,k-1}.
    """
    one = _one_like(x[0]) if x else Fraction(1)
    zero = one * 0
    table = [[zero] * (nmax + 1) for _ in range(nmax + 1)]
    table[0][0] = one
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            acc = zero
            for i in range(1, n - k + 2):
                if k - 1 <= n - i:
                    acc = acc + x[i - 1] * table[n - i][k - 1] * comb(n - 1, i - 1)
            table[n][k] = acc
    return table


def bell_partial(n, k, x):
    """Partial Bell polynomial B_{n,k}(x_1, ..., x_n).

    Partition enumeration is used for n <= 16, the recurrence beyond.
    Returns zero when k > n (n >= 1).
    """
    if len(x) < n:
        raise ValueError("need at least n variables")
    if k < 0:
        raise ValueError("k must be >= 0")
    if n <= ENUMERATION_CAP:
        return bell_partial_enumerated(n, k, x)
    if k > n:
        return _zero_like(x[0])
    return bell_table(n, x)[n][k]


def bell_complete(n, x):
    """Complete exponential Bell polynomial B_n = sum_k B_{n,k}."""
    table = bell_table(n, x) if n else [[Fraction(1)]]
    acc = table[n][0]
    for k in range(1, n + 1):
        acc = acc + table[n][k]
    return acc


def falling_factorial(s, k):
    acc = s * 0 + 1
    for j in range(k):
        acc = acc * (s - j)
    return acc


def potential_poly(n, s, x):
    """Potential partition polynomial C_{n,s}(x_1..x_n).

    Defined by the generating function
    ``sum_n C_{n,s} t^n / n! = (1 + sum_{r>=1} x_r t^r / r!)^s``,
    i.e. ``C_{n,s} = sum_k (s)_k B_{n,k}(x)`` with the falling factorial (s)_k.
    """
    if n == 0:
        return s * 0 + 1
    if len(x) < n:
        raise ValueError("need at least n variables")
    table = bell_table(n, x)
    acc = _zero_like(x[0])
    for k in range(1, n + 1):
        acc = acc + table[n][k] * falling_factorial(s, k)
    return acc


# ---------------------------------------------------------------------------
# composition, reciprocal, reversion
# ---------------------------------------------------------------------------

def compose(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """f(g(x)) for g with zero constant term, by Faa di Bruno.

    In derivative normalization h^(n) = sum_k f^(k) B_{n,k}(g', g'', ...);
    plain coefficients are converted on the way in and out.
    """
    if g.coeffs[0] != 0:
        raise ValueError("compose requires g(0) = 0; use compose_at")
    K = min(f.order, g.order)
    gder = [g.coeffs[r] * factorial(r) for r in range(1, K + 1)]
    fder = [f.coeffs[k] * factorial(k) for k in range(K + 1)]
    h = [f.coeffs[0]]
    if K == 0:
        return TruncSeries(h)
    table = bell_table(K, gder)
    for n in range(1, K + 1):
        acc = _zero_like(f.coeffs[0] * g.coeffs[1])
        for k in range(1, n + 1):
            acc = acc + fder[k] * table[n][k]
        h.append(acc * Fraction(1, factorial(n)))
    return TruncSeries(h)


def taylor_shift(f: TruncSeries, c) -> TruncSeries:
    """Coefficients of f(c + u) in u, treating f as the polynomial it stores."""
    K = f.order
    out = []
    for m in range(K + 1):
        acc = f.coeffs[0] * 0
        cp = [c * 0 + 1]
        for _ in range(K):
            cp.append(cp[-1] * c)
        for n in range(m, K + 1):
            acc = acc + f.coeffs[n] * cp[n - m] * comb(n, m)
        out.append(acc)
    return TruncSeries(out)


def compose_at(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """f(g(x)) for arbitrary g(0): f is re-expanded at g(0) first."""
    g0 = g.coeffs[0]
    shifted = taylor_shift(f, g0)
    tail = TruncSeries([g0 * 0] + list(g.coeffs[1:]))
    return compose(shifted, tail)


def compose_brute(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """Horner substitution with repeated truncated multiplication (oracle)."""
    K = min(f.order, g.order)
    g = g.truncate(K)
    acc = TruncSeries([f.coeffs[K]], K)
    for n in range(K - 1, -1, -1):
        acc = acc * g + f.coeffs[n]
    return acc


def reciprocal(g: TruncSeries) -> TruncSeries:
    """1/g through the potential polynomials C_{n,-1}.

    With y_r = r! g_r / g_0, 1/g = (1/g_0) sum_n C_{n,-1}(y) x^n / n!.
    """
    g0 = g.coeffs[0]
    if g0 == 0:
        raise ZeroDivisionError("reciprocal of a series with zero constant term")
    inv0 = 1 / g0
    K = g.order
    if K == 0:
        return TruncSeries([inv0])
    y = [g.coeffs[r] * inv0 * factorial(r) for r in range(1, K + 1)]
    table = bell_table(K, y)
    out = [inv0]
    for n in range(1, K + 1):
        acc = _zero_like(y[0])
        for k in range(1, n + 1):
            acc = acc + table[n][k] * ((-1) ** k * factorial(k))
        out.append(acc * inv0 * Fraction(1, factorial(n)))
    return TruncSeries(out)


def reciprocal_long_division(g: TruncSeries) -> TruncSeries:
    """1/g by the triangular recurrence (oracle for `reciprocal`)."""
    g0 = g.coeffs[0]
    if g0 == 0:
        raise ZeroDivisionError("reciprocal of a series with zero constant term")
    inv0 = 1 / g0
    r = [inv0]
    for n in range(1, g.order + 1):
        acc = g.coeffs[1] * r[n - 1]
        for k in range(2, n + 1):
            acc = acc + g.coeffs[k] * r[n - k]
        r.append(-acc * inv0)
    return TruncSeries(r)


def reversion(f: TruncSeries) -> TruncSeries:
    """Compositional inverse g with f(g(x)) = x + O(x^{K+1})."""
    if f.coeffs[0] != 0:
        raise ValueError("reversion requires f(0) = 0")
    K = f.order
    if K == 0:
        raise ValueError("reversion needs order >= 1")
    f1 = f.coeffs[1]
    if f1 == 0:
        raise ValueError("series is not invertible: f_1 = 0")
    inv1 = 1 / f1
    zero = _zero_like(inv1)
    g = [zero, inv1] + [zero] * (K - 1)
    for n in range(2, K + 1):
        # coefficient n of f(g) with g_n still zero; g_n enters linearly as f1*g_n
        trial = compose_brute(f, TruncSeries(g[: n + 1])).coeffs[n]
        g[n] = -trial * inv1
    return TruncSeries(g)


def lagrange_reversion(f: TruncSeries) -> TruncSeries:
    """Reversion via [x^n] g = (1/n) [w^{n-1}] (w/f(w))^n (oracle)."""
    K = f.order
    f1 = f.coeffs[1]
    zero = _zero_like(1 / f1)
    # w/f(w) = 1/(f_1 + f_2 w + ...)
    quotient = reciprocal_long_division(TruncSeries(list(f.coeffs[1:]) + [zero]))
    out = [zero]
    power = TruncSeries([zero + 1], K)
    for n in range(1, K + 1):
        power = power * quotient
        out.append(power.coeffs[n - 1] * Fraction(1, n))
    return TruncSeries(out)


def binomial_power(g: TruncSeries, s) -> TruncSeries:
    """g^s for g_0 = 1 (any exponent s), by the J.C.P. Miller recurrence.

    n h_n = sum_{k=1}^n ((s+1)k - n) g_k h_{n-k}.
    """
    if g.coeffs[0] != 1:
        raise ValueError("binomial_power requires g(0) = 1")
    h = [g.coeffs[0] * 0 + 1]
    for n in range(1, g.order + 1):
        acc = g.coeffs[1] * h[n - 1] * ((s + 1) * 1 - n)
        for k in range(2, n + 1):
            acc = acc + g.coeffs[k] * h[n - k] * ((s + 1) * k - n)
        h.append(acc * Fraction(1, n))
    return TruncSeries(h)


def power_via_potential(g: TruncSeries, s) -> TruncSeries:
    """g^s for g_0 = 1 through C_{n,s} (oracle for `binomial_power`)."""
    if g.coeffs[0] != 1:
        raise ValueError("power_via_potential requires g(0) = 1")
    K = g.order
    x = [g.coeffs[r] * factorial(r) for r in range(1, K + 1)]
    out = [g.coeffs[0] * 0 + 1]
    for n in range(1, K + 1):
        out.append(potential_poly(n, s, x) * Fraction(1, factorial(n)))
    return TruncSeries(out)


def exp_series(g: TruncSeries) -> TruncSeries:
    """exp(g) for g with zero constant term: h' = g' h."""
    if g.coeffs[0] != 0:
        raise ValueError("exp_series requires g(0) = 0")
    gd = g.derivative()
    h = [g.coeffs[0] * 0 + 1]
    for n in range(1, g.order + 1):
        acc = gd.coeffs[0] * h[n - 1]
        for k in range(1, n):
            acc = acc + gd.coeffs[k] * h[n - 1 - k]
        h.append(acc * Fraction(1, n))
    return TruncSeries(h)
