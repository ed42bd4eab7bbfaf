"""Exact arithmetic in the cyclotomic field Q(q), q a primitive n-th root of unity.

An element is stored as an integer numerator vector of length phi(n) over
the power basis 1, q, ..., q^{phi(n)-1} together with one positive common
denominator, always reduced modulo the n-th cyclotomic polynomial and
normalized (the gcd of all numerators and the denominator is 1), so
equality is component-wise.  Everything is exact; floating point enters
only through the complex embedding, which serves as an independent
numeric oracle.

Only odd n >= 3 are accepted: the whole construction downstream (the
Drinfeld double of the Taft algebra and its McKay spectral theory)
assumes that hypothesis, and 2 must be invertible mod n.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath

__all__ = [
    "cyclotomic_polynomial",
    "make_context",
    "CyclotomicContext",
    "CycNum",
    "complex_embed",
]


def _divexact(num, den):
    """Exact quotient of integer polynomials (coefficient lists, low degree first)."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - dd - 1, -1, -1):
        c = num[i + dd]
        if c % den[dd]:
            raise ArithmeticError("division not exact")
        c //= den[dd]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[:dd]):
        raise ArithmeticError("nonzero remainder")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, computed by dividing x^n - 1 by all Phi_d, d | n, d < n."""
    if n == 1:
        return (-1, 1)
    poly = [0] * (n + 1)
    poly[0], poly[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            poly = _divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class CyclotomicContext:
    """Shared immutable data for Q(q): the modulus Phi_n and reduction tables."""

    def __init__(self, n: int):
        if n < 3 or n % 2 == 0:
            raise ValueError(
                "n must be an odd integer >= 3 (standing hypothesis for the "
                "Taft double and its root of unity q); got n=%r" % (n,)
            )
        self.n = n
        self.phi_n = cyclotomic_polynomial(n)
        self.degree = len(self.phi_n) - 1
        d = self.degree
        # canonical integer coefficient rows for x^e mod Phi_n, for all exponents
        # reachable by a product of two reduced elements (e <= 2d-2) or by a
        # power-of-q shift of a reduced element (e <= d+n-2)
        rows = []
        for e in range(d + max(d, n) - 1):
            if e < d:
                row = [0] * d
                row[e] = 1
            else:
                # x^e = x * x^{e-1} reduced by the monic modulus
                prev = rows[e - 1]
                row = [0] + list(prev[: d - 1])
                top = prev[d - 1]
                if top:
                    for j in range(d):
                        row[j] -= top * self.phi_n[j]
            rows.append(row)
        self._qpow_rows = tuple(tuple(r) for r in rows[:n])
        # reduction rows for x^{d+j}, consumed by _reduce after convolutions and shifts
        self._red = tuple(tuple(r) for r in rows[d:])
        self._zero = CycNum(self, (0,) * d, 1)
        self._one = CycNum(self, (1,) + (0,) * (d - 1), 1)
        self._qtable = tuple(CycNum(self, self._qpow_rows[e], 1) for e in range(n))
        self._unit = [cmath.exp(2j * cmath.pi * e / n) for e in range(d)]
        self._inv_cache: dict[tuple, CycNum] = {}

    def __repr__(self):
        return f"CyclotomicContext(n={self.n})"

    def zero(self) -> "CycNum":
        return self._zero

    def one(self) -> "CycNum":
        return self._one

    def from_rational(self, a) -> "CycNum":
        c = Fraction(a)
        return _norm(self, [c.numerator] + [0] * (self.degree - 1), c.denominator)

    def from_coeffs(self, coeffs) -> "CycNum":
        """Element with the given rational coordinates (reduced if overlong)."""
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den // gcd(den, c.denominator) * c.denominator
        nums = [int(c * den) for c in coeffs]
        if len(nums) > self.degree:
            nums = self._reduce(nums)
        else:
            nums += [0] * (self.degree - len(nums))
        return _norm(self, nums, den)

    def root_power(self, e: int) -> "CycNum":
        """Canonical form of q^(e mod n)."""
        return self._qtable[e % self.n]

    def from_qpowers(self, pairs) -> "CycNum":
        """Sum of coeff * q^exp over (coeff, exp) pairs with integer coeffs."""
        acc = [0] * self.degree
        rows = self._qpow_rows
        n = self.n
        for coeff, e in pairs:
            if not coeff:
                continue
            row = rows[e % n]
            for j, r in enumerate(row):
                if r:
                    acc[j] += coeff * r
        return _norm(self, acc, 1)

    def _reduce(self, conv):
        """Fold an integer convolution (any supported length) back into the power basis."""
        d = self.degree
        low = conv[:d]
        low += [0] * (d - len(low))
        for j, hi in enumerate(conv[d:]):
            if hi:
                row = self._red[j]
                for i in range(d):
                    if row[i]:
                        low[i] += hi * row[i]
        return low

    def quantum_integer(self, m: int) -> "CycNum":
        """[m] = 1 + q + ... + q^{m-1}."""
        return self.from_qpowers((1, e) for e in range(m))


@lru_cache(maxsize=None)
def make_context(n: int) -> CyclotomicContext:
    return CyclotomicContext(n)


def _norm(ctx, nums, den):
    """Canonical form: gcd of all numerators and the denominator is 1, denominator > 0."""
    g = den
    for a in nums:
        if a:
            g = gcd(g, a)
            if g == 1:
                break
    if g > 1:
        den //= g
        nums = [a // g for a in nums]
    return CycNum(ctx, tuple(nums), den)


class CycNum:
    """An element of Q(q), immutable, in canonical reduced form."""

    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx: CyclotomicContext, num: tuple, den: int):
        self.ctx = ctx
        self.num = num
        self.den = den

    @property
    def coeffs(self) -> tuple:
        """Rational coordinates over the power basis 1, q, ..., q^{phi(n)-1}."""
        return tuple(Fraction(a, self.den) for a in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def __bool__(self):
        return any(self.num)

    def __eq__(self, other):
        if isinstance(other, CycNum):
            return self.ctx is other.ctx and self.num == other.num and self.den == other.den
        if isinstance(other, int):
            return self.den == 1 and self.num[0] == other and not any(self.num[1:])
        if isinstance(other, Fraction):
            return (
                not any(self.num[1:])
                and self.num[0] == other.numerator
                and self.den == other.denominator
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        ctx = self.ctx
        if isinstance(other, (int, Fraction)):
            other = ctx.from_rational(other)
        da, db = self.den, other.den
        if da == db:
            return _norm(ctx, [a + b for a, b in zip(self.num, other.num)], da)
        g = gcd(da, db)
        ma, mb = db // g, da // g
        return _norm(ctx, [a * ma + b * mb for a, b in zip(self.num, other.num)], da * ma)

    __radd__ = __add__

    def __sub__(self, other):
        ctx = self.ctx
        if isinstance(other, (int, Fraction)):
            other = ctx.from_rational(other)
        da, db = self.den, other.den
        if da == db:
            return _norm(ctx, [a - b for a, b in zip(self.num, other.num)], da)
        g = gcd(da, db)
        ma, mb = db // g, da // g
        return _norm(ctx, [a * ma - b * mb for a, b in zip(self.num, other.num)], da * ma)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CycNum(self.ctx, tuple(-a for a in self.num), self.den)

    def __mul__(self, other):
        ctx = self.ctx
        if isinstance(other, int):
            if not other:
                return ctx._zero
            g = gcd(other, self.den)
            return CycNum(ctx, tuple(a * (other // g) for a in self.num), self.den // g)
        if isinstance(other, Fraction):
            return _norm(
                ctx,
                [a * other.numerator for a in self.num],
                self.den * other.denominator,
            )
        a, b = self.num, other.num
        d = ctx.degree
        conv = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return _norm(ctx, ctx._reduce(conv), self.den * other.den)

    __rmul__ = __mul__

    def mul_qpow(self, e: int) -> "CycNum":
        """Multiply by q^e (e any integer)."""
        e %= self.ctx.n
        if e == 0:
            return self
        d = self.ctx.degree
        conv = [0] * e + list(self.num)
        if len(conv) <= d:
            conv += [0] * (d - len(conv))
            return CycNum(self.ctx, tuple(conv), self.den)
        return _norm(self.ctx, self.ctx._reduce(conv), self.den)

    def inverse(self) -> "CycNum":
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_n."""
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        cache = self.ctx._inv_cache
        key = (self.num, self.den)
        hit = cache.get(key)
        if hit is not None:
            return hit
        # r0 = Phi_n, r1 = self; track t with t*self = r (mod Phi_n)
        r0 = [Fraction(c) for c in self.ctx.phi_n]
        r1 = list(self.coeffs)
        t0, t1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                inv_c = 1 / r1[0]
                result = self.ctx.from_coeffs([c * inv_c for c in t1])
                break
            q, r = _polydivmod(r0, r1)
            t_new = _polysub(t0, _polymul(q, t1))
            r0, r1 = r1, r
            t0, t1 = t1, t_new
        if len(cache) < 4096:
            cache[key] = result
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.ctx._one
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def embed(self) -> complex:
        """Fast double-precision image under q -> exp(2*pi*i/n)."""
        units = self.ctx._unit
        acc = 0j
        for a, u in zip(self.num, units):
            if a:
                acc += a * u
        return acc / self.den

    def to_json(self) -> dict:
        return {"n": self.ctx.n, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(obj) -> "CycNum":
        ctx = make_context(obj["n"])
        coeffs = [Fraction(s) for s in obj["coeffs"]]
        if len(coeffs) != ctx.degree:
            raise ValueError("coefficient vector has wrong length for n=%d" % ctx.n)
        return ctx.from_coeffs(coeffs)

    def __repr__(self):
        terms = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                terms.append(str(c))
            elif e == 1:
                terms.append(f"{c}*q" if c != 1 else "q")
            else:
                terms.append(f"{c}*q^{e}" if c != 1 else f"q^{e}")
        return " + ".join(terms) if terms else "0"


def _polydivmod(a, b):
    """Division with remainder for Fraction coefficient lists (b trimmed, nonzero)."""
    a = list(a)
    db = len(b) - 1
    lead = b[db]
    q = [Fraction(0)] * (max(len(a) - db, 0))
    for i in range(len(a) - db - 1, -1, -1):
        c = a[i + db] / lead
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return q, a[:db]


def _polymul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _polysub(a, b):
    out = list(a) + [Fraction(0)] * (len(b) - len(a))
    for j, bj in enumerate(b):
        out[j] -= bj
    return out


def complex_embed(x: CycNum, digits: int = 15):
    """Image of x under q -> exp(2*pi*i/n) to the requested decimal precision.

    Returns a Python complex for double precision, an mpmath.mpc beyond it.
    """
    if digits <= 15:
        return x.embed()
    with mpmath.workdps(digits + 10):
        q = mpmath.expjpi(mpmath.mpf(2) / x.ctx.n)
        acc = mpmath.mpc(0)
        for a in reversed(x.num):
            acc = acc * q + a
        return mpmath.mpc(acc / x.den)
