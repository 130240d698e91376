"""Exact arithmetic in the cyclotomic field Q(x)/Phi_{4l}(x).

The generator ``x`` is a primitive 4l-th root of unity, embedded as
exp(2 pi i / 4l).  All scalars of the quantum group live here:

    t^{1/2} = x,   t = x^2,   zeta = x^4.

Elements are stored as an integer numerator vector with a single positive
denominator, always in lowest terms, so equality is tuple equality.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # coefficient lists are low degree first; den is monic
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1]
        q[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    assert not any(num), "inexact polynomial division"
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = _poly_divexact(p, list(cyclotomic_polynomial(d)))
    return tuple(p)


class CycField:
    """The field Q(zeta_{4l}) attached to a root order l >= 2."""

    def __init__(self, ell: int):
        if not isinstance(ell, int) or ell < 2:
            raise ValueError(f"root order must be an integer > 1, got {ell!r}")
        self.ell = ell
        self.order = 4 * ell
        self.phi = cyclotomic_polynomial(self.order)
        self.degree = d = len(self.phi) - 1
        # red[k] = x^k reduced, for 0 <= k <= 2d - 2
        red: list[tuple[int, ...]] = []
        for k in range(max(2 * d - 1, self.order)):
            if k < d:
                v = [0] * d
                v[k] = 1
            else:
                prev = red[k - 1]
                top = prev[d - 1]
                v = [0] + list(prev[: d - 1])
                if top:
                    for j in range(d):
                        v[j] -= top * self.phi[j]
            red.append(tuple(v))
        self._red = red
        self.zero = CycScalar(self, (0,) * d, 1)
        self.one = self.root_power(0)

    def __repr__(self) -> str:
        return f"CycField(ell={self.ell})"

    def __reduce__(self):
        return (get_field, (self.ell,))

    def root_power(self, k: int) -> CycScalar:
        """x^k, i.e. t^{k/2}."""
        return CycScalar(self, self._red[k % self.order], 1)

    def t_power(self, k: int) -> CycScalar:
        return self.root_power(2 * k)

    def __call__(self, value) -> CycScalar:
        if isinstance(value, CycScalar):
            return value
        return self.rational(value)

    def rational(self, value) -> CycScalar:
        q = Fraction(value)
        v = [0] * self.degree
        v[0] = q.numerator
        return CycScalar(self, tuple(v), q.denominator)

    def qint(self, n: int) -> CycScalar:
        """Quantum integer [n] = (t^n - t^-n)/(t - t^-1)."""
        if n == 0:
            return self.zero
        if n < 0:
            return -self.qint(-n)
        # [n] = sum_{j=0}^{n-1} t^{n-1-2j}, no division needed
        acc = self.zero
        for j in range(n):
            acc = acc + self.t_power(n - 1 - 2 * j)
        return acc

    def qfact(self, n: int) -> CycScalar:
        if n < 0:
            raise ValueError("quantum factorial of a negative integer")
        acc = self.one
        for k in range(1, n + 1):
            acc = acc * self.qint(k)
        return acc

    def from_coeffs(self, coeffs) -> CycScalar:
        """Build from rational coefficients of 1, x, x^2, ... (any length)."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        acc = [0] * self.degree
        for k, c in enumerate(fr):
            if c:
                n = c.numerator * (den // c.denominator)
                row = self._red[k] if k < len(self._red) else self._red[k % self.order]
                for j, r in enumerate(row):
                    if r:
                        acc[j] += n * r
        return CycScalar._make(self, acc, den)

    def from_json(self, data) -> CycScalar:
        return self.from_coeffs(Fraction(s) for s in data)


@lru_cache(maxsize=None)
def get_field(ell: int) -> CycField:
    return CycField(ell)


class CycScalar:
    """Immutable element of Q(x)/Phi_{4l}(x) in canonical form."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field: CycField, num: tuple[int, ...], den: int):
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    @staticmethod
    def _make(field: CycField, num, den: int) -> CycScalar:
        g = math.gcd(den, *num)
        if den < 0:
            g = -g
        if g != 1:
            num = [a // g for a in num]
            den //= g
        if not any(num):
            den = 1
        return CycScalar(field, tuple(num), den)

    def _coerce(self, other) -> CycScalar:
        if isinstance(other, CycScalar):
            if other.field is not self.field:
                raise ValueError("scalars from different root orders")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return CycScalar._make(self.field, [a + b for a, b in zip(self.num, o.num)], self.den)
        g = math.gcd(self.den, o.den)
        fa, fb = o.den // g, self.den // g
        return CycScalar._make(
            self.field, [a * fa + b * fb for a, b in zip(self.num, o.num)], self.den * fa
        )

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycScalar._make(self.field, [a * other for a in self.num], self.den)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        d = self.field.degree
        conv = [0] * (2 * d - 1)
        for i, a in enumerate(self.num):
            if a:
                for j, b in enumerate(o.num):
                    if b:
                        conv[i + j] += a * b
        out = conv[:d]
        red = self.field._red
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                for j, r in enumerate(red[k]):
                    if r:
                        out[j] += c * r
        return CycScalar._make(self.field, out, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> CycScalar:
        """Multiplicative inverse via the extended Euclidean algorithm over Q."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in the cyclotomic field")
        # work with Fraction polynomials, highest degree last
        a = [Fraction(c) for c in self.num]
        b = [Fraction(c) for c in self.field.phi]
        # invariant: s*self == a, s2*self == b (mod phi)
        s, s2 = [Fraction(1)], [Fraction(0)]
        _trim(a)
        while len(b) > 1 or b[0] != 0:
            q, r = _pdivmod(a, b)
            a, b = b, r
            s, s2 = s2, _psub(s, _pmul(q, s2))
            if len(b) == 1 and b[0] == 0:
                break
        # a is now a nonzero constant
        c = a[0]
        inv = [v / c for v in s]
        res = self.field.from_coeffs(inv)
        return res * Fraction(self.den)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        acc = self.field.one
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, CycScalar):
            return self.field.ell == other.field.ell and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == self.field.rational(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.ell, self.num, self.den))
        return self._hash

    def coeffs(self) -> list[Fraction]:
        return [Fraction(a, self.den) for a in self.num]

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def has_integral_coeffs(self) -> bool:
        return self.den == 1

    def to_json(self) -> list[str]:
        return [str(c) if c.denominator != 1 else f"{c.numerator}/1" for c in self.coeffs()]

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.field.order)
        return sum(a * z**k for k, a in enumerate(self.num)) / self.den

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs()):
            if c:
                terms.append(f"{c}" if k == 0 else f"({c})*x^{k}")
        return " + ".join(terms) if terms else "0"


def _trim(p: list) -> None:
    while len(p) > 1 and p[-1] == 0:
        p.pop()


def _pmul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    _trim(out)
    return out


def _psub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    out = [Fraction(v) for v in out]
    _trim(out)
    return out


def _pdivmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    _trim(a)
    b = list(b)
    _trim(b)
    if len(a) < len(b):
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    r = a[: len(b) - 1] or [Fraction(0)]
    _trim(r)
    return q, r
