"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A value is a dense vector of rationals over the monomial basis
1, zeta, ..., zeta^(phi(N)-1), kept reduced modulo the N-th cyclotomic
polynomial.  Mixed-conductor operations promote both operands to the lcm;
a value is demoted to conductor 1 exactly when its reduced vector is
rational, so equal values always compare equal.  No floats anywhere except
the explicit to_complex() escape hatch.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
import cmath

_ZERO = Fraction(0)
_ONE = Fraction(1)

# ---------------------------------------------------------------------------
# integer polynomial helpers (ascending coefficient lists)


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials, den monic-leading."""
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c % lead != 0:
            raise ArithmeticError("inexact polynomial division")
        q = c // lead
        quot[i - dn] = q
        if q:
            for j, dj in enumerate(den):
                num[i - dn + j] -= q * dj
    if any(num[:dn]):
        raise ArithmeticError("nonzero remainder in exact division")
    return quot


_CYCLO_CACHE: dict[int, tuple[int, ...]] = {}


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, ascending."""
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    poly = _CYCLO_CACHE.get(n)
    if poly is not None:
        return poly
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, list(cyclotomic_polynomial(d)))
    result = tuple(_poly_div_exact(num, den))
    _CYCLO_CACHE[n] = result
    return result


_TABLE_CACHE: dict[int, tuple[int, list[tuple[int, ...]]]] = {}


def _power_table(n: int) -> tuple[int, list[tuple[int, ...]]]:
    """(degree d, rows) with rows[k] = coefficients of x^k mod Phi_n, 0<=k<n."""
    cached = _TABLE_CACHE.get(n)
    if cached is not None:
        return cached
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    rows: list[tuple[int, ...]] = []
    cur = [0] * d
    if d > 0:
        cur[0] = 1
    for k in range(n):
        rows.append(tuple(cur))
        # multiply by x, fold x^d = -(phi[0] + ... + phi[d-1] x^(d-1))
        top = cur[d - 1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(d):
                cur[i] -= top * phi[i]
    _TABLE_CACHE[n] = (d, rows)
    return d, rows


def _reduce(n: int, raw: list[Fraction]) -> tuple[int, tuple[Fraction, ...]]:
    """Reduce a raw exponent vector (length n) to canonical form."""
    d, rows = _power_table(n)
    out = list(raw[:d]) + [_ZERO] * max(0, d - len(raw))
    for k in range(d, min(len(raw), n)):
        c = raw[k]
        if c:
            row = rows[k]
            for i in range(d):
                if row[i]:
                    out[i] += c * row[i]
    if n > 1 and not any(out[1:]):
        return 1, (out[0],)
    return n, tuple(out)


class Cyc:
    """An element of some Q(zeta_N), in canonical reduced form."""

    __slots__ = ("n", "c")
    __hash__ = None  # mixed-conductor equality makes hashing a trap

    def __init__(self, n: int, coeffs: tuple[Fraction, ...], _canonical: bool = False):
        if _canonical:
            self.n = n
            self.c = coeffs
            return
        raw = [Fraction(x) for x in coeffs]
        if len(raw) < n:
            raw += [_ZERO] * (n - len(raw))
        m, c = _reduce(n, raw)
        self.n = m
        self.c = c

    # -- constructors

    @staticmethod
    def rational(q) -> "Cyc":
        return Cyc(1, (Fraction(q),), _canonical=True)

    @staticmethod
    def zero() -> "Cyc":
        return Cyc.rational(0)

    @staticmethod
    def one() -> "Cyc":
        return Cyc.rational(1)

    # -- predicates / accessors

    def __bool__(self) -> bool:
        return any(self.c)

    def is_rational(self) -> bool:
        return self.n == 1

    def as_fraction(self) -> Fraction:
        if self.n != 1:
            raise ValueError(f"not a rational value (conductor {self.n})")
        return self.c[0]

    # -- conductor handling

    def _promoted(self, m: int) -> tuple[int, tuple[Fraction, ...]]:
        """Coefficients at conductor m (a multiple of self.n), reduced."""
        if m == self.n:
            return self.n, self.c
        step = m // self.n
        raw = [_ZERO] * m
        for i, ci in enumerate(self.c):
            if ci:
                raw[i * step] = ci
        return _reduce(m, raw)

    @staticmethod
    def _coerce(x) -> "Cyc":
        if isinstance(x, Cyc):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyc.rational(x)
        return NotImplemented

    # -- arithmetic

    def __add__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.n == other.n:
            summed = tuple(a + b for a, b in zip(self.c, other.c))
            if self.n > 1 and not any(summed[1:]):
                return Cyc(1, (summed[0],), _canonical=True)
            return Cyc(self.n, summed, _canonical=True)
        m = lcm(self.n, other.n)
        na, ca = self._promoted(m)
        nb, cb = other._promoted(m)
        if na != nb:
            # promotion demoted one side to a rational; fold it into the other
            if na == 1:
                summed = (cb[0] + ca[0],) + cb[1:]
                return Cyc(nb, summed, _canonical=True)
            summed = (ca[0] + cb[0],) + ca[1:]
            return Cyc(na, summed, _canonical=True)
        summed = tuple(a + b for a, b in zip(ca, cb))
        if na > 1 and not any(summed[1:]):
            return Cyc(1, (summed[0],), _canonical=True)
        return Cyc(na, summed, _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.n, tuple(-a for a in self.c), _canonical=True)

    def __sub__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.n == 1:
            q = self.c[0]
            if not q:
                return Cyc.rational(0)
            return Cyc(other.n, tuple(q * b for b in other.c), _canonical=True)
        if other.n == 1:
            q = other.c[0]
            if not q:
                return Cyc.rational(0)
            return Cyc(self.n, tuple(q * a for a in self.c), _canonical=True)
        if self.n == other.n:
            return self._mul_same(self.n, self.c, other.c)
        m = lcm(self.n, other.n)
        na, ca = self._promoted(m)
        nb, cb = other._promoted(m)
        return Cyc(na, ca, _canonical=True) * Cyc(nb, cb, _canonical=True)

    __rmul__ = __mul__

    @staticmethod
    def _mul_same(n: int, a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> "Cyc":
        raw = [_ZERO] * n
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        k = i + j
                        if k >= n:
                            k -= n
                        raw[k] += ai * bj
        m, c = _reduce(n, raw)
        return Cyc(m, c, _canonical=True)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyc.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Cyc":
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic value")
        if self.n == 1:
            return Cyc.rational(1 / self.c[0])
        # extended euclid in Q[x] against Phi_n
        phi = [Fraction(x) for x in cyclotomic_polynomial(self.n)]
        a = list(self.c)
        r0, r1 = phi, a
        s0, s1 = [_ZERO], [_ONE]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                inv = [s * (1 / r1[0]) for s in s1]
                return Cyc(self.n, tuple(inv[: self.n]) + (_ZERO,) * max(0, self.n - len(inv)))
            q, rem = _frac_poly_divmod(r0, r1)
            s_new = _frac_poly_sub(s0, _frac_poly_mul(q, s1))
            r0, r1 = r1, rem
            s0, s1 = s1, s_new

    def __truediv__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.n == 1:
            return self * Cyc.rational(1 / other.c[0])
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def conjugate(self) -> "Cyc":
        """Complex conjugate (zeta -> zeta^(N-1))."""
        if self.n == 1:
            return self
        raw = [_ZERO] * self.n
        for i, ci in enumerate(self.c):
            if ci:
                raw[(self.n - i) % self.n] += ci
        m, c = _reduce(self.n, raw)
        return Cyc(m, c, _canonical=True)

    # -- comparison

    def __eq__(self, other):
        other = Cyc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.n == other.n:
            return self.c == other.c
        m = lcm(self.n, other.n)
        return self._promoted(m) == other._promoted(m)

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return NotImplemented
        return not eq

    # -- output

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.n)
        return sum(float(ci) * z**i for i, ci in enumerate(self.c))

    def serialize(self) -> dict:
        """Canonical wire form: conductor and a length-N rational vector."""
        coeffs = [[ci.numerator, ci.denominator] for ci in self.c]
        coeffs += [[0, 1]] * (self.n - len(coeffs))
        return {"N": self.n, "coeffs": coeffs}

    @staticmethod
    def deserialize(data: dict) -> "Cyc":
        return Cyc(data["N"], tuple(Fraction(a, b) for a, b in data["coeffs"]))

    def sort_key(self) -> tuple:
        return (self.n,) + tuple((ci.numerator, ci.denominator) for ci in self.c)

    def __repr__(self):
        if self.n == 1:
            return f"Cyc({self.c[0]})"
        terms = []
        for i, ci in enumerate(self.c):
            if not ci:
                continue
            if i == 0:
                terms.append(str(ci))
            elif i == 1:
                terms.append(f"{ci}*z{self.n}")
            else:
                terms.append(f"{ci}*z{self.n}^{i}")
        return "Cyc(" + (" + ".join(terms) if terms else "0") + ")"


# ---------------------------------------------------------------------------
# Fraction polynomial helpers for the inverse


def _frac_poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    while b and not b[-1]:
        b = b[:-1]
    db = len(b) - 1
    q = [_ZERO] * max(1, len(a) - db)
    while len(a) - 1 >= db and any(a):
        while a and not a[-1]:
            a.pop()
        if len(a) - 1 < db:
            break
        coef = a[-1] / b[-1]
        deg = len(a) - 1 - db
        q[deg] += coef
        for i in range(db + 1):
            a[deg + i] -= coef * b[i]
    return q, a


def _frac_poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _frac_poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [_ZERO] * (n - len(a))
    b = b + [_ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


# ---------------------------------------------------------------------------


def root_of_unity(n: int, k: int = 1) -> Cyc:
    """zeta_n^k as an exact value."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    k %= n
    raw = [_ZERO] * n
    raw[k] = _ONE
    m, c = _reduce(n, raw)
    return Cyc(m, c, _canonical=True)


def cyc_sum(values) -> Cyc:
    total = Cyc.zero()
    for v in values:
        total = total + v
    return total
