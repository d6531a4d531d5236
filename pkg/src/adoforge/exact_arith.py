"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored against the power basis 1, z, ..., z^(phi(n)-1) with a
single common denominator, so equality is a tuple comparison once both
operands live in the same field. Mixed-order operations lift both sides into
Q(zeta_lcm).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational as _RationalABC

import mpmath

Rational = Fraction

__all__ = [
    "Rational",
    "Cyclotomic",
    "cyclotomic_polynomial",
    "euler_phi",
    "root_of_unity",
    "to_complex",
]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first.

    Computed as (x^n - 1) divided exactly by Phi_d for every proper divisor d.
    """
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        num = _poly_exact_div_monic(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _poly_exact_div_monic(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            quot[k - dn] = c
            for j, dc in enumerate(den):
                num[k - dn + j] -= c * dc
    if any(num[:dn]):
        raise ArithmeticError("non-exact cyclotomic division")
    return quot


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Reduced integer vectors of zeta_n^k for k = 0..n-1."""
    phi = euler_phi(n)
    cyc = cyclotomic_polynomial(n)
    table = []
    vec = [0] * phi
    vec[0] = 1
    for _ in range(n):
        table.append(tuple(vec))
        # multiply by zeta: shift up and fold the top coefficient back via Phi_n
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            for j in range(phi):
                vec[j] -= top * cyc[j]
    return tuple(table)


@lru_cache(maxsize=None)
def _normalized_trace_table(n: int) -> tuple[Fraction, ...]:
    # Tr(zeta_n^k) / phi(n) is independent of the ambient field, which makes it
    # a hash consistent with cross-order equality.
    out = []
    for k in range(euler_phi(n)):
        m = n // gcd(k, n)
        out.append(Fraction(_mobius(m), euler_phi(m)))
    return tuple(out)


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, _RationalABC)):
        return Fraction(c)
    raise TypeError(f"cannot interpret {c!r} as a rational")


class Cyclotomic:
    """An element of Q(zeta_n), immutable.

    ``Cyclotomic(n, coeffs)`` takes rational coefficients against any powers of
    zeta_n (the list may be longer than phi(n)); the value is reduced on
    construction.
    """

    __slots__ = ("_order", "_nums", "_den", "_hash")

    def __init__(self, order: int, coeffs=(0,)):
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        fracs = [_as_fraction(c) for c in coeffs]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        raw = [f.numerator * (den // f.denominator) for f in fracs]
        nums = _reduce(order, raw)
        self._set(order, nums, den)

    def _set(self, order, nums, den):
        g = den
        for v in nums:
            if v:
                g = gcd(g, v)
                if g == 1:
                    break
        if not any(nums):
            den, g = 1, 1
        if g != 1:
            nums = tuple(v // g for v in nums)
            den //= g
        self._order = order
        self._nums = tuple(nums)
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, order: int, nums, den: int) -> "Cyclotomic":
        obj = cls.__new__(cls)
        obj._set(order, tuple(nums), den)
        return obj

    @classmethod
    def from_rational(cls, value, order: int = 1) -> "Cyclotomic":
        f = _as_fraction(value)
        nums = [0] * euler_phi(order)
        nums[0] = f.numerator
        return cls._raw(order, nums, f.denominator)

    # -- accessors -----------------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self._den) for v in self._nums)

    def is_zero(self) -> bool:
        return not any(self._nums)

    def is_rational(self) -> bool:
        return not any(self._nums[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._nums[0], self._den)

    # -- field embedding -----------------------------------------------------

    def lift(self, order: int) -> "Cyclotomic":
        """Embed into Q(zeta_order); ``order`` must be a multiple of self.order."""
        if order == self._order:
            return self
        if order % self._order:
            raise ValueError(f"cannot embed Q(zeta_{self._order}) into Q(zeta_{order})")
        step = order // self._order
        table = _power_table(order)
        phi = euler_phi(order)
        acc = [0] * phi
        for k, v in enumerate(self._nums):
            if v:
                row = table[(k * step) % order]
                for j in range(phi):
                    if row[j]:
                        acc[j] += v * row[j]
        return Cyclotomic._raw(order, acc, self._den)

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other._order == self._order:
                return self, other
            n = _lcm(self._order, other._order)
            return self.lift(n), other.lift(n)
        try:
            f = _as_fraction(other)
        except TypeError:
            return None
        return self, Cyclotomic.from_rational(f, self._order)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if type(other) is Cyclotomic and other._order == self._order:
            a, b = self, other
        else:
            pair = self._coerce(other)
            if pair is None:
                return NotImplemented
            a, b = pair
        if a._den == b._den:
            return Cyclotomic._raw(a._order, [x + y for x, y in zip(a._nums, b._nums)], a._den)
        den = a._den * b._den // gcd(a._den, b._den)
        fa, fb = den // a._den, den // b._den
        nums = [x * fa + y * fb for x, y in zip(a._nums, b._nums)]
        return Cyclotomic._raw(a._order, nums, den)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self._order, [-v for v in self._nums], self._den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b + (-a)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Cyclotomic._raw(self._order, [0] * len(self._nums), 1)
            return Cyclotomic._raw(self._order, [v * other for v in self._nums], self._den)
        if type(other) is Cyclotomic and other._order == self._order:
            a, b = self, other
        else:
            pair = self._coerce(other)
            if pair is None:
                return NotImplemented
            a, b = pair
        n = a._order
        phi = len(a._nums)
        if b.is_rational():
            v = b._nums[0]
            return Cyclotomic._raw(n, [x * v for x in a._nums], a._den * b._den)
        if a.is_rational():
            v = a._nums[0]
            return Cyclotomic._raw(n, [x * v for x in b._nums], a._den * b._den)
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a._nums):
            if x:
                for j, y in enumerate(b._nums):
                    if y:
                        conv[i + j] += x * y
        return Cyclotomic._raw(n, _fold(n, conv), a._den * b._den)

    __rmul__ = __mul__

    def inv(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        n = self._order
        if self.is_rational():
            return Cyclotomic.from_rational(Fraction(self._den, self._nums[0]), n)
        # extended Euclid of a(x) against Phi_n(x) over Q
        a = [Fraction(v, self._den) for v in self._nums]
        m = [Fraction(c) for c in cyclotomic_polynomial(n)]
        s = _poly_inverse_mod(a, m)
        return Cyclotomic(n, s)

    def __truediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inv()

    def __rtruediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b * a.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        result = Cyclotomic.from_rational(1, self._order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def conjugate(self) -> "Cyclotomic":
        return self.galois(-1)

    def galois(self, k: int) -> "Cyclotomic":
        """Apply zeta -> zeta^k (k coprime to the order)."""
        n = self._order
        if gcd(k, n) != 1:
            raise ValueError("Galois exponent must be coprime to the order")
        table = _power_table(n)
        acc = [0] * len(self._nums)
        for j, v in enumerate(self._nums):
            if v:
                row = table[(j * k) % n]
                for i, r in enumerate(row):
                    if r:
                        acc[i] += v * r
        return Cyclotomic._raw(n, acc, self._den)

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a._den == b._den and a._nums == b._nums

    def __hash__(self):
        if self._hash is None:
            tr = sum(
                (Fraction(v, self._den) * t
                 for v, t in zip(self._nums, _normalized_trace_table(self._order)) if v),
                Fraction(0),
            )
            self._hash = hash(tr)
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # -- display -------------------------------------------------------------

    def _approx(self, dps: int):
        with mpmath.workdps(dps):
            n = self._order
            total = mpmath.mpc(0)
            for k, v in enumerate(self._nums):
                if v:
                    total += mpmath.mpf(v) * mpmath.expjpi(mpmath.mpf(2 * k) / n)
            return total / self._den

    def __repr__(self):
        return f"Cyclotomic({self._order}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else (f"z{self._order}" if k == 1 else f"z{self._order}^{k}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "order": self._order,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Cyclotomic":
        order = int(data["order"])
        coeffs = [Fraction(int(n), int(d)) for n, d in data["coeffs"]]
        if len(coeffs) != euler_phi(order):
            raise ValueError(f"expected {euler_phi(order)} coefficients for order {order}")
        return cls(order, coeffs)


def _reduce(n: int, raw: list[int]) -> list[int]:
    phi = euler_phi(n)
    if len(raw) <= phi:
        return list(raw) + [0] * (phi - len(raw))
    return _fold(n, raw)


def _fold(n: int, raw: list[int]) -> list[int]:
    phi = euler_phi(n)
    out = list(raw[:phi]) + [0] * max(0, phi - len(raw))
    table = _power_table(n)
    for k in range(phi, len(raw)):
        v = raw[k]
        if v:
            row = table[k % n]
            for j in range(phi):
                if row[j]:
                    out[j] += v * row[j]
    return out


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b) and any(a):
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
        _poly_trim(a)
    return q, a


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return _poly_trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _poly_inverse_mod(a: list[Fraction], m: list[Fraction]) -> list[Fraction]:
    r0, r1 = _poly_trim(list(m)), _poly_trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, _poly_trim(r)
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if not r1:
        raise ZeroDivisionError("element is not invertible")
    c = r1[0]
    return [x / c for x in s1]


def root_of_unity(n: int, k: int = 1) -> Cyclotomic:
    """zeta_n^k in canonical form."""
    if n < 1:
        raise ValueError("root of unity order must be positive")
    nums = _power_table(n)[k % n]
    return Cyclotomic._raw(n, nums, 1)


def to_complex(x, precision: int = 30):
    """High-precision complex value of ``x`` (an mpmath ``mpc``)."""
    if not isinstance(x, Cyclotomic):
        x = Cyclotomic.from_rational(x)
    return x._approx(precision + 10)
