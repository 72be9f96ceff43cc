"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored as their remainder modulo the n-th cyclotomic
polynomial, so two elements of the same field are equal exactly when
their coefficient tuples are equal.  Coefficients are
:class:`fractions.Fraction` values.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

import mpmath

Rational = Fraction

__all__ = [
    "Rational",
    "CycloElem",
    "cyclotomic_polynomial",
    "totient",
    "canonicalize",
    "add",
    "neg",
    "mul",
    "inverse",
    "embed",
    "conj",
    "eval_numeric",
    "zeta",
]


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _exact_div_monic(num: list[int], den: Sequence[int]) -> list[int]:
    # den is monic; the division is known to be exact
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            quot[i - dn] = c
            for j, dj in enumerate(den):
                num[i - dn + j] -= c * dj
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Return the coefficients of Phi_n, lowest degree first.

    Computed by dividing x**n - 1 by Phi_d for every proper divisor d.
    """
    if n < 1:
        raise ValueError(f"cyclotomic polynomial needs n >= 1, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _exact_div_monic(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _sparse_tail(n: int) -> tuple[tuple[int, int], ...]:
    # nonzero (degree, coeff) pairs of Phi_n below the leading term
    phi = cyclotomic_polynomial(n)
    return tuple((j, c) for j, c in enumerate(phi[:-1]) if c)


def totient(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce(poly: list, n: int) -> list:
    """Reduce ``poly`` (mutated in place) modulo Phi_n; returns the
    length-phi(n) remainder."""
    deg = totient(n)
    tail = _sparse_tail(n)
    for i in range(len(poly) - 1, deg - 1, -1):
        c = poly[i]
        if c:
            base = i - deg
            for j, pj in tail:
                poly[base + j] -= c * pj
    if len(poly) < deg:
        poly = poly + [0] * (deg - len(poly))
    return poly[:deg]


def _common_denominator(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = 1
    for c in coeffs:
        if c.denominator != 1:
            den = math.lcm(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected a rational number, got {type(value).__name__}")


class CycloElem:
    """An element of Q(zeta_order) in canonical form.

    ``coeffs[k]`` is the coefficient of ``zeta**k`` for ``k < phi(order)``.
    Values are immutable.  Arithmetic requires both operands to share an
    order (use :meth:`embed` first); equality comparisons embed into a
    common field automatically.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable):
        coeffs = tuple(_to_fraction(c) for c in coeffs)
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        if len(coeffs) != totient(order):
            raise ValueError(
                f"Q(zeta_{order}) needs {totient(order)} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("CycloElem is immutable")

    # construction helpers

    @classmethod
    def _raw(cls, order: int, coeffs: tuple[Fraction, ...]) -> "CycloElem":
        obj = object.__new__(cls)
        object.__setattr__(obj, "order", order)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    @classmethod
    def zero(cls, order: int) -> "CycloElem":
        return cls._raw(order, (Fraction(0),) * totient(order))

    @classmethod
    def from_rational(cls, value, order: int) -> "CycloElem":
        coeffs = [Fraction(0)] * totient(order)
        coeffs[0] = _to_fraction(value)
        return cls._raw(order, tuple(coeffs))

    @classmethod
    def one(cls, order: int) -> "CycloElem":
        return cls.from_rational(1, order)

    # predicates

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __bool__(self) -> bool:
        return not self.is_zero()

    # arithmetic

    def _coerce(self, other) -> "CycloElem":
        if isinstance(other, CycloElem):
            if other.order != self.order:
                raise ValueError(
                    f"order mismatch: Q(zeta_{self.order}) vs Q(zeta_{other.order}); embed first"
                )
            return other
        return CycloElem.from_rational(other, self.order)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return CycloElem._raw(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return CycloElem._raw(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return CycloElem._raw(
            self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "CycloElem":
        c = _to_fraction(c)
        return CycloElem._raw(self.order, tuple(c * a for a in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, CycloElem):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        other = self._coerce(other)
        xs, dx = _common_denominator(self.coeffs)
        ys, dy = _common_denominator(other.coeffs)
        xs_nz = [(i, c) for i, c in enumerate(xs) if c]
        ys_nz = [(j, c) for j, c in enumerate(ys) if c]
        prod = [0] * (2 * len(xs))
        for i, a in xs_nz:
            for j, b in ys_nz:
                prod[i + j] += a * b
        rem = _reduce(prod, self.order)
        den = dx * dy
        return CycloElem._raw(self.order, tuple(Fraction(c, den) for c in rem))

    __rmul__ = __mul__

    def shift(self, k: int) -> "CycloElem":
        """Multiply by ``zeta**k``."""
        n = self.order
        k %= n
        poly = [Fraction(0)] * (totient(n) + k)
        for i, c in enumerate(self.coeffs):
            poly[i + k] = c
        return CycloElem._raw(n, tuple(_reduce(poly, n)))

    def inverse(self) -> "CycloElem":
        """Multiplicative inverse via the extended Euclidean algorithm
        against Phi_n over the rationals."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        n = self.order
        r0 = [Fraction(c) for c in cyclotomic_polynomial(n)]
        r1 = _strip(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            s = _poly_sub(s0, _poly_mul(q, s1))
            # keep remainders monic to limit coefficient growth
            lead = r[-1]
            r0, r1 = r1, [c / lead for c in r]
            s0, s1 = s1, [c / lead for c in s]
        # r1 is a nonzero constant because Phi_n is irreducible
        inv = [c / r1[0] for c in s1]
        return canonicalize(inv, n)

    def __truediv__(self, other):
        if isinstance(other, CycloElem):
            return self * self._coerce(other).inverse()
        try:
            c = _to_fraction(other)
        except TypeError:
            return NotImplemented
        if c == 0:
            raise ZeroDivisionError("division by zero")
        return self.scale(1 / c)

    def __rtruediv__(self, other):
        return CycloElem.from_rational(other, self.order) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        acc = CycloElem.one(self.order)
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    # structure

    def embed(self, N: int) -> "CycloElem":
        """Image under zeta_n -> zeta_N**(N/n)."""
        n = self.order
        if N % n:
            raise ValueError(f"cannot embed Q(zeta_{n}) into Q(zeta_{N}): {n} does not divide {N}")
        if N == n:
            return self
        step = N // n
        poly = [Fraction(0)] * N
        for k, c in enumerate(self.coeffs):
            poly[k * step] = c
        return CycloElem._raw(N, tuple(_reduce(poly, N)))

    def conj(self) -> "CycloElem":
        """Complex conjugate, the automorphism zeta -> zeta**-1."""
        n = self.order
        poly = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            poly[(-k) % n] += c
        return CycloElem._raw(n, tuple(_reduce(poly, n)))

    def eval_numeric(self) -> complex:
        """Complex value with zeta = exp(2*pi*i/n); never used as proof.

        Doubles carry an error of about 5e-16 per unit of coefficient
        weight, so heavy elements are summed in extended precision instead.
        """
        n = self.order
        terms = [(k, c) for k, c in enumerate(self.coeffs) if c]
        if sum(abs(c) for _, c in terms) > _DOUBLE_WEIGHT_LIMIT:
            return _eval_extended(terms, n)
        re, im = [], []
        for k, c in terms:
            t = 2 * math.pi * k / n
            f = float(c)
            re.append(f * math.cos(t))
            im.append(f * math.sin(t))
        return complex(math.fsum(re), math.fsum(im))

    # comparison and display

    def __eq__(self, other):
        if isinstance(other, CycloElem):
            if other.order == self.order:
                return self.coeffs == other.coeffs
            N = math.lcm(self.order, other.order)
            return self.embed(N).coeffs == other.embed(N).coeffs
        try:
            c = _to_fraction(other)
        except TypeError:
            return NotImplemented
        return self.is_rational() and self.coeffs[0] == c

    __hash__ = None  # equality crosses field orders, so no consistent hash

    def __repr__(self):
        return f"CycloElem({self.order}, {self})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"({c})*{mono}" if c.denominator != 1 else f"{c}*{mono}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")


_DOUBLE_WEIGHT_LIMIT = 10**5


def _eval_extended(terms, n: int) -> complex:
    with mpmath.workdps(40):
        total = mpmath.fsum(
            mpmath.mpf(c.numerator) / c.denominator * mpmath.expjpi(mpmath.mpf(2 * k) / n)
            for k, c in terms
        )
        return complex(total)


# polynomial helpers over Q (dense, ascending, trailing zeros stripped)

def _strip(p: list) -> list:
    while len(p) > 1 and not p[-1]:
        p.pop()
    return p


def _poly_sub(a: list, b: list) -> list:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _strip(out)


def _poly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _strip(out)


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(a) - 1 < db:
        return [Fraction(0)], _strip(a)
    q = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            c = c / lead
            q[i - db] = c
            for j, bj in enumerate(b):
                a[i - db + j] -= c * bj
    r = _strip(a[:db] if db else [Fraction(0)])
    return _strip(q), r


# functional surface


def canonicalize(p: Iterable, n: int) -> CycloElem:
    """Remainder of the polynomial ``p`` (ascending coefficients) modulo Phi_n."""
    poly = [_to_fraction(c) for c in p]
    poly += [Fraction(0)] * (totient(n) - len(poly))
    return CycloElem._raw(n, tuple(_reduce(poly, n)))


def zeta(n: int, k: int = 1) -> CycloElem:
    """The element ``zeta_n**k``."""
    poly = [Fraction(0)] * n
    poly[k % n] = Fraction(1)
    return CycloElem._raw(n, tuple(_reduce(poly, n)))


def add(u: CycloElem, v: CycloElem) -> CycloElem:
    return u + v


def neg(u: CycloElem) -> CycloElem:
    return -u


def mul(u: CycloElem, v: CycloElem) -> CycloElem:
    return u * v


def inverse(u: CycloElem) -> CycloElem:
    return u.inverse()


def embed(u: CycloElem, N: int) -> CycloElem:
    return u.embed(N)


def conj(u: CycloElem) -> CycloElem:
    return u.conj()


def eval_numeric(u: CycloElem) -> complex:
    return u.eval_numeric()
