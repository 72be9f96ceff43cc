"""Trigonometric terms at rational multiples of pi, and their exact images
in cyclotomic fields.

With ``x = zeta_n`` and ``n`` odd, every value used here lives in
``Q(zeta_n)``::

    i*tan(a*pi/n) = (x**a - 1) / (x**a + 1)
    i*sin(a*pi/n) = (w - 1/w) / 2,   w = e^{i*a*pi/n} = (-1)**a * x**(a*(n+1)/2)
      cos(a*pi/n) = (w + 1/w) / 2
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .exact import CycloElem, zeta

__all__ = [
    "Kind",
    "TrigTerm",
    "canonicalize_term",
    "first_quadrant",
    "i_tan_embed",
    "i_sin_embed",
    "cos_embed",
]


class Kind(str, Enum):
    TAN = "tan"
    SIN = "sin"
    COS = "cos"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class TrigTerm:
    """``coeff * kind(a*pi/n)``."""

    coeff: Fraction
    kind: Kind
    a: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.n < 1:
            raise ValueError(f"angle denominator must be positive, got {self.n}")

    @property
    def angle(self) -> float:
        return math.pi * self.a / self.n

    def value(self) -> float:
        f = {Kind.TAN: math.tan, Kind.SIN: math.sin, Kind.COS: math.cos}[self.kind]
        return float(self.coeff) * f(self.angle)

    def scaled(self, c) -> "TrigTerm":
        return replace(self, coeff=self.coeff * c)

    def rescaled(self, n: int) -> "TrigTerm":
        """Same angle written over denominator ``n`` (a multiple of ``self.n``)."""
        if n % self.n:
            raise ValueError(f"{n} is not a multiple of {self.n}")
        return replace(self, a=self.a * (n // self.n), n=n)


def canonicalize_term(t: TrigTerm) -> TrigTerm:
    """Reduce the angle: tan modulo pi into [0, pi), sin/cos modulo 2*pi
    into [0, 2*pi).  Terms whose value is zero come back with coeff 0."""
    n = t.n
    if t.kind is Kind.TAN:
        a = t.a % n
        if 2 * a == n:
            raise ValueError(f"tan({t.a}pi/{n}) is undefined")
        zero = a == 0
    else:
        a = t.a % (2 * n)
        if t.kind is Kind.SIN:
            zero = a == 0 or a == n
        else:
            zero = 2 * a == n or 2 * a == 3 * n
    return TrigTerm(Fraction(0) if zero else t.coeff, t.kind, a, n)


def first_quadrant(t: TrigTerm) -> TrigTerm:
    """Rewrite ``t`` with angle in [0, pi/2], absorbing signs into coeff.

    Uses tan(pi - u) = -tan u, sin(2pi - u) = -sin u, sin(pi - u) = sin u,
    cos(2pi - u) = cos u and cos(pi - u) = -cos u.
    """
    t = canonicalize_term(t)
    c, a, n = t.coeff, t.a, t.n
    if t.kind is Kind.TAN:
        if 2 * a > n:
            a, c = n - a, -c
    elif t.kind is Kind.SIN:
        if a > n:
            a, c = 2 * n - a, -c
        if 2 * a > n:
            a = n - a
    else:
        if a > n:
            a = 2 * n - a
        if 2 * a > n:
            a, c = n - a, -c
    return TrigTerm(c, t.kind, a, n)


def _require_odd(n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"exact embedding needs an odd denominator, got {n}")


def _half_turn(a: int, n: int) -> tuple[int, int]:
    # e^{i a pi/n} = sign * zeta_n**e
    return (-1 if a % 2 else 1), (a * (n + 1) // 2) % n


def i_tan_embed(a: int, n: int) -> CycloElem:
    """Exact value of ``i*tan(a*pi/n)`` in Q(zeta_n), n odd."""
    _require_odd(n)
    return _i_tan(a % n, n)


@lru_cache(maxsize=4096)
def _i_tan(a: int, n: int) -> CycloElem:
    if a == 0:
        return CycloElem.zero(n)
    x_a = zeta(n, a)
    return (x_a - 1) * (x_a + 1).inverse()


def i_sin_embed(a: int, n: int) -> CycloElem:
    """Exact value of ``i*sin(a*pi/n)`` in Q(zeta_n), n odd."""
    _require_odd(n)
    sign, e = _half_turn(a % (2 * n), n)
    return (zeta(n, e) - zeta(n, -e)).scale(Fraction(sign, 2))


def cos_embed(a: int, n: int) -> CycloElem:
    """Exact value of ``cos(a*pi/n)`` in Q(zeta_n), n odd."""
    _require_odd(n)
    sign, e = _half_turn(a % (2 * n), n)
    return (zeta(n, e) + zeta(n, -e)).scale(Fraction(sign, 2))
