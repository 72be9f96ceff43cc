"""Squaring reduction of ``tan a + B sin b = C`` and the two closed-form
families it yields.

Squaring ``sin a + B/2 sin(a+b) - B/2 sin(a-b) = C cos a`` and linearizing
gives a relation ``constant = sum coeff*cos(alpha*a + beta*b)``.  With
``B = 4`` and ``C**2 = 11`` five of the six angles form an arithmetic
progression; forcing the sixth into it gives the families at
denominators 11 and 9.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .trig import Kind, TrigTerm
from .verify import Identity, resolve_sign, verify

__all__ = [
    "CosineTerm",
    "CosineRelation",
    "square_reduce",
    "cos_ap_sum",
    "FamilyMember",
    "IdentityFamily",
    "family_eleven",
    "family_nine",
]


class CosineTerm(NamedTuple):
    coeff: Fraction
    alpha: int
    beta: int


@dataclass(frozen=True)
class CosineRelation:
    """``constant = sum(coeff * cos(alpha*a + beta*b))``."""

    constant: Fraction
    terms: tuple[CosineTerm, ...]

    def coefficient(self, alpha: int, beta: int) -> Fraction:
        for t in self.terms:
            if (t.alpha, t.beta) == (alpha, beta):
                return t.coeff
        return Fraction(0)

    def residual(self, a: float, b: float) -> float:
        rhs = math.fsum(float(t.coeff) * math.cos(t.alpha * a + t.beta * b) for t in self.terms)
        return float(self.constant) - rhs


def square_reduce(B, C2) -> CosineRelation:
    """Cosine relation satisfied by any ``a, b`` with ``tan a + B sin b = C``,
    where ``C2 = C**2``."""
    B, C2 = Fraction(B), Fraction(C2)
    slots = [
        (Fraction(2 + 2 * C2 - B * B, 4), 2, 0),
        (B * B / 8, 2, 2),
        (B * B / 8, 2, -2),
        (B / 2, 2, 1),
        (-B / 2, 2, -1),
        (B * B / 4, 0, 2),
    ]
    terms = tuple(CosineTerm(c, al, be) for c, al, be in slots if c)
    return CosineRelation(Fraction(2 - 2 * C2 + B * B, 4), terms)


def cos_ap_sum(x: float, y: float, n: int) -> float:
    """``sum_{k<n} cos(x + k*y)`` via the closed form
    ``cos(x + (n-1)y/2) sin(ny/2) / sin(y/2)``.

    Near the removable singularity sin(y/2) = 0 the closed form loses
    accuracy, so the direct sum is returned there.
    """
    if n < 1:
        return 0.0
    s = math.sin(y / 2)
    if abs(s) < 0.05:
        return math.fsum(math.cos(x + k * y) for k in range(n))
    return math.cos(x + (n - 1) * y / 2) * math.sin(n * y / 2) / s


class FamilyMember(NamedTuple):
    k: int
    tan_angle: tuple[int, int]  # (numerator, denominator) of a multiple of pi
    sin_angle: tuple[int, int]
    sign: int


@dataclass(frozen=True)
class IdentityFamily:
    description: str
    members: tuple[Identity, ...]
    parameterization: tuple[FamilyMember, ...]

    def sign_table(self) -> dict[int, int]:
        return {p.k: p.sign for p in self.parameterization}


def _solve(description, n, B, m, params, workers=None):
    # params: iterable of (k, tan numerator, sin numerator)
    params = list(params)

    def one(p):
        k, ta, sa = p
        lhs = [TrigTerm(1, Kind.TAN, ta, n), TrigTerm(B, Kind.SIN, sa, n)]
        sign = resolve_sign(lhs, 1, m)
        if sign is None:
            raise RuntimeError(f"{description}: no sign verifies for k={k}")
        return FamilyMember(k, (ta, n), (sa, n), sign), Identity.of(lhs, sign, m)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(one, params))

    members, seen = [], set()
    for _, ident in results:
        norm = ident.normalized()
        if norm not in seen:
            seen.add(norm)
            members.append(norm)
    members.sort(key=lambda ident: ident.sort_key())
    for ident in members:
        if not verify(ident).holds:
            raise RuntimeError(f"{description}: reduced member failed to verify")
    return IdentityFamily(description, tuple(members), tuple(p for p, _ in results))


def family_eleven(workers=None) -> IdentityFamily:
    """Case 2b = 2a - b: a = 3k*pi/11, b = 2k*pi/11, B = 4, C = +-sqrt(11)."""
    return _solve(
        "tan(3k pi/11) + 4 sin(2k pi/11) = +-sqrt(11), k not divisible by 11",
        11, 4, 11,
        ((k, 3 * k, 2 * k) for k in range(1, 11)),
        workers,
    )


# a = pi/9 * {1, 5, 6, 7, 11, 12}; none of these puts tan at a pole
_NINE_MULTIPLES = (1, 5, 6, 7, 11, 12)


def family_nine(workers=None) -> IdentityFamily:
    """Case a = b: tan a + 4 sin a = +-sqrt(3) with a in pi/9 * {1,5,6,7,11,12}."""
    assert all((2 * a) % 9 for a in _NINE_MULTIPLES)
    return _solve(
        "tan(a) + 4 sin(a) = +-sqrt(3), a in pi/9 * {1, 5, 6, 7, 11, 12}",
        9, 4, 3,
        ((a, a, a) for a in _NINE_MULTIPLES),
        workers,
    )
