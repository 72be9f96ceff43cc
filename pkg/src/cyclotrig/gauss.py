"""Quadratic Gauss sums, quadratic residues and exact square roots.

For odd squarefree ``m`` the square root lives in Q(zeta_{4m}): the Gauss
sum ``G_m`` equals ``sqrt(m)`` when m = 1 mod 4 and ``i*sqrt(m)`` when
m = 3 mod 4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .exact import CycloElem, canonicalize, zeta

__all__ = [
    "GaussClass",
    "GaussValue",
    "SurdTarget",
    "gauss_sum",
    "gauss_closed_form",
    "gauss_value",
    "quadratic_residues",
    "sqrt_embed",
    "squarefree_decompose",
    "is_squarefree",
]


def squarefree_decompose(k: int) -> tuple[int, int]:
    """Write ``k = s**2 * m`` with ``m`` squarefree; returns ``(s, m)``."""
    if k < 0:
        raise ValueError(f"expected a nonnegative integer, got {k}")
    if k == 0:
        return 0, 1
    s, m = 1, 1
    p = 2
    while p * p <= k:
        e = 0
        while k % p == 0:
            k //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            m *= p
        p += 1
    return s, m * k


def is_squarefree(k: int) -> bool:
    return k >= 1 and squarefree_decompose(k)[0] == 1


@dataclass(frozen=True)
class SurdTarget:
    """``q * sqrt(m)`` with ``m`` squarefree (``m = 1`` for rationals)."""

    q: Fraction
    m: int = 1

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        if not is_squarefree(self.m):
            raise ValueError(f"surd radicand must be a positive squarefree integer, got {self.m}")
        if self.q == 0:
            object.__setattr__(self, "m", 1)

    @classmethod
    def sqrt_of(cls, r, q=1) -> "SurdTarget":
        """``q * sqrt(r)`` for a nonnegative rational ``r``, square part pulled out."""
        r = Fraction(r)
        if r < 0:
            raise ValueError(f"square root of a negative number: {r}")
        if r == 0:
            return cls(Fraction(0), 1)
        # sqrt(a/b) = sqrt(a*b)/b
        s, m = squarefree_decompose(r.numerator * r.denominator)
        return cls(Fraction(q) * Fraction(s, r.denominator), m)

    def value(self) -> float:
        return float(self.q) * math.sqrt(self.m)

    def __neg__(self):
        return SurdTarget(-self.q, self.m)


class GaussClass(str, Enum):
    ONE_PLUS_I = "(1+i)sqrt(n)"
    REAL = "sqrt(n)"
    ZERO = "0"
    IMAGINARY = "i sqrt(n)"

    @classmethod
    def of(cls, n: int) -> "GaussClass":
        return (cls.ONE_PLUS_I, cls.REAL, cls.ZERO, cls.IMAGINARY)[n % 4]


@dataclass(frozen=True)
class GaussValue:
    n: int
    sum: CycloElem
    closed_class: GaussClass


def gauss_sum(n: int) -> CycloElem:
    """``sum_{j<n} zeta_n**(j*j)`` by direct summation."""
    if n < 1:
        raise ValueError(f"Gauss sum needs n >= 1, got {n}")
    counts = [0] * n
    for j in range(n):
        counts[j * j % n] += 1
    return canonicalize(counts, n)


def gauss_value(n: int) -> GaussValue:
    return GaussValue(n, gauss_sum(n), GaussClass.of(n))


def quadratic_residues(n: int) -> list[int]:
    """Sorted nonzero squares modulo ``n``."""
    if n < 2:
        raise ValueError(f"quadratic residues need n >= 2, got {n}")
    return sorted({j * j % n for j in range(1, n)} - {0})


def sqrt_embed(m: int) -> CycloElem:
    """Positive square root of an odd squarefree ``m`` in Q(zeta_{4m})."""
    if m < 1 or m % 2 == 0 or not is_squarefree(m):
        raise ValueError(f"unsupported surd: sqrt({m}) needs m odd and squarefree")
    N = 4 * m
    if m == 1:
        return CycloElem.one(N)
    g = gauss_sum(m).embed(N)
    if m % 4 == 1:
        return g
    # G_m = i*sqrt(m), and -i = zeta_N**(3N/4)
    return g.shift(3 * m)


def _sqrt_squarefree(m: int, N: int) -> CycloElem:
    # sqrt(m) for squarefree m (even allowed) inside Q(zeta_N)
    if m % 2:
        return sqrt_embed(m).embed(N)
    # sqrt(2) = zeta_8 + zeta_8**7
    root2 = (zeta(8, 1) + zeta(8, 7)).embed(N)
    return root2 * sqrt_embed(m // 2).embed(N)


def gauss_closed_form(n: int) -> CycloElem:
    """Closed form of ``G_n`` as an element of Q(zeta_lcm(4, n))."""
    if n < 1:
        raise ValueError(f"Gauss sum needs n >= 1, got {n}")
    N = math.lcm(4, n)
    cls = GaussClass.of(n)
    if cls is GaussClass.ZERO:
        return CycloElem.zero(N)
    s, m = squarefree_decompose(n)
    root = _sqrt_squarefree(m, N).scale(s)
    if cls is GaussClass.REAL:
        return root
    i_root = root.shift(N // 4)
    if cls is GaussClass.IMAGINARY:
        return i_root
    return root + i_root
