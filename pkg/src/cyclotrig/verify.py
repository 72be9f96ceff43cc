"""Exact verification of identities ``sum of trig terms = q*sqrt(m)``.

Both sides are multiplied by ``i`` so that every tan and sin term becomes
an element of a cyclotomic field; the identity holds exactly when the
difference is zero in Q(zeta_L), ``L = lcm(4, denominators, m)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import CycloElem
from .gauss import SurdTarget, sqrt_embed
from .trig import Kind, TrigTerm, canonicalize_term, cos_embed, first_quadrant, i_sin_embed, i_tan_embed

__all__ = ["Identity", "VerifyResult", "verify", "resolve_sign", "field_order"]

_KIND_ORDER = {Kind.TAN: 0, Kind.SIN: 1, Kind.COS: 2}


def _clean(terms: Iterable[TrigTerm]) -> tuple[TrigTerm, ...]:
    out = []
    for t in terms:
        t = canonicalize_term(t)
        if t.coeff:
            out.append(t)
    return tuple(out)


@dataclass(frozen=True)
class Identity:
    """Claim ``sum(lhs) = rhs``.  Terms are stored canonicalized, zero
    terms dropped."""

    lhs: tuple[TrigTerm, ...]
    rhs: SurdTarget

    def __post_init__(self):
        object.__setattr__(self, "lhs", _clean(self.lhs))

    @classmethod
    def of(cls, terms: Iterable[TrigTerm], q=1, m: int = 1) -> "Identity":
        return cls(tuple(terms), SurdTarget(Fraction(q), m))

    def lhs_value(self) -> float:
        return math.fsum(t.value() for t in self.lhs)

    def numeric_residual(self) -> float:
        return abs(self.lhs_value() - self.rhs.value())

    def normalized(self) -> "Identity":
        """Canonical representative for deduplication.

        Angles go to [0, pi/2] over the smallest common denominator, like
        terms are merged, terms are sorted by (kind, angle) and everything is divided
        by the leading coefficient, which is the tan coefficient whenever a
        tan term is present.
        """
        if not self.lhs:
            return Identity((), SurdTarget(self.rhs.q, self.rhs.m))
        N = math.lcm(*(t.n for t in self.lhs))
        merged: dict[tuple[Kind, int], Fraction] = {}
        for t in self.lhs:
            t = first_quadrant(t.rescaled(N))
            if t.coeff:
                key = (t.kind, t.a)
                merged[key] = merged.get(key, Fraction(0)) + t.coeff
        keys = sorted((k for k, c in merged.items() if c), key=lambda k: (_KIND_ORDER[k[0]], k[1]))
        if not keys:
            return Identity((), SurdTarget(self.rhs.q, self.rhs.m))
        lead = merged[keys[0]]
        # smallest denominator that still writes every angle as an integer multiple
        M = math.lcm(*(N // math.gcd(a, N) for _, a in keys))
        terms = tuple(TrigTerm(merged[k] / lead, k[0], k[1] * M // N, M) for k in keys)
        return Identity(terms, SurdTarget(self.rhs.q / lead, self.rhs.m))

    def equivalent(self, other: "Identity") -> bool:
        return self.normalized() == other.normalized()

    def sort_key(self):
        return (
            tuple((_KIND_ORDER[t.kind], t.n, t.a, t.coeff) for t in self.lhs),
            self.rhs.m,
            self.rhs.q,
        )


@dataclass(frozen=True)
class VerifyResult:
    holds: bool
    field_order: int
    residual: CycloElem
    numeric_residual: float


def field_order(terms: Sequence[TrigTerm], m: int) -> int:
    return math.lcm(4, m, *(t.n for t in terms))


def _i_lhs(terms: Sequence[TrigTerm], L: int) -> CycloElem:
    acc = CycloElem.zero(L)
    for t in terms:
        if t.kind is Kind.TAN:
            e = i_tan_embed(t.a, t.n).embed(L)
        elif t.kind is Kind.SIN:
            e = i_sin_embed(t.a, t.n).embed(L)
        else:
            e = cos_embed(t.a, t.n).embed(L).shift(L // 4)
        acc = acc + e.scale(t.coeff)
    return acc


def _i_surd(m: int, L: int) -> CycloElem:
    return sqrt_embed(m).embed(L).shift(L // 4)


def verify(identity: Identity) -> VerifyResult:
    """Decide ``identity`` exactly.  The residual is ``i*(lhs - rhs)`` in
    Q(zeta_L) and is zero exactly when the identity holds."""
    rhs = identity.rhs
    L = field_order(identity.lhs, rhs.m)
    residual = _i_lhs(identity.lhs, L) - _i_surd(rhs.m, L).scale(rhs.q)
    return VerifyResult(
        holds=residual.is_zero(),
        field_order=L,
        residual=residual,
        numeric_residual=identity.numeric_residual(),
    )


def resolve_sign(lhs: Sequence[TrigTerm], q_abs, m: int) -> int | None:
    """Return +1 or -1 if ``sum(lhs) = +-q_abs*sqrt(m)`` holds exactly for
    that sign, else None."""
    q_abs = Fraction(q_abs)
    if q_abs <= 0:
        raise ValueError(f"q_abs must be positive, got {q_abs}")
    terms = _clean(lhs)
    L = field_order(terms, m)
    left = _i_lhs(terms, L)
    right = _i_surd(m, L).scale(q_abs)
    if left == right:
        return 1
    if left == -right:
        return -1
    return None
