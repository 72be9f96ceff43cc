"""Search for identities ``tan(a pi/n) + sum c_j sin(b_j pi/n) = q sqrt(m)``.

Candidates are screened in double precision and only survivors are sent
to the exact verifier, so a reported identity is always proven.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .exact import CycloElem
from .gauss import gauss_sum, is_squarefree
from .trig import Kind, TrigTerm, i_tan_embed
from .verify import Identity, verify

__all__ = ["DiscoveryConfig", "DiscoveryReport", "discover", "residue_construct"]


@dataclass(frozen=True)
class DiscoveryConfig:
    denominators: Sequence[int]
    coeff_set: Sequence[Fraction] = (Fraction(4), Fraction(-4))
    max_sin_terms: int = 1
    surd_candidates: Sequence[int] = ()
    q_candidates: Sequence[Fraction] = (Fraction(1), Fraction(-1))
    # None means 1..n-1 for each denominator n
    tan_multiples: Sequence[int] | None = None
    sin_multiples: Sequence[int] | None = None
    prefilter_tol: float = 1e-9
    max_denominator: int = 51
    workers: int = 1

    def __post_init__(self):
        for n in self.denominators:
            if n < 1 or n % 2 == 0:
                raise ValueError(f"denominators must be odd, got {n}")
            if n > self.max_denominator:
                raise ValueError(f"denominator {n} exceeds bound {self.max_denominator}")
        if not 0 <= self.max_sin_terms <= 4:
            raise ValueError(f"max_sin_terms must be in 0..4, got {self.max_sin_terms}")
        for m in self.surd_candidates:
            if m % 2 == 0 or not is_squarefree(m):
                raise ValueError(f"surd candidates must be odd and squarefree, got {m}")
        object.__setattr__(self, "coeff_set", tuple(Fraction(c) for c in self.coeff_set))
        object.__setattr__(self, "q_candidates", tuple(Fraction(q) for q in self.q_candidates))


@dataclass
class DiscoveryReport:
    found: list[Identity] = field(default_factory=list)
    candidates_scanned: int = 0
    prefilter_pass: int = 0
    elapsed: float = 0.0


def _scan_block(cfg: DiscoveryConfig, n: int, a: int, targets) -> tuple[int, int, list[Identity]]:
    # one tan multiple: enumerate sin combinations lexicographically
    tan_val = math.tan(math.pi * a / n)
    if not math.isfinite(tan_val) or abs(tan_val) > 1e15:
        return 0, 0, []
    sins = list(cfg.sin_multiples) if cfg.sin_multiples is not None else list(range(1, n))
    sin_vals = {b: math.sin(math.pi * b / n) for b in sins}
    scanned = passed = 0
    hits = []
    for k in range(cfg.max_sin_terms + 1):
        for bs in combinations(sins, k):
            for cs in product(cfg.coeff_set, repeat=k):
                lhs_val = tan_val + math.fsum(float(c) * sin_vals[b] for b, c in zip(bs, cs))
                for q, m, rhs_val in targets:
                    scanned += 1
                    if abs(lhs_val - rhs_val) >= cfg.prefilter_tol:
                        continue
                    passed += 1
                    terms = [TrigTerm(1, Kind.TAN, a, n)]
                    terms += [TrigTerm(c, Kind.SIN, b, n) for b, c in zip(bs, cs)]
                    ident = Identity.of(terms, q, m)
                    if verify(ident).holds:
                        hits.append(ident)
    return scanned, passed, hits


def discover(cfg: DiscoveryConfig) -> DiscoveryReport:
    """Enumerate one tan term plus up to ``max_sin_terms`` sin terms per
    denominator and report every exactly verified identity, deduplicated
    up to normalization."""
    start = time.perf_counter()
    targets = [(q, m, float(q) * math.sqrt(m)) for m in cfg.surd_candidates for q in cfg.q_candidates]
    blocks = []
    for n in cfg.denominators:
        tans = list(cfg.tan_multiples) if cfg.tan_multiples is not None else list(range(1, n))
        blocks.extend((n, a) for a in tans if (2 * a) % (2 * n) != n)

    def run(block):
        return _scan_block(cfg, block[0], block[1], targets)

    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(run, blocks))
    else:
        results = [run(b) for b in blocks]

    report = DiscoveryReport()
    seen = {}
    for scanned, passed, hits in results:
        report.candidates_scanned += scanned
        report.prefilter_pass += passed
        for ident in hits:
            norm = ident.normalized()
            if norm.lhs and norm not in seen:
                seen[norm] = norm
    report.found = sorted(seen.values(), key=lambda i: i.sort_key())
    report.elapsed = time.perf_counter() - start
    return report


def _odd_part_coefficients(u: CycloElem) -> list[Fraction]:
    """Coefficients of ``u`` on the basis zeta**1 .. zeta**(p-1), p prime."""
    c0 = u.coeffs[0]
    out = [c - c0 for c in u.coeffs[1:]]
    out.append(-c0)
    return out


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def residue_construct(n: int, allowed=(4,)) -> list[Identity]:
    """For a prime ``n = 3 mod 4`` solve, for each tan multiple, for the sin
    combination that completes ``i tan(a pi/n)`` to ``+-G_n = +-i sqrt(n)``.

    In Q(zeta_n) an element that is odd under conjugation is a unique
    combination of ``zeta**e - zeta**-e``, and each of those is a rational
    multiple of some ``i sin(b pi/n)``, so no search over coefficients is
    needed.  Only combinations whose nonzero coefficients have absolute
    value in ``allowed`` are kept.
    """
    if not _is_prime(n) or n % 4 != 3:
        raise ValueError(f"residue_construct needs a prime n = 3 mod 4, got {n}")
    allowed = {Fraction(c) for c in allowed}
    g = gauss_sum(n)
    out = []
    for a in range(1, n):
        t = i_tan_embed(a, n)
        for sign in (1, -1):
            coeffs = _odd_part_coefficients(g.scale(sign) - t)
            terms = [TrigTerm(1, Kind.TAN, a, n)]
            ok = True
            for e in range(1, (n - 1) // 2 + 1):
                d = coeffs[e - 1]
                if d != -coeffs[n - e - 1]:
                    ok = False
                    break
                if not d:
                    continue
                # i sin(b pi/n) = (-1)**b (zeta**e - zeta**-e)/2 with b = 2e mod n
                b = (2 * e) % n
                c = 2 * d * (-1 if b % 2 else 1)
                if abs(c) not in allowed:
                    ok = False
                    break
                terms.append(TrigTerm(c, Kind.SIN, b, n))
            if not ok:
                continue
            ident = Identity.of(terms, sign, n)
            if verify(ident).holds:
                out.append(ident.normalized())
    unique = []
    for ident in out:
        if ident not in unique:
            unique.append(ident)
    return sorted(unique, key=lambda i: i.sort_key())
