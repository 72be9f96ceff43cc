import math

import pytest

from cyclotrig.exact import CycloElem, zeta
from cyclotrig.trig import (
    Kind,
    TrigTerm,
    canonicalize_term,
    cos_embed,
    first_quadrant,
    i_sin_embed,
    i_tan_embed,
)

ODD_N = range(1, 52, 2)


def poly11(coeffs):
    """sum c_k x^k in Q(zeta_11) from a {k: c} mapping."""
    out = CycloElem.zero(11)
    for k, c in coeffs.items():
        out = out + zeta(11, k).scale(c)
    return out


class TestCanonicalizeTerm:
    def test_examples(self):
        assert canonicalize_term(TrigTerm(1, Kind.TAN, 14, 11)) == TrigTerm(1, Kind.TAN, 3, 11)
        assert canonicalize_term(TrigTerm(4, Kind.SIN, 11, 11)).coeff == 0
        with pytest.raises(ValueError):
            canonicalize_term(TrigTerm(1, Kind.TAN, 1, 2))

    def test_ranges_and_value(self):
        for n in (1, 2, 3, 7, 12):
            for a in range(-3 * n, 3 * n):
                for kind in Kind:
                    t = TrigTerm(3, kind, a, n)
                    if kind is Kind.TAN and (2 * a) % (2 * n) == n:
                        continue
                    c = canonicalize_term(t)
                    bound = n if kind is Kind.TAN else 2 * n
                    assert 0 <= c.a < bound
                    assert abs(c.value() - t.value()) < 1e-9
                    assert canonicalize_term(c) == c

    def test_first_quadrant(self):
        for n in (3, 9, 11):
            for a in range(0, 2 * n):
                for kind in Kind:
                    t = TrigTerm(1, kind, a, n)
                    if kind is Kind.TAN and (2 * a) % (2 * n) == n:
                        continue
                    f = first_quadrant(t)
                    assert 0 <= 2 * f.a <= n
                    assert abs(f.value() - t.value()) < 1e-9


class TestEmbeddings:
    def test_i_tan_examples(self):
        expected = poly11({1: -1, 2: -1, 3: 1, 4: 1, 5: 1, 6: -1, 7: -1, 8: -1, 9: 1, 10: 1})
        assert i_tan_embed(3, 11) == expected
        assert i_tan_embed(0, 11).is_zero()
        assert i_tan_embed(14, 11) == i_tan_embed(3, 11)

    def test_i_sin_examples(self):
        assert i_sin_embed(2, 11) == poly11({1: 1, 10: -1}) / 2
        assert i_sin_embed(3, 11) == poly11({4: 1, 7: -1}) / 2
        assert i_sin_embed(0, 11).is_zero()

    def test_cos_examples(self):
        assert cos_embed(0, 3) == 1
        assert cos_embed(2, 3) == (zeta(3) + zeta(3, 2)) / 2
        assert cos_embed(2, 3) == CycloElem.from_rational(-1, 3) / 2
        assert cos_embed(1, 11) == -(zeta(11, 6) + zeta(11, 5)) / 2

    def test_even_denominator_rejected(self):
        for f in (i_tan_embed, i_sin_embed, cos_embed):
            with pytest.raises(ValueError):
                f(1, 4)

    @pytest.mark.parametrize("n", ODD_N)
    def test_numeric_agreement(self, n):
        for a in range(0, 2 * n):
            s = i_sin_embed(a, n).eval_numeric()
            assert abs(s - 1j * math.sin(a * math.pi / n)) < 1e-10
            c = cos_embed(a, n).eval_numeric()
            assert abs(c - math.cos(a * math.pi / n)) < 1e-10
        for a in range(0, n):
            t = i_tan_embed(a, n).eval_numeric()
            assert abs(t - 1j * math.tan(a * math.pi / n)) < 1e-10 * max(1, abs(math.tan(a * math.pi / n)))

    @pytest.mark.parametrize("n", ODD_N)
    def test_odd_symmetries(self, n):
        for a in range(1, n):
            assert (i_tan_embed(a, n) + i_tan_embed(n - a, n)).is_zero()
        for a in range(0, 2 * n):
            assert i_sin_embed(2 * n - a, n) == -i_sin_embed(a, n)
