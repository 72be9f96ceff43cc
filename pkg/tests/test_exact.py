import cmath
import math
import random
import threading
from fractions import Fraction

import mpmath
import pytest

from cyclotrig.exact import (
    CycloElem,
    canonicalize,
    cyclotomic_polynomial,
    embed,
    eval_numeric,
    inverse,
    totient,
    zeta,
)
from helpers import random_elem, random_nonzero


def phi_by_roots(n):
    """Oracle: expand prod (x - zeta^k) over primitive k numerically and round."""
    poly = [complex(1)]
    for k in range(1, n + 1):
        if math.gcd(k, n) != 1:
            continue
        r = cmath.exp(2j * math.pi * k / n)
        new = [0j] * (len(poly) + 1)
        for i, c in enumerate(poly):
            new[i + 1] += c
            new[i] -= r * c
        poly = new
    return tuple(round(c.real) for c in poly)


class TestCyclotomicPolynomial:
    def test_small_cases(self):
        assert cyclotomic_polynomial(1) == (-1, 1)
        assert cyclotomic_polynomial(11) == (1,) * 11
        assert cyclotomic_polynomial(9) == (1, 0, 0, 1, 0, 0, 1)

    @pytest.mark.parametrize("n", range(1, 61))
    def test_matches_root_product(self, n):
        assert cyclotomic_polynomial(n) == phi_by_roots(n)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            cyclotomic_polynomial(0)

    def test_concurrent_calls_agree(self):
        out = {}

        def work(i):
            out[i] = [cyclotomic_polynomial(n) for n in range(300, 320)]

        threads = [threading.Thread(target=work, args=(i,)) for i in range(4)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert all(v == out[0] for v in out.values())


class TestCanonicalize:
    def test_examples(self):
        assert canonicalize([1, 1, 1], 3).is_zero()
        assert canonicalize([1] * 11, 11).is_zero()
        assert canonicalize([0, 0, 1], 4) == -1

    def test_length_is_totient(self):
        for n in range(1, 40):
            assert len(canonicalize([1, 2, 3], n).coeffs) == totient(n)

    def test_idempotent_and_ring_map(self):
        rng = random.Random(1)
        for _ in range(200):
            n = rng.randint(3, 60)
            p = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(rng.randint(1, 2 * n))]
            q = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(rng.randint(1, 2 * n))]
            cp = canonicalize(p, n)
            assert canonicalize(cp.coeffs, n) == cp
            pq = [Fraction(0)] * (len(p) + len(q))
            for i, a in enumerate(p):
                for j, b in enumerate(q):
                    pq[i + j] += a * b
            assert canonicalize(pq, n) == cp * canonicalize(q, n)

    @pytest.mark.parametrize("n", range(2, 201))
    def test_sum_of_all_roots_vanishes(self, n):
        assert canonicalize([1] * n, n).is_zero()


class TestArithmetic:
    def test_examples(self):
        x = zeta(11)
        assert x * x**10 == 1
        lhs = zeta(11, 3) + 1
        rhs = sum((zeta(11, e) * s for e, s in [(0, 1), (3, -1), (6, 1), (9, -1), (12, 1)]), CycloElem.zero(11))
        assert lhs * rhs == 1 + zeta(11, 4)
        u = random_elem(random.Random(0), 11)
        assert (u + (-u)).is_zero()

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            zeta(5) + zeta(7)
        with pytest.raises(ValueError):
            zeta(5) * zeta(7)

    def test_immutable(self):
        x = zeta(5)
        with pytest.raises(AttributeError):
            x.order = 7

    def test_constructor_checks_length(self):
        with pytest.raises(ValueError):
            CycloElem(5, [1, 2])

    def test_field_axioms(self):
        rng = random.Random(2)
        for _ in range(200):
            n = rng.randint(3, 60)
            u, v, w = (random_elem(rng, n) for _ in range(3))
            assert (u + v) + w == u + (v + w)
            assert (u * v) * w == u * (v * w)
            assert u + v == v + u
            assert u * v == v * u
            assert u * (v + w) == u * v + u * w

    def test_inverse_random(self):
        rng = random.Random(3)
        for _ in range(200):
            n = rng.randint(3, 60)
            u = random_nonzero(rng, n)
            assert u * inverse(u) == 1


class TestInverse:
    def test_examples(self):
        assert inverse(zeta(3)) == zeta(3, 2)
        assert inverse(zeta(3)) == CycloElem(3, [-1, -1])
        inv = inverse(1 + zeta(11, 3))
        # telescoping: (1 + x^3) * sum (-1)^j x^(3j) = 1 + x^33 = 2
        expected = sum(
            (zeta(11, 3 * j).scale((-1) ** j) for j in range(11)), CycloElem.zero(11)
        ).scale(Fraction(1, 2))
        assert (1 + zeta(11, 3)) * expected == 1
        assert inv == expected

    def test_zero(self):
        with pytest.raises(ZeroDivisionError):
            inverse(CycloElem.zero(7))

    def test_division(self):
        x = zeta(7)
        assert (x / x) == 1
        assert (1 / x) == x**6
        assert x ** -1 == x**6


class TestEmbed:
    def test_examples(self):
        assert embed(zeta(11), 44) == zeta(44, 4)
        assert embed(zeta(11), 44).coeffs == zeta(44, 4).coeffs
        assert embed(CycloElem.zero(7), 21).is_zero()
        x22 = embed(zeta(11), 22)
        assert x22 * x22 == embed(zeta(11, 2), 22)

    def test_identity_embedding(self):
        u = random_elem(random.Random(4), 9)
        assert embed(u, 9) is u or embed(u, 9) == u

    def test_non_divisor(self):
        with pytest.raises(ValueError):
            embed(zeta(5), 12)

    def test_homomorphism_and_injective(self):
        rng = random.Random(5)
        for _ in range(200):
            n = rng.randint(3, 30)
            N = n * rng.randint(2, 4)
            u, v = random_elem(rng, n), random_elem(rng, n)
            assert embed(u + v, N) == embed(u, N) + embed(v, N)
            assert embed(u * v, N) == embed(u, N) * embed(v, N)
            assert (embed(u, N).coeffs == embed(v, N).coeffs) == (u.coeffs == v.coeffs)

    def test_cross_order_equality(self):
        assert zeta(3) == zeta(6, 2)
        assert zeta(3) != zeta(6, 1)


class TestEvalNumeric:
    def test_examples(self):
        z = eval_numeric(zeta(11))
        assert abs(z - complex(math.cos(2 * math.pi / 11), math.sin(2 * math.pi / 11))) < 1e-12
        assert abs(z - (0.84125 + 0.54064j)) < 1e-5
        assert eval_numeric(CycloElem.zero(11)) == 0
        g = 1 + 2 * sum((zeta(11, k) for k in (1, 3, 4, 5, 9)), CycloElem.zero(11))
        assert abs(eval_numeric(g) - 1j * math.sqrt(11)) < 1e-10

    def test_accuracy_large_coefficients(self):
        rng = random.Random(6)
        for n in (97, 331, 1000):
            for scale in (10, 10**6):
                coeffs = [rng.randint(-scale, scale) for _ in range(totient(n))]
                with mpmath.workdps(40):
                    ref = mpmath.fsum(
                        c * mpmath.expjpi(mpmath.mpf(2 * k) / n) for k, c in enumerate(coeffs)
                    )
                assert abs(eval_numeric(CycloElem(n, coeffs)) - complex(ref)) < 1e-10

    def test_soundness_bridge(self):
        rng = random.Random(7)
        distinct = separated = 0
        for _ in range(500):
            n = rng.randint(3, 60)
            u, v = random_elem(rng, n), random_elem(rng, n)
            if u == v:
                continue
            distinct += 1
            separated += abs(eval_numeric(u) - eval_numeric(v)) > 1e-6
        assert separated >= 0.99 * distinct
