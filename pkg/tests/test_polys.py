"""Univariate polynomial layer: arithmetic, gcd, factorization."""

import time
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symmetrizer.polys import (
    FACTOR_DEGREE_CAP,
    Poly,
    UnsupportedDegreeError,
    factor_rational,
    is_squarefree,
    poly_gcd,
    squarefree_part,
)


def P(*ascending) -> Poly:
    return Poly.from_coeffs([Q(c) for c in ascending])


small_polys = st.lists(st.integers(-9, 9), min_size=0, max_size=6).map(lambda c: P(*c))
nonzero_polys = small_polys.filter(lambda p: not p.is_zero)


class TestArithmetic:
    def test_construction_strips_trailing_zeros(self):
        assert P(1, 2, 0, 0) == P(1, 2)
        assert P(0).is_zero and P().is_zero
        assert P(0).degree == -1

    def test_str(self):
        assert str(P(-2, 0, 1)) == "t^2 - 2"
        assert str(P(1, -1)) == "-t + 1"
        assert str(P(0)) == "0"

    @given(small_polys, small_polys, small_polys)
    @settings(deadline=None)
    def test_ring_identities(self, a, b, c):
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a

    @given(small_polys, nonzero_polys)
    @settings(deadline=None)
    def test_divmod_identity(self, a, b):
        q, r = divmod(a, b)
        assert a == q * b + r
        assert r.is_zero or r.degree < b.degree

    @given(small_polys, small_polys)
    @settings(deadline=None)
    def test_derivative_product_rule(self, a, b):
        assert (a * b).derivative() == a.derivative() * b + a * b.derivative()

    def test_horner_evaluation(self):
        p = P(1, -3, 0, 2)  # 2t^3 - 3t + 1
        assert p(Q(2)) == 16 - 6 + 1
        assert p(Q(1, 2)) == Q(2, 8) - Q(3, 2) + 1

    def test_power(self):
        t = Poly.x()
        assert t**3 == P(0, 0, 0, 1)
        assert (t - Poly.constant(Q(1))) ** 2 == P(1, -2, 1)


class TestGcd:
    def test_known_gcd(self):
        a = P(-1, 0, 1)  # (t-1)(t+1)
        b = P(1, -2, 1)  # (t-1)^2
        assert poly_gcd(a, b) == P(-1, 1)

    def test_gcd_with_zero(self):
        a = P(0, 2)
        assert poly_gcd(a, Poly.zero()) == a.monic()
        assert poly_gcd(Poly.zero(), Poly.zero()).is_zero

    @given(nonzero_polys, nonzero_polys, nonzero_polys)
    @settings(deadline=None)
    def test_common_factor_detected(self, a, b, c):
        g = poly_gcd(a * c, b * c)
        assert c.divides(g)

    def test_squarefree_part(self):
        p = P(-1, 1) ** 2 * P(2, 1)  # (t-1)^2 (t+2)
        assert squarefree_part(p) == P(-1, 1) * P(2, 1)
        assert is_squarefree(squarefree_part(p))
        assert not is_squarefree(p)


# Hand-derived factorizations, frozen before the implementation ran.
FACTOR_CASES = [
    (P(-2, 0, 1), [(P(-2, 0, 1), 1)]),
    (P(6, 0, -5, 0, 1), [(P(-3, 0, 1), 1), (P(-2, 0, 1), 1)]),
    (P(-1, 0, 0, 1), [(P(-1, 1), 1), (P(1, 1, 1), 1)]),
    (P(1, 1, 1, 1, 1), [(P(1, 1, 1, 1, 1), 1)]),
    (P(1, 5, 6), [(P(Q(1, 3), 1), 1), (P(Q(1, 2), 1), 1)]),
    (
        P(-1, 0, 0, 0, 0, 0, 1),
        [(P(-1, 1), 1), (P(1, 1), 1), (P(1, -1, 1), 1), (P(1, 1, 1), 1)],
    ),
    (P(0, 0, 0, 1, -2, 1), [(P(-1, 1), 2), (P(0, 1), 3)]),
    (P(-1, -1, 0, 0, 1), [(P(-1, -1, 0, 0, 1), 1)]),
    (P(0, 0, -1, 1), [(P(-1, 1), 1), (P(0, 1), 2)]),
]


class TestFactorization:
    @pytest.mark.parametrize("p,expected", FACTOR_CASES)
    def test_known_factorizations(self, p, expected):
        assert factor_rational(p) == expected

    def test_factors_are_monic_and_multiply_back(self):
        p = P(4, 0, -5, 0, 1) * Q(3)  # 3(t^2-1)(t^2-4)
        factors = factor_rational(p)
        prod = Poly.constant(p.leading)
        for q, mult in factors:
            assert q.leading == 1
            prod = prod * q**mult
        assert prod == p

    @given(st.lists(st.integers(-5, 5), min_size=2, max_size=6))
    @settings(deadline=None, max_examples=60)
    def test_product_reconstruction(self, coeffs):
        p = P(*coeffs)
        if p.is_zero or p.degree == 0:
            return
        prod = Poly.constant(p.leading)
        for q, mult in factor_rational(p):
            assert is_squarefree(q)
            prod = prod * q**mult
        assert prod == p

    def test_degree_cap(self):
        p = Poly.x() ** 9 - Poly.x() - Poly.one()
        with pytest.raises(UnsupportedDegreeError):
            factor_rational(p)
        assert FACTOR_DEGREE_CAP == 8

    def test_cap_override(self):
        p = Poly.x() ** 9 - Poly.x() ** 8
        assert factor_rational(p, degree_cap=9) == [(P(-1, 1), 1), (P(0, 1), 8)]

    def test_constants_have_no_factors(self):
        assert factor_rational(Poly.constant(Q(7))) == []

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            factor_rational(Poly.zero())

    def test_large_coefficients_stay_fast(self):
        # minimal polynomial of a 4x4 semisimple candidate; coefficient
        # size must not drive the running time
        p = P(-629268480000000, 618537600000, 265617600, 30393, 1)
        start = time.perf_counter()
        factors = factor_rational(p)
        assert time.perf_counter() - start < 1.0
        assert factors == [
            (P(-4800000, 5625, 1), 1),
            (P(131097600, 24768, 1), 1),
        ]
