"""Named q-objects against independent oracles."""

import math
import random
from fractions import Fraction as F

import pytest

from qident.blocks import (
    BETA,
    EtaQuotient,
    PochSpec,
    ThetaSpec,
    b_table_series,
    b_value,
    eta,
    eta_quotient,
    gamma_k,
    h_series,
    i_series,
    phi,
    pochhammer,
    psi,
    sine_ratio_table,
    theta1_normalized,
    theta_product,
    theta_sum,
)
from qident.field import ONE, SQRT2, AlgebraicNumber as A
from qident.series import PuiseuxSeries as P

QQ = PochSpec(-1, 1, 1)  # (q; q)_inf


def pentagonal_numbers(limit):
    """Generalized pentagonal numbers k(3k-1)/2 below `limit` with their
    pentagonal-number-theorem signs (-1)^k, by brute force."""
    out = {0: 1}
    k = 1
    while k * (3 * k - 1) // 2 < limit:
        sign = -1 if k % 2 else 1
        for n in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if n < limit:
                out[n] = sign
        k += 1
    return out


class TestPochhammer:
    def test_euler_pentagonal_to_order_100(self):
        s = pochhammer(QQ, 100)
        expected = pentagonal_numbers(100)
        got = {int(e): c for e, c in s.items()}
        assert set(got) == set(expected)
        for n, c in got.items():
            assert c in (A(1), A(-1))
            assert c == A(expected[n])

    def test_euler_product_identity(self):
        # (-q;q)(q;q) = (q^2;q^2), a cross-check between distinct specs
        lhs = pochhammer(PochSpec(1, 1, 1), 20) * pochhammer(QQ, 20)
        rhs = pochhammer(PochSpec(-1, 2, 2), 20)
        assert lhs.first_mismatch(rhs, 20) is None

    def test_half_integer_grid(self):
        s = pochhammer(PochSpec(-1, F(1, 2), F(1, 2)), 6)
        assert all(e.denominator in (1, 2) for e, _ in s.items())
        assert s.coefficient(F(1, 2)) == A(-1)

    def test_order_at_most_zero_is_empty(self):
        assert not pochhammer(QQ, 0)

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            PochSpec(2, 1, 1)
        with pytest.raises(ValueError):
            PochSpec(-1, 0, 1)


class TestTheta:
    def test_phi_squares(self):
        s = theta_sum(ThetaSpec(1, 1, 1, 1), 10)
        assert s == P({0: 1, 1: 2, 4: 2, 9: 2}, 10)

    def test_psi_triangular(self):
        s = theta_sum(ThetaSpec(1, 1, 1, 3), 11)
        assert s == P({0: 1, 1: 1, 3: 1, 6: 1, 10: 1}, 11)

    def test_enumeration_oracle(self):
        # brute-force bilateral enumeration over j in [-6, 6]
        spec = ThetaSpec(-1, -1, 2, 14)
        acc = {}
        for j in range(-6, 7):
            t1, t2 = j * (j + 1) // 2, j * (j - 1) // 2
            e = 2 * t1 + 14 * t2
            if e < 40:
                acc[e] = acc.get(e, 0) + (-1) ** (t1 + t2)
        s = theta_sum(spec, 40)
        assert {int(e): c for e, c in s.items()} == {
            n: A(c) for n, c in acc.items() if c
        }
        assert s.coefficient(0) == ONE
        assert s.coefficient(2) == A(-1)
        assert s.coefficient(14) == A(-1)

    @pytest.mark.parametrize(
        "spec",
        [
            ThetaSpec(1, 1, 1, 1),
            ThetaSpec(1, 1, 1, 3),
            ThetaSpec(-1, -1, 1, 7),
            ThetaSpec(-1, 1, 2, 3),   # mixed signs: alternating base
            ThetaSpec(1, -1, F(1, 2), F(5, 2)),
        ],
    )
    def test_sum_equals_product(self, spec):
        assert theta_sum(spec, 24).first_mismatch(
            theta_product(spec, 24), 24
        ) is None

    def test_product_form_as_explicit_pochhammers(self):
        # f(-q,-q^7) = (q;q^8)(q^7;q^8)(q^8;q^8)
        lhs = theta_product(ThetaSpec(-1, -1, 1, 7), 30)
        rhs = (
            pochhammer(PochSpec(-1, 1, 8), 30)
            * pochhammer(PochSpec(-1, 7, 8), 30)
            * pochhammer(PochSpec(-1, 8, 8), 30)
        )
        assert lhs.first_mismatch(rhs, 30) is None
        # f(-q^2,-q^2) = (q^2;q^4)^2 (q^4;q^4)
        lhs2 = theta_product(ThetaSpec(-1, -1, 2, 2), 30)
        rhs2 = (
            pochhammer(PochSpec(-1, 2, 4), 30) ** 2
            * pochhammer(PochSpec(-1, 4, 4), 30)
        )
        assert lhs2.first_mismatch(rhs2, 30) is None


class TestLemmaInstances:
    """The four theta rewriting rules on seeded monomial instances.

    Instances are (gamma, delta) = (q^a, q^b) with 0 < a < b so that every
    derived argument (delta/gamma included) keeps a positive exponent.
    """

    SEED = 20240817

    def instances(self, n=10):
        rng = random.Random(self.SEED)
        grid = [F(k, 2) for k in range(1, 17)]
        out = []
        while len(out) < n:
            a, b = rng.choice(grid), rng.choice(grid)
            if a < b:
                out.append((a, b))
        return out

    def f(self, s1, a, s2, b, order):
        return theta_product(ThetaSpec(s1, s2, F(a), F(b)), order)

    @pytest.mark.parametrize("idx", range(10))
    def test_f1_factorization(self, idx):
        a, b = self.instances()[idx]
        lhs = self.f(1, a, 1, a + 2 * b, 24) * self.f(1, b, 1, 2 * a + b, 24)
        rhs = self.f(1, a, 1, b, 24) * psi(a + b, 24)
        assert lhs.first_mismatch(rhs, 24) is None

    @pytest.mark.parametrize("idx", range(10))
    def test_f2_sum(self, idx):
        a, b = self.instances()[idx]
        lhs = self.f(1, a, 1, b, 24) + self.f(-1, a, -1, b, 24)
        rhs = self.f(1, 3 * a + b, 1, a + 3 * b, 24) * 2
        assert lhs.first_mismatch(rhs, 24) is None

    @pytest.mark.parametrize("idx", range(10))
    def test_f3_difference(self, idx):
        a, b = self.instances()[idx]
        lhs = self.f(1, a, 1, b, 24) - self.f(-1, a, -1, b, 24)
        rhs = self.f(1, b - a, 1, 5 * a + 3 * b, 24).shift(a) * 2
        assert lhs.first_mismatch(rhs, 24) is None

    @pytest.mark.parametrize("idx", range(10))
    def test_f4_negative_split(self, idx):
        a, b = self.instances()[idx]
        lhs = self.f(-1, a, -1, b, 24)
        rhs = self.f(1, 3 * a + b, 1, a + 3 * b, 24) - self.f(
            1, b - a, 1, 5 * a + 3 * b, 24
        ).shift(a)
        assert lhs.first_mismatch(rhs, 24) is None


class TestEta:
    def test_prod_quotient_leading(self):
        # q^{-1/4} eta(8t)/eta(2t) = (q^8;q^8)/(q^2;q^2), unit leading term
        s = eta_quotient(EtaQuotient(((F(8), F(1)), (F(2), F(-1)))), 20)
        s = s.shift(F(-1, 4))
        assert s.leading() == (F(0), ONE)
        rhs = pochhammer(PochSpec(-1, 8, 8), 20) / pochhammer(PochSpec(-1, 2, 2), 20)
        assert s.first_mismatch(rhs, 18) is None

    def test_leading_exponent_arithmetic(self):
        s = eta_quotient(EtaQuotient(((F(16), F(4)), (F(8), F(-2)))), 10)
        assert s.leading()[0] == 2  # 4*16/24 - 2*8/24

    def test_half_multiplier(self):
        assert eta(F(1, 2), 5).leading()[0] == F(1, 48)

    def test_fractional_power_consistency(self):
        # eta^{1/2}(4t)^2 == eta(4t)^1 up to truncation
        half = eta_quotient(EtaQuotient(((F(4), F(1, 2)),)), 12)
        whole = eta(4, 12)
        assert (half * half).first_mismatch(whole, 12) is None


class TestGamma:
    def test_gamma2_is_poch(self):
        lhs = gamma_k(2, 24)
        rhs = pochhammer(PochSpec(1, 2, 2), 24)
        assert lhs.first_mismatch(rhs, 24) is None

    def test_gamma1_first_terms(self):
        s = gamma_k(1, 10)
        assert s.coefficient(0) == ONE
        assert s.coefficient(1) == -SQRT2
        assert s.coefficient(2) == A(1, -1)

    def test_product_collapses(self):
        lhs = gamma_k(1, 24) * gamma_k(2, 24) * gamma_k(3, 24)
        rhs = pochhammer(PochSpec(-1, 8, 8), 24) / pochhammer(PochSpec(-1, 2, 2), 24)
        assert lhs.first_mismatch(rhs, 24) is None

    def test_scaled_argument(self):
        direct = gamma_k(1, 10, r=F(1, 2))
        via_subst = gamma_k(1, 20).substitute(F(1, 2))
        assert direct.first_mismatch(via_subst, 10) is None


class TestSineRatios:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_float_oracle(self, k):
        table = sine_ratio_table(k, 13)
        assert table.values[0] == ONE
        z = k * math.pi / 8
        for j, v in enumerate(table.values):
            assert abs(float(v) - math.sin((2 * j + 1) * z) / math.sin(z)) < 1e-10

    def test_k1_second_entry(self):
        assert sine_ratio_table(1, 2).values[1] == A(1, 1)

    def test_b1_at_residue_one(self):
        for l in range(4):
            assert b_value(1, 8 * l + 1) == A(0, 2)

    def test_b2_at_zero(self):
        assert b_value(2, 0) == A(0, 2)

    def test_sine_product_identity(self):
        prod = (
            math.sin(math.pi / 8)
            * math.sin(2 * math.pi / 8)
            * math.sin(3 * math.pi / 8)
        )
        assert abs(prod - 0.25) <= 1e-12

    def test_b_table_series_support(self):
        s = b_table_series(1, 32)
        assert all(e.denominator == 1 for e, _ in s.items())
        assert s.coefficient(0) == A(0)
        assert s.coefficient(1) == A(0, 2)


class TestTheta1Normalized:
    def test_k2_sign_cycle(self):
        # ratios at 2pi/8 cycle 1, 1, -1, -1, so the alternating sum has
        # coefficients +1, -1, -1, +1 at the triangular exponents
        s = theta1_normalized(2, 16)
        assert [s.coefficient(e) for e in (0, 1, 3, 6, 10)] == [
            ONE, A(-1), A(-1), ONE, ONE,
        ]

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_equals_pochhammer_times_gamma(self, k):
        lhs = theta1_normalized(k, 24)
        rhs = pochhammer(QQ, 24) * gamma_k(k, 24)
        assert lhs.first_mismatch(rhs, 24) is None

    def test_constant_term_is_one(self):
        for k in (1, 2, 3):
            assert theta1_normalized(k, 5).coefficient(0) == ONE


class TestContinuedFractionProducts:
    def test_h_leading(self):
        h = h_series(12)
        assert h.leading() == (F(1, 2), ONE)

    def test_h_constant_term_after_normalizing(self):
        h = h_series(12).shift(F(-1, 2))
        assert h.coefficient(0) == ONE

    def test_i_leading(self):
        assert i_series(12).leading() == (F(0), ONE)

    def test_substituting_q_squared_doubles_the_leading_exponent(self):
        # h(q^2) via substitution has leading term q^1
        doubled = h_series(12).substitute(2)
        assert doubled.leading() == (F(1), ONE)
        direct = h_series(24, r=2)
        assert doubled.first_mismatch(direct, 24) is None

    def test_reciprocal_difference_law(self):
        h = h_series(21)
        lhs = h.inverse() - h
        rhs = phi(2, 21) * psi(4, 21).inverse() * P.monomial(1, F(-1, 2), 21)
        assert lhs.first_mismatch(rhs, 20) is None

    def test_reciprocal_sum_law(self):
        h = h_series(21)
        lhs = h.inverse() + h
        rhs = phi(1, 21) * psi(4, 21).inverse() * P.monomial(1, F(-1, 2), 21)
        assert lhs.first_mismatch(rhs, 20) is None


class TestPhiPsi:
    def test_phi_values(self):
        assert phi(1, 10) == P({0: 1, 1: 2, 4: 2, 9: 2}, 10)

    def test_psi_scaled(self):
        assert psi(4, 25) == P({0: 1, 4: 1, 12: 1, 24: 1}, 25)

    def test_psi_product_form(self):
        # (q^2;q^2)/(q;q^2) against the bilateral sum
        prod = pochhammer(PochSpec(-1, 2, 2), 24) / pochhammer(PochSpec(-1, 1, 2), 24)
        assert psi(1, 24).first_mismatch(prod, 24) is None


def test_root_of_unity_polynomial():
    # (1-y)(1+y) prod_k (1 + beta_k y + y^2) = 1 - y^8 exactly
    order = 12
    out = P({0: 1, 1: -1}, order) * P({0: 1, 1: 1}, order)
    for k in (1, 2, 3):
        out = out * P({0: ONE, 1: BETA[k], 2: ONE}, order)
    assert out == P({0: 1, 8: -1}, order)
