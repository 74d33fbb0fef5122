"""Tests for zeta/eta/lambda/beta continuation and special values."""

import math

import pytest

from trigzeta.dirichlet import (
    SPECIAL_VALUES,
    beta_fn,
    beta_prime_neg_odd,
    dirichlet_lambda,
    eta,
    evaluate_function,
    riemann_zeta,
    zeta_neg_odd,
    zeta_prime_neg_even,
)
from trigzeta.errors import DomainError, PoleError
from trigzeta.hurwitz import hurwitz_zeta


def alternating_partial(f, n_terms):
    """Brute-force alternating sum with the alternating-series tail bound."""
    total = math.fsum(f(n) * (-1.0) ** (n + 1) for n in range(1, n_terms + 1))
    return total, abs(f(n_terms + 1))


class TestSpecialValuesTable:
    def test_table_is_exact(self):
        for sv in SPECIAL_VALUES:
            got = evaluate_function(sv.function_id, float(sv.argument))
            assert abs(got - sv.value) <= 1e-12, sv

    def test_trivial_zeros_are_exact_floats(self):
        # [TRIVIAL] functional equations carry exact sinpi/cospi zeros
        for n in range(1, 9):
            assert riemann_zeta(-2.0 * n) == 0.0
            assert eta(-2.0 * n) == 0.0
            assert dirichlet_lambda(-2.0 * n) == 0.0
            assert beta_fn(float(1 - 2 * n)) == 0.0

    def test_unknown_function_id(self):
        with pytest.raises(DomainError):
            evaluate_function("theta", 2.0)


class TestZeta:
    def test_positive_values(self):
        assert riemann_zeta(2.0) == pytest.approx(math.pi**2 / 6.0, rel=1e-14)
        assert riemann_zeta(4.0) == pytest.approx(math.pi**4 / 90.0, rel=1e-14)

    def test_negative_rationals(self):
        # zeta(-1) = -1/12, zeta(-3) = 1/120  [PAPER: functional equation]
        assert riemann_zeta(-1.0) == pytest.approx(-1.0 / 12.0, abs=1e-15)
        assert riemann_zeta(-3.0) == pytest.approx(1.0 / 120.0, abs=1e-15)

    def test_pole_guard(self):
        with pytest.raises(PoleError):
            riemann_zeta(1.0)
        with pytest.raises(PoleError):
            riemann_zeta(1.0005)
        # just outside the band is fine
        assert math.isfinite(riemann_zeta(1.0011))

    def test_zeta_neg_odd_formula(self):
        for n in range(1, 9):
            assert zeta_neg_odd(n) == pytest.approx(
                riemann_zeta(float(1 - 2 * n)), rel=1e-12, abs=1e-18
            )
        with pytest.raises(DomainError):
            zeta_neg_odd(0)

    def test_zeta_prime_neg_even_vs_finite_difference(self):
        # [DERIVED] central difference of the functional-equation route
        for n in (1, 2, 3):
            h = 1e-6
            fd = (riemann_zeta(-2.0 * n + h) - riemann_zeta(-2.0 * n - h)) / (2 * h)
            assert zeta_prime_neg_even(n) == pytest.approx(fd, rel=1e-7)


class TestEtaLambda:
    def test_eta_at_one(self):
        assert eta(1.0) == math.log(2.0)

    def test_eta_vs_alternating_sum(self):
        # [DERIVED] brute-force alternating series, tail-bounded
        for s in (2.0, 3.5):
            got, bound = alternating_partial(lambda n: n**-s, 200000)
            assert abs(eta(s) - got) <= bound

    def test_eta_zeta_relation(self):
        for s in (0.5, 2.0, -2.5, 5.0):
            want = (1.0 - 2.0 ** (1.0 - s)) * riemann_zeta(s)
            assert eta(s) == pytest.approx(want, rel=1e-13, abs=1e-15)

    def test_lambda_values_and_guard(self):
        assert dirichlet_lambda(2.0) == pytest.approx(math.pi**2 / 8.0, rel=1e-14)
        with pytest.raises(PoleError):
            dirichlet_lambda(1.0)
        with pytest.raises(PoleError):
            dirichlet_lambda(0.9995)


class TestBeta:
    def test_beta_one_and_two(self):
        assert beta_fn(1.0) == pytest.approx(math.pi / 4.0, abs=1e-14)
        # beta(2) is Catalan's constant; cross-check by brute force
        got, bound = alternating_partial(lambda n: (2 * n - 1) ** -2.0, 300000)
        assert abs(beta_fn(2.0) - got) <= bound + 1e-13

    def test_beta_three(self):
        assert beta_fn(3.0) == pytest.approx(math.pi**3 / 32.0, rel=1e-13)

    def test_negative_even_arguments(self):
        # beta(-2n) = E_2n / 2 (Euler numbers): beta(-2) = -1/2? No --
        # pin by the functional-equation route against the Hurwitz route
        # evaluated at the mirror point, which is well-conditioned.
        for s in (-2.0, -4.0, -1.3, -0.7):
            u = 1.0 - s
            mirror = (
                (2.0 / math.pi) ** u
                * math.sin(math.pi * u / 2.0)
                * math.gamma(u)
                * 4.0 ** (-u)
                * (hurwitz_zeta(u, 0.25) - hurwitz_zeta(u, 0.75))
            )
            assert beta_fn(s) == pytest.approx(mirror, rel=1e-12, abs=1e-13)

    def test_continuity_across_pole_band(self):
        # the near-1 branch must join the decomposition branch smoothly
        inside = beta_fn(1.0 + 9e-4)
        outside = beta_fn(1.0 + 1.1e-3)
        assert abs(inside - outside) < 1e-3

    def test_beta_prime_neg_odd(self):
        # [DERIVED] central difference of beta_fn
        for m, k in [(2, 1), (3, 1), (3, 2), (4, 2)]:
            s0 = float(2 * k - 2 * m + 1)
            h = 1e-6
            fd = (beta_fn(s0 + h) - beta_fn(s0 - h)) / (2 * h)
            assert beta_prime_neg_odd(m, k) == pytest.approx(fd, rel=1e-7)
        with pytest.raises(DomainError):
            beta_prime_neg_odd(1, 1)
        with pytest.raises(DomainError):
            beta_prime_neg_odd(3, 3)
