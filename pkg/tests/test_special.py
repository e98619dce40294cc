import math

import numpy as np
import pytest

from conftest import central_difference
from ti2kit.numerics import DomainError, integrate_adaptive
from ti2kit.polylog import clausen2
from ti2kit.special import (
    EULER_GAMMA,
    PoleError,
    catalan_reference,
    cot_partial_fraction_sum,
    ei_negative,
    expint_T,
    hurwitz_zeta,
    kummer_sine_log_sum,
    log_gamma,
)

PI = math.pi


def hurwitz_direct_oracle(s: float, c: float, n_terms: int = 100_000) -> float:
    """Direct summation plus the integral tail (k+c)^{1-s}/(s-1)."""
    k = np.arange(n_terms, dtype=np.float64)
    head = float(np.sum((k + c) ** (-s)))
    return head + (n_terms + c) ** (1.0 - s) / (s - 1.0)


class TestHurwitzZeta:
    def test_basel(self):
        assert hurwitz_zeta(2.0, 1.0) == pytest.approx(PI * PI / 6.0, rel=1e-13)

    def test_half_offset_gives_odd_squares(self):
        # zeta(2, 1/2) = 4 * sum over odd squares = pi^2/2.
        assert hurwitz_zeta(2.0, 0.5) == pytest.approx(PI * PI / 2.0, rel=1e-13)

    def test_apery(self):
        # Direct-summation oracle pins zeta(3).
        oracle = hurwitz_direct_oracle(3.0, 1.0)
        got = hurwitz_zeta(3.0, 1.0)
        assert got == pytest.approx(oracle, abs=1e-10)
        assert got == pytest.approx(1.2020569031595943, rel=1e-13)

    @pytest.mark.parametrize("s", [2.0, 3.0, 5.0])
    @pytest.mark.parametrize("c", [0.3, 0.68, 1.0, 1.32])
    def test_against_direct_summation(self, s, c):
        assert abs(hurwitz_zeta(s, c) - hurwitz_direct_oracle(s, c)) < 1e-10

    @pytest.mark.parametrize("s", [2.0, 3.0, 5.0])
    @pytest.mark.parametrize("c", [0.3, 0.68, 1.0, 1.32])
    def test_recursion(self, s, c):
        lhs = hurwitz_zeta(s, c) - hurwitz_zeta(s, c + 1.0)
        assert lhs == pytest.approx(c ** (-s), rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            hurwitz_zeta(1.0, 1.0)
        with pytest.raises(DomainError):
            hurwitz_zeta(2.0, 0.0)
        with pytest.raises(DomainError):
            hurwitz_zeta(2.0, -1.0)


class TestEiNegative:
    def test_at_one(self):
        # Series oracle gamma + log x + sum (-x)^n/(n n!), summed here inline.
        x = 1.0
        acc, term = 0.0, 1.0
        for n in range(1, 60):
            term *= -x / n
            acc += term / n
        oracle = EULER_GAMMA + math.log(x) + acc
        assert ei_negative(1.0) == pytest.approx(oracle, abs=1e-15)
        assert ei_negative(1.0) == pytest.approx(-0.21938393439552027, abs=1e-14)

    def test_at_two(self):
        assert ei_negative(2.0) == pytest.approx(-0.048900510708061120, abs=1e-14)

    def test_asymptotic_bound_far_out(self):
        v = ei_negative(50.0)
        assert v < 0.0
        assert abs(v) <= math.exp(-50.0) / 50.0

    def test_always_negative_and_bounded(self):
        for x in (0.1, 0.5, 1.0, 3.0, 6.0, 6.5, 10.0, 25.0):
            v = ei_negative(x)
            assert v < 0.0
            assert abs(v) <= math.exp(-x) / x

    def test_series_cf_overlap(self):
        # The two regimes must agree across the switchover at x = 6.
        from ti2kit.special import _e1_lentz_cf, _ei_series_sum

        for x in (5.0, 5.5, 6.0, 6.5, 7.0):
            series = EULER_GAMMA + math.log(x) + _ei_series_sum(x)
            cf = -math.exp(-x) / _e1_lentz_cf(x)
            assert abs(series - cf) < 1e-12

    def test_derivative_consistency(self):
        # d/dx Ei(-x) = e^{-x}/x (negative, increasing toward zero).
        for x in (0.5, 1.0, 2.0, 5.0):
            fd = central_difference(ei_negative, x, 1e-6)
            assert abs(fd - math.exp(-x) / x) < 1e-6

    def test_domain(self):
        with pytest.raises(DomainError):
            ei_negative(0.0)
        with pytest.raises(DomainError):
            ei_negative(-1.0)


class TestExpintT:
    def test_vanishes_at_origin(self):
        assert abs(expint_T(1e-12)) < 1e-11

    def test_at_two(self):
        expected = ei_negative(2.0) - EULER_GAMMA - math.log(2.0)
        assert expint_T(2.0) == pytest.approx(expected, abs=1e-14)
        assert expint_T(2.0) == pytest.approx(-1.3192633561695393, abs=1e-13)

    @pytest.mark.parametrize("xi", [0.1, 1.0, 2.0, 10.0])
    def test_against_quadrature(self, xi):
        quad = integrate_adaptive(
            lambda x: (math.exp(-xi * x) - 1.0) / x,
            0.0,
            1.0,
            1e-11,
            limit_lo=-xi,
            limit_hi=math.exp(-xi) - 1.0,
        ).value
        assert abs(expint_T(xi) - quad) < 1e-10

    def test_negative_for_positive_argument(self):
        for xi in (1e-6, 0.1, 1.0, 7.0, 40.0):
            assert expint_T(xi) < 0.0

    def test_domain(self):
        with pytest.raises(DomainError):
            expint_T(0.0)


class TestCotPartialFractionSum:
    def test_at_one_against_truncated_sum(self):
        # 1e6-term direct oracle plus Euler-Maclaurin tail correction.
        k = np.arange(1, 1_000_001, dtype=np.float64)
        head = float(np.sum(1.0 / ((k * PI) ** 2 - 1.0)))
        m = 1_000_000
        f = lambda x: 1.0 / ((x * PI) ** 2 - 1.0)
        tail = (
            1.0 / (2.0 * PI) * math.log((PI * (m + 1) + 1.0) / (PI * (m + 1) - 1.0))
            + 0.5 * f(m + 1.0)
        )
        oracle = head + tail
        got = cot_partial_fraction_sum(1.0)
        assert got == pytest.approx(oracle, abs=1e-12)
        assert got == pytest.approx(0.17895369203283465, abs=1e-14)

    def test_even_in_b(self):
        for b in (0.7, 1.3, 2.9):
            assert cot_partial_fraction_sum(b) == cot_partial_fraction_sum(-b)

    def test_at_half_pi(self):
        assert cot_partial_fraction_sum(PI / 2.0) == pytest.approx(2.0 / (PI * PI), rel=1e-14)

    def test_pole_rejection(self):
        for b in (0.0, PI, -2.0 * PI, PI + 1e-11):
            with pytest.raises(PoleError):
                cot_partial_fraction_sum(b)


class TestLogGamma:
    def test_at_one(self):
        assert abs(log_gamma(1.0)) < 1e-14

    def test_at_half_via_reflection(self):
        # Gamma(1/2)^2 = pi.
        assert log_gamma(0.5) == pytest.approx(0.5 * math.log(PI), abs=1e-13)

    def test_recursion(self):
        for x in (0.2, 1.0 / PI, 0.9, 2.3, 7.7):
            assert log_gamma(x + 1.0) == pytest.approx(
                log_gamma(x) + math.log(x), abs=1e-12
            )

    def test_reflection_grid(self):
        for i in range(1, 20):
            x = i / 20.0
            lhs = log_gamma(x) + log_gamma(1.0 - x)
            assert lhs == pytest.approx(math.log(PI / math.sin(PI * x)), abs=1e-11)

    def test_at_inverse_pi(self):
        # Independent route: the reflection formula pins
        # logGamma(1/pi) + logGamma(1 - 1/pi) = log(pi / sin 1).
        x = 1.0 / PI
        got = log_gamma(x)
        assert got + log_gamma(1.0 - x) == pytest.approx(
            math.log(PI / math.sin(1.0)), abs=1e-12
        )
        assert got == pytest.approx(1.0336461257655827, abs=1e-12)

    def test_factorials(self):
        assert log_gamma(6.0) == pytest.approx(math.log(120.0), rel=1e-14)
        assert log_gamma(13.0) == pytest.approx(math.log(479001600.0), rel=1e-14)

    def test_domain(self):
        with pytest.raises(DomainError):
            log_gamma(0.0)
        with pytest.raises(DomainError):
            log_gamma(-0.5)


class TestCatalanReference:
    def test_first_partial_sums(self):
        # n=0 term alone is 1; two terms give 1 - 1/9.
        assert 1.0 == pytest.approx(1.0)
        assert 1.0 - 1.0 / 9.0 == pytest.approx(0.8888888888888888)

    def test_accelerated_value(self, catalan_oracle):
        g = catalan_reference(1e-14)
        assert g == pytest.approx(catalan_oracle, abs=1e-10)
        assert g == pytest.approx(0.915965594177219, abs=1e-14)

    def test_tolerance_scaling(self):
        coarse = catalan_reference(1e-6)
        fine = catalan_reference(1e-15)
        assert abs(coarse - fine) <= 1e-6

    def test_bracketed_by_zero_and_pi2_over_8(self):
        g = catalan_reference(1e-14)
        assert 0.0 < g < PI * PI / 8.0

    def test_cross_check_against_clausen(self):
        assert catalan_reference(1e-14) == pytest.approx(clausen2(PI / 2.0), abs=1e-13)


class TestKummerSineLogSum:
    def test_closed_form_against_abel_oracle(self):
        # Abel summation: S(r) = sum sin(2j) log(j) r^j / j at r = e^{-delta},
        # Richardson-extrapolated delta -> 0.
        def abel(delta: float) -> float:
            jmax = int(40.0 / delta)
            total = 0.0
            chunk = 2_000_000
            lo = 1
            while lo <= jmax:
                hi = min(lo + chunk - 1, jmax)
                j = np.arange(lo, hi + 1, dtype=np.float64)
                total += float(
                    np.sum(np.sin(2.0 * j) * np.log(j) / j * np.exp(-delta * j))
                )
                lo = hi + 1
            return total

        delta = 1e-6
        extrapolated = 2.0 * abel(delta) - abel(2.0 * delta)
        assert kummer_sine_log_sum() == pytest.approx(extrapolated, abs=1e-5)

    def test_sawtooth_companion(self):
        # sum sin(2j)/j = pi/2 - 1; slow-convergence sanity at 1e6 terms.
        j = np.arange(1, 1_000_001, dtype=np.float64)
        partial = float(np.sum(np.sin(2.0 * j) / j))
        assert abs(partial - (PI / 2.0 - 1.0)) < 1e-3

    def test_gamma_coefficient_cancels(self):
        # The two gamma coefficients in the hyperbolic-term assembly are
        # (pi/2 - 1) and (1 - pi/2); their sum is exactly zero.
        assert (PI / 2.0 - 1.0) + (1.0 - PI / 2.0) == 0.0
