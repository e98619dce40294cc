import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ti2kit.numerics import (
    BracketError,
    BudgetError,
    DomainError,
    QuadratureResult,
    find_root_increasing,
    integrate_adaptive,
    sum_series,
)

PI = math.pi


class TestIntegrateAdaptive:
    def test_constant(self):
        res = integrate_adaptive(lambda x: 1.0, 0.0, 1.0, 1e-12)
        assert res.value == pytest.approx(1.0, abs=1e-13)
        assert res.abs_error_estimate >= 0.0
        assert res.evaluations >= 15

    def test_linear(self):
        res = integrate_adaptive(lambda x: x, 0.0, 1.0, 1e-12)
        assert res.value == pytest.approx(0.5, abs=1e-13)

    def test_arctan_kernel_with_endpoint_limits(self):
        # Removable singularity at 0; the declared limits make the call clean.
        f = lambda b: math.atan((1.0 + math.cos(b)) / math.sin(b))
        res = integrate_adaptive(f, 0.0, 2.0, 1e-11, limit_lo=PI / 2.0, limit_hi=0.0)
        assert res.value == pytest.approx(PI - 1.0, abs=2e-11)
        assert res.abs_error_estimate <= 1e-11

    @settings(max_examples=60, deadline=None)
    @given(
        a=st.floats(-5, 5),
        b=st.floats(-5, 5),
        c=st.floats(-5, 5),
        lo=st.floats(-10, 9),
        width=st.floats(0.1, 10),
    )
    def test_quadratic_exactness(self, a, b, c, lo, width):
        hi = min(lo + width, 10.0)
        if hi <= lo:
            return
        exact = (
            a * (hi ** 3 - lo ** 3) / 3.0
            + b * (hi ** 2 - lo ** 2) / 2.0
            + c * (hi - lo)
        )
        res = integrate_adaptive(lambda x: (a * x + b) * x + c, lo, hi, 1e-10)
        assert abs(res.value - exact) < 1e-12 * (1.0 + abs(exact))

    def test_additivity(self):
        f = lambda x: math.exp(math.sin(3.0 * x)) + x * x
        r_ab = integrate_adaptive(f, 0.0, 0.7, 1e-12)
        r_bc = integrate_adaptive(f, 0.7, 1.9, 1e-12)
        r_ac = integrate_adaptive(f, 0.0, 1.9, 1e-12)
        budget = (
            r_ab.abs_error_estimate + r_bc.abs_error_estimate + r_ac.abs_error_estimate
        )
        assert abs(r_ab.value + r_bc.value - r_ac.value) <= budget + 1e-13

    def test_integrand_never_called_at_endpoints(self):
        calls = []

        def f(x):
            calls.append(x)
            assert x != 0.0 and x != 1.0
            return math.sin(x) / x

        res = integrate_adaptive(f, 0.0, 1.0, 1e-12, limit_lo=1.0, limit_hi=math.sin(1.0))
        assert res.value == pytest.approx(0.9460830703671830, abs=1e-12)
        assert calls  # the limit substitution did not swallow the whole integrand

    def test_nan_raises_domain_error(self):
        with pytest.raises(DomainError):
            integrate_adaptive(lambda x: float("nan"), 0.0, 1.0, 1e-10)

    def test_budget_error_carries_best_estimate(self):
        f = lambda x: math.sin(50.0 / (x + 0.01))
        with pytest.raises(BudgetError) as err:
            integrate_adaptive(f, 0.0, 1.0, 1e-14, max_subdivisions=3)
        best = err.value.best
        assert isinstance(best, QuadratureResult)
        assert best.abs_error_estimate > 1e-14

    def test_bad_bounds_and_tolerance(self):
        with pytest.raises(DomainError):
            integrate_adaptive(lambda x: x, 1.0, 0.0, 1e-10)
        with pytest.raises(DomainError):
            integrate_adaptive(lambda x: x, 0.0, 1.0, 0.0)


class TestFindRootIncreasing:
    def test_identity_function(self):
        b = find_root_increasing(lambda x: x, 0.0, 1.0, 0.5, 1e-12)
        assert b == pytest.approx(0.5, abs=1e-11)

    def test_quarter_square_against_psi_target(self):
        # Solve b^2/4 = Im Li2(1+i) (value frozen from the dilogarithm);
        # the solution is 2*sqrt(target).
        target = 1.4603621167531195
        b = find_root_increasing(lambda x: x * x / 4.0, 0.0, PI, target, 1e-13)
        assert abs(b * b / 4.0 - target) <= 1e-13
        assert b == pytest.approx(2.4169088660957984, abs=5e-12)

    def test_bracket_must_be_strict(self):
        with pytest.raises(BracketError):
            find_root_increasing(lambda x: x ** 3, -2.0, 2.0, 8.0, 1e-10)
        with pytest.raises(BracketError):
            find_root_increasing(lambda x: x, 0.0, 1.0, -0.5, 1e-10)

    @settings(max_examples=60, deadline=None)
    @given(
        a=st.floats(0.1, 4.0),
        b=st.floats(0.1, 4.0),
        frac=st.floats(0.01, 0.99),
    )
    def test_residual_contract_on_monotone_cubics(self, a, b, frac):
        g = lambda x: a * x ** 3 + b * x
        target = g(0.0) + frac * (g(2.0) - g(0.0))
        root = find_root_increasing(g, 0.0, 2.0, target, 1e-11)
        assert abs(g(root) - target) <= 1e-11
        assert 0.0 < root < 2.0

    def test_derivative_refinement_matches_bisection(self):
        g = lambda x: x * math.exp(x)
        dg = lambda x: (1.0 + x) * math.exp(x)
        plain = find_root_increasing(g, 0.0, 2.0, 3.0, 1e-13)
        refined = find_root_increasing(g, 0.0, 2.0, 3.0, 1e-13, derivative=dg)
        assert abs(plain - refined) < 1e-12


class TestSumSeries:
    def test_zero_series(self):
        res = sum_series(lambda k: 0.0, lambda k: 0.0, 1e-10, 100)
        assert res.value == 0.0
        assert res.terms_used == 1
        assert not res.truncated

    def test_basel_series(self):
        res = sum_series(lambda k: 1.0 / (k * k), lambda K: 1.0 / K, 1e-4, 20_000)
        assert res.terms_used == 10_000
        assert abs(res.value - PI * PI / 6.0) <= 1e-4
        assert abs(res.value - PI * PI / 6.0) <= res.tail_bound

    def test_cotangent_pole_series(self):
        # sum 2/((k pi)^2 - 1) -> 1 - cot(1), tail 2/(pi^2 (K-1)).
        truth = 1.0 - math.cos(1.0) / math.sin(1.0)
        res = sum_series(
            lambda k: 2.0 / ((k * PI) ** 2 - 1.0),
            lambda K: 2.0 / (PI * PI * (K - 1)) if K > 1 else math.inf,
            1e-8,
            25_000_000,
        )
        assert not res.truncated
        assert res.tail_bound <= 1e-8
        # 1e-12 allowance for floating-point accumulation on ~2e7 terms
        assert abs(res.value - truth) <= res.tail_bound + 1e-12

    def test_truncation_flag(self):
        res = sum_series(lambda k: 1.0 / (k * k), lambda K: 1.0 / K, 1e-8, 50)
        assert res.truncated
        assert res.terms_used == 50
        assert res.tail_bound > 1e-8

    def test_series_honesty_geometric(self):
        # sum 2^-k = 1 with exact geometric tail 2^-K.
        res = sum_series(lambda k: 2.0 ** -k, lambda K: 2.0 ** -K, 1e-9, 100)
        assert abs(res.value - 1.0) <= res.tail_bound
