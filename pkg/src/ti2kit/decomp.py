"""Pole decomposition of arctan(x/alpha) and everything downstream of it.

The cotangent's partial-fraction expansion turns the argument of
sin(alpha + i x)/sin(alpha) into the pointwise identity (alpha not a
multiple of pi, x >= 0):

    arctan(x/alpha) = arctan(cot(alpha) tanh(x)) + sum_{k>=1} Xi_k(x),
    Xi_k(x) = arctan( 2 alpha x / (x^2 + (k pi)^2 - alpha^2) ).

Dividing by x and integrating over [0, A] gives, for 0 < alpha < pi,

    Ti2(A/alpha) = H(A, alpha) + sum_k [ Ti2(A/(k pi - alpha)) - Ti2(A/(k pi + alpha)) ]

with H(A, alpha) = integral_0^A arctan(cot(alpha) tanh x)/x dx.  Setting
A = alpha = pi/n produces a family of Catalan decompositions; n = 2 kills
the hyperbolic term and telescopes.  Expanding the bracket sum at A = 1,
alpha = 1 through the Ti2 power series yields the Hurwitz-zeta form

    G = K(1) + S_1 + sum_{n>=1} (-1)^n / (2n+1)^2 * S_{2n+1},
    S_r = sum_k [ (k pi - 1)^{-r} - (k pi + 1)^{-r} ]
        = pi^{-r} [ zeta(r, 1 - 1/pi) - zeta(r, 1 + 1/pi) ]   (r > 1),

with S_1 = 1 - cot(1) from the cotangent partial fractions and K(1) in
closed form through the exponential integral, log-gamma, and the sine-log
sum.  Tail bounds: arctan y <= y gives Xi_k(x) <= 2 alpha x/((k pi)^2 -
alpha^2) and Ti2(u) <= u gives the same envelope for the bracket terms;
summing 1/(k^2 - 1) telescopically bounds either tail by 2*alpha*x/(pi^2 K).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numerics import DomainError, SeriesResult, integrate_adaptive, sum_series
from .report import IdentityReport
from .special import (
    catalan_reference,
    cot_partial_fraction_sum,
    ei_negative,
    hurwitz_zeta,
    log_gamma,
)
from .ti2core import ti2

__all__ = [
    "DecompParams",
    "xi_k",
    "pointwise_identity",
    "h_quadrature",
    "h_series",
    "corollary2_series",
    "remark1_partial",
    "catalan_family",
    "s_r",
    "k1_closed",
    "lemma1_catalan",
]

PI = math.pi

_ALPHA_MARGIN = 1e-10


@dataclass(frozen=True)
class DecompParams:
    """Parameter bundle for decomposition runs.

    alpha in (0, pi) away from multiples of pi; A > 0; K, J, N are the
    pole-series, exponential-integral, and Hurwitz truncation depths.
    """

    alpha: float
    A: float
    K: int = 2000
    J: int = 18
    N: int = 8

    def __post_init__(self):
        _check_alpha(self.alpha)
        if not self.A > 0.0:
            raise DomainError(f"A must be positive, got {self.A!r}")
        for label, v in (("K", self.K), ("J", self.J), ("N", self.N)):
            if v < 1:
                raise DomainError(f"truncation {label} must be >= 1, got {v!r}")


def _check_alpha(alpha: float) -> None:
    if not _ALPHA_MARGIN < alpha < PI - _ALPHA_MARGIN:
        raise DomainError(
            f"alpha must lie in (0, pi) away from multiples of pi, got {alpha!r}"
        )


def xi_k(k: int, alpha: float, x: float) -> float:
    """Pole correction Xi_k(x) = arctan(2 alpha x / (x^2 + (k pi)^2 - alpha^2)).

    Xi_k(0) = 0, and the denominator is positive for every k >= 1 when
    0 < alpha < pi.
    """
    if k < 1:
        raise DomainError(f"xi_k requires k >= 1, got {k!r}")
    _check_alpha(alpha)
    if not x >= 0.0:
        raise DomainError(f"xi_k requires x >= 0, got {x!r}")
    kpi = k * PI
    return math.atan(2.0 * alpha * x / (x * x + kpi * kpi - alpha * alpha))


def _xi_tail_bound(alpha: float, x: float, K: int) -> float:
    # Xi_k(x) <= 2 alpha x/((k pi)^2 - alpha^2) and, for alpha < pi,
    # sum_{k>K} 1/(k^2 - (alpha/pi)^2) <= sum_{k>K} 1/(k^2 - 1) <= 1/K.
    return 2.0 * alpha * x / (PI * PI * K)


def pointwise_identity(alpha: float, x: float, K: int = 5000) -> IdentityReport:
    """Residual of arctan(x/alpha) against the K-truncated pole decomposition.

    Passes when the residual sits under the analytic tail bound
    2*alpha*x/(pi^2 K) plus a 1e-12 floating-point allowance.
    """
    _check_alpha(alpha)
    if not x >= 0.0:
        raise DomainError(f"pointwise_identity requires x >= 0, got {x!r}")
    if K < 1:
        raise DomainError(f"pointwise_identity requires K >= 1, got {K!r}")
    lhs = math.atan(x / alpha)
    principal = math.atan(math.cos(alpha) / math.sin(alpha) * math.tanh(x))
    k = np.arange(1, K + 1, dtype=np.float64)
    corrections = np.arctan(
        2.0 * alpha * x / (x * x + (k * PI) ** 2 - alpha * alpha)
    )
    rhs = principal + float(corrections.sum())
    return IdentityReport.build(
        name="pointwise",
        params={"alpha": alpha, "x": x, "K": float(K)},
        lhs=lhs,
        rhs=rhs,
        tolerance=1e-12,
        method_lhs="arctan",
        method_rhs="pole-sum",
        tail_bound=_xi_tail_bound(alpha, x, K),
        terms_used=K,
    )


def h_quadrature(A: float, alpha: float, tol: float = 1e-11) -> float:
    """H(A, alpha) = integral_0^A arctan(cot(alpha) tanh x)/x dx by quadrature.

    Endpoint limit cot(alpha) at x -> 0+; the integrand is smooth on (0, A].
    """
    _check_alpha(alpha)
    if not A > 0.0:
        raise DomainError(f"h_quadrature requires A > 0, got {A!r}")
    cot = math.cos(alpha) / math.sin(alpha)

    def f(x: float) -> float:
        return math.atan(cot * math.tanh(x)) / x

    return integrate_adaptive(f, 0.0, A, tol, limit_lo=cot, limit_hi=f(A)).value


def default_ei_truncation(A: float) -> int:
    """Truncation depth making the exponential-integral tail < 1e-14."""
    return max(1, math.ceil(7.0 * math.log(10.0) / A))


def h_series(A: float, alpha: float, J: int | None = None) -> SeriesResult:
    """H(A, alpha) by termwise integration of the Fourier expansion.

    arctan(cot(alpha) tanh x) = -sum_j sin(2 j alpha)/j (e^{-2jx} - 1)
    integrates termwise to -sum_j sin(2 j alpha)/j * T(2 j A) with
    T(xi) = Ei(-xi) - gamma - log(xi).  The gamma and log pieces of T make
    that series only conditionally convergent, so they are summed in closed
    form first (the sawtooth sum_j sin(2 j alpha)/j = pi/2 - alpha and the
    sine-log sum via the log-gamma Fourier expansion), leaving

        H = -sum_{j<=J} sin(2 j alpha)/j * Ei(-2 j A)
            + (pi/2 - alpha) log(A/pi) + pi logGamma(alpha/pi)
            - (pi/2) log(pi / sin alpha)

    whose truncation tail is geometric: |Ei(-xi)| <= e^{-xi}/xi gives the
    bound e^{-2JA}/(2 A J^2 (1 - e^{-2A})).
    """
    _check_alpha(alpha)
    if not A > 0.0:
        raise DomainError(f"h_series requires A > 0, got {A!r}")
    if J is None:
        J = default_ei_truncation(A)
    if J < 1:
        raise DomainError(f"h_series requires J >= 1, got {J!r}")

    geom = 1.0 - math.exp(-2.0 * A)
    ser = sum_series(
        lambda j: -math.sin(2.0 * j * alpha) / j * ei_negative(2.0 * j * A),
        lambda k: math.exp(-2.0 * k * A) / (2.0 * A * k * k * geom),
        tol=1e-15,
        max_terms=J,
    )
    value = (
        ser.value
        + (PI / 2.0 - alpha) * math.log(A / PI)
        + PI * log_gamma(alpha / PI)
        - (PI / 2.0) * math.log(PI / math.sin(alpha))
    )
    return SeriesResult(
        value=value,
        terms_used=ser.terms_used,
        tail_bound=ser.tail_bound,
        truncated=ser.truncated,
    )


def corollary2_series(
    A: float, alpha: float, K: int = 2000, tolerance: float = 1e-9
) -> IdentityReport:
    """Check Ti2(A/alpha) against H(A, alpha) plus the K-truncated bracket sum.

    Each bracket Ti2(A/(k pi - alpha)) - Ti2(A/(k pi + alpha)) is positive
    and bounded by 2 alpha A/((k pi)^2 - alpha^2); the reported tail adds the
    bracket-sum envelope 2 alpha A/(pi^2 K) to the H-series tail.
    """
    _check_alpha(alpha)
    if not A > 0.0:
        raise DomainError(f"corollary2_series requires A > 0, got {A!r}")
    if K < 1:
        raise DomainError(f"corollary2_series requires K >= 1, got {K!r}")
    h = h_series(A, alpha)
    bracket = 0.0
    for k in range(1, K + 1):
        bracket += ti2(A / (k * PI - alpha)) - ti2(A / (k * PI + alpha))
    return IdentityReport.build(
        name="corollary2",
        params={"A": A, "alpha": alpha, "K": float(K)},
        lhs=ti2(A / alpha),
        rhs=h.value + bracket,
        tolerance=tolerance,
        method_lhs="ti2",
        method_rhs="hyperbolic-term+ti2-differences",
        tail_bound=_xi_tail_bound(alpha, A, K) + h.tail_bound,
        terms_used=K,
    )


def remark1_partial(K: int) -> float:
    """Partial sum sum_{k<=K} [Ti2(1/(2k-1)) - Ti2(1/(2k+1))].

    The sum telescopes to G - Ti2(1/(2K+1)); it is nevertheless evaluated
    term by term, so agreement with the telescoped value is evidence, not
    tautology.
    """
    if K < 1:
        raise DomainError(f"remark1_partial requires K >= 1, got {K!r}")
    total = 0.0
    for k in range(1, K + 1):
        total += ti2(1.0 / (2 * k - 1)) - ti2(1.0 / (2 * k + 1))
    return total


def catalan_family(n: int, K: int = 2000, tolerance: float = 1e-8) -> IdentityReport:
    """The n-th Catalan decomposition: A = alpha = pi/n, n >= 2.

        G = H(pi/n, pi/n) + sum_k [ Ti2(1/(n k - 1)) - Ti2(1/(n k + 1)) ]

    n = 2 makes the hyperbolic term vanish and the sum telescope.  The tail
    bound specializes to 2/(n^2 K).
    """
    if n < 2:
        raise DomainError(f"catalan_family requires n >= 2, got {n!r}")
    if K < 1:
        raise DomainError(f"catalan_family requires K >= 1, got {K!r}")
    h = h_series(PI / n, PI / n)
    bracket = 0.0
    for k in range(1, K + 1):
        bracket += ti2(1.0 / (n * k - 1)) - ti2(1.0 / (n * k + 1))
    return IdentityReport.build(
        name="corollary3",
        params={"n": float(n), "K": float(K)},
        lhs=catalan_reference(1e-14),
        rhs=h.value + bracket,
        tolerance=tolerance,
        method_lhs="alternating-series-acceleration",
        method_rhs="hyperbolic-term+ti2-differences",
        tail_bound=2.0 / (n * n * K) + h.tail_bound,
        terms_used=K,
    )


def s_r(r: int) -> float:
    """S_r = sum_k [(k pi - 1)^{-r} - (k pi + 1)^{-r}] for odd r >= 1; positive.

    r = 1 goes through the cotangent partial fractions (S_1 = 1 - cot 1);
    r >= 3 through pi^{-r} [zeta(r, 1 - 1/pi) - zeta(r, 1 + 1/pi)].
    """
    if r < 1 or r % 2 == 0:
        raise DomainError(f"s_r requires odd r >= 1, got {r!r}")
    if r == 1:
        return 2.0 * cot_partial_fraction_sum(1.0)
    return PI ** (-r) * (hurwitz_zeta(r, 1.0 - 1.0 / PI) - hurwitz_zeta(r, 1.0 + 1.0 / PI))


def _s_r_envelope(r: int) -> float:
    # S_r <= sum_k (k pi - 1)^{-r} <= (pi-1)^{-r} + (pi-1)^{1-r}/(pi (r-1)).
    return (PI - 1.0) ** (-r) + (PI - 1.0) ** (1 - r) / (PI * (r - 1))


def _k1_ei_tail(J: int) -> float:
    # |Ei(-2j)| <= e^{-2j}/(2j): geometric envelope of the truncated sum.
    return math.exp(-2.0 * J) / (2.0 * J * J * (1.0 - math.exp(-2.0)))


def k1_closed(J: int = 18) -> float:
    """Closed form of K(1) = H(1, 1), the hyperbolic term of the A = 1 family:

        K(1) = -sum_{j<=J} sin(2j)/j Ei(-2j) + pi logGamma(1/pi)
               + (1 - pi/2) log(pi) - (pi/2) log(pi / sin 1).

    The omitted exponential-integral tail is below 1e-15 already at J = 18.
    """
    if J < 1:
        raise DomainError(f"k1_closed requires J >= 1, got {J!r}")
    ei_part = 0.0
    for j in range(1, J + 1):
        ei_part -= math.sin(2.0 * j) / j * ei_negative(2.0 * j)
    return (
        ei_part
        + PI * log_gamma(1.0 / PI)
        + (1.0 - PI / 2.0) * math.log(PI)
        - (PI / 2.0) * math.log(PI / math.sin(1.0))
    )


def lemma1_catalan(N: int = 8, J: int = 18, tolerance: float = 1e-10) -> IdentityReport:
    """Assemble G from K(1), S_1, and the alternating Hurwitz series:

        G = K(1) + (1 - cot 1) + sum_{n=1}^{N} (-1)^n/(2n+1)^2 * S_{2n+1}.

    Sign bookkeeping: S_r as defined here carries the bracket order
    (k pi - 1)^{-r} - (k pi + 1)^{-r}, i.e. zeta(r, 1 - 1/pi) before
    zeta(r, 1 + 1/pi); assembling with the opposite order misses G by about
    2e-2 (the tests pin this orientation).  The truncated alternating
    n-series is bounded by its first omitted term, for which
    S_r <= (pi-1)^{-r} + (pi-1)^{1-r}/(pi(r-1)) is the working envelope.
    """
    if N < 1:
        raise DomainError(f"lemma1_catalan requires N >= 1, got {N!r}")
    if J < 1:
        raise DomainError(f"lemma1_catalan requires J >= 1, got {J!r}")
    value = k1_closed(J) + s_r(1)
    for n in range(1, N + 1):
        coeff = (-1.0) ** n / float((2 * n + 1) ** 2)
        value += coeff * s_r(2 * n + 1)
    r_next = 2 * N + 3
    tail = _s_r_envelope(r_next) / float(r_next * r_next) + _k1_ei_tail(J)
    return IdentityReport.build(
        name="lemma1",
        params={"N": float(N), "J": float(J)},
        lhs=catalan_reference(1e-14),
        rhs=value,
        tolerance=tolerance,
        method_lhs="alternating-series-acceleration",
        method_rhs="hurwitz-ei-loggamma-assembly",
        tail_bound=tail,
        terms_used=N,
    )
