"""Evaluators for the inverse tangent integral Ti2(y) = integral_0^y arctan(x)/x dx.

Four independent routes to the same function:

* the defining power series / imaginary part of the dilogarithm at i*y,
* direct adaptive quadrature of arctan(x)/x (the oracle route),
* the closed form arctan(a) log(a) + Im Li2(1 + i a) - (pi/4) log(1 + a^2),
* the Clausen reduction at tangent arguments.

None of them clamps or corrects anything: a disagreement above tolerance
surfaces as a verification failure, never as a silent adjustment.
"""

from __future__ import annotations

import math

from .numerics import DomainError, integrate_adaptive
from .polylog import clausen2, li2

__all__ = [
    "SERIES_CUTOFF",
    "ti2_method",
    "ti2",
    "ti2_via_quadrature",
    "ti2_proposition_form",
    "ti2_clausen_form",
]

PI = math.pi

# Route tags recorded in identity reports.
METHOD_SERIES = "series"
METHOD_IMAGINARY_DILOG = "imaginary-dilog"
METHOD_QUADRATURE = "quadrature"
METHOD_PROPOSITION_FORM = "proposition-form"
METHOD_CLAUSEN_FORM = "clausen-form"

# The power series has radius 1; beyond 0.99 its term count degrades, so the
# dilogarithm route takes over (worst case stays under 2000 terms).
SERIES_CUTOFF = 0.99


def ti2_method(y: float) -> str:
    """Which route :func:`ti2` uses for the argument ``y``."""
    return METHOD_SERIES if abs(y) <= SERIES_CUTOFF else METHOD_IMAGINARY_DILOG


def ti2(y: float) -> float:
    """Inverse tangent integral Ti2(y); odd in y, Ti2(1) = Catalan's constant.

    |y| <= 0.99: power series sum (-1)^n y^{2n+1} / (2n+1)^2.
    |y| >  0.99: Im Li2(i y), which the dilogarithm handles at any size via
    its functional equations.  Oddness is implemented by reflection, so
    ti2(-y) == -ti2(y) exactly.
    """
    if not math.isfinite(y):
        raise DomainError(f"ti2 requires a finite argument, got {y!r}")
    if y < 0.0:
        return -ti2(-y)
    if y == 0.0:
        return 0.0
    if y <= SERIES_CUTOFF:
        return _ti2_series(y)
    return li2(complex(0.0, y)).imag


def _ti2_series(y: float) -> float:
    total = 0.0
    yp = y  # y^{2n+1}
    y2 = y * y
    for n in range(0, 1500):
        m = 2 * n + 1
        term = yp / (m * m)
        if n % 2 == 1:
            term = -term
        total += term
        if abs(term) < 1e-18 * (1.0 + abs(total)):
            break
        yp *= y2
    return total


def ti2_via_quadrature(y: float, tol: float = 1e-12) -> float:
    """Ti2(y) by adaptive quadrature of arctan(x)/x with endpoint limit 1 at 0.

    Serves as the independent oracle for every other route.  Requires y >= 0
    (combine with oddness for negative arguments).
    """
    if not y >= 0.0:
        raise DomainError(f"ti2_via_quadrature requires y >= 0, got {y!r}")
    if y == 0.0:
        return 0.0
    return integrate_adaptive(
        lambda x: math.atan(x) / x,
        0.0,
        y,
        tol,
        limit_lo=1.0,
        limit_hi=math.atan(y) / y,
    ).value


def ti2_proposition_form(a: float) -> float:
    """Closed form arctan(a) log(a) + Im Li2(1 + i a) - (pi/4) log(1 + a^2), a > 0.

    All three pieces vanish as a -> 0+, matching Ti2(0) = 0.
    """
    if not a > 0.0:
        raise DomainError(f"ti2_proposition_form requires a > 0, got {a!r}")
    return (
        math.atan(a) * math.log(a)
        + li2(complex(1.0, a)).imag
        - 0.25 * PI * math.log1p(a * a)
    )


_THETA_MARGIN = 1e-6


def ti2_clausen_form(theta: float) -> float:
    """Clausen reduction: Ti2(tan t) = t log(tan t) + Cl2(2t)/2 + Cl2(pi - 2t)/2.

    Valid on (0, pi/2); arguments within 1e-6 of either endpoint are rejected
    (tan degenerates at pi/2 and the log(tan) term loses all its digits to
    cancellation at 0).
    """
    if not (_THETA_MARGIN <= theta <= PI / 2.0 - _THETA_MARGIN):
        raise DomainError(
            f"ti2_clausen_form requires theta in [{_THETA_MARGIN}, pi/2 - {_THETA_MARGIN}], "
            f"got {theta!r}"
        )
    t = math.tan(theta)
    return theta * math.log(t) + 0.5 * clausen2(2.0 * theta) + 0.5 * clausen2(PI - 2.0 * theta)
