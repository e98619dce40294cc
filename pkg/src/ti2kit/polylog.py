"""Complex dilogarithm on the principal branch and the Clausen function.

The dilogarithm Li2(z) = sum_{n>=1} z^n / n^2 is continued to the whole plane
minus the cut [1, oo) on the real axis.  Values on the cut are supplied by a
separate boundary operation (approach from the upper half-plane); the main
evaluator refuses cut arguments so that branch choices are always explicit.

Evaluation strategy: arguments with |z| > 1 are pulled inside the unit disk
with the inversion law

    Li2(z) + Li2(1/z) = -pi^2/6 - Log(-z)^2 / 2,

arguments with Re z > 1/2 are reflected with

    Li2(z) + Li2(1-z) = pi^2/6 - Log(z) Log(1-z),

and what remains is summed either by the defining power series (|z| <= 1/2)
or by the geometrically convergent series in w = -Log(1-z),

    Li2(z) = sum_{k>=0} B_k w^{k+1} / (k+1)!,

whose terms shrink by (|w|/2pi)^2 < 0.05 per step on the remaining region.
All logarithms are principal.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .numerics import DomainError

__all__ = [
    "BranchCutError",
    "BranchPolicy",
    "PRINCIPAL_BRANCH",
    "li2",
    "li2_upper_boundary",
    "li2_derivative",
    "clausen2",
]

PI = math.pi
_PI2_6 = PI * PI / 6.0


class BranchCutError(DomainError):
    """Argument lies on the open branch cut (1, oo); use the boundary operation."""


@dataclass(frozen=True)
class BranchPolicy:
    """Branch convention this module computes under.

    ``cut_start`` marks the ray [cut_start, oo) on the real axis; boundary
    values of the imaginary part are taken as limits from the half-plane
    named by ``continuity``.  Li2 is continuous on any path avoiding the cut.
    """

    cut_start: float = 1.0
    continuity: str = "upper"


PRINCIPAL_BRANCH = BranchPolicy()


# Bernoulli numbers B_0 .. B_34 (odd ones beyond B_1 vanish).
_BERNOULLI = {
    0: Fraction(1),
    1: Fraction(-1, 2),
    2: Fraction(1, 6),
    4: Fraction(-1, 30),
    6: Fraction(1, 42),
    8: Fraction(-1, 30),
    10: Fraction(5, 66),
    12: Fraction(-691, 2730),
    14: Fraction(7, 6),
    16: Fraction(-3617, 510),
    18: Fraction(43867, 798),
    20: Fraction(-174611, 330),
    22: Fraction(854513, 138),
    24: Fraction(-236364091, 2730),
    26: Fraction(8553103, 6),
    28: Fraction(-23749461029, 870),
    30: Fraction(8615841276005, 14322),
    32: Fraction(-7709321041217, 510),
    34: Fraction(2577687858367, 6),
}

# Coefficient of w^{k+1} in the log-series: B_k / ((k+1) * k!).
_LOG_SERIES_COEFF = tuple(
    float(_BERNOULLI.get(k, 0)) / ((k + 1) * math.factorial(k)) for k in range(35)
)

_INVERSION_THRESHOLD = 1.0 + 1e-8


def _power_series(z: complex) -> complex:
    # |z| <= 1/2: plain sum of z^n / n^2; at most ~50 terms.
    total = 0j
    zn = z
    for n in range(1, 200):
        term = zn / (n * n)
        total += term
        if abs(term) < 1e-18 * (1.0 + abs(total)):
            break
        zn *= z
    return total


def _log_series(z: complex) -> complex:
    # Geometric in (|w|/2pi)^2 on the region it serves (|w| <= ~1.26).
    w = -cmath.log(1.0 - z)
    total = 0j
    wk = w  # w^{k+1}
    for k in range(35):
        c = _LOG_SERIES_COEFF[k]
        if c != 0.0:
            term = c * wk
            total += term
            if k > 2 and abs(term) < 1e-18 * (1.0 + abs(total)):
                break
        wk *= w
    return total


def _li2_any(z: complex) -> complex:
    """Principal-branch Li2 for any z not on the open cut (1, oo)."""
    if z == 0:
        return 0j
    if z == 1:
        return complex(_PI2_6, 0.0)
    r = abs(z)
    if r > _INVERSION_THRESHOLD:
        lg = cmath.log(-z)
        return -_li2_any(1.0 / z) - _PI2_6 - 0.5 * lg * lg
    if z.real > 0.5:
        return _PI2_6 - cmath.log(z) * cmath.log(1.0 - z) - _li2_any(1.0 - z)
    if r <= 0.5:
        return _power_series(z)
    return _log_series(z)


def li2(z: complex) -> complex:
    """Principal-branch dilogarithm Li2(z), z off the open cut (1, oo).

    Agrees with the power series for |z| <= 1, satisfies
    d/dz Li2(z) = -Log(1-z)/z, and is conjugate-symmetric off the real axis.
    Real arguments x > 1 raise :class:`BranchCutError`; use
    :func:`li2_upper_boundary` for those.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"li2 requires a finite argument, got {z!r}")
    if z.imag == 0.0 and z.real > 1.0:
        raise BranchCutError(
            f"z={z.real!r} lies on the branch cut (1, oo); "
            "use li2_upper_boundary for boundary values"
        )
    return _li2_any(z)


def li2_upper_boundary(x: float) -> complex:
    """Boundary value lim_{eps->0+} Li2(x + i*eps) for real x > 1.

    From the inversion law with Log(-x - i0) = log x - i*pi,

        Li2(x + i0) = pi^2/3 - log^2(x)/2 - Li2(1/x) + i*pi*log(x),

    so the real part is pi^2/3 - log^2(x)/2 - Li2(1/x) and the imaginary
    part is pi*log(x) (the value approached from the upper half-plane).
    """
    if not x > 1.0:
        raise DomainError(f"li2_upper_boundary requires x > 1, got {x!r}")
    lx = math.log(x)
    re = PI * PI / 3.0 - 0.5 * lx * lx - _li2_any(complex(1.0 / x, 0.0)).real
    return complex(re, PI * lx)


def li2_derivative(z: complex) -> complex:
    """d/dz Li2(z) = -Log(1-z)/z with the removable value 1 at z = 0."""
    z = complex(z)
    if z.imag == 0.0 and z.real >= 1.0:
        raise BranchCutError(f"derivative undefined on [1, oo), got {z.real!r}")
    if z == 0:
        return complex(1.0, 0.0)
    if abs(z) < 1e-8:
        # -Log(1-z)/z = 1 + z/2 + z^2/3 + ...; avoids cancellation near 0.
        return 1.0 + z / 2.0 + z * z / 3.0
    return -cmath.log(1.0 - z) / z


def clausen2(phi: float) -> float:
    """Clausen function Cl2(phi) = sum_{n>=1} sin(n*phi)/n^2 on [0, 2*pi].

    Computed as Im Li2(e^{i*phi}); the reflection/log-series machinery inside
    :func:`li2` supplies the -phi*log|2 sin(phi/2)| structure near the
    logarithmic endpoints, where the defining series crawls.  Odd about pi:
    Cl2(2*pi - phi) = -Cl2(phi), exactly satisfied here by conjugate symmetry.
    No implicit periodic reduction: arguments outside [0, 2*pi] are rejected.
    """
    if not 0.0 <= phi <= 2.0 * PI:
        raise DomainError(f"clausen2 requires 0 <= phi <= 2*pi, got {phi!r}")
    if phi == 0.0 or phi == 2.0 * PI or phi == PI:
        return 0.0
    return _li2_any(cmath.exp(1j * phi)).imag
