"""The tunable-endpoint identity for Ti2(a).

Cast of characters, all for a > 0 and an endpoint b in (0, pi):

    I(a, b)   = integral_0^b arctan((a + cos beta)/sin beta) d beta
    F(a, b)   = pi*b/2 - b^2/2 - Li2(-a) + Re Li2(-a e^{ib})      (= I, closed form)
    psi(a)    = Im Li2(1 + i a)
    phi_a(b)  = I(a, b) - pi*b/2 + b^2/2 = -Li2(-a) + Re Li2(-a e^{ib})
    phi_a'(b) = Arg(1 + a e^{ib})  in (0, pi)   =>  phi_a strictly increasing

When 0 < psi(a) < phi_a(pi) (the admissibility window), the equation
phi_a(b) = psi(a) has a unique solution b(a) in (0, pi), and then

    Ti2(a) = arctan(a) log(a) + I(a, b(a)) - pi*b(a)/2 + b(a)^2/2
             - (pi/4) log(a^2 + 1).

At a = 1 everything collapses: phi_1(b) = b^2/4, b(1) = sqrt(4G + pi log 2),
and G = b(1)^2/4 - (pi/4) log 2, which is the Catalan evaluation this module
exposes.  The identity check here deliberately evaluates I by quadrature
while the solver works on the dilogarithm closed form, so the comparison is
a genuine two-route test rather than algebra cancelling itself.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .numerics import (
    DomainError,
    QuadratureResult,
    find_root_increasing,
    integrate_adaptive,
)
from .polylog import li2, li2_upper_boundary
from .report import IdentityReport
from .ti2core import METHOD_QUADRATURE, ti2, ti2_method

__all__ = [
    "AdmissibilityResult",
    "EndpointSolution",
    "aux_integral_I",
    "aux_closed_F",
    "psi",
    "phi",
    "phi_derivative",
    "admissibility",
    "solve_endpoint_b",
    "theorem1_identity",
    "catalan_via_endpoint",
]

PI = math.pi

# Strict-inequality margin for the admissibility test; values inside the
# margin are flagged as boundary cases and excluded from solves.
ADMISSIBILITY_MARGIN = 1e-12


@dataclass(frozen=True)
class AdmissibilityResult:
    """Outcome of the admissibility test 0 < psi(a) < phi_a(pi)."""

    a: float
    psi: float
    phi_pi: float
    admissible: bool
    boundary: bool = False


@dataclass(frozen=True)
class EndpointSolution:
    """Solved endpoint b(a) with the residual |phi_a(b) - psi(a)|."""

    a: float
    b: float
    residual: float
    iterations: int


def _check_a(a: float, who: str) -> None:
    if not a > 0.0:
        raise DomainError(f"{who} requires a > 0, got {a!r}")


def _integrand_limit_at_pi(a: float) -> float:
    # arctan((a + cos b)/sin b) as b -> pi-: sign of a - 1 decides the branch.
    if a < 1.0:
        return -PI / 2.0
    if a > 1.0:
        return PI / 2.0
    return 0.0


def aux_integral_I(a: float, b: float, tol: float = 1e-11) -> QuadratureResult:
    """Quadrature of arctan((a + cos beta)/sin beta) over [0, b], 0 < b < pi.

    Endpoint limits: pi/2 at beta -> 0+, and the a-dependent limit at
    beta -> pi- (-pi/2, 0, +pi/2 for a below/equal/above 1) should b sit at
    the far end of its range.
    """
    _check_a(a, "aux_integral_I")
    if not 0.0 < b < PI:
        raise DomainError(f"aux_integral_I requires 0 < b < pi, got b={b!r}")

    def f(beta: float) -> float:
        return math.atan((a + math.cos(beta)) / math.sin(beta))

    limit_hi = _integrand_limit_at_pi(a) if b > PI - 1e-9 else f(b)
    return integrate_adaptive(f, 0.0, b, tol, limit_lo=PI / 2.0, limit_hi=limit_hi)


def aux_closed_F(a: float, b: float) -> float:
    """Closed form pi*b/2 - b^2/2 - Li2(-a) + Re Li2(-a e^{ib}) of the integral.

    For 0 < b < pi the point -a e^{ib} stays off the branch cut, so the
    dilogarithms are unambiguous.
    """
    _check_a(a, "aux_closed_F")
    if not 0.0 < b < PI:
        raise DomainError(f"aux_closed_F requires 0 < b < pi, got b={b!r}")
    return (
        PI * b / 2.0
        - b * b / 2.0
        - li2(complex(-a, 0.0)).real
        + li2(-a * cmath.exp(1j * b)).real
    )


def psi(a: float) -> float:
    """psi(a) = Im Li2(1 + i a); positive for a > 0."""
    _check_a(a, "psi")
    return li2(complex(1.0, a)).imag


def _phi_at_pi(a: float) -> float:
    # phi_a(pi) = Re Li2(a) - Li2(-a); for a > 1 the real part is the
    # (side-independent) boundary value on the cut.
    if a > 1.0:
        re_li2_a = li2_upper_boundary(a).real
    else:
        re_li2_a = li2(complex(a, 0.0)).real
    return re_li2_a - li2(complex(-a, 0.0)).real


def phi(a: float, b: float) -> float:
    """phi_a(b) = -Li2(-a) + Re Li2(-a e^{ib}) on 0 <= b <= pi.

    phi_a(0) = 0 exactly and phi_a(pi) = Re Li2(a) - Li2(-a), the latter via
    the boundary value of the dilogarithm when a > 1.
    """
    _check_a(a, "phi")
    if not 0.0 <= b <= PI:
        raise DomainError(f"phi requires 0 <= b <= pi, got b={b!r}")
    if b == 0.0:
        return 0.0
    if b >= PI - 1e-12:
        return _phi_at_pi(a)
    return li2(-a * cmath.exp(1j * b)).real - li2(complex(-a, 0.0)).real


def phi_derivative(a: float, b: float) -> float:
    """d/db phi_a(b) = Arg(1 + a e^{ib}), strictly inside (0, pi)."""
    _check_a(a, "phi_derivative")
    if not 0.0 < b < PI:
        raise DomainError(f"phi_derivative requires 0 < b < pi, got b={b!r}")
    return math.atan2(a * math.sin(b), 1.0 + a * math.cos(b))


def admissibility(a: float) -> AdmissibilityResult:
    """Test 0 < psi(a) < phi_a(pi) with strict margin 1e-12.

    Points failing a strict inequality by less than the margin are reported
    as boundary cases (not admissible, but distinguishable from clear
    failures in scans).
    """
    _check_a(a, "admissibility")
    p = psi(a)
    q = _phi_at_pi(a)
    admissible = p > ADMISSIBILITY_MARGIN and q - p > ADMISSIBILITY_MARGIN
    boundary = not admissible and (
        abs(p) <= ADMISSIBILITY_MARGIN or abs(q - p) <= ADMISSIBILITY_MARGIN
    )
    return AdmissibilityResult(a=a, psi=p, phi_pi=q, admissible=admissible, boundary=boundary)


def solve_endpoint_b(
    a: float, tol: float = 1e-12, *, use_derivative: bool = True
) -> EndpointSolution:
    """Solve phi_a(b) = psi(a) for the unique b in (0, pi).

    Requires ``a`` admissible; the bracket (0, pi) is then strict on both
    sides and monotonicity of phi_a makes bisection sufficient.  Newton
    refinement via Arg(1 + a e^{ib}) is on by default; ``use_derivative=False``
    gives the bisection-only run used for dual-solver cross-checks.
    """
    adm = admissibility(a)
    if not adm.admissible:
        raise DomainError(
            f"a={a!r} is not admissible (psi={adm.psi!r}, phi_pi={adm.phi_pi!r})"
        )
    evals = 0

    def g(b: float) -> float:
        nonlocal evals
        evals += 1
        return phi(a, b)

    deriv = (lambda b: phi_derivative(a, b)) if use_derivative else None
    b = find_root_increasing(g, 0.0, PI, adm.psi, tol, derivative=deriv)
    residual = abs(phi(a, b) - adm.psi)
    return EndpointSolution(a=a, b=b, residual=residual, iterations=evals)


def theorem1_identity(
    a: float,
    tolerance: float = 1e-9,
    *,
    quad_tol: float = 1e-11,
    solver_tol: float = 1e-12,
) -> IdentityReport:
    """Check Ti2(a) against the tunable-endpoint right-hand side.

    LHS: Ti2(a) by its own series/dilogarithm route.  RHS: with b = b(a)
    from the closed-form solve, evaluate

        arctan(a) log(a) + I(a, b) - pi*b/2 + b^2/2 - (pi/4) log(a^2 + 1)

    with I by *quadrature*, keeping the two sides on independent routes.
    """
    sol = solve_endpoint_b(a, solver_tol)
    quad = aux_integral_I(a, sol.b, quad_tol)
    rhs = (
        math.atan(a) * math.log(a)
        + quad.value
        - PI * sol.b / 2.0
        + sol.b * sol.b / 2.0
        - 0.25 * PI * math.log1p(a * a)
    )
    return IdentityReport.build(
        name="theorem1",
        params={"a": a, "b": sol.b},
        lhs=ti2(a),
        rhs=rhs,
        tolerance=tolerance,
        method_lhs=ti2_method(a),
        method_rhs=f"{METHOD_QUADRATURE}+root-solve",
    )


def catalan_via_endpoint(tol: float = 1e-12) -> float:
    """Catalan's constant as b(1)^2/4 - (pi/4) log 2 with b(1) root-solved.

    The target psi(1) is computed from Li2(1 + i) directly -- never from the
    constant being evaluated -- so the route is independent of the
    alternating-series reference it gets compared against.
    """
    if not tol > 0.0:
        raise DomainError(f"catalan_via_endpoint requires tol > 0, got {tol!r}")
    sol = solve_endpoint_b(1.0, tol)
    return sol.b * sol.b / 4.0 - 0.25 * PI * math.log(2.0)
