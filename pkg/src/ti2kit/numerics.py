"""Foundation kernels: adaptive quadrature, bracketed root-finding, tail-bounded sums.

Everything here is pure and deterministic: fixed evaluation order, no shared
state, binary64 throughout.  The quadrature engine never evaluates the
integrand exactly at an interval endpoint; callers declare finite limit
values instead, which is what makes integrands with removable endpoint
singularities (arctan kernels divided by their argument, and similar)
integrable without special casing at the call site.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Optional


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class BracketError(ValueError):
    """The supplied bracket does not strictly enclose the target value."""


class BudgetError(RuntimeError):
    """An iteration/subdivision budget ran out before the tolerance was met.

    The best estimate available at that point is attached as ``best``.
    """

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best


@dataclass(frozen=True)
class QuadratureResult:
    """Value of an adaptive integral together with its error estimate."""

    value: float
    abs_error_estimate: float
    evaluations: int


@dataclass(frozen=True)
class SeriesResult:
    """Partial sum of a series with a rigorous bound on the omitted tail.

    When the supplied tail-bound function is valid, the true sum lies in
    ``[value - tail_bound, value + tail_bound]``.  ``truncated`` is set when
    the requested tolerance was not reached within the term budget.
    """

    value: float
    terms_used: int
    tail_bound: float
    truncated: bool = False


# 15-point Kronrod extension of the 7-point Gauss rule (abscissae for [-1, 1]).
_XGK = (
    0.9914553711208126,
    0.9491079123427585,
    0.8648644233597691,
    0.7415311855993944,
    0.5860872354676911,
    0.4058451513773972,
    0.2077849550078985,
    0.0,
)
_WGK = (
    0.022935322010529225,
    0.06309209262997855,
    0.10479001032225018,
    0.14065325971552592,
    0.1690047266392679,
    0.19035057806478542,
    0.20443294007529889,
    0.20948214108472782,
)
# Gauss weights, paired with _XGK[1], _XGK[3], _XGK[5] and the centre node.
_WG = (
    0.12948496616886969,
    0.2797053914892767,
    0.3818300505051189,
    0.41795918367346935,
)

_ENDPOINT_SNAP = 1e-300


def _gk15(f: Callable[[float], float], a: float, b: float) -> tuple[float, float]:
    """One Gauss-Kronrod 15(7) panel on [a, b] -> (integral, error estimate)."""
    centr = 0.5 * (a + b)
    hlgth = 0.5 * (b - a)

    fc = f(centr)
    resg = _WG[3] * fc
    resk = _WGK[7] * fc
    pairs = []
    for j in range(7):
        dx = hlgth * _XGK[j]
        f1 = f(centr - dx)
        f2 = f(centr + dx)
        pairs.append((f1, f2))
        resk += _WGK[j] * (f1 + f2)
        if j % 2 == 1:
            resg += _WG[(j - 1) // 2] * (f1 + f2)

    reskh = resk * 0.5
    resasc = _WGK[7] * abs(fc - reskh)
    for j in range(7):
        f1, f2 = pairs[j]
        resasc += _WGK[j] * (abs(f1 - reskh) + abs(f2 - reskh))
    resasc *= abs(hlgth)

    result = resk * hlgth
    abserr = abs((resk - resg) * hlgth)
    if resasc != 0.0 and abserr != 0.0:
        abserr = resasc * min(1.0, (200.0 * abserr / resasc) ** 1.5)
    return result, abserr


def integrate_adaptive(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float,
    *,
    limit_lo: Optional[float] = None,
    limit_hi: Optional[float] = None,
    max_subdivisions: int = 10_000,
) -> QuadratureResult:
    """Adaptively integrate ``f`` over ``[lo, hi]`` to absolute tolerance ``tol``.

    ``limit_lo`` / ``limit_hi`` declare the finite limits of ``f`` at the
    endpoints; any abscissa within 1e-300 of an endpoint is replaced by the
    declared limit, so ``f`` itself is never called exactly at ``lo`` or
    ``hi`` when a limit is given.  (The Kronrod nodes are interior, so this
    only matters for degenerate subintervals.)

    Strategy: nested 15-point Gauss-Kronrod panels, always bisecting the
    panel with the largest error estimate, up to ``max_subdivisions`` splits.
    Raises :class:`BudgetError` (with the best estimate attached) if the
    budget runs out, and :class:`DomainError` if ``f`` returns NaN.
    """
    if not lo < hi:
        raise DomainError(f"integration bounds must satisfy lo < hi, got [{lo}, {hi}]")
    if not tol > 0.0:
        raise DomainError(f"tolerance must be positive, got {tol}")

    evaluations = 0

    def feval(x: float) -> float:
        nonlocal evaluations
        evaluations += 1
        if limit_lo is not None and abs(x - lo) <= _ENDPOINT_SNAP:
            return limit_lo
        if limit_hi is not None and abs(x - hi) <= _ENDPOINT_SNAP:
            return limit_hi
        v = f(x)
        if math.isnan(v):
            raise DomainError(f"integrand returned NaN at x={x!r}")
        return v

    val, err = _gk15(feval, lo, hi)
    total, toterr = val, err
    counter = 0  # heap tiebreaker, keeps ordering deterministic
    heap = [(-err, counter, lo, hi, val, err)]
    splits = 0

    while toterr > tol and heap:
        if splits >= max_subdivisions:
            raise BudgetError(
                f"subdivision budget {max_subdivisions} exhausted "
                f"(error estimate {toterr:.3e} > tol {tol:.3e})",
                best=QuadratureResult(total, toterr, evaluations),
            )
        _, _, a, b, v, e = heapq.heappop(heap)
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            # Interval at floating-point resolution; its error is irreducible.
            continue
        splits += 1
        v1, e1 = _gk15(feval, a, mid)
        v2, e2 = _gk15(feval, mid, b)
        total += (v1 + v2) - v
        toterr += (e1 + e2) - e
        counter += 1
        heapq.heappush(heap, (-e1, counter, a, mid, v1, e1))
        counter += 1
        heapq.heappush(heap, (-e2, counter, mid, b, v2, e2))

    if toterr > tol:
        raise BudgetError(
            f"tolerance {tol:.3e} unreachable (error estimate {toterr:.3e})",
            best=QuadratureResult(total, toterr, evaluations),
        )
    return QuadratureResult(total, toterr, evaluations)


_BRACKET_FLOOR = 1e-14


def find_root_increasing(
    g: Callable[[float], float],
    lo: float,
    hi: float,
    target: float,
    tol: float,
    *,
    derivative: Optional[Callable[[float], float]] = None,
    max_iterations: int = 200,
) -> float:
    """Solve ``g(b) = target`` for strictly increasing ``g`` on ``[lo, hi]``.

    Guaranteed-convergent bisection, optionally refined with safeguarded
    Newton steps when ``derivative`` is supplied (a Newton candidate is used
    only while it stays inside the current bracket).  Stops as soon as
    ``|g(b) - target| <= tol`` or the bracket width falls below 1e-14.

    Requires the strict bracketing ``g(lo) < target < g(hi)``; otherwise a
    :class:`BracketError` is raised.
    """
    if not tol > 0.0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    if not lo < hi:
        raise DomainError(f"bracket must satisfy lo < hi, got [{lo}, {hi}]")
    glo = g(lo)
    ghi = g(hi)
    if not (glo < target < ghi):
        raise BracketError(
            f"target {target!r} not strictly inside [g(lo), g(hi)] = [{glo!r}, {ghi!r}]"
        )

    a, b = lo, hi
    x = 0.5 * (a + b)
    for _ in range(max_iterations):
        gx = g(x)
        if abs(gx - target) <= tol:
            return x
        if gx < target:
            a = x
        else:
            b = x
        if b - a < _BRACKET_FLOOR:
            return 0.5 * (a + b)
        nxt = None
        if derivative is not None:
            d = derivative(x)
            if d > 0.0 and math.isfinite(d):
                cand = x - (gx - target) / d
                if a < cand < b:
                    nxt = cand
        x = 0.5 * (a + b) if nxt is None else nxt
    raise BudgetError(
        f"root iteration budget {max_iterations} exhausted", best=0.5 * (a + b)
    )


def sum_series(
    term: Callable[[int], float],
    tail_bound: Callable[[int], float],
    tol: float,
    max_terms: int,
) -> SeriesResult:
    """Sum ``term(1) + term(2) + ...`` until ``tail_bound(K) <= tol``.

    ``tail_bound(K)`` must bound ``|sum_{k>K} term(k)|`` and be non-increasing
    in K.  Always evaluates at least one term.  If the tolerance is not
    reached within ``max_terms``, the partial sum is returned with
    ``truncated=True`` and the (still valid) tail bound at the stopping index.
    """
    if not tol > 0.0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    if max_terms < 1:
        raise DomainError(f"max_terms must be >= 1, got {max_terms}")
    total = 0.0
    comp = 0.0  # Kahan compensation; keeps long sums at the analytic bound
    tb = math.inf
    for k in range(1, max_terms + 1):
        y = term(k) - comp
        t = total + y
        comp = (t - total) - y
        total = t
        tb = tail_bound(k)
        if tb <= tol:
            return SeriesResult(total, k, tb)
    return SeriesResult(total, max_terms, tb, truncated=True)
