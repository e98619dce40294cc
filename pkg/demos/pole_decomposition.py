#!/usr/bin/env python3
"""The pole decomposition of arctan(x/alpha) and its integral consequences.

The cotangent partial-fraction expansion splits arctan(x/alpha) into a
hyperbolic principal term plus arctangent corrections indexed by the poles
of cot.  Integrating against dx/x turns that into a decomposition of
Ti2(A/alpha) whose A = alpha = pi/n members all evaluate Catalan's constant.

Run: python demos/pole_decomposition.py
"""

import math

from ti2kit import (
    catalan_family,
    catalan_reference,
    corollary2_series,
    h_quadrature,
    h_series,
    k1_closed,
    lemma1_catalan,
    pointwise_identity,
)

PI = math.pi


def main():
    print("pointwise identity: residual vs analytic tail 2*alpha*x/(pi^2 K)\n")
    print(f"{'K':>7} {'residual':>12} {'tail bound':>12}")
    for K in (10, 100, 1000, 10000):
        rep = pointwise_identity(1.0, 1.0, K)
        print(f"{K:>7} {rep.abs_residual:>12.3e} {rep.tail_bound:>12.3e}")

    print("\ntwo routes to the hyperbolic term H(A, alpha):\n")
    print(f"{'A':>5} {'alpha':>6} {'quadrature':>20} {'resummed series':>20} {'diff':>10}")
    for A, alpha in ((0.5, 0.5), (1.0, 1.0), (1.0, 2.5), (2.0, 2.0)):
        hq = h_quadrature(A, alpha)
        hs = h_series(A, alpha, 40).value
        print(f"{A:>5} {alpha:>6} {hq:>20.15f} {hs:>20.15f} {abs(hq-hs):>10.1e}")
    print(f"\nK(1) = H(1,1) in closed form: {k1_closed():.15f}")

    print("\ngeneral decomposition Ti2(A/alpha) = H + pole differences:\n")
    for A, alpha in ((1.0, 1.0), (1.0, PI / 2.0), (2.0, 2.5)):
        rep = corollary2_series(A, alpha, 2000)
        print(f"  A={A:<4} alpha={alpha:<8.5f} residual {rep.abs_residual:.2e} "
              f"(tail budget {rep.tail_bound:.2e})")

    g_ref = catalan_reference(1e-14)
    print("\nthe Catalan family A = alpha = pi/n at K = 2000:\n")
    print(f"{'n':>3} {'assembled value':>20} {'|value - G|':>12} {'tail':>10}")
    for n in (2, 3, 4, 6):
        rep = catalan_family(n, 2000)
        print(f"{n:>3} {rep.rhs:>20.15f} {rep.abs_residual:>12.2e} "
              f"{rep.tail_bound:>10.2e}")

    print("\nHurwitz-zeta assembly of G, converging in the series depth N:\n")
    print(f"{'N':>3} {'assembled value':>20} {'|value - G|':>12}")
    for n in (1, 2, 4, 8, 12):
        rep = lemma1_catalan(N=n, J=18)
        print(f"{n:>3} {rep.rhs:>20.15f} {rep.abs_residual:>12.2e}")
    print(f"\nreference: {g_ref:.15f}")


if __name__ == "__main__":
    main()
