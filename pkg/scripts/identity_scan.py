"""Check the two catalog-wide identities weight by weight.

First the Bernoulli identity: summing z(G) * tours(G) * prod((deg+ - 1)!)
over all stable graphs of weight k must give (-1)^(k+1) B_k / k exactly.
Then the unit-ball identity: the same catalog, weighted by cycle
decomposition polynomials, must reproduce the degree-2k volume polynomial
whose values at integer points are fixed by interpolation, with leading
coefficient (-1)^k / (2^k k!).
"""

from __future__ import annotations

import argparse
import math
from fractions import Fraction

from tyz import bernoulli, bernoulli_identity_lhs, unit_ball_identity
from tyz.catalog import format_poly, format_rational


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-weight", type=int, default=4, metavar="K")
    ap.add_argument("--allow-slow", action="store_true", help="permit weight 5")
    args = ap.parse_args()

    if not 1 <= args.max_weight <= 5:
        ap.error("--max-weight must be between 1 and 5")
    if args.max_weight >= 5 and not args.allow_slow:
        ap.error("weight 5 takes a few seconds cold; pass --allow-slow")

    failures = 0

    print("Bernoulli identity")
    print(f"{'k':>2} {'catalog sum':>12} {'(-1)^(k+1) B_k/k':>17} {'ok':>3}")
    for k in range(1, args.max_weight + 1):
        lhs = bernoulli_identity_lhs(k)
        rhs = (-1) ** (k + 1) * bernoulli(k) / k
        ok = lhs == rhs
        failures += not ok
        print(f"{k:>2} {format_rational(lhs):>12} {format_rational(rhs):>17} "
              f"{'yes' if ok else 'NO':>3}")

    print()
    print("Unit-ball identity (coefficients lowest degree first)")
    for k in range(1, min(args.max_weight, 4) + 1):
        ident = unit_ball_identity(k)
        lead = ident.lhs.coeffs[-1] if ident.lhs.coeffs else Fraction(0)
        expected_lead = Fraction((-1) ** k, 2**k * math.factorial(k))
        ok = ident.equal and lead == expected_lead
        failures += not ok
        print(f"  P_{k} = {format_poly(ident.lhs)}")
        print(f"      matches interpolated volume polynomial: "
              f"{'yes' if ident.equal else 'NO'}; leading coefficient "
              f"{format_rational(lead)} (expected {format_rational(expected_lead)})")

    if failures:
        print(f"\n{failures} identity check(s) FAILED")
        return 1
    print("\nall identity checks pass")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
