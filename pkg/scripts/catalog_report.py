"""Print the stable-graph census per weight with wall-clock timings.

For each weight k the row reports how many stable multidigraphs exist, how
many are weakly connected, how many strongly connected, how many of those
have det(A - I) != 0, and how many carry a zero expansion coefficient.
Weight 5 enumerates 589 isomorphism classes and takes a few seconds cold,
so it sits behind --allow-slow like the CLI does.
"""

from __future__ import annotations

import argparse
import time

from tyz import weight_records


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-weight", type=int, default=4, metavar="K")
    ap.add_argument("--allow-slow", action="store_true", help="permit weight 5")
    args = ap.parse_args()

    if not 1 <= args.max_weight <= 5:
        ap.error("--max-weight must be between 1 and 5")
    if args.max_weight >= 5 and not args.allow_slow:
        ap.error("weight 5 takes a few seconds cold; pass --allow-slow")

    print(f"{'k':>2} {'stable':>7} {'conn':>6} {'strong':>7} {'det!=0':>7} "
          f"{'z==0':>5} {'seconds':>8}")
    for k in range(1, args.max_weight + 1):
        t0 = time.perf_counter()
        records = weight_records(k)
        dt = time.perf_counter() - t0
        conn = sum(r.cls != "disconnected" for r in records)
        strong = sum(r.cls == "strongly_connected" for r in records)
        lam = sum(r.cls == "strongly_connected" and r.det_a_minus_i != 0 for r in records)
        zeros = sum(r.z == 0 for r in records)
        print(f"{k:>2} {len(records):>7} {conn:>6} {strong:>7} {lam:>7} "
              f"{zeros:>5} {dt:>8.3f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
