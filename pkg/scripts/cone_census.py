#!/usr/bin/env python3
"""Census of Mori-cone data over a (p, k) grid.

For every pair: minimal node number, optimal class, its self-intersection,
the cone bound tau, the ray-status classification, and how often each status
occurs.  A quick way to see how far the proven extremal-ray families reach.

Usage: python scripts/cone_census.py [--pmax P] [--kmax K]
"""

import argparse
from collections import Counter

from k3gonal.gonality import delta0
from k3gonal.hilbert import extremal_ray_status, optimal_class, rat_str, tau


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pmax", type=int, default=40)
    parser.add_argument("--kmax", type=int, default=6)
    parser.add_argument("--quiet", action="store_true", help="totals only")
    args = parser.parse_args()
    totals = Counter()
    for k in range(2, args.kmax + 1):
        for p in range(2, args.pmax + 1):
            report = extremal_ray_status(p, k)
            totals[report.status] += 1
            if not args.quiet:
                opt = optimal_class(p, k)
                print(
                    f"p={p:3d} k={k}  delta0={delta0(p, k):3d}  "
                    f"{opt.display():>14}  q={rat_str(opt.q):>8}  "
                    f"tau={rat_str(tau(p, k)):>8}  {report.status}"
                )
    grand = sum(totals.values())
    print()
    for status, count in sorted(totals.items()):
        print(f"{status:15s} {count:5d}  ({100 * count / grand:.1f}%)")


if __name__ == "__main__":
    main()
