#!/usr/bin/env python3
"""Print the negative self-intersection spectra of optimal curve classes.

For each k, lists every negative Beauville-Bogomolov square attained by an
optimal gonality class with p up to the bound, together with one witness
(p, delta0) per value.  The k = 2, 3, 4 columns are the known small tables;
larger k extend them.

Usage: python scripts/qvalue_tables.py [--kmax K] [--pmax P]
"""

import argparse
from collections import defaultdict

from k3gonal.gonality import delta0
from k3gonal.hilbert import q_case, rat_str


def spectrum(k: int, p_max: int):
    witnesses = defaultdict(list)
    for p in range(2, p_max + 1):
        d0 = delta0(p, k)
        q = q_case(p, k, d0)
        if q < 0:
            witnesses[q].append((p, d0))
    return witnesses


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--kmax", type=int, default=6)
    parser.add_argument("--pmax", type=int, default=400)
    args = parser.parse_args()
    for k in range(2, args.kmax + 1):
        witnesses = spectrum(k, args.pmax)
        print(f"k = {k} (p <= {args.pmax}): {len(witnesses)} negative values")
        for q in sorted(witnesses):
            first = witnesses[q][0]
            print(
                f"  q = {rat_str(q):>7}   attained {len(witnesses[q]):3d} times, "
                f"first at p={first[0]}, delta0={first[1]}"
            )
        print()


if __name__ == "__main__":
    main()
