#!/usr/bin/env python3
"""Scan the crank-minus-rank moment difference for negative coefficients.

The non-negativity is an observation worth recording, not a theorem:
this script reports the minimum coefficient per cutoff and lists any
negative findings rather than asserting.
"""

import argparse
import sys
from collections import defaultdict

from qlab.identities import positivity_scan
from qlab.rational import format_rat


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=8)
    parser.add_argument("--order", type=int, default=50)
    args = parser.parse_args()

    rows = positivity_scan(args.n_max, args.order)
    per_cutoff = defaultdict(list)
    for row in rows:
        per_cutoff[row.n_value].append(row)
    negatives = [r for r in rows if not r.non_negative]
    for n_value, entries in sorted(per_cutoff.items()):
        smallest = min(entries, key=lambda r: r.coeff)
        print(
            f"N={n_value}: {len(entries)} coefficients, "
            f"min {format_rat(smallest.coeff)} at q^{smallest.order}"
        )
    if negatives:
        print(f"\n{len(negatives)} NEGATIVE coefficients found:")
        for row in negatives[:20]:
            print(f"  N={row.n_value} q^{row.order}: {format_rat(row.coeff)}")
    else:
        print(f"\nno negative coefficients up to N={args.n_max}, T={args.order}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
