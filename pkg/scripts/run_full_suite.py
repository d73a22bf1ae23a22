#!/usr/bin/env python3
"""Run the default verification profile and write the full report.

Profile: T=40, 5 sampled environments per identity, cutoffs N=1..6,
seed 0.  Prints a per-identity summary and exits 1 on any failure.
"""

import argparse
import json
import sys
import time
from collections import defaultdict

from qlab.identities import run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=5)
    parser.add_argument("--order", type=int, default=40)
    parser.add_argument("--n-max", type=int, default=6)
    parser.add_argument("--out", default="suite_report.json")
    args = parser.parse_args()

    started = time.perf_counter()
    reports = run_suite(
        seed=args.seed,
        samples_per_identity=args.samples,
        order=args.order,
        n_max=args.n_max,
    )
    elapsed = time.perf_counter() - started

    by_id = defaultdict(lambda: [0, 0])
    for r in reports:
        by_id[r.identity_id][0] += 1
        by_id[r.identity_id][1] += 0 if r.passed else 1
    for identity_id, (total, fails) in sorted(by_id.items()):
        flag = "ok" if fails == 0 else f"{fails} FAILED"
        print(f"{identity_id}: {total} checks, {flag}")

    failures = sum(1 for r in reports if not r.passed)
    print(f"\n{len(reports)} verifications in {elapsed:.1f}s, {failures} failures")
    with open(args.out, "w") as handle:
        json.dump([r.to_json_dict() for r in reports], handle, indent=2)
    print(f"report written to {args.out}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
