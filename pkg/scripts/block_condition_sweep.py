"""Sweep every small block instance and compare the intersection condition
with the randomized determinant test, broken down by (k, n)."""

import argparse
import collections
import time

from rssubcode.constraints import check_general
from rssubcode.oracle import det_identity_oracle, enumerate_general_instances


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-max", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=4)
    ap.add_argument("--trials", type=int, default=20)
    args = ap.parse_args()

    stats = collections.defaultdict(lambda: [0, 0, 0])   # total, nonsingular, disagreements
    start = time.perf_counter()
    for idx, gi in enumerate(enumerate_general_instances(args.k_max, args.n_max)):
        cond = check_general(gi).ok
        nz = det_identity_oracle(gi, trials=args.trials, seed=idx).nonzero
        row = stats[gi.k, gi.n]
        row[0] += 1
        row[1] += cond
        row[2] += cond != nz
    print(f"{'k':>2} {'n':>2} {'instances':>10} {'nonsingular':>12} {'disagree':>9}")
    for (k, n), (total, good, bad) in sorted(stats.items()):
        print(f"{k:>2} {n:>2} {total:>10} {good:>12} {bad:>9}")
    total = sum(r[0] for r in stats.values())
    bad = sum(r[2] for r in stats.values())
    print(f"{total} instances, {bad} disagreements, {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
