"""Design codes for random zero patterns and confirm the distance is exactly n - ell + 1."""

import argparse
import random
import time

from rssubcode.constraints import compute_ell
from rssubcode.designer import design
from rssubcode.oracle import min_distance_bruteforce, random_feasible_instance


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=50)
    ap.add_argument("--k-max", type=int, default=5)
    ap.add_argument("--n-max", type=int, default=10)
    ap.add_argument("--density", type=float, default=0.4)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    tight = 0
    start = time.perf_counter()
    print(f"{'n':>3} {'k':>3} {'ell':>4} {'q':>4} {'d':>3} {'d_min':>6} {'tries':>6}  sets")
    for _ in range(args.count):
        k = rng.randint(1, args.k_max)
        n = rng.randint(k, args.n_max)
        ci = random_feasible_instance(k, n, args.density, rng.randrange(2**32))
        des = design(ci, seed=rng.randrange(2**32))
        dmin = min_distance_bruteforce(des.G, des.ctx)
        tight += dmin == des.d
        sets = [sorted(s) for s in ci.sets]
        print(f"{n:>3} {k:>3} {compute_ell(ci):>4} {des.ctx.q:>4} {des.d:>3} {dmin:>6} "
              f"{des.stats['attempts']:>6}  {sets}")
    print(f"{tight}/{args.count} tight, {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
