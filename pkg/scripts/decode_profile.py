"""Decoding success rate against the number of injected errors for one design."""

import argparse
import random

from rssubcode.constraints import ConstraintInstance
from rssubcode.designer import DecodeFailure, decode, design, encode


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=12)
    ap.add_argument("--sets", default="0,1;2;;", help="zero sets, ';' between rows, ',' inside")
    ap.add_argument("--trials", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    sets = [[int(x) for x in row.split(",") if x] for row in args.sets.split(";")]
    des = design(ConstraintInstance.from_lists(args.n, sets), seed=args.seed)
    ctx = des.ctx
    rng = random.Random(args.seed)
    print(f"[{des.n}, {des.k}, {des.d}] over GF({ctx.q}), guaranteed radius {(des.d - 1) // 2}")
    for t in range(des.n - des.ell + 2):
        ok = fail = 0
        for _ in range(args.trials):
            msg = [rng.randrange(ctx.q) for _ in range(des.k)]
            word = [c.value for c in encode(des, msg)]
            for j in rng.sample(range(des.n), t):
                word[j] = ctx.add(word[j], rng.randrange(1, ctx.q))
            try:
                ok += [v.value for v in decode(des, word)] == msg
            except DecodeFailure:
                fail += 1
        wrong = args.trials - ok - fail
        print(f"t={t:>2}  correct {ok:>4}  reported failure {fail:>4}  wrong message {wrong:>4}")


if __name__ == "__main__":
    main()
