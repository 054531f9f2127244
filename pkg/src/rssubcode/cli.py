"""Command-line front end.

JSON goes to stdout (or ``--out``), one-line human summaries to stderr.

Exit codes: 0 success, 1 negative verdict (infeasible check, failed
verification, oracle disagreement, decoding below guarantee), 2 malformed
input, 3 cap exceeded, 4 infeasible length, 5 design/instance mismatch,
10 search failure where existence is guaranteed (a defect, please report).
"""

from __future__ import annotations

import argparse
import random
import sys

from .caps import CapExceeded
from .constraints import check_general, check_gmmds, compute_ell
from .designer import (DecodeFailure, InfeasibleLength, SearchConfig, SearchExhausted,
                       TheoremContradiction, decode, design, encode)
from .field import POLICIES, FieldError
from .fileformat import (SCHEMA_VERSION, FormatError, MismatchError, design_to_json, dumps,
                         general_to_json, load_design, load_general, load_instance)
from .oracle import det_identity_oracle, enumerate_general_instances
from .verify import overall, verify_design

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_CAP, EXIT_INFEASIBLE, EXIT_MISMATCH, EXIT_BUG = 0, 1, 2, 3, 4, 5, 10


def _emit(obj, out=None):
    text = dumps(dict(obj, schema_version=SCHEMA_VERSION))
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _say(args, msg):
    if not args.quiet:
        print(msg, file=sys.stderr)


def cmd_check(args):
    inst = load_instance(args.instance)
    ell = compute_ell(inst)
    res = check_gmmds(inst)
    out = {"n": inst.n, "k": inst.k, "ell": ell, "d_upper": inst.n + 1 - ell,
           "length_feasible": inst.n + 1 - ell >= 1}
    if args.command == "bound":
        _emit(out, args.out)
        _say(args, f"ell = {ell}, d <= {inst.n + 1 - ell}")
        return EXIT_OK
    out["feasible_mds"] = res.ok
    if not res.ok:
        out["violating_omega"] = list(res.omega)
    _emit(out, args.out)
    _say(args, f"ell = {ell}, d <= {inst.n + 1 - ell}, MDS with this pattern: "
               f"{'yes' if res.ok else 'no, rows ' + str(list(res.omega))}")
    return EXIT_OK if res.ok else EXIT_NEGATIVE


def cmd_construct(args):
    inst = load_instance(args.instance)
    policy = "forced" if args.q is not None else args.policy
    cfg = SearchConfig(attempts=args.attempts, escalate=args.escalate)
    des = design(inst, policy=policy, q=args.q, config=cfg, seed=args.seed)
    _emit(design_to_json(des, seed=args.seed), args.out)
    st = des.stats
    _say(args, f"[{des.n}, {des.k}, {des.d}] code over GF({des.ctx.q}), ell = {des.ell}; "
               f"search: {st.get('attempts')} random attempts, mode {st.get('mode')}")
    return EXIT_OK


def cmd_verify(args):
    des, G = load_design(args.design)
    inst = load_instance(args.instance)
    try:
        reports = verify_design(des, G, inst)
    except ValueError as exc:
        raise MismatchError(str(exc)) from exc
    verdict = overall(reports)
    _emit({"verdict": verdict, "reports": [r.to_json() for r in reports]}, args.out)
    for r in reports:
        _say(args, f"{r.claim:22s} {r.verdict}")
    return EXIT_NEGATIVE if verdict == "fail" else EXIT_OK


def _finite_bound(pit):
    return pit.error_bound_log2 is not None and pit.error_bound_log2 != float("-inf")


def _t3_single(inst, trials, seed):
    cond = check_general(inst)
    pit = det_identity_oracle(inst, trials=trials, seed=seed)
    out = {"instance": general_to_json(inst), "condition": cond.ok,
           "oracle_verdict": pit.verdict, "degree_bound": pit.degree_bound,
           "prime": pit.prime, "trials_used": pit.trials, "agree": cond.ok == pit.nonzero}
    if not cond.ok:
        out["violating_omega"] = list(cond.omega)
    if not pit.nonzero:
        out["error_bound_log2"] = pit.error_bound_log2 if _finite_bound(pit) else None
    return out


def cmd_t3_oracle(args):
    if args.exhaustive:
        total = agree = 0
        mismatches = []
        for idx, inst in enumerate(enumerate_general_instances(args.k_max, args.n_max)):
            ok = check_general(inst).ok
            nz = det_identity_oracle(inst, trials=args.trials, seed=args.seed + idx).nonzero
            total += 1
            if ok == nz:
                agree += 1
            elif len(mismatches) < 20:
                mismatches.append(general_to_json(inst))
        _emit({"instances": total, "agreements": agree, "agreement_rate": agree / total,
               "k_max": args.k_max, "n_max": args.n_max, "trials": args.trials,
               "disagreements": mismatches}, args.out)
        _say(args, f"{agree}/{total} instances agree")
        return EXIT_OK if agree == total else EXIT_NEGATIVE
    if args.instance is None:
        raise FormatError("t3-oracle needs an instance file or --exhaustive")
    out = _t3_single(load_general(args.instance), args.trials, args.seed)
    _emit(out, args.out)
    _say(args, f"condition {out['condition']}, oracle {out['oracle_verdict']}, agree {out['agree']}")
    return EXIT_OK if out["agree"] else EXIT_NEGATIVE


def cmd_decode_demo(args):
    des, _ = load_design(args.design)
    t = args.errors
    if not 0 <= t < des.n:
        raise FormatError(f"--errors must lie in [0, n) = [0, {des.n})")
    ctx = des.ctx
    rng = random.Random(args.seed)
    successes = 0
    for _ in range(args.trials):
        msg = [rng.randrange(ctx.q) for _ in range(des.k)]
        word = [c.value for c in encode(des, msg)]
        for j in rng.sample(range(des.n), t):
            word[j] = ctx.add(word[j], rng.randrange(1, ctx.q))
        try:
            got = decode(des, word)
        except DecodeFailure:
            continue
        successes += [g.value for g in got] == msg
    guaranteed = t <= (des.d - 1) // 2
    _emit({"errors": t, "trials": args.trials, "successes": successes,
           "guaranteed": guaranteed, "d": des.d}, args.out)
    _say(args, f"{successes}/{args.trials} decoded with {t} errors (d = {des.d})")
    return EXIT_NEGATIVE if guaranteed and successes != args.trials else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rssubcode",
        description="Optimal linear codes with zero-pattern constraints via Reed-Solomon subcodes.")
    parser.add_argument("--quiet", action="store_true", help="suppress stderr summaries")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("check", "bound"):
        p = sub.add_parser(name, help="bound and MDS feasibility of an instance"
                           if name == "check" else "only the distance bound fields")
        p.add_argument("instance")
        p.add_argument("--out")
        p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", help="build an optimal code for an instance")
    p.add_argument("instance")
    p.add_argument("--q", type=int, help="force this field order")
    p.add_argument("--policy", choices=POLICIES, default="smallest-prime-power")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--attempts", type=int, default=SearchConfig.attempts)
    p.add_argument("--escalate", action="store_true",
                   help="try larger fields instead of exhaustive search (non-minimal q)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="audit a design file against an instance")
    p.add_argument("design")
    p.add_argument("instance")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("t3-oracle", help="compare the block condition with a determinant identity test")
    p.add_argument("instance", nargs="?")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true", help="sweep every small block instance")
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--out")
    p.set_defaults(func=cmd_t3_oracle)

    p = sub.add_parser("decode-demo", help="random error-correction trials on a design")
    p.add_argument("design")
    p.add_argument("--errors", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_decode_demo)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TheoremContradiction as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUG
    except (CapExceeded, SearchExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InfeasibleLength as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except MismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (FormatError, FieldError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
