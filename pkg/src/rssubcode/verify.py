"""Audit a design against its instance using the oracles only."""

from __future__ import annotations

from .caps import CapExceeded
from .constraints import compute_ell
from .oracle import OracleReport, min_distance_bruteforce, verify_zero_pattern
from .sylvester import det_int, matmul_int


def verify_design(des, G, inst):
    """Run every check on ``G`` (the matrix as stored) and return the reports.

    Raises ValueError when the design does not describe ``inst`` at all.
    """
    if des.n != inst.n or des.k != inst.k:
        raise ValueError(f"design is {des.k} x {des.n}, instance is {inst.k} x {inst.n}")
    ctx = des.ctx
    reports = [verify_zero_pattern(G, inst)]

    ell = compute_ell(inst)
    ok = des.ell == ell and des.d == inst.n - ell + 1
    reports.append(OracleReport("parameters", "pass" if ok else "fail",
                                {"ell": ell, "d": inst.n - ell + 1, "q": ctx.q,
                                 "q_at_least_n_plus_ell_minus_1": ctx.q >= inst.n + ell - 1},
                                None if ok else {"design_ell": des.ell, "design_d": des.d}))

    points = des.eval_points
    dup = len(set(points)) != len(points)
    reports.append(OracleReport("distinct-eval-points", "fail" if dup else "pass",
                                {"n": len(points)}, {"eval_points": list(points)} if dup else None))

    det = det_int(ctx, des.T_full)
    reports.append(OracleReport("T-invertible", "pass" if det else "fail", {"det": det},
                                None if det else {"T_full": [list(r) for r in des.T_full]}))

    expected = matmul_int(ctx, des.T, des.V)
    diff = [(i, j) for i in range(des.k) for j in range(des.n) if expected[i][j] != G[i][j]]
    reports.append(OracleReport("G-equals-TV", "fail" if diff else "pass", {"mismatches": len(diff)},
                                {"entries": [list(e) for e in diff]} if diff else None))

    try:
        dmin = min_distance_bruteforce(G, ctx)
    except CapExceeded as exc:
        reports.append(OracleReport("min-distance", "skipped(cap)", {"reason": str(exc)}))
    else:
        target = inst.n - ell + 1
        good = dmin == target
        reports.append(OracleReport("min-distance", "pass" if good else "fail",
                                    {"d_min": dmin, "expected": target},
                                    None if good else {"d_min": dmin, "expected": target}))
    return reports


def overall(reports):
    if any(r.verdict == "fail" for r in reports):
        return "fail"
    if any(r.verdict != "pass" for r in reports):
        return "pass-with-skips"
    return "pass"
