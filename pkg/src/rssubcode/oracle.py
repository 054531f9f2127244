"""Independent ground truth: brute-force distances, pattern audits, identity tests.

Nothing here relies on the design machinery.  The identity test evaluates
det M at random points of GF(P) for the Mersenne prime P = 2^61 - 1; a nonzero
value certifies that det M is not the zero polynomial, and r all-zero trials
leave a one-sided error of at most (D / P)^r with D = sum r_i |S_i|, the sum
of the largest entry degrees over the rows.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Tuple

import numpy as np

from .caps import CAPS, CapExceeded
from .constraints import ConstraintInstance, GeneralInstance, check_gmmds, compute_ell, pad_to_ell
from .field import FieldContext
from .sylvester import build_m_int, det_int

PIT_PRIME = 2**61 - 1

IDENTICALLY_ZERO = "identically-zero-believed"
NONZERO = "nonzero-certified"


@dataclass
class OracleReport:
    claim: str
    verdict: str                      # "pass", "fail" or "skipped(cap)"
    measured: Dict[str, Any] = field(default_factory=dict)
    counterexample: Optional[Dict[str, Any]] = None

    @property
    def passed(self):
        return self.verdict == "pass"

    def to_json(self):
        out = {"claim": self.claim, "verdict": self.verdict, "measured": self.measured}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _ints(G):
    return [[int(v) for v in row] for row in G]


def min_distance_bruteforce(G, ctx, lower_bound=None, chunk_log2=18):
    """Minimum Hamming weight of mG over all q^k - 1 nonzero messages.

    With ``lower_bound`` the scan stops as soon as a codeword of that weight
    shows up; the answer is then exact only if the bound is a proven one.
    A rank-deficient G yields 0.
    """
    G = _ints(G)
    k = len(G)
    if k == 0:
        raise ValueError("empty generator matrix")
    n = len(G[0])
    q, p, m = ctx.q, ctx.p, ctx.m
    if q**k > 2**CAPS.distance_log2:
        raise CapExceeded(f"q^k = {q}^{k} exceeds the brute-force cap 2^{CAPS.distance_log2}")
    if k == 1:
        return sum(1 for v in G[0] if v)

    # scaled[i][a] = digit vectors of a * G_i, shape (q, n, m)
    scaled = np.empty((k, q, n, m), dtype=np.int32)
    for i, row in enumerate(G):
        for a in range(q):
            scaled[i, a] = [ctx.to_coeffs(ctx.mul(a, g)) for g in row]

    inner_rows = 1
    while inner_rows < k - 1 and q ** (inner_rows + 1) <= 2**chunk_log2:
        inner_rows += 1
    outer_rows = k - inner_rows

    inner = np.zeros((1, n, m), dtype=np.int32)
    for i in range(outer_rows, k):
        inner = ((inner[:, None] + scaled[i][None, :]) % p).reshape(-1, n, m)

    best = n + 1
    for prefix in itertools.product(range(q), repeat=outer_rows):
        shift = np.zeros((n, m), dtype=np.int32)
        for i, a in enumerate(prefix):
            shift += scaled[i, a]
        words = (inner + shift) % p
        weights = words.any(axis=2).sum(axis=1)
        if not any(prefix):
            weights = weights[1:]   # drop the zero message
        if weights.size:
            best = min(best, int(weights.min()))
        if lower_bound is not None and best <= lower_bound:
            break
    return best


def verify_zero_pattern(G, inst):
    G = _ints(G)
    if len(G) != inst.k or any(len(row) != inst.n for row in G):
        raise ValueError(f"G shape does not match a {inst.k} x {inst.n} instance")
    bad = [(i, j) for i, s in enumerate(inst.sets) for j in sorted(s) if G[i][j] != 0]
    if bad:
        return OracleReport("zero-pattern", "fail", {"violations": len(bad)},
                            {"entries": [list(e) for e in bad]})
    return OracleReport("zero-pattern", "pass", {"constrained_entries": sum(len(s) for s in inst.sets)})


@dataclass
class IdentityResult:
    verdict: str
    degree_bound: int
    prime: int
    trials: int
    nonzero_trial: Optional[int] = None
    # log2 of the one-sided error bound; None when nonzero is certified
    error_bound_log2: Optional[float] = None

    @property
    def nonzero(self):
        return self.verdict == NONZERO


def degree_bound(inst):
    return sum(r * len(s) for s, r in inst.blocks)


def det_identity_oracle(inst, trials=20, seed=0, prime=PIT_PRIME):
    """Randomized test of whether det M[(S_i, r_i)] is the zero polynomial."""
    if trials < 1:
        raise ValueError("need at least one trial")
    ctx = _pit_field(prime)
    rng = random.Random(seed)
    D = degree_bound(inst)
    for t in range(trials):
        alphas = [rng.randrange(prime) for _ in range(inst.n)]
        if det_int(ctx, build_m_int(ctx, inst, alphas)) != 0:
            return IdentityResult(NONZERO, D, prime, t + 1, nonzero_trial=t)
    # D == 0 means det M is a constant, so zero evaluations are exact
    log_err = trials * math.log2(D / prime) if D else -math.inf
    return IdentityResult(IDENTICALLY_ZERO, D, prime, trials, error_bound_log2=log_err)


_PIT_FIELDS = {}


def _pit_field(prime):
    if prime not in _PIT_FIELDS:
        _PIT_FIELDS[prime] = FieldContext(prime)
    return _PIT_FIELDS[prime]


def compositions(k, m):
    """Ordered tuples of m positive integers summing to k, lexicographic."""
    if m == 1:
        yield (k,)
        return
    for first in range(1, k - m + 2):
        for rest in compositions(k - first, m - 1):
            yield (first,) + rest


def _all_subsets(n):
    return [frozenset(c) for size in range(n + 1) for c in itertools.combinations(range(n), size)]


def general_instances(k, n):
    """Every GeneralInstance with this exact k and n."""
    subsets = _all_subsets(n)
    for m in range(1, k + 1):
        for rs in compositions(k, m):
            choices = [[s for s in subsets if len(s) + r <= k] for r in rs]
            for sets in itertools.product(*choices):
                yield GeneralInstance(k=k, n=n, blocks=tuple(zip(sets, rs)))


def enumerate_general_instances(k_max=4, n_max=4) -> Iterator[GeneralInstance]:
    """All instances with 1 <= k <= k_max and 0 <= n <= n_max, k-major order."""
    if k_max > CAPS.enum_k or n_max > CAPS.enum_n:
        raise CapExceeded(f"enumeration limited to k <= {CAPS.enum_k}, n <= {CAPS.enum_n}")
    for k in range(1, k_max + 1):
        for n in range(0, n_max + 1):
            yield from general_instances(k, n)


def _random_sets(rng, k, n, density):
    return [frozenset(j for j in range(n) if rng.random() < density) for _ in range(k)]


def random_feasible_instance(k, n, density, seed, max_tries=100_000):
    """Random zero pattern with ell <= n, so that a code with d >= 1 exists."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    rng = random.Random(seed)
    for _ in range(max_tries):
        inst = ConstraintInstance.from_lists(n, _random_sets(rng, k, n, density))
        if compute_ell(inst) <= n:
            assert check_gmmds(pad_to_ell(inst)).ok
            return inst
    return ConstraintInstance.from_lists(n, [()] * k)


def random_gmmds_instance(k, n, density, seed, max_tries=100_000):
    """Random zero pattern satisfying the MDS intersection condition (ell == k)."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    rng = random.Random(seed)
    for _ in range(max_tries):
        inst = ConstraintInstance.from_lists(n, _random_sets(rng, k, n, density))
        if check_gmmds(inst).ok:
            return inst
    return ConstraintInstance.from_lists(n, [()] * k)


def random_general_instance(k, n, seed):
    """Uniform-ish random member of S_{k,m,n}: random composition, random admissible sets."""
    rng = random.Random(seed)
    m = rng.randint(1, k)
    cuts = sorted(rng.sample(range(1, k), m - 1))
    rs = [b - a for a, b in zip([0] + cuts, cuts + [k])]
    blocks = []
    for r in rs:
        size = rng.randint(0, min(n, k - r))
        blocks.append((frozenset(rng.sample(range(n), size)), r))
    return GeneralInstance(k=k, n=n, blocks=tuple(blocks))


def random_constrained_matrix(inst, ctx, seed):
    """Uniform entries off the pattern (zeros allowed), zeros on it."""
    rng = random.Random(seed)
    return [[0 if j in s else rng.randrange(ctx.q) for j in range(inst.n)] for s in inst.sets]
