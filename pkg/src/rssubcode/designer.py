"""Optimal codes with a prescribed zero pattern, built as Reed-Solomon subcodes.

Given rows S_1..S_k, the instance is padded with empty rows up to ell rows.
Row i of the ell x ell matrix T_full is the coefficient vector (ascending
powers) of

    f_i(x) = prod_{j in S_i} (x + alpha_j) * prod_{t} (x + gamma_{i,t}),

where the gamma_{i,t} are ell - 1 - |S_i| free auxiliary roots private to row
i.  Every f_i is monic of degree ell - 1, so T_full with its columns reversed
is M[(S_i + aux_i, 1)] on the extended variable set.  Distinct auxiliary roots
per row keep the intersection pattern of the padded instance, which is what
makes T_full nonsingular for suitable values.

The code evaluates at beta_j = -alpha_j, so f_i(beta_j) = 0 for j in S_i and
G = T V has the required zeros.  Any message maps to a polynomial of degree
below ell, which gives weight >= n - ell + 1.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Tuple

from .constraints import ConstraintInstance, GeneralInstance, check_general, compute_ell, pad_to_ell
from .field import FieldContext, FieldElement, make_field
from .poly import Polynomial, gcd_partial, interpolate, root_product_coeffs
from .sylvester import det_int, inverse_int, matmul_int, vecmat_int

log = logging.getLogger(__name__)


class InfeasibleLength(ValueError):
    """ell > n: no nonzero minimum distance is possible under the constraints."""


class SearchExhausted(RuntimeError):
    """The configured search budget ran out before a valid point set was found."""


class TheoremContradiction(RuntimeError):
    """Exhaustive search found no valid points although existence is guaranteed."""


class DecodeFailure(ValueError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    attempts: int = 10_000
    escalate: bool = False          # move to larger fields instead of exhaustive search
    max_escalations: int = 4
    node_cap: int = 200_000         # deterministic search nodes before giving up
    lookahead: int = 4              # random completions tried per search node


@dataclass
class CodeDesign:
    ctx: FieldContext
    instance: ConstraintInstance
    n: int
    k: int
    ell: int
    d: int
    alphas: Tuple[int, ...]
    aux_roots: Tuple[Tuple[int, ...], ...]
    T_full: Tuple[Tuple[int, ...], ...]
    stats: Dict[str, object] = field(default_factory=dict, compare=False)

    @property
    def eval_points(self):
        return tuple(self.ctx.neg(a) for a in self.alphas)

    @property
    def T(self):
        return self.T_full[:self.k]

    @cached_property
    def V(self):
        ctx = self.ctx
        return tuple(tuple(ctx.pow(b, i) for b in self.eval_points) for i in range(self.ell))

    @cached_property
    def G(self):
        return tuple(tuple(row) for row in matmul_int(self.ctx, self.T, self.V))

    @cached_property
    def T_inverse(self):
        return inverse_int(self.ctx, self.T_full)

    def sylvester_instance(self):
        """The extended instance whose M is T_full with columns reversed."""
        return _extended_instance(self.n, self.ell, self.padded_sets(), self.aux_roots)[0]

    def padded_sets(self):
        return self.instance.sets + (frozenset(),) * (self.ell - self.k)


def _extended_instance(n, ell, sets, aux_roots):
    blocks, values_index = [], n
    for s, aux in zip(sets, aux_roots):
        extra = frozenset(range(values_index, values_index + len(aux)))
        values_index += len(aux)
        blocks.append((frozenset(s) | extra, 1))
    return GeneralInstance(k=ell, n=values_index, blocks=tuple(blocks)), values_index


def _row_coeffs(ctx, s, alphas, aux):
    return root_product_coeffs(ctx, [alphas[j] for j in sorted(s)] + list(aux))


class _Search:
    def __init__(self, ctx, n, ell, sets, rng):
        self.ctx = ctx
        self.n = n
        self.ell = ell
        self.sets = [sorted(s) for s in sets]
        self.aux_counts = [ell - 1 - len(s) for s in sets]
        self.num_aux = sum(self.aux_counts)
        self.rng = rng

    def split(self, values):
        alphas = values[:self.n]
        aux, pos = [], self.n
        for c in self.aux_counts:
            aux.append(tuple(values[pos:pos + c]))
            pos += c
        return tuple(alphas), tuple(aux)

    def t_full(self, values):
        alphas, aux = self.split(values)
        return [_row_coeffs(self.ctx, s, alphas, a) for s, a in zip(self.sets, aux)]

    def valid(self, values):
        return det_int(self.ctx, self.t_full(values)) != 0

    def complete(self, prefix):
        """Random completion of a partial assignment, alphas kept distinct."""
        q = self.ctx.q
        values = list(prefix)
        if len(values) < self.n:
            used = set(values)
            pool = [v for v in range(q) if v not in used]
            values += self.rng.sample(pool, self.n - len(values))
        values += [self.rng.randrange(q) for _ in range(self.n + self.num_aux - len(values))]
        return values

    def random_phase(self, attempts):
        for i in range(attempts):
            values = self.complete([])
            if self.valid(values):
                return values, i + 1
        return None, attempts

    def exhaustive_phase(self, node_cap, lookahead):
        """Lexicographic depth-first search with random lookahead at each node."""
        q = self.ctx.q
        total = self.n + self.num_aux
        nodes = 0
        stack = [[]]
        while stack:
            prefix = stack.pop()
            nodes += 1
            if nodes > node_cap:
                raise SearchExhausted(f"deterministic search exceeded {node_cap} nodes")
            if len(prefix) == total:
                if self.valid(prefix):
                    return prefix, nodes
                continue
            for _ in range(lookahead):
                values = self.complete(prefix)
                if self.valid(values):
                    return values, nodes
            children = range(q)
            if len(prefix) < self.n:
                children = [v for v in children if v not in prefix]
            for v in reversed(list(children)):
                stack.append(prefix + [v])
        return None, nodes


def design(inst, policy="smallest-prime-power", q=None, config=SearchConfig(), seed=0):
    """Build an optimal [n, k, n - ell + 1] code with zeros at (i, j) for j in S_i."""
    ell = compute_ell(inst)
    d = inst.n + 1 - ell
    if d < 1:
        raise InfeasibleLength(f"ell = {ell} exceeds n = {inst.n}; no code meets the constraints")
    padded = pad_to_ell(inst)
    min_size = inst.n + ell - 1
    if q is not None:
        policy = "forced"
    ctx = make_field(max(min_size, 2), policy, q)
    rng = random.Random(seed)
    stats = {"attempts": 0, "mode": "random", "q_requested_min": min_size}

    escalations = 0
    while True:
        search = _Search(ctx, inst.n, ell, padded.sets, rng)
        values, used = search.random_phase(config.attempts)
        stats["attempts"] += used
        if values is not None:
            break
        if config.escalate and escalations < config.max_escalations:
            escalations += 1
            ctx = make_field(ctx.q + 1, "smallest-prime-power")
            stats["mode"] = "random-escalated"
            log.info("random phase failed, escalating to q=%d", ctx.q)
            continue
        stats["mode"] = "exhaustive"
        values, nodes = search.exhaustive_phase(config.node_cap, config.lookahead)
        stats["nodes"] = nodes
        if values is None:
            if ctx.q >= min_size:
                raise TheoremContradiction(
                    f"no valid evaluation points over GF({ctx.q}) for n={inst.n}, ell={ell}; "
                    "existence is guaranteed at this field size, please report this as a bug")
            raise SearchExhausted(f"no valid evaluation points over GF({ctx.q})")
        break

    alphas, aux = search.split(values)
    t_full = tuple(tuple(r) for r in search.t_full(values))
    stats["escalations"] = escalations
    out = CodeDesign(ctx=ctx, instance=inst, n=inst.n, k=inst.k, ell=ell, d=d,
                     alphas=alphas, aux_roots=aux, T_full=t_full, stats=stats)
    _assert_design(out)
    return out


def _assert_design(des):
    ctx = des.ctx
    assert len(set(des.alphas)) == des.n
    if des.stats.get("mode") != "random-escalated":
        assert ctx.q >= des.n + des.ell - 1
    assert des.d == des.n - des.ell + 1
    assert det_int(ctx, des.T_full) != 0
    ext = des.sylvester_instance()
    assert check_general(ext).ok
    for i, s in enumerate(des.instance.sets):
        for j in s:
            assert des.G[i][j] == 0


def encode(des, message):
    if len(message) != des.k:
        raise ValueError(f"message length {len(message)} != k = {des.k}")
    ctx = des.ctx
    m = [ctx(v).value for v in message]
    return [FieldElement(ctx, v) for v in vecmat_int(ctx, m, des.G)]


def decode(des, received):
    """Recover the message from a word with at most (d-1)//2 symbol errors.

    Gao's decoder for the parent [n, ell] Reed-Solomon code followed by a
    solve against T_full.  Raises DecodeFailure when the received word is too
    far from the subcode.
    """
    ctx = des.ctx
    n, ell = des.n, des.ell
    if len(received) != n:
        raise ValueError(f"received word has length {len(received)}, expected {n}")
    r = [ctx(v).value for v in received]
    betas = des.eval_points
    big_r = interpolate(ctx, betas, r)
    # prod (x - beta_j) = prod (x + alpha_j)
    g0 = Polynomial._raw(ctx, root_product_coeffs(ctx, des.alphas))
    g, v = gcd_partial(g0, big_r, (n + ell + 1) // 2)
    if v.is_zero():
        raise DecodeFailure("degenerate key equation")
    f, rem = g.divrem(v)
    if not rem.is_zero() or f.degree >= ell:
        raise DecodeFailure("too many errors for the parent Reed-Solomon code")
    c = list(f.ints) + [0] * (ell - len(f.ints))
    full = vecmat_int(ctx, c, des.T_inverse)
    if any(full[des.k:]):
        raise DecodeFailure("nearest Reed-Solomon codeword lies outside the subcode")
    return [FieldElement(ctx, x) for x in full[:des.k]]


def field_policy_min(inst):
    """Smallest admissible field order n + ell - 1 for an instance."""
    return inst.n + compute_ell(inst) - 1

