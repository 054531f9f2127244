"""Zero-pattern instances and the subset-intersection conditions on them.

All conditions are decided by brute force over the nonempty subsets of the
rows (or blocks).  Subsets are visited depth first in lexicographic order of
their sorted index tuples, ({0}, {0,1}, {0,1,2}, ..., {1}, {1,2}, ...), so the
reported witness is always the lexicographically first violator.  Row and
column indices are 0-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

from .caps import CAPS, CapExceeded


def _mask(s):
    out = 0
    for j in s:
        out |= 1 << j
    return out


@dataclass(frozen=True)
class ConstraintInstance:
    """Design problem: a k x n generator with G[i][j] = 0 for j in sets[i]."""

    n: int
    k: int
    sets: Tuple[frozenset, ...]

    def __post_init__(self):
        sets = tuple(frozenset(int(j) for j in s) for s in self.sets)
        object.__setattr__(self, "sets", sets)
        if self.n < 1 or self.k < 1:
            raise ValueError("need n >= 1 and k >= 1")
        if len(sets) != self.k:
            raise ValueError(f"expected {self.k} zero sets, got {len(sets)}")
        for i, s in enumerate(sets):
            bad = [j for j in s if not 0 <= j < self.n]
            if bad:
                raise ValueError(f"row {i}: column indices {sorted(bad)} outside [0, {self.n})")

    @classmethod
    def from_lists(cls, n, sets):
        return cls(n=n, k=len(sets), sets=tuple(frozenset(s) for s in sets))

    @property
    def masks(self):
        return tuple(_mask(s) for s in self.sets)


@dataclass(frozen=True)
class GeneralInstance:
    """A block specification [(S_i, r_i)] with sum r_i = k and |S_i| + r_i <= k."""

    k: int
    n: int
    blocks: Tuple[Tuple[frozenset, int], ...]

    def __post_init__(self):
        blocks = tuple((frozenset(int(j) for j in s), int(r)) for s, r in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks:
            raise ValueError("need at least one block")
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if sum(r for _, r in blocks) != self.k:
            raise ValueError("block sizes must sum to k")
        for i, (s, r) in enumerate(blocks):
            if r < 1:
                raise ValueError(f"block {i}: r must be positive")
            if len(s) + r > self.k:
                raise ValueError(f"block {i}: |S|+r = {len(s) + r} exceeds k = {self.k}")
            if any(not 0 <= j < self.n for j in s):
                raise ValueError(f"block {i}: indices outside [0, {self.n})")

    @property
    def m(self):
        return len(self.blocks)

    @property
    def sets(self):
        return tuple(s for s, _ in self.blocks)

    @property
    def sizes(self):
        return tuple(r for _, r in self.blocks)


class ConditionResult(NamedTuple):
    ok: bool
    omega: Optional[Tuple[int, ...]] = None

    def __bool__(self):
        return self.ok


def _subsets(masks, extra=None):
    """Yield (omega, intersection_mask, extra_acc) depth first, lexicographic order.

    ``extra`` is an optional (values, combine, start) triple folded along omega.
    """
    count = len(masks)
    if count > CAPS.subset_k:
        raise CapExceeded(f"{count} rows exceed the subset-enumeration cap {CAPS.subset_k}")
    stack = [((i,), masks[i], None if extra is None else extra[1](extra[2], extra[0][i]))
             for i in range(count - 1, -1, -1)]
    while stack:
        omega, inter, acc = stack.pop()
        yield omega, inter, acc
        for i in range(count - 1, omega[-1], -1):
            stack.append((omega + (i,), inter & masks[i],
                          None if extra is None else extra[1](acc, extra[0][i])))


def compute_ell(inst):
    """max over nonempty omega of |intersection of S_i over omega| + |omega|."""
    best = 0
    for omega, inter, _ in _subsets(inst.masks):
        best = max(best, inter.bit_count() + len(omega))
    return best


def singleton_bound(inst):
    """Upper bound n + 1 - ell on the minimum distance; <= 0 means no code exists."""
    return inst.n + 1 - compute_ell(inst)


def check_gmmds(inst):
    """|intersection over omega| <= k - |omega| for every nonempty omega."""
    k = inst.k
    for omega, inter, _ in _subsets(inst.masks):
        if inter.bit_count() > k - len(omega):
            return ConditionResult(False, omega)
    return ConditionResult(True)


def check_general(inst):
    """|intersection| + sum r_i <= max(|S_i| + r_i) over every nonempty omega of blocks."""
    masks = tuple(_mask(s) for s in inst.sets)
    weights = tuple((r, len(s) + r) for s, r in inst.blocks)

    def fold(acc, w):
        if acc is None:
            return w
        return (acc[0] + w[0], max(acc[1], w[1]))

    for omega, inter, (rsum, top) in _subsets(masks, (weights, fold, None)):
        if inter.bit_count() + rsum > top:
            return ConditionResult(False, omega)
    return ConditionResult(True)


def pad_to_ell(inst):
    """Append ell - k empty rows; the result satisfies check_gmmds at dimension ell."""
    ell = compute_ell(inst)
    if ell == inst.k:
        return inst
    padded = ConstraintInstance(n=inst.n, k=ell,
                                sets=inst.sets + (frozenset(),) * (ell - inst.k))
    assert check_gmmds(padded).ok, "padding failed to reach the GM-MDS condition"
    return padded
