import itertools
import random

import pytest
from hypothesis import given, strategies as st

from rssubcode.caps import CapExceeded
from rssubcode.constraints import (ConstraintInstance, GeneralInstance, check_general, check_gmmds,
                                   compute_ell, pad_to_ell, singleton_bound)


def inst(n, *sets):
    return ConstraintInstance.from_lists(n, [list(s) for s in sets])


def omegas(count):
    for size in range(1, count + 1):
        yield from itertools.combinations(range(count), size)


def meet(sets, omega):
    return frozenset.intersection(*(sets[i] for i in omega))


def ell_oracle(ci):
    return max(len(meet(ci.sets, om)) + len(om) for om in omegas(ci.k))


def gmmds_oracle(ci):
    return all(len(meet(ci.sets, om)) <= ci.k - len(om) for om in omegas(ci.k))


def general_oracle(gi):
    sets, rs = gi.sets, gi.sizes
    return all(len(meet(sets, om)) + sum(rs[i] for i in om) <= max(len(sets[i]) + rs[i] for i in om)
               for om in omegas(gi.m))


@st.composite
def instances(draw, max_k=6, max_n=8):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, max_k))
    sets = draw(st.lists(st.sets(st.integers(0, n - 1)), min_size=k, max_size=k))
    return ConstraintInstance.from_lists(n, sets)


@st.composite
def general_instances(draw, max_k=6, max_n=5):
    k = draw(st.integers(1, max_k))
    n = draw(st.integers(0, max_n))
    m = draw(st.integers(1, k))
    cuts = sorted(draw(st.sets(st.integers(1, k - 1), min_size=m - 1, max_size=m - 1))) if m > 1 else []
    rs = [b - a for a, b in zip([0] + cuts, cuts + [k])]
    blocks = []
    for r in rs:
        size = draw(st.integers(0, min(n, k - r)))
        s = draw(st.sets(st.integers(0, n - 1), min_size=size, max_size=size)) if n else set()
        blocks.append((s, r))
    return GeneralInstance(k=k, n=n, blocks=tuple(blocks))


def test_ell_examples():
    assert compute_ell(inst(4, {0, 1}, {2})) == 3
    assert compute_ell(inst(6, (), (), (), ())) == 4
    assert compute_ell(inst(5, {0, 1, 2})) == 4


def test_singleton_bound_examples():
    assert singleton_bound(inst(4, {0, 1}, {2})) == 2
    assert singleton_bound(inst(6, (), (), ())) == 4
    for n in range(2, 9):
        assert singleton_bound(inst(n, range(n - 1))) == 1


def test_gmmds_examples():
    assert check_gmmds(inst(4, {0, 1}, {2, 3}, ())).ok
    res = check_gmmds(inst(3, {0, 1}, {1, 2}, {1}))
    assert not res.ok and res.omega == (0, 1, 2)
    res = check_gmmds(inst(1, {0}, {0}))
    assert not res and res.omega == (0, 1)


def test_general_examples():
    assert check_general(GeneralInstance(3, 2, ((set(), 3),))).ok
    assert check_general(GeneralInstance(2, 2, (({0}, 1), ({1}, 1)))).ok
    res = check_general(GeneralInstance(2, 1, (({0}, 1), ({0}, 1))))
    assert not res.ok and res.omega == (0, 1)


def test_pad_examples():
    padded = pad_to_ell(inst(4, {0, 1}, {2}))
    assert padded.k == 3 and padded.sets[2] == frozenset()
    unchanged = inst(4, {0}, {1})
    assert pad_to_ell(unchanged) is unchanged
    padded = pad_to_ell(inst(4, {0, 1}))
    assert padded.k == 3 and padded.sets[1:] == (frozenset(), frozenset())


def test_invalid_instances():
    with pytest.raises(ValueError):
        inst(3, {3})
    with pytest.raises(ValueError):
        ConstraintInstance(n=3, k=2, sets=(frozenset(),))
    with pytest.raises(ValueError):
        GeneralInstance(2, 2, (({0, 1}, 1), (set(), 1)))   # |S| + r > k
    with pytest.raises(ValueError):
        GeneralInstance(3, 2, (({0}, 1), (set(), 1)))      # sum r != k


def test_subset_cap():
    big = ConstraintInstance.from_lists(30, [[]] * 25)
    with pytest.raises(CapExceeded):
        compute_ell(big)


@given(instances())
def test_ell_matches_oracle(ci):
    assert compute_ell(ci) == ell_oracle(ci) >= ci.k


@given(instances())
def test_gmmds_matches_oracle(ci):
    res = check_gmmds(ci)
    assert res.ok == gmmds_oracle(ci)
    if not res.ok:
        # witness is the lexicographically first violator
        first = min((om for om in omegas(ci.k)
                     if len(meet(ci.sets, om)) > ci.k - len(om)))
        assert res.omega == first


@given(general_instances())
def test_general_matches_oracle(gi):
    res = check_general(gi)
    assert res.ok == general_oracle(gi)
    if not res.ok:
        sets, rs = gi.sets, gi.sizes
        first = min(om for om in omegas(gi.m)
                    if len(meet(sets, om)) + sum(rs[i] for i in om) > max(len(sets[i]) + rs[i] for i in om))
        assert res.omega == first


@given(instances(), st.data())
def test_gmmds_monotone(ci, data):
    if not check_gmmds(ci).ok:
        return
    rows = [i for i, s in enumerate(ci.sets) if s]
    if not rows:
        return
    i = data.draw(st.sampled_from(rows))
    j = data.draw(st.sampled_from(sorted(ci.sets[i])))
    sets = list(ci.sets)
    sets[i] = sets[i] - {j}
    assert check_gmmds(ConstraintInstance(ci.n, ci.k, tuple(sets))).ok


def test_pad_always_gmmds():
    rng = random.Random(7)
    for _ in range(1000):
        n, k = rng.randint(1, 9), rng.randint(1, 6)
        dens = rng.random()
        ci = ConstraintInstance.from_lists(n, [[j for j in range(n) if rng.random() < dens] for _ in range(k)])
        padded = pad_to_ell(ci)
        assert padded.k == compute_ell(ci)
        assert check_gmmds(padded).ok


@given(instances())
def test_ell_equals_k_iff_gmmds(ci):
    small = all(len(s) <= ci.k - 1 for s in ci.sets)
    assert (compute_ell(ci) == ci.k) == (check_gmmds(ci).ok and small)


def test_single_row_blocks_agree_with_gmmds():
    # k = m, r_i = 1, |S_i| = k - 1: block condition reduces to the MDS condition
    for k in range(1, 5):
        for n in range(k - 1, 6):
            choices = [frozenset(c) for c in itertools.combinations(range(n), k - 1)]
            for sets in itertools.product(choices, repeat=k):
                gi = GeneralInstance(k, n, tuple((s, 1) for s in sets))
                ci = ConstraintInstance(n=max(n, 1), k=k, sets=sets)
                assert check_general(gi).ok == check_gmmds(ci).ok
