import random

import pytest
import sympy

from rssubcode.constraints import GeneralInstance, check_general
from rssubcode.field import FieldContext
from rssubcode.oracle import degree_bound, enumerate_general_instances, random_general_instance
from rssubcode.poly import Polynomial
from rssubcode.sylvester import (build_m, determinant, nullspace_vector, rank_deficiency_witness,
                                 row_polynomials, vector_to_polys)

F101 = FieldContext(101)
F8 = FieldContext(2, 3)


def GI(k, n, *blocks):
    return GeneralInstance(k=k, n=n, blocks=tuple((set(s), r) for s, r in blocks))


def vals(mx):
    return [list(r) for r in mx.rows]


def test_build_single_row_blocks():
    mx = build_m(GI(2, 2, ({0}, 1), ({1}, 1)), [F101(7), F101(30)], F101)
    assert vals(mx) == [[1, 7], [1, 30]]


@pytest.mark.parametrize("k", [1, 2, 3, 5])
def test_build_single_block_identity(k):
    mx = build_m(GI(k, 0, ((), k)), [], F101)
    assert vals(mx) == [[int(i == j) for j in range(k)] for i in range(k)]
    assert determinant(mx) == F101(1)


def test_build_shifted_rows():
    a0, a1 = 4, 9
    mx = build_m(GI(3, 2, ({0, 1}, 1), ((), 2)), [a0, a1], F101)
    assert vals(mx) == [[1, a0 + a1, a0 * a1], [1, 0, 0], [0, 1, 0]]
    mx = build_m(GI(3, 2, ({0}, 2), ({1}, 1)), [a0, a1], F101)
    assert vals(mx) == [[1, a0, 0], [0, 1, a0], [1, a1, 0]]


def test_build_dimension_mismatch():
    with pytest.raises(ValueError):
        build_m(GI(2, 2, ({0}, 1), ({1}, 1)), [F101(1)], F101)


def test_determinant_examples():
    assert determinant(build_m(GI(2, 1, ({0}, 1), ({0}, 1)), [5], F101)) == F101(0)
    a1, a2 = 17, 60
    assert determinant(build_m(GI(2, 2, ({0}, 1), ({1}, 1)), [a1, a2], F101)) == F101(a2 - a1)


def test_nullspace_examples():
    mx = build_m(GI(2, 1, ({0}, 1), ({0}, 1)), [5], F101)
    y = nullspace_vector(mx)
    assert y is not None and y[0] == -y[1] and y[0] != 0
    assert nullspace_vector(build_m(GI(2, 2, ({0}, 1), ({1}, 1)), [1, 2], F101)) is None


def test_vector_to_polys_examples():
    inst = GI(2, 1, ({0}, 1), ({0}, 1))
    zero = vector_to_polys([F101(0), F101(0)], inst)
    assert all(q.is_zero() for q in zero)
    qs = vector_to_polys([F101(1), F101(-1)], inst)
    assert qs[0] == Polynomial(F101, [1]) and qs[1] == Polynomial(F101, [100])
    ps = row_polynomials(inst, [F101(5)], F101)
    assert ps[0] == ps[1]
    assert (ps[0] * qs[0] + ps[1] * qs[1]).is_zero()
    with pytest.raises(ValueError):
        vector_to_polys([F101(1)], inst)


def test_vector_to_polys_segment_order():
    # segment i lists q_i from x^(r_i - 1) down to 1
    inst = GI(3, 1, ({0}, 2), ((), 1))
    qs = vector_to_polys([F101(2), F101(3), F101(4)], inst)
    assert qs[0] == Polynomial(F101, [3, 2]) and qs[1] == Polynomial(F101, [4])


def _combination(ps, qs):
    total = Polynomial(ps[0].ctx)
    for p, q in zip(ps, qs):
        total = total + p * q
    return total


def test_null_vector_bridge_all_small_instances():
    rng = random.Random(3)
    for inst in enumerate_general_instances(4, 3):
        for _ in range(2):
            alphas = [F101(rng.randrange(101)) for _ in range(inst.n)]
            mx = build_m(inst, alphas, F101)
            singular = determinant(mx) == F101(0)
            y = nullspace_vector(mx)
            assert (y is not None) == singular
            if y is None:
                continue
            assert any(y)
            rows = mx.entries
            for j in range(inst.k):
                col = F101(0)
                for i in range(inst.k):
                    col = col + y[i] * rows[i][j]
                assert col == F101(0)
            qs = vector_to_polys(y, inst)
            assert any(not q.is_zero() for q in qs)
            assert all(q.degree <= r - 1 for q, (_, r) in zip(qs, inst.blocks))
            assert _combination(row_polynomials(inst, alphas, F101), qs).is_zero()


def _unique_max_instances(rng, count):
    found = []
    while len(found) < count:
        inst = random_general_instance(rng.randint(2, 6), rng.randint(1, 5), rng.randrange(10**9))
        tops = [i for i, (s, r) in enumerate(inst.blocks) if len(s) + r == inst.k]
        if len(tops) != 1 or inst.m < 2:
            continue
        order = [i for i in range(inst.m) if i != tops[0]] + tops
        found.append(GeneralInstance(inst.k, inst.n, tuple(inst.blocks[i] for i in order)))
    return found


def test_last_column_reduction():
    rng = random.Random(11)
    for inst in _unique_max_instances(rng, 150):
        alphas = [rng.randrange(101) for _ in range(inst.n)]
        s_last, r_last = inst.blocks[-1]
        prod = 1
        for j in s_last:
            prod = prod * alphas[j] % 101
        if r_last >= 2:
            reduced = GeneralInstance(inst.k - 1, inst.n, inst.blocks[:-1] + ((s_last, r_last - 1),))
        else:
            reduced = GeneralInstance(inst.k - 1, inst.n, inst.blocks[:-1])
        lhs = determinant(build_m(inst, alphas, F101))
        rhs = determinant(build_m(reduced, alphas, F101)) * prod
        assert lhs == rhs


def test_zero_substitution_drops_last_index():
    rng = random.Random(12)
    for _ in range(200):
        inst = random_general_instance(rng.randint(1, 6), rng.randint(1, 5), rng.randrange(10**9))
        n = inst.n
        alphas = [rng.randrange(101) for _ in range(n - 1)] + [0]
        dropped = GeneralInstance(inst.k, n - 1, tuple((s - {n - 1}, r) for s, r in inst.blocks))
        assert vals(build_m(inst, alphas, F101)) == vals(build_m(dropped, alphas[:-1], F101))


def test_rank_deficiency_examples():
    rep = rank_deficiency_witness(GI(2, 1, ({0}, 1), ({0}, 1)), (0, 1), [F101(9)], F101)
    assert rep.product_is_zero and rep.rank == 1 and rep.r0 == 2 and rep.ok
    inst = GI(3, 1, ({0}, 1), ({0}, 1), ((), 1))
    rep = rank_deficiency_witness(inst, (0, 1), [F101(9)], F101)
    assert rep.k_prime == 2 and rep.ok and rep.r0 - rep.rank >= 1
    assert determinant(build_m(inst, [9], F101)) == F101(0)


def test_rank_deficiency_rejects_satisfied_omega():
    with pytest.raises(ValueError):
        rank_deficiency_witness(GI(2, 2, ({0}, 1), ({1}, 1)), (0, 1), [1, 2], F101)


def test_rank_deficiency_in_characteristic_two():
    rng = random.Random(4)
    checked = 0
    while checked < 30:
        inst = random_general_instance(rng.randint(2, 5), rng.randint(1, 4), rng.randrange(10**9))
        res = check_general(inst)
        if res.ok:
            continue
        alphas = [F8(rng.randrange(8)) for _ in range(inst.n)]
        assert rank_deficiency_witness(inst, res.omega, alphas, F8).ok
        assert determinant(build_m(inst, alphas, F8)) == F8(0)
        checked += 1


def _symbolic_det(inst):
    xs = sympy.symbols(f"a0:{max(inst.n, 1)}")
    X = sympy.Symbol("x")
    rows = []
    for s, r in inst.blocks:
        # leading coefficients of x^(k-|S|-1) prod (x + a_j); the rest of the row is zero
        head = sympy.Poly(sympy.prod([X + xs[j] for j in s]) + 0 * X, X).all_coeffs()
        for t in range(r):
            row = [0] * inst.k
            row[t:t + len(head)] = head
            rows.append(row)
    return sympy.expand(sympy.Matrix(rows).det()), xs


def test_symbolic_determinant_degree_and_zero_pattern():
    """det M over Q(alpha), computed symbolically, against the block condition and D."""
    for inst in enumerate_general_instances(3, 3):
        det, xs = _symbolic_det(inst)
        assert (det != 0) == check_general(inst).ok
        if det != 0:
            assert sympy.Poly(det, *xs).total_degree() <= degree_bound(inst)
