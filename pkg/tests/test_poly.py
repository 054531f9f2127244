import pytest
from hypothesis import given, strategies as st

from rssubcode.field import FieldContext
from rssubcode.poly import Polynomial, from_constraint_roots, gcd_partial, interpolate

F7 = FieldContext(7)
F5 = FieldContext(5)
F2 = FieldContext(2)
F9 = FieldContext(3, 2)


def P(ctx, *coeffs):
    return Polynomial(ctx, coeffs)


def test_canonical_form():
    assert P(F7, 1, 2, 0, 0).ints == (1, 2)
    assert P(F7).is_zero() and P(F7, 0, 0).is_zero()
    assert P(F7).degree == -1


def test_from_constraint_roots_examples():
    alphas = [F7(2)]
    assert from_constraint_roots(set(), alphas, 3) == Polynomial.monomial(F7, 3)
    assert from_constraint_roots({0}, alphas, 0) == P(F7, 2, 1)
    # (x + 1)(x + 3) x = x^3 + 4x^2 + 3x
    assert from_constraint_roots({0, 1}, [F7(1), F7(3)], 1) == P(F7, 0, 3, 4, 1)


def test_from_constraint_roots_index_error():
    with pytest.raises(IndexError):
        from_constraint_roots({3}, [F7(1)], 0)


def test_eval_and_divrem_examples():
    assert P(F7, 2, 1)(5) == F7(0)
    q, r = P(F2, 1, 0, 1).divrem(P(F2, 1, 1))
    assert q == P(F2, 1, 1) and r.is_zero()


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        P(F7, 1, 1).divrem(P(F7))


def test_gcd_partial_example():
    # x^4 = x (x^3 + x) - x^2, then x^3 + x = 4x * (4x^2) + x over GF(5)
    f, g = P(F5, 0, 0, 0, 0, 1), P(F5, 0, 1, 0, 1)
    r, v = gcd_partial(f, g, 2)
    assert r == P(F5, 0, 1)
    assert v == P(F5, 1, 0, 4)
    # r - v g must be a multiple of f
    assert ((r - v * g) % f).is_zero()


coeff_lists = st.lists(st.integers(0, 8), max_size=7)


@given(coeff_lists, coeff_lists, coeff_lists)
def test_distributive(a, b, c):
    f, g, h = P(F9, *a), P(F9, *b), P(F9, *c)
    assert (f + g) * h == f * h + g * h


@given(coeff_lists, coeff_lists)
def test_degree_of_product(a, b):
    f, g = P(F9, *a), P(F9, *b)
    if not f.is_zero() and not g.is_zero():
        assert (f * g).degree == f.degree + g.degree


@given(coeff_lists, coeff_lists.filter(lambda c: any(c)))
def test_divrem_reconstruction(a, b):
    f, g = P(F9, *a), P(F9, *b)
    q, r = f.divrem(g)
    assert q * g + r == f
    assert r.degree < g.degree


@given(st.sets(st.integers(0, 5)), st.integers(0, 3), st.lists(st.integers(0, 6), min_size=6, max_size=6))
def test_roots_vanish(S, shift, vals):
    alphas = [F7(v) for v in vals]
    f = from_constraint_roots(S, alphas, shift)
    assert f.degree == shift + len(S) and f.lead() == 1
    for j in S:
        assert f(-alphas[j]) == F7(0)


@given(st.lists(st.integers(0, 6), min_size=1, max_size=6))
def test_gcd_partial_invariant(vals):
    g0 = P(F7, *([0] * 6 + [1]))
    g = P(F7, *vals)
    for stop in range(0, 7):
        r, v = gcd_partial(g0, g, stop)
        assert r.degree < stop or (stop == 0 and r.is_zero()) or r.degree < 0
        assert ((r - v * g) % g0).is_zero()


def test_interpolate_roundtrip():
    xs = [1, 2, 3, 4, 5]
    f = P(F7, 3, 0, 6, 1)
    ys = [f.eval_int(x) for x in xs]
    assert interpolate(F7, xs, ys) == f
