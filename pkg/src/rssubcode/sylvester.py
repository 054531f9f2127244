"""Block-Toeplitz (generalized Sylvester) matrices over a concrete field.

Block i of M has r_i rows.  Its first row lists the coefficients of
x^(k-|S_i|-1) * prod_{j in S_i} (x + alpha_j) from the highest degree down;
every further row is the previous one shifted right by a column.  Column c
therefore pairs with x^(k-1-c), and a row vector y satisfies y M = 0 exactly
when the polynomial combination sum_i p_i q_i vanishes, where
p_i = x^(k-|S_i|-r_i) prod (x + alpha_j) and segment i of y holds the
coefficients of q_i from x^(r_i-1) down to 1.

The ``*_int`` helpers work on canonical field integers and are what the hot
loops (exhaustive sweeps, code search) call.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .constraints import GeneralInstance, check_general
from .field import FieldElement
from .poly import Polynomial, from_constraint_roots, root_product_coeffs


def _ints(ctx, values):
    return [ctx(v).value for v in values]


def block_rows_int(ctx, k, set_alphas, r):
    """The r rows (field ints, length k) of one block whose root values are ``set_alphas``."""
    head = root_product_coeffs(ctx, set_alphas)[::-1]   # 1, e_1, ..., e_|S|
    rows = []
    for t in range(r):
        row = [0] * k
        row[t:t + len(head)] = head
        rows.append(row)
    return rows


def build_m_int(ctx, inst, alpha_ints):
    rows = []
    for s, r in inst.blocks:
        rows.extend(block_rows_int(ctx, inst.k, [alpha_ints[j] for j in sorted(s)], r))
    return rows


def _det_prime(p, rows):
    # division-free elimination: scaling a row by the pivot is undone once at the end
    a = [list(r) for r in rows]
    size = len(a)
    det, scale = 1, 1
    for col in range(size):
        piv = next((i for i in range(col, size) if a[i][col]), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        prow = a[col]
        pv = prow[col]
        det = det * pv % p
        for i in range(col + 1, size):
            row = a[i]
            f = row[col]
            if f:
                for j in range(col + 1, size):
                    row[j] = (row[j] * pv - f * prow[j]) % p
                scale = scale * pv % p
    return det * pow(scale, p - 2, p) % p


def det_int(ctx, rows):
    """Determinant by elimination; pivot is the first nonzero entry in the column."""
    if ctx.m == 1:
        return _det_prime(ctx.p, rows)
    a = [list(r) for r in rows]
    size = len(a)
    det = 1
    sub, mul, inv = ctx.sub, ctx.mul, ctx.inv
    for col in range(size):
        piv = next((i for i in range(col, size) if a[i][col]), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = ctx.neg(det)
        pivot_row = a[col]
        pv = pivot_row[col]
        det = mul(det, pv)
        pinv = inv(pv)
        for i in range(col + 1, size):
            row = a[i]
            if row[col]:
                f = mul(row[col], pinv)
                for j in range(col, size):
                    if pivot_row[j]:
                        row[j] = sub(row[j], mul(f, pivot_row[j]))
    return det


def row_reduce_int(ctx, rows, ncols):
    """Reduced row echelon form; returns (rref_rows, pivot_columns)."""
    a = [list(r) for r in rows]
    pivots = []
    top = 0
    for col in range(ncols):
        piv = next((i for i in range(top, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[top], a[piv] = a[piv], a[top]
        pinv = ctx.inv(a[top][col])
        a[top] = [ctx.mul(v, pinv) for v in a[top]]
        for i in range(len(a)):
            if i != top and a[i][col]:
                f = a[i][col]
                a[i] = [ctx.sub(x, ctx.mul(f, y)) for x, y in zip(a[i], a[top])]
        pivots.append(col)
        top += 1
        if top == len(a):
            break
    return a, pivots


def rank_int(ctx, rows, ncols=None):
    if not rows:
        return 0
    ncols = len(rows[0]) if ncols is None else ncols
    return len(row_reduce_int(ctx, rows, ncols)[1])


def left_null_vector_int(ctx, rows):
    """A nonzero y with y M = 0, or None when the rows are independent."""
    nrows = len(rows)
    if nrows == 0:
        return None
    ncols = len(rows[0])
    # nullspace of M^T
    mt = [[rows[i][j] for i in range(nrows)] for j in range(ncols)]
    rref, pivots = row_reduce_int(ctx, mt, nrows)
    free = [c for c in range(nrows) if c not in pivots]
    if not free:
        return None
    f = free[0]
    y = [0] * nrows
    y[f] = 1
    for r, pc in enumerate(pivots):
        y[pc] = ctx.neg(rref[r][f])
    return y


def vecmat_int(ctx, y, rows):
    ncols = len(rows[0]) if rows else 0
    out = [0] * ncols
    for yi, row in zip(y, rows):
        if yi:
            for j, v in enumerate(row):
                if v:
                    out[j] = ctx.add(out[j], ctx.mul(yi, v))
    return out


def matmul_int(ctx, a, b):
    return [vecmat_int(ctx, row, b) for row in a]


def inverse_int(ctx, rows):
    size = len(rows)
    aug = [list(r) + [int(i == j) for j in range(size)] for i, r in enumerate(rows)]
    rref, pivots = row_reduce_int(ctx, aug, size)
    if pivots[:size] != list(range(size)):
        raise ZeroDivisionError("matrix is singular")
    return [row[size:] for row in rref[:size]]


@dataclass(frozen=True)
class SylvesterMatrix:
    ctx: object
    instance: GeneralInstance
    alphas: Tuple[int, ...]
    rows: Tuple[Tuple[int, ...], ...]

    @property
    def k(self):
        return self.instance.k

    @property
    def entries(self):
        return [[FieldElement(self.ctx, v) for v in row] for row in self.rows]

    def block_slices(self):
        out, start = [], 0
        for _, r in self.instance.blocks:
            out.append(slice(start, start + r))
            start += r
        return out


def build_m(inst, alphas, ctx):
    """M[(S_i, r_i)] evaluated at ``alphas`` (one value per column index 0..n-1)."""
    if len(alphas) != inst.n:
        raise ValueError(f"expected {inst.n} alphas, got {len(alphas)}")
    a = _ints(ctx, alphas)
    rows = build_m_int(ctx, inst, a)
    k = inst.k
    start = 0
    for s, r in inst.blocks:
        corner = rows[start + r - 1][k - 1]
        if len(s) + r == k:
            expected = 1
            for j in s:
                expected = ctx.mul(expected, a[j])
            assert corner == expected
        else:
            assert corner == 0
        start += r
    return SylvesterMatrix(ctx, inst, tuple(a), tuple(tuple(r) for r in rows))


def determinant(mx):
    return FieldElement(mx.ctx, det_int(mx.ctx, mx.rows))


def nullspace_vector(mx) -> Optional[List[FieldElement]]:
    y = left_null_vector_int(mx.ctx, mx.rows)
    if y is None:
        return None
    return [FieldElement(mx.ctx, v) for v in y]


def row_polynomials(inst, alphas, ctx):
    """p_i = x^(k-|S_i|-r_i) * prod_{j in S_i}(x + alpha_j) for every block."""
    alphas = [ctx(a) for a in alphas]
    if not alphas:
        return [Polynomial.monomial(ctx, inst.k - r) for _, r in inst.blocks]
    return [from_constraint_roots(s, alphas, inst.k - len(s) - r) for s, r in inst.blocks]


def vector_to_polys(y, inst):
    """Split y into the block multipliers q_i (segment i lists x^(r_i-1), ..., 1)."""
    if len(y) != inst.k:
        raise ValueError(f"vector has length {len(y)}, expected {inst.k}")
    ctx = y[0].ctx
    out, start = [], 0
    for _, r in inst.blocks:
        seg = [e.value for e in y[start:start + r]]
        out.append(Polynomial._raw(ctx, seg[::-1]))
        start += r
    return out


@dataclass
class RankDeficiencyReport:
    omega: Tuple[int, ...]
    common_set: Tuple[int, ...]
    r0: int
    k_prime: int
    rank: int
    product_is_zero: bool
    truncated_columns_zero: bool

    @property
    def ok(self):
        return self.product_is_zero and self.truncated_columns_zero and self.rank < self.r0


def rank_deficiency_witness(inst, omega, alphas, ctx):
    """Check that the rows of the blocks in ``omega`` are rank deficient.

    With S0 the common intersection, r0 the total block size and k' the
    largest |S_i| + r_i over omega, every such row is a polynomial of degree
    below k' vanishing at -alpha_j for j in S0, so it is annihilated by the
    Vandermonde W[c][j] = (-alpha_j)^(k'-1-c).
    """
    omega = tuple(sorted(set(omega)))
    if not omega or any(not 0 <= i < inst.m for i in omega):
        raise ValueError(f"omega {omega} is not a nonempty subset of the blocks")
    s0 = frozenset.intersection(*(inst.blocks[i][0] for i in omega))
    r0 = sum(inst.blocks[i][1] for i in omega)
    kp = max(len(inst.blocks[i][0]) + inst.blocks[i][1] for i in omega)
    if len(s0) + r0 <= kp:
        raise ValueError(f"omega {omega} satisfies the condition; no deficiency to witness")

    mx = build_m(inst, alphas, ctx)
    slices = mx.block_slices()
    chosen = [row for i in omega for row in mx.rows[slices[i]]]
    tail_zero = all(v == 0 for row in chosen for v in row[kp:])
    m0 = [list(row[:kp]) for row in chosen]
    neg = [ctx.neg(mx.alphas[j]) for j in sorted(s0)]
    w = [[ctx.pow(b, kp - 1 - c) for b in neg] for c in range(kp)]
    prod = matmul_int(ctx, m0, w) if neg else []
    return RankDeficiencyReport(
        omega=omega,
        common_set=tuple(sorted(s0)),
        r0=r0,
        k_prime=kp,
        rank=rank_int(ctx, m0, kp),
        product_is_zero=all(v == 0 for row in prod for v in row),
        truncated_columns_zero=tail_zero,
    )


def first_violation(inst):
    res = check_general(inst)
    return None if res.ok else res.omega
