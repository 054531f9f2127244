"""Dense univariate polynomials over a :class:`FieldContext`.

Coefficients are kept in ascending degree order as canonical field integers;
the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from .field import FieldElement


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def mul_coeffs(ctx, a, b):
    """Product of two ascending coefficient sequences of field integers."""
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    add, mul = ctx.add, ctx.mul
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = add(out[i + j], mul(ai, bj))
    return _trim(out)


def root_product_coeffs(ctx, values):
    """Ascending coefficients of prod (x + v) for field integers ``values``."""
    c = [1]
    if ctx.m == 1:
        p = ctx.p
        for v in values:
            # (x + v) * c: shift up by one, then add v * c
            nxt = [0] + c
            for i, ci in enumerate(c):
                nxt[i] = (nxt[i] + ci * v) % p
            c = nxt
        return tuple(c)
    add, mul = ctx.add, ctx.mul
    for v in values:
        nxt = [0] * (len(c) + 1)
        for i, ci in enumerate(c):
            nxt[i + 1] = add(nxt[i + 1], ci)
            nxt[i] = add(nxt[i], mul(ci, v))
        c = nxt
    return tuple(c)


class Polynomial:
    __slots__ = ("ctx", "_c")

    def __init__(self, ctx, coeffs=()):
        self.ctx = ctx
        self._c = _trim(ctx(c).value for c in coeffs)

    @classmethod
    def _raw(cls, ctx, ints):
        poly = cls.__new__(cls)
        poly.ctx = ctx
        poly._c = _trim(ints)
        return poly

    @classmethod
    def monomial(cls, ctx, degree, coeff=1):
        return cls._raw(ctx, [0] * degree + [ctx(coeff).value])

    @property
    def coeffs(self):
        return tuple(FieldElement(self.ctx, v) for v in self._c)

    @property
    def ints(self):
        return self._c

    @property
    def degree(self):
        # -1 stands in for -infinity on the zero polynomial
        return len(self._c) - 1

    def is_zero(self):
        return not self._c

    def lead(self):
        return self._c[-1] if self._c else 0

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ctx == other.ctx and self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        if not self._c:
            return "Polynomial(0)"
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self._c[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "Polynomial(" + " + ".join(terms) + ")"

    def _lift(self, other):
        if isinstance(other, Polynomial):
            return other
        return Polynomial._raw(self.ctx, [self.ctx(other).value])

    def __add__(self, other):
        other = self._lift(other)
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = self.ctx.add(out[i], v)
        return Polynomial._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ctx, [self.ctx.neg(v) for v in self._c])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        return Polynomial._raw(self.ctx, mul_coeffs(self.ctx, self._c, other._c))

    __rmul__ = __mul__

    def scale(self, c):
        c = self.ctx(c).value
        return Polynomial._raw(self.ctx, [self.ctx.mul(v, c) for v in self._c])

    def shift(self, k):
        """Multiply by x^k."""
        if not self._c:
            return self
        return Polynomial._raw(self.ctx, (0,) * k + self._c)

    def __call__(self, x):
        """Horner evaluation; returns a FieldElement."""
        xv = self.ctx(x).value
        return FieldElement(self.ctx, self.eval_int(xv))

    def eval_int(self, xv):
        acc = 0
        add, mul = self.ctx.add, self.ctx.mul
        for c in reversed(self._c):
            acc = add(mul(acc, xv), c)
        return acc

    def divrem(self, g):
        if g.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        ctx = self.ctx
        rem = list(self._c)
        dg = g.degree
        inv_lead = ctx.inv(g.lead())
        quot = [0] * max(len(rem) - dg, 0)
        gc = g._c
        while len(rem) - 1 >= dg and rem:
            shift = len(rem) - 1 - dg
            c = ctx.mul(rem[-1], inv_lead)
            quot[shift] = c
            for i, gi in enumerate(gc):
                rem[shift + i] = ctx.sub(rem[shift + i], ctx.mul(c, gi))
            while rem and rem[-1] == 0:
                rem.pop()
        return Polynomial._raw(ctx, quot), Polynomial._raw(ctx, rem)

    def __divmod__(self, g):
        return self.divrem(g)

    def __floordiv__(self, g):
        return self.divrem(g)[0]

    def __mod__(self, g):
        return self.divrem(g)[1]


def from_constraint_roots(S, alphas, shift=0):
    """x^shift * prod_{j in S} (x + alphas[j]); monic of degree shift + |S|."""
    alphas = list(alphas)
    if not alphas and not S:
        raise ValueError("need at least one alpha to know the field")
    ctx = alphas[0].ctx
    for j in S:
        if not 0 <= j < len(alphas):
            raise IndexError(f"constraint index {j} outside 0..{len(alphas) - 1}")
    roots = root_product_coeffs(ctx, [alphas[j].value for j in sorted(S)])
    return Polynomial._raw(ctx, (0,) * shift + roots)


def gcd_partial(f, g, stop_degree):
    """Extended Euclid on (f, g) until the remainder degree drops below ``stop_degree``.

    Returns ``(r, v)`` with ``r == u*f + v*g`` for some u, where r is the first
    remainder in the sequence f, g, ... whose degree is below ``stop_degree``.
    """
    ctx = f.ctx
    zero = Polynomial._raw(ctx, ())
    one = Polynomial._raw(ctx, (1,))
    r0, r1 = f, g
    v0, v1 = zero, one
    if r0.degree < stop_degree:
        return r0, v0
    while r1.degree >= stop_degree:
        quot, rem = r0.divrem(r1)
        r0, r1 = r1, rem
        v0, v1 = v1, v0 - quot * v1
    return r1, v1


def interpolate(ctx, xs, ys):
    """Lagrange interpolation through (xs[i], ys[i]) on field integers; degree < len(xs)."""
    n = len(xs)
    result = [0] * n
    for i in range(n):
        if ys[i] == 0:
            continue
        basis = (1,)
        denom = 1
        for j in range(n):
            if j == i:
                continue
            basis = mul_coeffs(ctx, basis, (ctx.neg(xs[j]), 1))
            denom = ctx.mul(denom, ctx.sub(xs[i], xs[j]))
        scale = ctx.div(ys[i], denom)
        for t, b in enumerate(basis):
            result[t] = ctx.add(result[t], ctx.mul(b, scale))
    return Polynomial._raw(ctx, result)
