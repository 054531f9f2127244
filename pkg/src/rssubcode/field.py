"""Finite fields GF(p^m).

Elements are stored canonically as integers: the residue for prime fields and
the base-p digit encoding sum(c_i * p**i) of the reduced coefficient vector for
extension fields.  All arithmetic lives on :class:`FieldContext` and works on
those integers directly; :class:`FieldElement` is a thin operator-overloading
wrapper for readable call sites.
"""

from __future__ import annotations

from functools import cached_property

from sympy import isprime, perfect_power, primefactors

from .caps import CAPS, CapExceeded


class FieldError(ValueError):
    pass


# --- polynomials over GF(p) as ascending int lists (modulus search only) ---

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, f, p):
    a = list(a)
    inv_lead = pow(f[-1], p - 2, p)
    df = len(f) - 1
    while len(a) - 1 >= df and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        _ptrim(a)
    return a


def _pmulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod(_ptrim(out), f, p)


def _ppowmod(a, e, f, p):
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _psub(a, b, p):
    out = [0] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % p
    return _ptrim(out)


def is_irreducible(f, p):
    """Rabin's test for a monic f (ascending coefficients) over GF(p)."""
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    if _psub(_ppowmod(x, p**m, f, p), x, p):
        return False
    for r in primefactors(m):
        h = _psub(_ppowmod(x, p ** (m // r), f, p), x, p)
        if len(_pgcd(f, h, p)) != 1:
            return False
    return True


def least_irreducible(p, m):
    """Lexicographically least monic irreducible of degree m over GF(p).

    Order is that of the integer encoding of the lower coefficients, i.e.
    lexicographic on the coefficient vector read from degree m-1 down to 0.
    """
    for code in range(p**m):
        low = [(code // p**i) % p for i in range(m)]
        if low[0] == 0:
            continue
        f = low + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")  # pragma: no cover


def prime_power(q):
    """Return (p, m) with q == p**m, or None if q is not a prime power."""
    if q < 2:
        return None
    if isprime(q):
        return int(q), 1
    pp = perfect_power(q)
    if not pp:
        return None
    base, e = pp
    # perfect_power returns the smallest base, so a prime power shows up as (p, m)
    if isprime(base):
        return int(base), int(e)
    return None


class FieldContext:
    """GF(p^m) with a fixed monic irreducible modulus (ignored when m == 1)."""

    def __init__(self, p, m=1, modulus=None):
        p, m = int(p), int(m)
        if not isprime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError("extension degree must be >= 1")
        if m == 1:
            if p >= 2**62:
                raise FieldError("prime fields are limited to p < 2^62")
            modulus = (0, 1)
        else:
            if modulus is None:
                modulus = least_irreducible(p, m)
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise FieldError("modulus must be monic of degree m")
            if not is_irreducible(list(modulus), p):
                raise FieldError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.modulus = modulus
        self.q = p**m
        self._tables = None
        if m > 1 and self.q <= 2**16:
            self._build_tables()

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={self.modulus})"

    def __eq__(self, other):
        return (isinstance(other, FieldContext) and self.p == other.p
                and self.m == other.m and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    # --- encoding ---

    def to_coeffs(self, a):
        p = self.p
        return tuple((a // p**i) % p for i in range(self.m))

    def from_coeffs(self, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) > self.m:
            # reduce a longer polynomial modulo the field modulus
            coeffs = _pmod([c % self.p for c in coeffs], list(self.modulus), self.p)
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs))

    def check(self, a):
        if not 0 <= a < self.q:
            raise FieldError(f"{a} is not a canonical element of {self}")
        return a

    # --- integer-level arithmetic ---

    def add(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = self.to_coeffs(a), self.to_coeffs(b)
        return self.from_coeffs([x + y for x, y in zip(da, db)])

    def neg(self, a):
        if self.m == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self.from_coeffs([-x for x in self.to_coeffs(a)])

    def sub(self, a, b):
        if self.m == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self._tables is not None:
            exp, log = self._tables
            return exp[(log[a] + log[b]) % (self.q - 1)]
        prod = _pmulmod(list(self.to_coeffs(a)), list(self.to_coeffs(b)),
                        list(self.modulus), self.p)
        return self.from_coeffs(prod)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        if self._tables is not None:
            exp, log = self._tables
            return exp[(-log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if self.m == 1:
            if e < 0:
                return pow(self.inv(a), -e, self.p)
            return pow(a, e, self.p)
        if e < 0:
            a, e = self.inv(a), -e
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def _build_tables(self):
        # direct multiplication until a primitive element is found
        order = self.q - 1
        factors = primefactors(order)
        f, p = list(self.modulus), self.p

        def slow_pow(g, e):
            return self.from_coeffs(_ppowmod(list(self.to_coeffs(g)), e, f, p))

        for g in range(2, self.q):
            if all(slow_pow(g, order // r) != 1 for r in factors):
                break
        else:  # pragma: no cover
            raise FieldError("no primitive element found")
        gc = list(self.to_coeffs(g))
        exp = [0] * order
        log = [0] * self.q
        cur = [1]
        for i in range(order):
            v = self.from_coeffs(cur)
            exp[i] = v
            log[v] = i
            cur = _pmulmod(cur, gc, f, p)
        self._tables = (exp, log)

    # --- element-level API ---

    def __call__(self, value):
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, (tuple, list)):
            return FieldElement(self, self.from_coeffs(value))
        if self.m == 1:
            return FieldElement(self, int(value) % self.p)
        return FieldElement(self, self.check(int(value)))

    @cached_property
    def zero(self):
        return FieldElement(self, 0)

    @cached_property
    def one(self):
        return FieldElement(self, 1)

    def enumerate(self):
        """All q elements in encoding order: 0, 1, 2, ..."""
        return [FieldElement(self, v) for v in range(self.q)]

    def random_element(self, rng, nonzero=False):
        lo = 1 if nonzero else 0
        return FieldElement(self, rng.randrange(lo, self.q))


class FieldElement:
    __slots__ = ("ctx", "value")

    def __init__(self, ctx, value):
        self.ctx = ctx
        self.value = value

    @property
    def coeffs(self):
        return self.ctx.to_coeffs(self.value)

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise FieldError("mixed-field arithmetic")
            return other.value
        if isinstance(other, int):
            return self.ctx(other).value
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.ctx, self.ctx.div(b, self.value))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, e):
        return FieldElement(self.ctx, self.ctx.pow(self.value, e))

    def inv(self):
        return FieldElement(self.ctx, self.ctx.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.value == other.value and self.ctx == other.ctx
        if isinstance(other, int):
            return self.value == self.ctx(other).value
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.ctx.q))

    def __repr__(self):
        return f"{self.value} in {self.ctx!r}"


POLICIES = ("smallest-prime", "smallest-prime-power", "forced")


def make_field(min_size, policy="smallest-prime-power", q=None):
    """Build a field of order at least ``min_size``.

    ``policy`` picks the least prime or least prime power >= min_size, or uses
    the given ``q`` as is ("forced").
    """
    if min_size < 2:
        raise FieldError("min_size must be >= 2")
    if policy == "forced":
        if q is None:
            raise FieldError("forced policy needs an explicit q")
        pm = prime_power(q)
        if pm is None:
            raise FieldError(f"q={q} is not a prime power")
        if q < min_size:
            raise FieldError(f"q={q} is smaller than the required {min_size}")
        p, m = pm
    elif policy == "smallest-prime":
        cand = min_size
        while not isprime(cand):
            cand += 1
        p, m = cand, 1
    elif policy == "smallest-prime-power":
        cand = min_size
        while prime_power(cand) is None:
            cand += 1
        p, m = prime_power(cand)
    else:
        raise FieldError(f"unknown field policy {policy!r}")
    if p > CAPS.max_prime or m > CAPS.max_degree:
        raise CapExceeded(f"GF({p}^{m}) exceeds the configured size cap")
    return FieldContext(p, m)
