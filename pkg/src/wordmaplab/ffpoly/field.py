"""Arithmetic in F_q for small prime powers q = p**e.

Elements are encoded as integers in ``range(q)``: the code of an element
with polynomial-basis coordinates (a_0, ..., a_{e-1}) over F_p is
``sum(a_i * p**i)``.  For prime fields the code is simply the residue.
Small fields (q <= TABLE_LIMIT) precompute full add/mul/inv tables, which
keeps the factorization and matrix-group loops fast.

The modulus of an extension field is chosen deterministically: the first
irreducible monic polynomial of degree e over F_p in increasing order of
its integer encoding.  F_4, F_8, F_9, ... are therefore identical objects
across runs and platforms.
"""

from __future__ import annotations

from functools import lru_cache

from ..errors import FieldBoundError, DEFAULT_FIELD_BOUND

TABLE_LIMIT = 256


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError(f"field size must be >= 2, got {q}")
    p = None
    for cand in range(2, q + 1):
        if q % cand == 0:
            p = cand
            break
    e = 0
    m = q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, e


def _poly_irreducible_mod_p(coeffs: tuple[int, ...], p: int) -> bool:
    """Irreducibility of a monic polynomial over F_p by trial division.

    Only used once per extension field to pick the modulus, so the naive
    algorithm is fine (e is tiny).
    """
    deg = len(coeffs) - 1
    if deg == 1:
        return True

    def mod(a: list[int], b: tuple[int, ...]) -> list[int]:
        a = a[:]
        db = len(b) - 1
        inv_lead = pow(b[-1], p - 2, p)
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i] % p
            if c:
                f = (c * inv_lead) % p
                for j in range(db + 1):
                    a[i - db + j] = (a[i - db + j] - f * b[j]) % p
        while len(a) > 1 and a[-1] % p == 0:
            a.pop()
        return [c % p for c in a]

    # no factor of degree <= deg // 2
    for d in range(1, deg // 2 + 1):
        for enc in range(p**d):
            div = []
            m = enc
            for _ in range(d):
                div.append(m % p)
                m //= p
            div.append(1)
            r = mod(list(coeffs), tuple(div))
            if len(r) == 1 and r[0] == 0:
                return False
    return True


@lru_cache(maxsize=None)
def default_modulus(p: int, e: int) -> tuple[int, ...]:
    """Least irreducible monic degree-e polynomial over F_p (by encoding)."""
    if e == 1:
        return (0, 1)
    for enc in range(p**e):
        coeffs = []
        m = enc
        for _ in range(e):
            coeffs.append(m % p)
            m //= p
        coeffs.append(1)
        if _poly_irreducible_mod_p(tuple(coeffs), p):
            return tuple(coeffs)
    raise RuntimeError("no irreducible modulus found")  # unreachable


class Field:
    """The finite field with q = p**e elements, q bounded for enumerability."""

    def __init__(self, q: int, bound: int = DEFAULT_FIELD_BOUND):
        if q > bound:
            raise FieldBoundError(f"field size {q} exceeds configured bound {bound}")
        self.q = q
        self.p, self.e = _factor_prime_power(q)
        self.modulus = default_modulus(self.p, self.e)
        # flat q*q lookup tables (index a*q+b) for small fields; None otherwise
        self.addf = None
        self.mulf = None
        self.negf = None
        self.invf = None
        if q <= TABLE_LIMIT:
            self._build_tables()

    # -- encoding ------------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Polynomial-basis coordinates of the element code ``a``."""
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def encode(self, coeffs) -> int:
        a = 0
        for c in reversed(list(coeffs)):
            a = a * self.p + (c % self.p)
        return a

    def elements(self) -> range:
        return range(self.q)

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    # -- arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.addf is not None:
            return self.addf[a * self.q + b]
        return self._add_raw(a, b)

    def neg(self, a: int) -> int:
        if self.negf is not None:
            return self.negf[a]
        if self.e == 1:
            return (-a) % self.p
        return self.encode(-c for c in self.coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.mulf is not None:
            return self.mulf[a * self.q + b]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in finite field")
        if self.invf is not None:
            return self.invf[a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        r = 1
        while k:
            if k & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            k >>= 1
        return r

    def frobenius(self, a: int) -> int:
        """x -> x**p, the arithmetic Frobenius."""
        return self.pow(a, self.p)

    def conj_power(self, a: int, subfield_order: int) -> int:
        """x -> x**s for s = subfield_order; x**q is conjugation over F_q."""
        return self.pow(a, subfield_order)

    # -- structure -----------------------------------------------------

    def subfield_elements(self, order: int) -> list[int]:
        """Element codes of the subfield with ``order`` elements."""
        p, e = _factor_prime_power(order)
        if p != self.p or self.e % e:
            raise ValueError(f"F_{order} is not a subfield of F_{self.q}")
        return [a for a in self.elements() if self.pow(a, order) == a]

    def multiplicative_generator(self) -> int:
        n = self.q - 1
        factors = set()
        m = n
        d = 2
        while d * d <= m:
            while m % d == 0:
                factors.add(d)
                m //= d
            d += 1
        if m > 1:
            factors.add(m)
        for g in range(2, self.q):
            if all(self.pow(g, n // f) != 1 for f in factors):
                return g
        return 1  # q == 2

    def dlog_table(self) -> dict[int, int]:
        """Discrete logs base the canonical generator, for all of F_q*."""
        g = self.multiplicative_generator()
        table = {}
        a = 1
        for i in range(self.q - 1):
            table[a] = i
            a = self.mul(a, g)
        return table

    # -- internals -----------------------------------------------------

    def _add_raw(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        ca, cb = self.coeffs(a), self.coeffs(b)
        return self.encode(x + y for x, y in zip(ca, cb))

    def _mul_raw(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        p, e = self.p, self.e
        ca, cb = list(self.coeffs(a)), list(self.coeffs(b))
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce modulo the (monic) modulus
        m = self.modulus
        for i in range(len(prod) - 1, e - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(e):
                    prod[i - e + j] = (prod[i - e + j] - c * m[j]) % p
        return self.encode(prod[:e])

    def _build_tables(self):
        q = self.q
        self.addf = [self._add_raw(a, b) for a in range(q) for b in range(q)]
        self.mulf = [self._mul_raw(a, b) for a in range(q) for b in range(q)]
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self.mulf[a * q + b] == 1:
                    inv[a] = b
                    break
        self.invf = inv
        if self.e == 1:
            self.negf = [(-a) % self.p for a in range(q)]
        else:
            self.negf = [self.encode(-c for c in self.coeffs(a)) for a in range(q)]

    def __eq__(self, other):
        return isinstance(other, Field) and self.q == other.q

    def __hash__(self):
        return hash(("Field", self.q))

    def __repr__(self):
        return f"Field({self.q})"


@lru_cache(maxsize=None)
def get_field(q: int) -> Field:
    """Cached field constructor; fields are immutable so sharing is safe."""
    return Field(q)
