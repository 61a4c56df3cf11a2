"""Dense polynomial arithmetic and factorization over small finite fields.

Polynomials are tuples of element codes in little-endian order
(``poly[i]`` is the coefficient of x**i), normalized so the last entry is
nonzero; the zero polynomial is the empty tuple.  All functions take the
field as first argument.

Factorization is the classical pipeline: squarefree decomposition
(characteristic p, with p-th root extraction), distinct-degree splitting
via Frobenius powers, and randomized equal-degree splitting
(Cantor-Zassenhaus for odd q, trace maps in characteristic 2).  The
equal-degree stage draws randomness from a generator derived
deterministically from a 64-bit seed and the input polynomial, so results
are reproducible run to run.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

from ..errors import InvariantError
from .field import Field

DEFAULT_SEED = 0

Poly = tuple  # alias for readability in signatures


def normalize(coeffs) -> Poly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(f: Poly) -> int:
    """Degree, with the zero polynomial mapped to -1."""
    return len(f) - 1


def constant(field: Field, c: int) -> Poly:
    return (c,) if c else ()


X = (0, 1)


def is_monic(f: Poly) -> bool:
    return bool(f) and f[-1] == 1


def add(field: Field, f: Poly, g: Poly) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    fadd = field.add
    for i, c in enumerate(g):
        out[i] = fadd(out[i], c)
    return normalize(out)


def neg(field: Field, f: Poly) -> Poly:
    fneg = field.neg
    return tuple(fneg(c) for c in f)


def sub(field: Field, f: Poly, g: Poly) -> Poly:
    return add(field, f, neg(field, g))


def scale(field: Field, f: Poly, c: int) -> Poly:
    if c == 0:
        return ()
    fmul = field.mul
    return normalize(fmul(a, c) for a in f)


def mul(field: Field, f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    q = field.q
    mulf, addf = field.mulf, field.addf
    out = [0] * (len(f) + len(g) - 1)
    if mulf is not None:
        for i, a in enumerate(f):
            if a:
                arow = a * q
                for j, b in enumerate(g):
                    if b:
                        k = i + j
                        out[k] = addf[out[k] * q + mulf[arow + b]]
    else:
        for i, a in enumerate(f):
            if a:
                for j, b in enumerate(g):
                    if b:
                        k = i + j
                        out[k] = field.add(out[k], field.mul(a, b))
    return normalize(out)


def divmod_poly(field: Field, f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if len(f) < len(g):
        return (), f
    q = field.q
    mulf, addf, negf = field.mulf, field.addf, field.negf
    rem = list(f)
    dg = len(g) - 1
    inv_lead = field.inv(g[-1])
    quo = [0] * (len(f) - dg)
    if mulf is not None:
        for i in range(len(f) - 1, dg - 1, -1):
            c = rem[i]
            if c:
                fac = mulf[c * q + inv_lead]
                quo[i - dg] = fac
                frow = fac * q
                for j in range(dg + 1):
                    t = mulf[frow + g[j]]
                    if t:
                        k = i - dg + j
                        rem[k] = addf[rem[k] * q + negf[t]]
    else:
        for i in range(len(f) - 1, dg - 1, -1):
            c = rem[i]
            if c:
                fac = field.mul(c, inv_lead)
                quo[i - dg] = fac
                for j in range(dg + 1):
                    k = i - dg + j
                    rem[k] = field.sub(rem[k], field.mul(fac, g[j]))
    return normalize(quo), normalize(rem[:dg])


def mod(field: Field, f: Poly, g: Poly) -> Poly:
    return divmod_poly(field, f, g)[1]


def monic(field: Field, f: Poly) -> Poly:
    if not f or f[-1] == 1:
        return f
    return scale(field, f, field.inv(f[-1]))


def gcd(field: Field, f: Poly, g: Poly) -> Poly:
    while g:
        f, g = g, mod(field, f, g)
    return monic(field, f)


def pow_mod(field: Field, f: Poly, k: int, m: Poly) -> Poly:
    r = (1,)
    f = mod(field, f, m)
    while k:
        if k & 1:
            r = mod(field, mul(field, r, f), m)
        f = mod(field, mul(field, f, f), m)
        k >>= 1
    return r


def derivative(field: Field, f: Poly) -> Poly:
    out = []
    for i in range(1, len(f)):
        c = f[i]
        r = i % field.p
        acc = 0
        for _ in range(r):
            acc = field.add(acc, c)
        out.append(acc)
    return normalize(out)


def evaluate(field: Field, f: Poly, x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = field.add(field.mul(acc, x), c)
    return acc


def poly_str(field: Field, f: Poly, var: str = "x") -> str:
    if not f:
        return "0"
    parts = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            xs = var if i == 1 else f"{var}^{i}"
            parts.append(xs if c == 1 else f"{c}*{xs}")
    return " + ".join(parts)


# -- irreducibility and factorization ----------------------------------


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def frobenius_power_chain(field: Field, m: Poly, upto: int) -> list[Poly]:
    """[x, x**q, x**(q**2), ...] mod m, reused across irreducibility checks."""
    chain = [mod(field, X, m)]
    for _ in range(upto):
        chain.append(pow_mod(field, chain[-1], field.q, m))
    return chain


def is_irreducible(field: Field, f: Poly) -> bool:
    """Rabin's test: x**(q**n) = x mod f and no proper Frobenius fixed part."""
    f = monic(field, f)
    n = degree(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    chain = frobenius_power_chain(field, f, n)
    if sub(field, chain[n], mod(field, X, f)):
        return False
    for ell in _prime_divisors(n):
        h = sub(field, chain[n // ell], mod(field, X, f))
        if degree(gcd(field, h, f)) != 0:
            return False
    return True


def _pth_root_coeff(field: Field, a: int) -> int:
    # inverse of Frobenius: a**(p**(e-1))
    return field.pow(a, field.p ** (field.e - 1))


def squarefree_decomposition(field: Field, f: Poly) -> list[tuple[Poly, int]]:
    """Monic f as a product of pairwise-coprime squarefree parts g_m**m."""
    f = monic(field, f)
    if degree(f) <= 0:
        return []
    parts: dict[int, Poly] = {}

    def accumulate(g: Poly, m: int):
        if degree(g) > 0:
            parts[m] = mul(field, parts[m], g) if m in parts else g

    def recurse(f: Poly, outer: int):
        fp = derivative(field, f)
        if not fp:
            # f = u**p with u obtained by p-th roots of the x**(ip) coefficients
            p = field.p
            u = normalize(
                _pth_root_coeff(field, f[i]) for i in range(0, len(f), p)
            )
            recurse(u, outer * p)
            return
        g = gcd(field, f, fp)
        w = divmod_poly(field, f, g)[0]
        i = 1
        while degree(w) > 0:
            y = gcd(field, w, g)
            z = divmod_poly(field, w, y)[0]
            accumulate(z, i * outer)
            w = y
            g = divmod_poly(field, g, y)[0]
            i += 1
        if degree(g) > 0:
            recurse(g, outer)

    recurse(f, 1)
    return [(g, m) for m, g in sorted(parts.items())]


def distinct_degree_split(field: Field, f: Poly) -> list[tuple[Poly, int]]:
    """Squarefree monic f as [(product of degree-d irreducibles, d), ...]."""
    out = []
    h = mod(field, X, f)
    d = 0
    while degree(f) > 2 * d + 1:
        d += 1
        h = pow_mod(field, h, field.q, f)
        g = gcd(field, sub(field, h, X), f)
        if degree(g) > 0:
            out.append((g, d))
            f = divmod_poly(field, f, g)[0]
            h = mod(field, h, f)
    if degree(f) > 0:
        out.append((f, degree(f)))
    return out


def _poly_rng(field: Field, f: Poly, seed: int) -> random.Random:
    key = hashlib.blake2b(
        repr((field.q, field.modulus, f, seed)).encode(), digest_size=8
    ).digest()
    return random.Random(int.from_bytes(key, "big"))


def equal_degree_split(
    field: Field, f: Poly, d: int, rng: random.Random
) -> list[Poly]:
    """Split a product of distinct degree-d irreducibles into its factors."""
    n = degree(f)
    if n == d:
        return [f]
    q = field.q
    while True:
        h = normalize([rng.randrange(q) for _ in range(n)])
        if degree(h) < 1:
            continue
        g = gcd(field, h, f)
        if 0 < degree(g) < n:
            break
        if field.p == 2:
            # trace map of h over F_2 inside F_{q**d}
            t = mod(field, h, f)
            acc = t
            for _ in range(d * field.e - 1):
                t = pow_mod(field, t, 2, f)
                acc = add(field, acc, t)
            g = gcd(field, acc, f)
        else:
            u = pow_mod(field, h, (q**d - 1) // 2, f)
            g = gcd(field, sub(field, u, (1,)), f)
        if 0 < degree(g) < n:
            break
    rest = divmod_poly(field, f, g)[0]
    return equal_degree_split(field, g, d, rng) + equal_degree_split(
        field, rest, d, rng
    )


@dataclass(frozen=True)
class FactorMultiset:
    """Factorization of a nonzero polynomial into monic irreducibles.

    ``product of factor**multiplicity`` times the unit equals the input.
    """

    field: Field
    unit: int
    factors: tuple[tuple[Poly, int], ...]

    def total(self) -> int:
        return sum(m for _, m in self.factors)

    def recompose(self) -> Poly:
        out = constant(self.field, self.unit)
        for g, m in self.factors:
            for _ in range(m):
                out = mul(self.field, out, g)
        return out


def factor(field: Field, f: Poly, seed: int = DEFAULT_SEED) -> FactorMultiset:
    """Full factorization into monic irreducibles, deterministic per seed."""
    f = normalize(f)
    if not f:
        raise ValueError("zero input")
    unit = f[-1]
    fm = monic(field, f)
    rng = _poly_rng(field, fm, seed)
    found: dict[Poly, int] = {}
    for part, m in squarefree_decomposition(field, fm):
        for prod, d in distinct_degree_split(field, part):
            for irr in equal_degree_split(field, prod, d, rng):
                found[irr] = found.get(irr, 0) + m
    factors = tuple(sorted(found.items(), key=lambda t: (degree(t[0]), t[0])))
    result = FactorMultiset(field, unit, factors)
    if result.recompose() != f:
        raise InvariantError("factorization does not recompose to its input")
    return result


def count_factors(field: Field, f: Poly) -> int:
    """Number of irreducible factors counted with multiplicity.

    Avoids equal-degree splitting: within each squarefree part, the
    distinct-degree stage already reveals how many factors of each degree
    are present.
    """
    f = normalize(f)
    if not f:
        raise ValueError("zero input")
    total = 0
    for part, m in squarefree_decomposition(field, monic(field, f)):
        for prod, d in distinct_degree_split(field, part):
            total += m * (degree(prod) // d)
    return total


def reciprocal(field: Field, f: Poly) -> Poly:
    """Monic reciprocal x**deg(f) * f(1/x) / f(0); requires f(0) != 0."""
    if not f or f[0] == 0:
        raise ValueError("reciprocal requires nonzero constant term")
    return monic(field, tuple(reversed(f)))


def conjugate_coeffs(field: Field, f: Poly, subfield_order: int) -> Poly:
    """Apply x -> x**s to every coefficient (s-power Frobenius twist)."""
    return tuple(field.pow(c, subfield_order) for c in f)
