"""The three characteristic-polynomial families and their block combinatorics.

Families of monic polynomials, indexed by a size parameter q:

* linear:   degree-n polynomials over F_q with constant term (-1)**n
            (characteristic polynomials of determinant-1 matrices);
* unitary:  degree-n polynomials P over F_{q**2} whose coefficient-wise
            q-power twist satisfies twist(P)(x) = (-x)**n * P(1/x);
* selfdual: even-degree palindromic polynomials over F_q
            (P(x) = x**deg * P(1/x)).

Members correspond to multisets of "blocks" -- minimal root sets stable
under the relevant symmetry (Frobenius; x -> x**(-q); Frobenius together
with inversion) -- subject to a product-one constraint for the linear and
unitary families.  This module provides membership tests, enumerators,
closed-form block counts, exact counts of blocks refined by their product
("norm fibers"), and independent orbit-counting oracles for all of them.

The norm fibers are computed by a divisor recursion in the cyclic groups
Z_(q**n -+ 1); the counts are NOT uniform over the fiber base for small q
(e.g. degree-2 blocks over F_3 split 1/2 over the two norm values), which
is why the exact fiber vector, and not a single per-block count, is what
the generating-function module consumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct

from ..errors import BudgetExceededError, element_budget
from .field import Field, get_field
from . import polys
from .polys import Poly

KINDS = ("linear", "unitary", "selfdual")


def mobius(n: int) -> int:
    if n == 1:
        return 1
    m, out = n, 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            out = -out
        d += 1
    if m > 1:
        out = -out
    return out


def divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def irreducible_poly_count(n: int, q: int) -> int:
    """Number of monic irreducible degree-n polynomials over F_q."""
    total = sum(mobius(n // d) * q**d for d in divisors(n))
    assert total % n == 0
    return total // n


@dataclass(frozen=True)
class FamilyTag:
    """One of the three families at a fixed degree.

    ``degree`` is the polynomial degree (even for selfdual); ``q`` is the
    family parameter -- unitary polynomials live over F_{q**2}.
    """

    kind: str
    degree: int
    q: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.degree < 1:
            raise ValueError("degree must be positive")
        if self.kind == "selfdual" and self.degree % 2:
            raise ValueError("selfdual polynomials have even degree")

    def field(self) -> Field:
        return get_field(self.q * self.q if self.kind == "unitary" else self.q)

    def size(self) -> int:
        """Family cardinality."""
        if self.kind == "selfdual":
            return self.q ** (self.degree // 2)
        return self.q ** (self.degree - 1)


def linear_tag(n: int, q: int) -> FamilyTag:
    return FamilyTag("linear", n, q)


def unitary_tag(n: int, q: int) -> FamilyTag:
    return FamilyTag("unitary", n, q)


def selfdual_tag(degree: int, q: int) -> FamilyTag:
    return FamilyTag("selfdual", degree, q)


# -- membership and enumeration ----------------------------------------


def in_family(tag: FamilyTag, f: Poly) -> bool:
    """Whether the monic polynomial f satisfies the family's identity."""
    field = tag.field()
    n = tag.degree
    if polys.degree(f) != n:
        raise ValueError(f"degree mismatch: expected {n}, got {polys.degree(f)}")
    if not polys.is_monic(f):
        raise ValueError("family membership is defined for monic polynomials")
    if tag.kind == "linear":
        sign = field.one if n % 2 == 0 else field.neg(field.one)
        return f[0] == sign
    if tag.kind == "selfdual":
        return all(f[k] == f[n - k] for k in range(n + 1))
    # unitary: coefficient-wise q-Frobenius twist equals the signed reversal
    sign = field.one if n % 2 == 0 else field.neg(field.one)
    return all(field.pow(f[j], tag.q) == field.mul(sign, f[n - j]) for j in range(n + 1))


def enumerate_family(tag: FamilyTag, budget: int | None = None):
    """Yield every member exactly once (deterministic order)."""
    size = tag.size()
    limit = element_budget(budget)
    if size > limit:
        raise BudgetExceededError(
            f"family has {size} members, exceeding budget {limit}", required=size
        )
    field = tag.field()
    n = tag.degree
    if tag.kind == "linear":
        sign = field.one if n % 2 == 0 else field.neg(field.one)
        for mid in iproduct(field.elements(), repeat=n - 1):
            yield (sign, *mid, field.one)
    elif tag.kind == "selfdual":
        for mid in iproduct(field.elements(), repeat=n // 2):
            yield tuple(_palindrome(field, mid, n))
    else:
        sign = field.one if n % 2 == 0 else field.neg(field.one)
        half = [field.elements()] * ((n - 1) // 2)
        mid_choices = [field.subfield_elements(tag.q)] if n % 2 == 0 else []
        for lower in iproduct(*half, *mid_choices):
            coeffs = [0] * (n + 1)
            coeffs[0] = sign
            coeffs[n] = field.one
            for j, c in enumerate(lower[: (n - 1) // 2], start=1):
                coeffs[j] = c
                coeffs[n - j] = field.mul(sign, field.pow(c, tag.q))
            if n % 2 == 0:
                coeffs[n // 2] = lower[-1]
            yield tuple(coeffs)


def _palindrome(field: Field, mid: tuple, n: int) -> list[int]:
    coeffs = [0] * (n + 1)
    coeffs[0] = coeffs[n] = field.one
    for j, c in enumerate(mid, start=1):
        coeffs[j] = c
        coeffs[n - j] = c
    return coeffs


# -- block counts of members -------------------------------------------


def block_count(tag: FamilyTag, f: Poly, seed: int = polys.DEFAULT_SEED) -> int:
    """Number of minimal stable blocks in the root multiset of f.

    For the linear family blocks coincide with irreducible factors.  For
    selfdual and unitary members a block is either a single symmetric
    irreducible factor or a pair (factor, twisted-reciprocal partner), so
    the block count can be strictly smaller than the factor count.
    """
    field = tag.field()
    if tag.kind == "linear":
        return polys.count_factors(field, f)
    fact = polys.factor(field, f, seed=seed)
    if tag.kind == "selfdual":
        partner = lambda g: polys.reciprocal(field, g)
    else:
        s = tag.q

        def partner(g):
            return polys.conjugate_coeffs(field, polys.reciprocal(field, g), s)

    mult = dict(fact.factors)
    blocks = 0
    seen = set()
    for g, m in fact.factors:
        if g in seen:
            continue
        h = partner(g)
        if h == g:
            if tag.kind == "selfdual" and polys.degree(g) == 1:
                # selfdual blocks have even size: roots +-1 pair up inside
                # the multiset as {1,1} / {-1,-1} blocks
                if m % 2:
                    raise ValueError("odd multiplicity at root 1 or -1")
                blocks += m // 2
            else:
                blocks += m
            seen.add(g)
        else:
            if mult.get(h) != m:
                raise ValueError("twisted-reciprocal partner multiplicity mismatch")
            blocks += m
            seen.add(g)
            seen.add(h)
    return blocks


# -- closed-form block ("irreducible") counts ---------------------------


def count_irreducibles(kind: str, n: int, q: int) -> int:
    """Number of degree-n (size-n for selfdual) blocks for the family kind.

    For selfdual, ``n`` is the block size m; odd m >= 3 yields 0.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind == "linear":
        return q - 1 if n == 1 else irreducible_poly_count(n, q)
    if kind == "unitary":
        total = sum(
            mobius(n // d) * (q**d - (-1) ** d) for d in divisors(n)
        )
        assert total % n == 0
        return total // n
    if kind == "selfdual":
        if n == 1:
            return 2 if q % 2 else 1
        if n == 2:
            return q - 2 if q % 2 else q - 1
        if n % 2:
            return 0
        return irreducible_poly_count(n // 2, q)
    raise ValueError(f"unknown family kind {kind!r}")


# -- norm fibers ---------------------------------------------------------


def _solution_count(a: int, c: int, n: int) -> int:
    """Number of x in Z_n with a*x = c (mod n)."""
    import math

    g = math.gcd(a % n, n)
    return g if c % g == 0 else 0


@lru_cache(maxsize=None)
def norm_fiber_counts(kind: str, n: int, q: int) -> tuple[int, ...]:
    """Exact fiber sizes of the block-product map, as a vector over Z_g.

    Blocks of the linear (resp. unitary) family carry a product value in
    the cyclic group of order g = q-1 (resp. q+1); entry c counts the
    degree-n blocks whose product has discrete log c.  Entries sum to
    ``count_irreducibles(kind, n, q)`` but are not uniform in general.
    """
    if kind == "linear":
        g = q - 1
        modulus = q**n - 1
        exp = (q**n - 1) // (q - 1)
    elif kind == "unitary":
        g = q + 1
        modulus = q**n - (-1) ** n
        exp = (1 - (-q) ** n) // (1 + q)
    else:
        raise ValueError("norm fibers exist for linear and unitary families only")
    if g == 1:
        return (count_irreducibles(kind, n, q),)

    embed = modulus // g  # Z_g -> Z_modulus as the index-g subgroup
    totals = [_solution_count(exp, c * embed, modulus) for c in range(g)]
    counts = list(totals)
    for d in divisors(n):
        if d == n:
            continue
        sub = norm_fiber_counts(kind, d, q)
        r = n // d
        for b in range(g):
            if sub[b]:
                counts[(r * b) % g] -= d * sub[b]
    fibers = []
    for c in counts:
        if c % n:
            raise AssertionError("fiber recursion produced a non-orbit count")
        fibers.append(c // n)
    return tuple(fibers)


# -- independent orbit-counting oracles ---------------------------------


def _exact_orbit_count(modulus: int, mult: int, size: int) -> int:
    """Orbits of x -> mult*x on Z_modulus having exactly ``size`` elements."""
    seen = bytearray(modulus)
    count = 0
    for t in range(modulus):
        if seen[t]:
            continue
        orbit = [t]
        s = (t * mult) % modulus
        while s != t:
            orbit.append(s)
            s = (s * mult) % modulus
        for u in orbit:
            seen[u] = 1
        if len(orbit) == size:
            count += 1
    return count


def enumerate_block_count(kind: str, n: int, q: int) -> int:
    """Count blocks by explicit orbit enumeration (oracle for the formulas)."""
    if kind == "linear":
        return _exact_orbit_count(q**n - 1, q, n)
    if kind == "unitary":
        modulus = q**n - (-1) ** n
        return _exact_orbit_count(modulus, (-q) % modulus, n)
    if kind == "selfdual":
        return _selfdual_enumerated(n, q)
    raise ValueError(f"unknown family kind {kind!r}")


def _selfdual_enumerated(m: int, q: int) -> int:
    if m % 2:
        # single Frobenius orbits of odd size m fixed setwise by inversion
        modulus = q**m - 1
        seen = bytearray(modulus)
        count = 0
        for t in range(modulus):
            if seen[t]:
                continue
            orbit = [t]
            s = (t * q) % modulus
            while s != t:
                orbit.append(s)
                s = (s * q) % modulus
            for u in orbit:
                seen[u] = 1
            if len(orbit) == m and set(orbit) == {(-u) % modulus for u in orbit}:
                count += 1
        return count
    k = m // 2
    # type A: inversion-stable Frobenius orbits of size 2k, inside mu_{q**k+1}
    a = _exact_orbit_count(q**k + 1, q % (q**k + 1), 2 * k)
    # type B: pairs {orbit, -orbit} of size-k Frobenius orbits in F_{q**k}*
    modulus = q**k - 1
    seen = bytearray(modulus)
    b = 0
    for t in range(modulus):
        if seen[t]:
            continue
        orbit = [t]
        s = (t * q) % modulus
        while s != t:
            orbit.append(s)
            s = (s * q) % modulus
        for u in orbit:
            seen[u] = 1
        if len(orbit) == k and (-t) % modulus not in orbit:
            b += 1
    assert b % 2 == 0
    return a + b // 2


def enumerate_fiber_counts(kind: str, n: int, q: int) -> tuple[int, ...]:
    """Norm fibers by orbit enumeration (oracle for norm_fiber_counts)."""
    if kind == "linear":
        g = q - 1
        modulus = q**n - 1
        exp = (q**n - 1) // (q - 1)
        mult = q
    elif kind == "unitary":
        g = q + 1
        modulus = q**n - (-1) ** n
        exp = ((1 - (-q) ** n) // (1 + q)) % modulus
        mult = (-q) % modulus
    else:
        raise ValueError("norm fibers exist for linear and unitary families only")
    embed = modulus // g
    fibers = [0] * g
    seen = bytearray(modulus)
    for t in range(modulus):
        if seen[t]:
            continue
        orbit = [t]
        s = (t * mult) % modulus
        while s != t:
            orbit.append(s)
            s = (s * mult) % modulus
        for u in orbit:
            seen[u] = 1
        if len(orbit) == n:
            prod = (exp * t) % modulus
            assert prod % embed == 0
            fibers[prod // embed] += 1
    return tuple(fibers)
