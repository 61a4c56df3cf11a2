"""Enumerated finite groups: permutation and matrix backends.

Elements are canonical hashable tuples (permutation images, or row-major
matrix entries encoded as field codes).  Element lists are sorted, so
construction is deterministic.  Groups are immutable after construction
and safe to share.
"""

from __future__ import annotations

import re
from itertools import permutations, product as iproduct

import numpy as np

from ..errors import BudgetExceededError, ParseError, element_budget
from ..ffpoly.field import Field, get_field


class FiniteGroup:
    """Base: element list + multiplication; everything else is derived."""

    def __init__(self, name: str, elements: list, identity):
        self.name = name
        self.elements = sorted(elements)
        self.identity = identity
        self._index = {g: i for i, g in enumerate(self.elements)}
        self._table = None
        self._power_arrays: dict[int, np.ndarray] = {}

    # subclasses implement mult and inv
    def mult(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, g) -> int:
        return self._index[g]

    def __contains__(self, g) -> bool:
        return g in self._index

    def power(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        acc = self.identity
        while e:
            if e & 1:
                acc = self.mult(acc, a)
            a = self.mult(a, a)
            e >>= 1
        return acc

    def element_order(self, a) -> int:
        n = 1
        x = a
        while x != self.identity:
            x = self.mult(x, a)
            n += 1
        return n

    def conjugate(self, g, x):
        """g x g**-1."""
        return self.mult(self.mult(g, x), self.inv(g))

    def mult_table(self) -> np.ndarray:
        """Index-level multiplication table (built lazily; O(|G|**2))."""
        if self._table is None:
            n = len(self.elements)
            table = np.empty((n, n), dtype=np.int32)
            idx = self._index
            for i, a in enumerate(self.elements):
                row = table[i]
                for j, b in enumerate(self.elements):
                    row[j] = idx[self.mult(a, b)]
            self._table = table
        return self._table

    def power_index_array(self, e: int) -> np.ndarray:
        """index -> index of the e-th power, cached per exponent."""
        if e not in self._power_arrays:
            idx = self._index
            self._power_arrays[e] = np.fromiter(
                (idx[self.power(g, e)] for g in self.elements),
                dtype=np.int32,
                count=len(self.elements),
            )
        return self._power_arrays[e]

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} of order {self.order}>"


def _check_budget(name: str, predicted: int, budget: int | None):
    limit = element_budget(budget)
    if predicted > limit:
        raise BudgetExceededError(
            f"{name} has {predicted} elements, exceeding budget {limit}",
            required=predicted,
        )


# -- permutation groups --------------------------------------------------


def _perm_parity(p: tuple[int, ...]) -> int:
    seen = [False] * len(p)
    parity = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


class PermutationGroup(FiniteGroup):
    """Group of permutations of range(n), as image tuples."""

    def __init__(self, name: str, degree: int, elements: list):
        self.degree = degree
        super().__init__(name, elements, tuple(range(degree)))

    def mult(self, a, b):
        # apply b first, then a
        return tuple(a[b[i]] for i in range(self.degree))

    def inv(self, a):
        out = [0] * self.degree
        for i, ai in enumerate(a):
            out[ai] = i
        return tuple(out)


def symmetric_group(n: int, budget: int | None = None) -> PermutationGroup:
    import math

    _check_budget(f"S{n}", math.factorial(n), budget)
    return PermutationGroup(f"S{n}", n, [tuple(p) for p in permutations(range(n))])


def alternating_group(n: int, budget: int | None = None) -> PermutationGroup:
    import math

    _check_budget(f"A{n}", math.factorial(n) // 2, budget)
    elems = [tuple(p) for p in permutations(range(n)) if _perm_parity(tuple(p)) == 0]
    return PermutationGroup(f"A{n}", n, elems)


def cyclic_group(n: int, budget: int | None = None) -> PermutationGroup:
    """Z_n as the group generated by an n-cycle."""
    _check_budget(f"C{n}", n, budget)
    cycle = tuple(list(range(1, n)) + [0])
    elems = []
    g = tuple(range(n))
    for _ in range(n):
        elems.append(g)
        g = tuple(cycle[i] for i in g)
    return PermutationGroup(f"C{n}", n, elems)


# -- matrix groups --------------------------------------------------------


def _mat_mult(field: Field, dim: int, a, b):
    q = field.q
    mulf, addf = field.mulf, field.addf
    if mulf is not None:
        if dim == 2:
            a0, a1, a2, a3 = a
            b0, b1, b2, b3 = b
            return (
                addf[mulf[a0 * q + b0] * q + mulf[a1 * q + b2]],
                addf[mulf[a0 * q + b1] * q + mulf[a1 * q + b3]],
                addf[mulf[a2 * q + b0] * q + mulf[a3 * q + b2]],
                addf[mulf[a2 * q + b1] * q + mulf[a3 * q + b3]],
            )
        out = []
        for i in range(dim):
            for j in range(dim):
                acc = 0
                for l in range(dim):
                    acc = addf[acc * q + mulf[a[i * dim + l] * q + b[l * dim + j]]]
                out.append(acc)
        return tuple(out)
    out = []
    for i in range(dim):
        for j in range(dim):
            acc = 0
            for l in range(dim):
                acc = field.add(acc, field.mul(a[i * dim + l], b[l * dim + j]))
            out.append(acc)
    return tuple(out)


def _mat_det(field: Field, dim: int, m):
    if dim == 2:
        return field.sub(field.mul(m[0], m[3]), field.mul(m[1], m[2]))
    if dim == 3:
        a, b, c, d, e, f, g, h, i = m
        t1 = field.mul(a, field.sub(field.mul(e, i), field.mul(f, h)))
        t2 = field.mul(b, field.sub(field.mul(d, i), field.mul(f, g)))
        t3 = field.mul(c, field.sub(field.mul(d, h), field.mul(e, g)))
        return field.add(field.sub(t1, t2), t3)
    raise ValueError("only dimensions 2 and 3 are supported")


def _mat_inv(field: Field, dim: int, m):
    det = _mat_det(field, dim, m)
    dinv = field.inv(det)
    if dim == 2:
        a, b, c, d = m
        return (
            field.mul(d, dinv),
            field.mul(field.neg(b), dinv),
            field.mul(field.neg(c), dinv),
            field.mul(a, dinv),
        )
    a, b, c, d, e, f, g, h, i = m

    def co(x1, y1, x2, y2):
        return field.sub(field.mul(x1, y1), field.mul(x2, y2))

    adj = (
        co(e, i, f, h), co(c, h, b, i), co(b, f, c, e),
        co(f, g, d, i), co(a, i, c, g), co(c, d, a, f),
        co(d, h, e, g), co(b, g, a, h), co(a, e, b, d),
    )
    return tuple(field.mul(x, dinv) for x in adj)


def _mat_trace(field: Field, dim: int, m):
    acc = 0
    for i in range(dim):
        acc = field.add(acc, m[i * dim + i])
    return acc


def charpoly_of_matrix(field: Field, dim: int, m) -> tuple:
    """Characteristic polynomial, little-endian coefficient tuple."""
    tr = _mat_trace(field, dim, m)
    det = _mat_det(field, dim, m)
    if dim == 2:
        return (det, field.neg(tr), field.one)
    a, b, c, d, e, f, g, h, i = m
    s2 = 0
    for x, y, u, v in ((a, e, b, d), (a, i, c, g), (e, i, f, h)):
        s2 = field.add(s2, field.sub(field.mul(x, y), field.mul(u, v)))
    return (field.neg(det), s2, field.neg(tr), field.one)


class MatrixGroup(FiniteGroup):
    """Subgroup of GL_dim(F_q) given by an explicit element list."""

    def __init__(self, name: str, field: Field, dim: int, elements: list):
        self.field = field
        self.dim = dim
        ident = tuple(
            field.one if i == j else 0 for i in range(dim) for j in range(dim)
        )
        super().__init__(name, elements, ident)

    def mult(self, a, b):
        return _mat_mult(self.field, self.dim, a, b)

    def inv(self, a):
        return _mat_inv(self.field, self.dim, a)

    def trace(self, a):
        return _mat_trace(self.field, self.dim, a)

    def charpoly(self, a) -> tuple:
        return charpoly_of_matrix(self.field, self.dim, a)


def _sl_order(dim: int, q: int) -> int:
    total = 1
    for i in range(dim):
        total *= q**dim - q**i
    return total // (q - 1)


def _gl_order(dim: int, q: int) -> int:
    total = 1
    for i in range(dim):
        total *= q**dim - q**i
    return total


def special_linear_group(dim: int, q: int, budget: int | None = None) -> MatrixGroup:
    _check_budget(f"SL{dim}({q})", _sl_order(dim, q), budget)
    field = get_field(q)
    elems = []
    for entries in iproduct(range(q), repeat=dim * dim):
        if _mat_det(field, dim, entries) == field.one:
            elems.append(entries)
    return MatrixGroup(f"SL{dim}({q})", field, dim, elems)


def general_linear_group(dim: int, q: int, budget: int | None = None) -> MatrixGroup:
    _check_budget(f"GL{dim}({q})", _gl_order(dim, q), budget)
    field = get_field(q)
    elems = []
    for entries in iproduct(range(q), repeat=dim * dim):
        if _mat_det(field, dim, entries) != 0:
            elems.append(entries)
    return MatrixGroup(f"GL{dim}({q})", field, dim, elems)


class CenterQuotientGroup(FiniteGroup):
    """Quotient of a matrix group by its scalar center, via canonical reps.

    The representative of a coset is its minimal member tuple, so element
    identity and ordering are stable.
    """

    def __init__(self, name: str, base: MatrixGroup):
        self.base = base
        field, dim = base.field, base.dim
        scalars = []
        for c in range(1, field.q):
            s = tuple(c if i == j else 0 for i in range(dim) for j in range(dim))
            if s in base:
                scalars.append(s)
        self.center = scalars
        reps = {self._canon_raw(g) for g in base.elements}
        super().__init__(name, sorted(reps), self._canon_raw(base.identity))

    def _canon_raw(self, g):
        return min(self.base.mult(s, g) for s in self.center)

    def mult(self, a, b):
        return self._canon_raw(self.base.mult(a, b))

    def inv(self, a):
        return self._canon_raw(self.base.inv(a))


def projective_special_linear_group(
    dim: int, q: int, budget: int | None = None
) -> CenterQuotientGroup:
    base = special_linear_group(dim, q, budget)
    return CenterQuotientGroup(f"PSL{dim}({q})", base)


# -- specifier parsing ----------------------------------------------------

_PERM_RE = re.compile(r"^([ASC])(\d+)$")
_MAT_RE = re.compile(r"^(SL|GL|PSL)(\d)\((\d+)\)$")


def parse_group(spec: str, budget: int | None = None) -> FiniteGroup:
    """Build a group from a specifier like A5, S6, C7, SL2(7), PSL2(11)."""
    spec = spec.strip()
    m = _PERM_RE.match(spec)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if n < 1:
            raise ParseError(f"bad degree in group specifier {spec!r}")
        if kind == "A":
            return alternating_group(n, budget)
        if kind == "S":
            return symmetric_group(n, budget)
        return cyclic_group(n, budget)
    m = _MAT_RE.match(spec)
    if m:
        kind, dim, q = m.group(1), int(m.group(2)), int(m.group(3))
        if dim not in (2, 3):
            raise ParseError(f"unsupported matrix dimension in {spec!r}")
        if kind == "SL":
            return special_linear_group(dim, q, budget)
        if kind == "GL":
            return general_linear_group(dim, q, budget)
        return projective_special_linear_group(dim, q, budget)
    raise ParseError(f"unrecognized group specifier {spec!r}")
