"""Conjugacy classes, power maps, centralizers, and class-algebra constants."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..errors import BudgetExceededError, InvariantError, element_budget
from .groups import FiniteGroup


@dataclass
class ConjClassData:
    """Classes of a group, in a canonical order (identity first)."""

    group: FiniteGroup
    reps: list
    sizes: list[int]
    members: list[list]
    index_of: dict
    _structure: list | None = dc_field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.reps)

    def class_of(self, g) -> int:
        return self.index_of[g]

    @property
    def centralizer_orders(self) -> list[int]:
        n = self.group.order
        return [n // s for s in self.sizes]

    def inverse_classes(self) -> list[int]:
        return [self.index_of[self.group.inv(r)] for r in self.reps]

    def rep_orders(self) -> list[int]:
        return [self.group.element_order(r) for r in self.reps]

    def structure_constants(self) -> list:
        """a[i][j][l] = #{(x, y) in C_i x C_j : xy = z} for a fixed z in C_l."""
        if self._structure is None:
            G = self.group
            k = len(self.reps)
            a = [[[0] * k for _ in range(k)] for _ in range(k)]
            for l, z in enumerate(self.reps):
                for i in range(k):
                    row = a[i]
                    for x in self.members[i]:
                        j = self.index_of[G.mult(G.inv(x), z)]
                        row[j][l] += 1
            self._structure = a
        return self._structure


def conjugacy_classes(G: FiniteGroup, budget: int | None = None) -> ConjClassData:
    limit = element_budget(budget)
    if G.order > limit:
        raise BudgetExceededError(
            f"group order {G.order} exceeds budget {limit}", required=G.order
        )
    unassigned = set(G.elements)
    orbits = []
    for g in G.elements:
        if g not in unassigned:
            continue
        orbit = {G.conjugate(h, g) for h in G.elements}
        orbits.append(orbit)
        unassigned -= orbit
    # canonical order: identity first, then by (size, rep order, min member)
    keyed = []
    for orbit in orbits:
        rep = min(orbit)
        keyed.append((len(orbit), G.element_order(rep), rep, orbit))
    keyed.sort(key=lambda t: (t[0] != 1 or t[1] != 1, t[0], t[1], t[2]))
    reps = [t[2] for t in keyed]
    sizes = [t[0] for t in keyed]
    members = [sorted(t[3]) for t in keyed]
    index_of = {}
    for ci, orbit in enumerate(members):
        for g in orbit:
            index_of[g] = ci
    if sum(sizes) != G.order:
        raise InvariantError("class sizes do not sum to the group order")
    for s in sizes:
        if G.order % s:
            raise InvariantError("class size does not divide the group order")
    return ConjClassData(G, reps, sizes, members, index_of)


def power_class_map(
    classes: ConjClassData, m: int, check: bool = False
) -> list[int]:
    """Class index of g**m per class; representative-independent."""
    G = classes.group
    out = [classes.index_of[G.power(r, m)] for r in classes.reps]
    if check:
        for ci, orbit in enumerate(classes.members):
            for g in orbit:
                if classes.index_of[G.power(g, m)] != out[ci]:
                    raise InvariantError(
                        f"power map for exponent {m} depends on the representative"
                    )
    return out


def centralizer_order(G: FiniteGroup, g) -> int:
    return sum(1 for h in G.elements if G.mult(h, g) == G.mult(g, h))
