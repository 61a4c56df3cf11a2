"""Finite fields, polynomial factorization, and characteristic-polynomial families."""

from .field import Field, get_field, default_modulus
from .polys import (
    FactorMultiset,
    count_factors,
    degree,
    evaluate,
    factor,
    is_irreducible,
    monic,
    mul,
    normalize,
    poly_str,
)
from .families import (
    FamilyTag,
    block_count,
    count_irreducibles,
    enumerate_block_count,
    enumerate_family,
    enumerate_fiber_counts,
    in_family,
    irreducible_poly_count,
    linear_tag,
    norm_fiber_counts,
    selfdual_tag,
    unitary_tag,
)

__all__ = [
    "Field",
    "get_field",
    "default_modulus",
    "FactorMultiset",
    "factor",
    "count_factors",
    "is_irreducible",
    "degree",
    "monic",
    "mul",
    "normalize",
    "evaluate",
    "poly_str",
    "FamilyTag",
    "linear_tag",
    "unitary_tag",
    "selfdual_tag",
    "in_family",
    "enumerate_family",
    "count_irreducibles",
    "irreducible_poly_count",
    "norm_fiber_counts",
    "block_count",
    "enumerate_block_count",
    "enumerate_fiber_counts",
]
