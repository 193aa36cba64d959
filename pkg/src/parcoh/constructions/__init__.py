"""Standard finite groups and partial groups."""

from parcoh.constructions.builders import (
    as_free_generators,
    bar,
    bar_ids,
    free_partial_group,
    free_product_of_word,
    product,
)
from parcoh.constructions.groups import (
    FiniteGroupTable,
    abelian_group,
    alternating_group,
    catalog_is_complete,
    center_of_group,
    conjugation_map,
    cyclic_group,
    dicyclic_group,
    dihedral_group,
    direct_product_group,
    group_automorphisms,
    group_from_operation,
    group_from_table,
    is_group_homomorphism,
    quaternion_group,
    small_group_catalog,
    symmetric_group,
)

__all__ = [
    "FiniteGroupTable",
    "abelian_group",
    "alternating_group",
    "as_free_generators",
    "bar",
    "bar_ids",
    "catalog_is_complete",
    "center_of_group",
    "conjugation_map",
    "cyclic_group",
    "dicyclic_group",
    "dihedral_group",
    "direct_product_group",
    "free_partial_group",
    "free_product_of_word",
    "group_automorphisms",
    "group_from_operation",
    "group_from_table",
    "is_group_homomorphism",
    "product",
    "quaternion_group",
    "small_group_catalog",
    "symmetric_group",
]
