"""Maps of partial groups, homotopies and automorphisms."""

from parcoh.homotopy.automorphisms import (
    OuterClasses,
    automorphisms,
    find_isomorphism,
    isomorphisms,
    outer_classes,
)
from parcoh.homotopy.homotopies import (
    center,
    check_homotopy,
    conjugation,
    homotopy_degree,
    normalizer,
)
from parcoh.homotopy.morphisms import (
    HomCheck,
    PGHom,
    compose,
    from_name_map,
    identity_hom,
    inverse_hom,
    is_homomorphism,
    same_map,
)

__all__ = [
    "HomCheck",
    "OuterClasses",
    "PGHom",
    "automorphisms",
    "center",
    "check_homotopy",
    "compose",
    "conjugation",
    "find_isomorphism",
    "from_name_map",
    "homotopy_degree",
    "identity_hom",
    "inverse_hom",
    "is_homomorphism",
    "isomorphisms",
    "normalizer",
    "outer_classes",
    "same_map",
]
