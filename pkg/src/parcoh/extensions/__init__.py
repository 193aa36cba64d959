"""Twisting pairs, twisted products and the classification of extensions."""

from parcoh.extensions.classification import (
    NO_EXTENSION,
    ClassificationResult,
    classify_group_extensions,
    count_free_extensions,
    enumerate_outer_actions,
    free_extension_formula,
    identify_total,
    search_eta,
)
from parcoh.extensions.equivalence import extension_equivalent, find_equivalence
from parcoh.extensions.twisted_product import ExtensionTable, twisted_product
from parcoh.extensions.twisting import (
    TwistingKind,
    TwistingPair,
    pair_with_eta,
    trivial_pair,
    validate_twisting_pair,
)

__all__ = [
    "NO_EXTENSION",
    "ClassificationResult",
    "ExtensionTable",
    "TwistingKind",
    "TwistingPair",
    "classify_group_extensions",
    "count_free_extensions",
    "enumerate_outer_actions",
    "extension_equivalent",
    "find_equivalence",
    "free_extension_formula",
    "identify_total",
    "pair_with_eta",
    "search_eta",
    "trivial_pair",
    "twisted_product",
    "validate_twisting_pair",
]
