"""Cohomology of partial groups with coefficients in an abelian group."""

from parcoh.cohomology.actions import (
    Cochain,
    LocalSystem,
    PGAction,
    action_from_matrices,
    induced_center_action,
    local_system_from_action,
    trivial_action,
    validate_action,
    validate_local_system,
)
from parcoh.cohomology.complexes import (
    apply_coboundary,
    coboundary,
    cochain_group,
    cocycle_basis,
    cohomology_group,
    compare_theories,
    local_coboundary,
    local_cochain_words,
    normalized_cohomology_group,
)
from parcoh.cohomology.normalization import NormalizationResult, normalize_cocycle

__all__ = [
    "Cochain",
    "LocalSystem",
    "NormalizationResult",
    "PGAction",
    "action_from_matrices",
    "apply_coboundary",
    "coboundary",
    "cochain_group",
    "cocycle_basis",
    "cohomology_group",
    "compare_theories",
    "induced_center_action",
    "local_coboundary",
    "local_cochain_words",
    "local_system_from_action",
    "normalize_cocycle",
    "normalized_cohomology_group",
    "trivial_action",
    "validate_action",
    "validate_local_system",
]
