"""Exact linear algebra over finitely generated abelian groups."""

from parcoh.linalg.abelian import (
    AbelianPresentation,
    AbHom,
    CyclicSum,
    FinAbGroup,
    abelian_group_from_table,
    iso_class_equal,
)
from parcoh.linalg.homology import homology, kernel_lattice
from parcoh.linalg.snf import SNFResult, is_smith_form, mat_mul, snf

__all__ = [
    "AbHom",
    "AbelianPresentation",
    "CyclicSum",
    "FinAbGroup",
    "SNFResult",
    "abelian_group_from_table",
    "homology",
    "is_smith_form",
    "iso_class_equal",
    "kernel_lattice",
    "mat_mul",
    "snf",
]
