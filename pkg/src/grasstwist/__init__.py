"""Exact symbolic engine for the rank-2 Grassmannian twist.

Everything is integer arithmetic on weights: Schur-functor combinatorics,
Borel-Weil-Bott cohomology on Gr(2,d), graded RHom on the total spaces
X = Tot(Hom(V,S)) and X0 = Tot(Hom(V,l)), the Koszul complex of the twist,
the adjoint-action tables, and the induced matrix on K-theory.
"""

__version__ = "0.1.0"

from .schur_calculus import (
    SchurTerm,
    FormalSum,
    normalize_rank2,
    pieri,
    littlewood_richardson,
    cauchy_sym,
    weyl_dimension,
    schur_character,
)
from .bott_cohomology import bott, kapranov_collection, strong_exceptional_check
from .hom_spaces import (
    rhom_X_graded,
    rhom_X0_graded,
    tilting_check,
    fullness_check,
)
from .twist_engine import (
    geometry_stats,
    koszul_terms,
    apply_L,
    apply_R,
    rf_generator,
    adjoint_image_basis,
    spherical_r1,
)
from .k_theory import (
    gram_matrix,
    reduce_to_basis,
    f_class,
    twist_matrix,
    analyze_twist,
    euler_pairing_q,
)

__all__ = [
    "SchurTerm",
    "FormalSum",
    "normalize_rank2",
    "pieri",
    "littlewood_richardson",
    "cauchy_sym",
    "weyl_dimension",
    "schur_character",
    "bott",
    "kapranov_collection",
    "strong_exceptional_check",
    "rhom_X_graded",
    "rhom_X0_graded",
    "tilting_check",
    "fullness_check",
    "geometry_stats",
    "koszul_terms",
    "apply_L",
    "apply_R",
    "rf_generator",
    "adjoint_image_basis",
    "spherical_r1",
    "gram_matrix",
    "reduce_to_basis",
    "f_class",
    "twist_matrix",
    "analyze_twist",
    "euler_pairing_q",
]
