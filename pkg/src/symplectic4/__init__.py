"""Exact analysis of 4x4 symplectic matrices over the rationals.

The package provides arbitrary-precision rational and Q(i) arithmetic, exact
characteristic polynomials and ranks, symplectic-group predicates, spectral
classification without root extraction, Lagrangian plane geometry, and a
machine-verified one-parameter family separating the determinant/trace
positivity test from ellipticity.
"""

from .exact import (
    GaussianRational,
    Matrix,
    Polynomial,
    Rational,
    block4,
    char_poly,
    det,
    kernel_basis_gaussian,
    poly_eval,
    rank,
    rref,
    to_rational,
)
from .family import (
    OBSTRUCTION_WITNESS,
    FamilyReport,
    SplittingDegenerateError,
    family_P,
    family_char_poly,
    family_invariants_ok,
    family_report,
    family_spectrum,
    family_splitting,
    max_norm_dist,
)
from .lagrangian import (
    DefectiveEigenspaceError,
    NotAnEigenvalueError,
    Plane,
    RankDeficientBasisError,
    is_invariant,
    is_lagrangian,
    is_splitting,
    omega,
    omega_obstruction,
    realified_eigenplane,
)
from .symplectic import (
    J,
    NonSymplecticMatrixError,
    SpectralClass,
    SpectralTag,
    classify_spectrum,
    is_symplectic,
    random_symplectic,
    satisfies_cond1,
    satisfies_cond2,
    symplectic_inverse,
)

__version__ = "0.1.0"

__all__ = [
    "GaussianRational",
    "Matrix",
    "Polynomial",
    "Rational",
    "block4",
    "char_poly",
    "det",
    "kernel_basis_gaussian",
    "poly_eval",
    "rank",
    "rref",
    "to_rational",
    "J",
    "NonSymplecticMatrixError",
    "SpectralClass",
    "SpectralTag",
    "classify_spectrum",
    "is_symplectic",
    "random_symplectic",
    "satisfies_cond1",
    "satisfies_cond2",
    "symplectic_inverse",
    "DefectiveEigenspaceError",
    "NotAnEigenvalueError",
    "Plane",
    "RankDeficientBasisError",
    "is_invariant",
    "is_lagrangian",
    "is_splitting",
    "omega",
    "omega_obstruction",
    "realified_eigenplane",
    "OBSTRUCTION_WITNESS",
    "FamilyReport",
    "SplittingDegenerateError",
    "family_P",
    "family_char_poly",
    "family_invariants_ok",
    "family_report",
    "family_spectrum",
    "family_splitting",
    "max_norm_dist",
]
