"""Lagrangian planes in R^4: splittings, invariance, and the form obstruction.

A plane is a 2-dimensional subspace given by a rational 4x2 basis. The
symplectic form omega(u, v) = u^T J v decides whether a plane is Lagrangian;
rank tests decide direct sums and invariance under a matrix. The obstruction
functional omega(u, S u) certifies, when nonzero, that no S-invariant plane
through u can be Lagrangian.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exact import (
    GaussianRational,
    Matrix,
    Scalar,
    kernel_basis_gaussian,
    rank,
    rref,
    to_rational,
)
from .symplectic import J


class RankDeficientBasisError(ValueError):
    """Raised when a plane is constructed from a basis of rank below 2."""


class NotAnEigenvalueError(ValueError):
    """Raised when the supplied scalar is not an eigenvalue of the matrix."""


class DefectiveEigenspaceError(ValueError):
    """Raised when the eigenspace over Q(i) is not 1-dimensional, so the
    realified plane construction does not apply."""


def omega(u: Sequence[Scalar], v: Sequence[Scalar]) -> Fraction:
    """The standard symplectic form u^T J v."""
    if len(u) != 4:
        raise ValueError("omega expects vectors of length 4")
    jv = J.apply(v)
    return sum((to_rational(a) * b for a, b in zip(u, jv)), Fraction(0))


class Plane:
    """A 2-dimensional subspace of R^4, held as a rational 4x2 basis.

    Subspace identity does not depend on the chosen basis: equality and
    hashing go through the column-reduced canonical form (the reduced row
    echelon form of the transposed basis, pivots normalized to 1).
    """

    __slots__ = ("basis", "_canonical")

    def __init__(self, basis: Matrix):
        if basis.shape != (4, 2):
            raise ValueError(f"a plane basis must be 4x2, got {basis.shape}")
        if rank(basis) != 2:
            raise RankDeficientBasisError("basis columns do not span a plane")
        reduced, _ = rref(basis.transpose().rows)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "_canonical", Matrix(reduced))

    def __setattr__(self, name, value):
        raise AttributeError("Plane is immutable")

    @classmethod
    def from_vectors(cls, v1: Sequence[Scalar], v2: Sequence[Scalar]) -> "Plane":
        return cls(Matrix.from_columns([v1, v2]))

    def canonical(self) -> Matrix:
        """Basis-independent 2x4 canonical form of the plane."""
        return self._canonical

    def spanning_vectors(self) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
        return (self.basis.column(0), self.basis.column(1))

    def __eq__(self, other):
        if not isinstance(other, Plane):
            return NotImplemented
        return self._canonical == other._canonical

    def __hash__(self):
        return hash(self._canonical)

    def __repr__(self):
        v1, v2 = self.spanning_vectors()
        return f"Plane(span{{{list(map(str, v1))}, {list(map(str, v2))}}})"


def is_lagrangian(plane: Plane) -> bool:
    """True iff the form vanishes on the plane (basis^T J basis = 0)."""
    b = plane.basis
    return b.transpose() * J * b == Matrix.zero(2, 2)


def is_splitting(u: Plane, v: Plane) -> bool:
    """True iff R^4 = U + V is a direct sum, i.e. [U | V] has rank 4."""
    return rank(u.basis.hstack(v.basis)) == 4


def is_invariant(s: Matrix, plane: Plane) -> bool:
    """True iff S maps the plane into itself."""
    if s.shape != (4, 4):
        raise ValueError(f"is_invariant requires a 4x4 matrix, got {s.shape}")
    return rank(plane.basis.hstack(s * plane.basis)) == 2


def omega_obstruction(s: Matrix, u: Sequence[Scalar]) -> Fraction:
    """The exact value omega(u, S u).

    A nonzero value for some u in a candidate S-invariant plane certifies
    that the plane is not Lagrangian.
    """
    if s.shape != (4, 4):
        raise ValueError(f"omega_obstruction requires a 4x4 matrix, got {s.shape}")
    return omega(u, s.apply(u))


def realified_eigenplane(s: Matrix, eigenvalue: GaussianRational) -> Plane:
    """The invariant real plane spanned by Re(w) and Im(w) for an eigenvector
    w of a genuinely complex eigenvalue in Q(i).

    The eigenvector is found by exact elimination over Q(i). The eigenvalue
    must be supplied by the caller (no quartic root extraction happens here),
    must have nonzero imaginary part, and its eigenspace over Q(i) must be
    1-dimensional; otherwise NotAnEigenvalueError, ValueError, or
    DefectiveEigenspaceError is raised. The returned plane always satisfies
    is_invariant(s, plane).
    """
    if s.shape != (4, 4):
        raise ValueError(f"realified_eigenplane requires a 4x4 matrix, got {s.shape}")
    if eigenvalue.is_real:
        raise ValueError("eigenvalue must have nonzero imaginary part")
    shifted = [[GaussianRational(s[i, j]) - (eigenvalue if i == j else 0)
                for j in range(4)] for i in range(4)]
    kernel = kernel_basis_gaussian(shifted)
    if not kernel:
        raise NotAnEigenvalueError(f"{eigenvalue} is not an eigenvalue")
    if len(kernel) > 1:
        raise DefectiveEigenspaceError(
            f"eigenspace of {eigenvalue} has dimension {len(kernel)}, expected 1")
    w = kernel[0]
    return Plane.from_vectors([z.re for z in w], [z.im for z in w])
