"""Symplectic-group predicates and exact spectral classification in dimension 4.

A 4x4 matrix S is symplectic when S^T J S = J for the standard skew form J.
Its characteristic polynomial is then reciprocal, which lets the eigenvalue
location be decided entirely with rational sign tests on the reduced
quadratic in mu = lambda + 1/lambda, with no root extraction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt

from .exact import Matrix, Polynomial, char_poly, det, rank

J = Matrix([
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [-1, 0, 0, 0],
    [0, -1, 0, 0],
])

_I4 = Matrix.identity(4)

# (x - 1)^4, the characteristic polynomial that pins the spectrum to {1}.
_SPECTRUM_ONE = Polynomial((-1, 1)) ** 4


class NonSymplecticMatrixError(ValueError):
    """Raised when an operation requires a symplectic matrix and got none."""


class SpectralTag(Enum):
    ELLIPTIC = "Elliptic"
    UNIT_ROOT = "UnitRoot"
    REAL_HYPERBOLIC = "RealHyperbolic"
    COMPLEX_QUADRUPLE = "ComplexQuadruple"
    MIXED = "Mixed"


@dataclass(frozen=True)
class SpectralClass:
    """Classification verdict for a symplectic matrix.

    ``q`` is the reduced quadratic in mu = lambda + 1/lambda, ``discriminant``
    its discriminant. ``mu_roots`` holds the real roots of q when they are
    rational (with multiplicity, sorted), the empty tuple when q has no real
    roots, and None when the real roots are irrational.
    """

    tag: SpectralTag
    q: Polynomial
    discriminant: Fraction
    mu_roots: tuple[Fraction, ...] | None


def is_symplectic(s: Matrix) -> bool:
    """True iff S^T J S = J holds entry-exactly."""
    if s.shape != (4, 4):
        raise ValueError(f"is_symplectic requires a 4x4 matrix, got {s.shape}")
    return s.transpose() * J * s == J


def symplectic_inverse(s: Matrix) -> Matrix:
    """Inverse of a symplectic matrix, computed as -J S^T J."""
    if not is_symplectic(s):
        raise NonSymplecticMatrixError("symplectic_inverse requires a symplectic matrix")
    return -(J * s.transpose() * J)


def satisfies_cond2(s: Matrix) -> bool:
    """Exact test det(S - I) > 0 and trace(S) < 4."""
    if s.shape != (4, 4):
        raise ValueError(f"satisfies_cond2 requires a 4x4 matrix, got {s.shape}")
    return det(s - _I4) > 0 and s.trace() < 4


def satisfies_cond1(p: Matrix) -> bool:
    """True iff P is symplectic, P != I, dim ker(P - I) != 2, and the
    spectrum is exactly {1} (decided as char_poly(P) = (x - 1)^4)."""
    if p.shape != (4, 4):
        raise ValueError(f"satisfies_cond1 requires a 4x4 matrix, got {p.shape}")
    if not is_symplectic(p) or p == _I4:
        return False
    kernel_dim = 4 - rank(p - _I4)
    return kernel_dim != 2 and char_poly(p) == _SPECTRUM_ONE


def _rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    pn, pd = x.numerator, x.denominator
    rn, rd = isqrt(pn), isqrt(pd)
    if rn * rn == pn and rd * rd == pd:
        return Fraction(rn, rd)
    return None


def classify_spectrum(s: Matrix) -> SpectralClass:
    """Locate the spectrum of a symplectic matrix exactly.

    Writes chi(x) = x^4 + a x^3 + b x^2 + a x + 1 (reciprocity is asserted;
    failure signals a non-symplectic input) and reduces to
    q(mu) = mu^2 + a mu + (b - 2) via mu = lambda + 1/lambda. Tags:

    * discriminant < 0: ComplexQuadruple (eigenvalue quadruple off the circle)
    * q(2) = 0 or q(-2) = 0: UnitRoot (1 or -1 is an eigenvalue; this tag
      takes precedence over everything else)
    * q(2) > 0 and q(-2) > 0: both roots sit on one side of [-2, 2]; the
      vertex -a/2 decides Elliptic (inside (-2, 2)) vs RealHyperbolic
    * q(2) < 0 and q(-2) < 0: roots straddle [-2, 2], RealHyperbolic
    * otherwise one root inside, one outside: Mixed

    Membership of irrational roots in (-2, 2) is decided purely by these sign
    evaluations, so no root is ever extracted.
    """
    chi = char_poly(s)
    cs = chi.coeffs
    if chi.degree != 4 or cs[0] != 1 or cs[1] != cs[3]:
        raise NonSymplecticMatrixError(
            "characteristic polynomial is not reciprocal; matrix is not symplectic")
    a, b = cs[3], cs[2]
    q = Polynomial((b - 2, a, 1))
    disc = a * a - 4 * (b - 2)

    mu_roots: tuple[Fraction, ...] | None
    if disc < 0:
        mu_roots = ()
    else:
        root = _rational_sqrt(disc)
        if root is None:
            mu_roots = None
        else:
            mu_roots = tuple(sorted(((-a - root) / 2, (-a + root) / 2)))

    q_at_2 = q(Fraction(2))
    q_at_minus_2 = q(Fraction(-2))
    if disc < 0:
        tag = SpectralTag.COMPLEX_QUADRUPLE
    elif q_at_2 == 0 or q_at_minus_2 == 0:
        tag = SpectralTag.UNIT_ROOT
    elif q_at_2 > 0 and q_at_minus_2 > 0:
        tag = SpectralTag.ELLIPTIC if abs(-a / 2) < 2 else SpectralTag.REAL_HYPERBOLIC
    elif q_at_2 < 0 and q_at_minus_2 < 0:
        tag = SpectralTag.REAL_HYPERBOLIC
    else:
        tag = SpectralTag.MIXED
    return SpectralClass(tag=tag, q=q, discriminant=disc, mu_roots=mu_roots)


def _small_rational(rng: random.Random) -> Fraction:
    # Numerators .. 5 in absolute value, denominators .. 5: keeps entry growth tame.
    return Fraction(rng.randint(-5, 5), rng.randint(1, 5))


def _random_factor(rng: random.Random) -> Matrix:
    kind = rng.randrange(4)
    if kind == 0:
        return J
    if kind == 1:
        # Upper shear [[I, B], [0, I]] with B symmetric.
        b11, b12, b22 = (_small_rational(rng) for _ in range(3))
        return Matrix([
            [1, 0, b11, b12],
            [0, 1, b12, b22],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
        ])
    if kind == 2:
        # Lower shear [[I, 0], [C, I]] with C symmetric.
        c11, c12, c22 = (_small_rational(rng) for _ in range(3))
        return Matrix([
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [c11, c12, 1, 0],
            [c12, c22, 0, 1],
        ])
    # Block diagonal [[A, 0], [0, A^-T]] with A invertible.
    while True:
        a11, a12, a21, a22 = (_small_rational(rng) for _ in range(4))
        d = a11 * a22 - a12 * a21
        if d != 0:
            break
    return Matrix([
        [a11, a12, 0, 0],
        [a21, a22, 0, 0],
        [0, 0, a22 / d, -a21 / d],
        [0, 0, -a12 / d, a11 / d],
    ])


def random_symplectic(seed: int, n_factors: int) -> Matrix:
    """Deterministic pseudo-random product of symplectic generators.

    Factors are drawn from symmetric upper/lower shears, GL2 block diagonals,
    and J itself, using a dedicated ``random.Random(seed)`` instance, so the
    output is a pure function of (seed, n_factors) and always symplectic.
    """
    if n_factors < 1:
        raise ValueError("n_factors must be >= 1")
    rng = random.Random(seed)
    result = Matrix.identity(4)
    for _ in range(n_factors):
        result = result * _random_factor(rng)
    return result
