"""A one-parameter family P(eps) of symplectic matrices probing ellipticity.

For eps >= 0 the family couples a rotation-scaling block A to its inverse
transpose C = A / (1 + eps^2) through a rank-one shear block B:

    P(eps) = [[A, B], [0, C]],  A = [[1, -eps], [eps, 1]],  B = [[1, -eps], [0, 0]].

Every member is symplectic (A^T C = I). For eps > 0 the matrix passes the
exact positivity test det(P - I) > 0, tr P < 4 while its spectrum sits off
the unit circle, and it admits an invariant Lagrangian splitting. At eps = 0
it degenerates to a unipotent shear with spectrum {1} whose invariant planes
never form a Lagrangian splitting of R^4, certified by the obstruction value
-1. The family therefore shows the positivity test does not imply
ellipticity on any neighborhood of the degenerate limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    GaussianRational,
    Matrix,
    Polynomial,
    Scalar,
    block4,
    char_poly,
    det,
    poly_eval,
    to_rational,
)
from .lagrangian import (
    Plane,
    is_invariant,
    is_lagrangian,
    is_splitting,
    omega_obstruction,
    realified_eigenplane,
)
from .symplectic import (
    SpectralClass,
    SpectralTag,
    classify_spectrum,
    is_symplectic,
    satisfies_cond1,
    satisfies_cond2,
)

_I4 = Matrix.identity(4)

# Simplest member u = (0, 0, 1, 0) of the witness family (a, b, 1, c) whose
# obstruction value is -1 for the degenerate limit matrix.
OBSTRUCTION_WITNESS = (Fraction(0), Fraction(0), Fraction(1), Fraction(0))


class SplittingDegenerateError(ValueError):
    """Raised at eps = 0, where the v-vectors collapse into span{e1, e2} and
    no invariant Lagrangian splitting exists."""


def _check_eps(eps: Scalar) -> Fraction:
    value = to_rational(eps)
    if value < 0:
        raise ValueError("the family is only defined for eps >= 0")
    return value


@dataclass(frozen=True)
class FamilyReport:
    """Bundle of every exact check run against one family member.

    ``splitting_verified`` is populated only for eps > 0 and
    ``obstruction_value`` only for eps = 0; each is None otherwise.
    """

    eps: Fraction
    symplectic: bool
    trace: Fraction
    det_minus_identity: Fraction
    cond1: bool
    cond2: bool
    spectral_class: SpectralClass
    char_poly_matches_closed_form: bool
    eigenvalue_residuals: tuple[GaussianRational, ...]
    splitting_verified: bool | None
    obstruction_value: Fraction | None
    distance_to_P0: Fraction


def family_P(eps: Scalar) -> Matrix:
    """The family member at a rational eps >= 0, as an exact block matrix."""
    e = _check_eps(eps)
    c = 1 / (1 + e * e)
    a = Matrix([[1, -e], [e, 1]])
    b = Matrix([[1, -e], [0, 0]])
    return block4(a, b, Matrix.zero(2, 2), c * a)


def family_char_poly(eps: Scalar) -> Polynomial:
    """Closed-form characteristic polynomial of the family member.

    Expands ((1 - x)^2 + eps^2) * ((c - x)^2 + eps^2 c^2), c = 1/(1 + eps^2),
    into a monic quartic with exact coefficients.
    """
    e = _check_eps(eps)
    e2 = e * e
    c = 1 / (1 + e2)
    first = Polynomial((1 + e2, -2, 1))
    second = Polynomial((c * c * (1 + e2), -2 * c, 1))
    return first * second


def family_spectrum(eps: Scalar) -> list[GaussianRational]:
    """The four eigenvalues [1 + i*eps, 1 - i*eps, and their inverses] in Q(i).

    The inverses are computed exactly: (1 + i*eps)^-1 = (1 - i*eps)/(1 + eps^2).
    """
    e = _check_eps(eps)
    lam = GaussianRational(1, e)
    conj = lam.conjugate()
    return [lam, conj, lam.inverse(), conj.inverse()]


def family_splitting(eps: Scalar) -> tuple[Plane, Plane]:
    """The invariant Lagrangian splitting (U, V) of the member at eps > 0.

    U = span{e1, e2} and V is spanned by the two literal vectors
    (1+eps^2, -eps(1+eps^2), -2eps^2, eps^3) and (0, 1+eps^2, -eps^3, -2eps^2).
    At eps = 0 these collapse into U, so the splitting degenerates.
    """
    e = _check_eps(eps)
    if e == 0:
        raise SplittingDegenerateError(
            "at eps = 0 the v-vectors collapse to e1, e2; no splitting exists")
    s = 1 + e * e
    u = Plane.from_vectors((1, 0, 0, 0), (0, 1, 0, 0))
    v = Plane.from_vectors((s, -e * s, -2 * e * e, e ** 3),
                           (0, s, -e ** 3, -2 * e * e))
    return u, v


def max_norm_dist(s: Matrix, t: Matrix) -> Fraction:
    """Max-entry norm of S - T (exact, rational)."""
    if s.shape != t.shape:
        raise ValueError("matrices must share a shape")
    return max(abs(a - b) for ra, rb in zip(s.rows, t.rows) for a, b in zip(ra, rb))


def family_report(eps: Scalar) -> FamilyReport:
    """Run every family check at one eps and bundle the results.

    All fields are always populated (the eps-gated ones with None), so a
    report is never partial.
    """
    e = _check_eps(eps)
    p = family_P(e)
    chi = char_poly(p)
    spectrum = family_spectrum(e)

    splitting_verified: bool | None = None
    obstruction_value: Fraction | None = None
    if e > 0:
        u, v = family_splitting(e)
        splitting_verified = (
            is_lagrangian(u)
            and is_lagrangian(v)
            and is_splitting(u, v)
            and is_invariant(p, u)
            and is_invariant(p, v)
            and realified_eigenplane(p, spectrum[0]) == u
            and realified_eigenplane(p, spectrum[2]) == v
        )
    else:
        obstruction_value = omega_obstruction(p, OBSTRUCTION_WITNESS)

    return FamilyReport(
        eps=e,
        symplectic=is_symplectic(p),
        trace=p.trace(),
        det_minus_identity=det(p - _I4),
        cond1=satisfies_cond1(p),
        cond2=satisfies_cond2(p),
        spectral_class=classify_spectrum(p),
        char_poly_matches_closed_form=(chi == family_char_poly(e)),
        eigenvalue_residuals=tuple(poly_eval(chi, lam) for lam in spectrum),
        splitting_verified=splitting_verified,
        obstruction_value=obstruction_value,
        distance_to_P0=max_norm_dist(p, family_P(0)),
    )


def family_invariants_ok(report: FamilyReport) -> bool:
    """The report-level invariants of the family.

    For eps > 0: symplectic, cond2, spectral class ComplexQuadruple, the
    splitting verified, all eigenvalue residuals zero, and the computed
    characteristic polynomial equal to the closed form. For eps = 0: cond1
    holds, cond2 fails, and the obstruction value is exactly -1.
    """
    zero = GaussianRational(0)
    if report.eps > 0:
        return (
            report.symplectic
            and report.cond2
            and report.spectral_class.tag is SpectralTag.COMPLEX_QUADRUPLE
            and bool(report.splitting_verified)
            and all(r == zero for r in report.eigenvalue_residuals)
            and report.char_poly_matches_closed_form
        )
    return (
        report.cond1
        and not report.cond2
        and report.obstruction_value == -1
        and all(r == zero for r in report.eigenvalue_residuals)
        and report.char_poly_matches_closed_form
    )
