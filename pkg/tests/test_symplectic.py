"""Group predicates, the two exact conditions, and spectral classification."""

from __future__ import annotations

from fractions import Fraction

import pytest

from symplectic4 import (
    J,
    Matrix,
    NonSymplecticMatrixError,
    Polynomial,
    SpectralTag,
    char_poly,
    classify_spectrum,
    det,
    is_symplectic,
    poly_eval,
    random_symplectic,
    satisfies_cond1,
    satisfies_cond2,
    symplectic_inverse,
)
from oracles import P0_ROWS, P1_ROWS, known_spectrum_matrices, tag_from_eigenvalues

I4 = Matrix.identity(4)
P0 = Matrix(P0_ROWS)
P1 = Matrix(P1_ROWS)
NON_SYMPLECTIC = Matrix([[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])


def test_standard_skew_form():
    assert J == Matrix([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
    assert J * J == -I4
    assert is_symplectic(J)


class TestIsSymplectic:
    def test_examples(self):
        assert is_symplectic(I4)
        assert is_symplectic(P1)
        assert not is_symplectic(NON_SYMPLECTIC)

    def test_requires_4x4(self):
        with pytest.raises(ValueError):
            is_symplectic(Matrix.identity(2))


class TestSymplecticInverse:
    def test_examples(self):
        assert symplectic_inverse(I4) == I4
        assert symplectic_inverse(J) == -J
        assert symplectic_inverse(P1) * P1 == I4
        assert P1 * symplectic_inverse(P1) == I4

    def test_rejects_non_symplectic(self):
        with pytest.raises(NonSymplecticMatrixError):
            symplectic_inverse(NON_SYMPLECTIC)


class TestRandomSymplectic:
    def test_deterministic_in_seed(self):
        assert random_symplectic(42, 5) == random_symplectic(42, 5)
        assert random_symplectic(42, 5) != random_symplectic(43, 5)

    def test_single_factor_can_draw_the_skew_form(self):
        # Seed 2's first generator draw is J itself.
        assert random_symplectic(2, 1) == J

    def test_outputs_are_symplectic(self):
        for seed in range(60):
            assert is_symplectic(random_symplectic(seed, 5))

    def test_group_laws_sampled(self):
        for seed in range(0, 40, 2):
            s = random_symplectic(seed, 4)
            t = random_symplectic(seed + 1, 4)
            assert is_symplectic(s * t)
            inv = symplectic_inverse(s)
            assert is_symplectic(inv) and s * inv == I4
            assert det(s) == 1
            cs = char_poly(s).coeffs
            assert cs[0] == 1 and cs[1] == cs[3]

    def test_requires_at_least_one_factor(self):
        with pytest.raises(ValueError):
            random_symplectic(1, 0)


class TestCond2:
    def test_examples(self):
        assert satisfies_cond2(P1)          # det 1/2 > 0, trace 3 < 4
        assert not satisfies_cond2(I4)      # det(S - I) = 0
        assert not satisfies_cond2(P0)      # degenerate limit, det 0


class TestCond1:
    def test_examples(self):
        assert satisfies_cond1(P0)
        assert not satisfies_cond1(I4)      # P = I excluded
        assert not satisfies_cond1(P1)      # spectrum is not {1}

    def test_kernel_dimension_two_excluded(self):
        # Shear by B = I2: spectrum {1} and P != I, but dim ker(P - I) = 2.
        two_dim = Matrix([[1, 0, 1, 0], [0, 1, 0, 1],
                          [0, 0, 1, 0], [0, 0, 0, 1]])
        assert is_symplectic(two_dim)
        assert char_poly(two_dim) == Polynomial((-1, 1)) ** 4
        assert not satisfies_cond1(two_dim)


class TestClassifySpectrum:
    def test_double_rotation_block_is_elliptic(self):
        rot = Matrix([[0, -1, 0, 0], [1, 0, 0, 0],
                      [0, 0, 0, -1], [0, 0, 1, 0]])
        assert is_symplectic(rot)
        verdict = classify_spectrum(rot)
        assert verdict.tag is SpectralTag.ELLIPTIC
        assert verdict.q == Polynomial((0, 0, 1))
        assert verdict.mu_roots == (Fraction(0), Fraction(0))

    def test_family_member_is_complex_quadruple(self):
        verdict = classify_spectrum(P1)
        assert verdict.tag is SpectralTag.COMPLEX_QUADRUPLE
        assert verdict.q == Polynomial((Fraction(5, 2), -3, 1))
        assert verdict.discriminant == -1
        assert verdict.mu_roots == ()

    def test_hyperbolic_diagonal(self):
        m = Matrix([[2, 0, 0, 0], [0, Fraction(1, 2), 0, 0],
                    [0, 0, Fraction(1, 2), 0], [0, 0, 0, 2]])
        assert is_symplectic(m)
        verdict = classify_spectrum(m)
        assert verdict.tag is SpectralTag.REAL_HYPERBOLIC
        assert verdict.mu_roots == (Fraction(5, 2), Fraction(5, 2))

    def test_degenerate_limit_is_unit_root(self):
        verdict = classify_spectrum(P0)
        assert verdict.tag is SpectralTag.UNIT_ROOT
        assert verdict.mu_roots == (Fraction(2), Fraction(2))

    def test_minus_identity_is_unit_root(self):
        assert classify_spectrum(-I4).tag is SpectralTag.UNIT_ROOT

    def test_rejects_non_reciprocal(self):
        with pytest.raises(NonSymplecticMatrixError):
            classify_spectrum(NON_SYMPLECTIC)

    def test_oracle_agreement_on_known_spectra(self):
        for name, matrix, eigenvalues in known_spectrum_matrices():
            assert is_symplectic(matrix), name
            chi = char_poly(matrix)
            for lam in eigenvalues:
                assert poly_eval(chi, lam) == 0, name
            expected = tag_from_eigenvalues(eigenvalues)
            assert classify_spectrum(matrix).tag is expected, name

    def test_invariant_under_symplectic_conjugation(self):
        for seed in range(12):
            t = random_symplectic(seed, 3)
            t_inv = symplectic_inverse(t)
            for _, matrix, _ in known_spectrum_matrices()[:6]:
                conjugated = t_inv * matrix * t
                assert classify_spectrum(conjugated) == classify_spectrum(matrix)

    def test_irrational_roots_located_by_sign_tests(self):
        # Companion-style reciprocal quartics exercise the sign logic without
        # rational mu-roots; eigenvalue location is known from the reduced
        # quadratic's (irrational) roots.
        cases = [
            # q = mu^2 - mu - 1/4, roots (1 +- sqrt(2))/2, both inside (-2, 2).
            ((Fraction(7, 4), Fraction(-1)), SpectralTag.ELLIPTIC),
            # q = mu^2 - mu - 5, roots (1 +- sqrt(21))/2, one in, one out.
            ((Fraction(-3), Fraction(-1)), SpectralTag.MIXED),
            # q = mu^2 - 6 mu + 17/2, roots 3 +- sqrt(2)/2, both beyond 2.
            ((Fraction(21, 2), Fraction(-6)), SpectralTag.REAL_HYPERBOLIC),
        ]
        for (b, a), expected in cases:
            companion = _companion_reciprocal(a, b)
            verdict = classify_spectrum(companion)
            assert verdict.tag is expected
            assert verdict.mu_roots is None
            assert verdict.discriminant > 0


def _companion_reciprocal(a: Fraction, b: Fraction) -> Matrix:
    """Companion matrix of x^4 + a x^3 + b x^2 + a x + 1 (reciprocal by
    construction, so the classifier accepts it)."""
    m = Matrix([[0, 0, 0, -1],
                [1, 0, 0, -a],
                [0, 1, 0, -b],
                [0, 0, 1, -a]])
    assert char_poly(m) == Polynomial((1, a, b, a, 1))
    return m
