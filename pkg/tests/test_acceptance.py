"""Acceptance suite: every exit criterion, exact (tolerance zero) throughout.

Each test prints one `criterion N (<name>): PASS|FAIL` line (visible with
pytest -s or in the captured output), and fails the run on any violation.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from pathlib import Path

from symplectic4 import (
    GaussianRational,
    J,
    Matrix,
    Plane,
    char_poly,
    classify_spectrum,
    det,
    family_P,
    family_spectrum,
    family_splitting,
    is_invariant,
    is_lagrangian,
    is_splitting,
    is_symplectic,
    max_norm_dist,
    omega_obstruction,
    poly_eval,
    random_symplectic,
    rank,
    realified_eigenplane,
    satisfies_cond1,
    satisfies_cond2,
    symplectic_inverse,
    SpectralTag,
)
from symplectic4.cli import main, parse_matrix, serialize_matrix
from oracles import known_spectrum_matrices, rand_fraction, rand_matrix, tag_from_eigenvalues

I4 = Matrix.identity(4)
P0 = family_P(0)
P0_FIXTURE = Path(__file__).parent / "data" / "p0.json"

SAMPLED_EPS = ([Fraction(1, 10), Fraction(1, 3), Fraction(1, 2),
                Fraction(1), Fraction(2)]
               + [Fraction(1, 2 ** k) for k in range(1, 11)])


class criterion:
    """Prints one pass/fail line per acceptance criterion."""

    def __init__(self, number: int, name: str):
        self.number = number
        self.name = name

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        print(f"criterion {self.number} ({self.name}): {status}")
        return False


def test_criterion_1_family_symplecticity():
    with criterion(1, "exact symplecticity of the family"):
        for eps in SAMPLED_EPS:
            p = family_P(eps)
            assert p.transpose() * J * p == J


def test_criterion_2_trace_identity():
    with criterion(2, "trace identity and trace < 4"):
        for eps in SAMPLED_EPS:
            trace = family_P(eps).trace()
            assert trace == 2 + 2 / (1 + eps * eps)
            assert trace < 4


def test_criterion_3_determinant_identity():
    with criterion(3, "determinant identity det(P - I) = eps^4/(1 + eps^2)"):
        for eps in SAMPLED_EPS:
            assert det(family_P(eps) - I4) == eps ** 4 / (1 + eps * eps)
        assert det(family_P(Fraction(1)) - I4) == Fraction(1, 2)
        assert det(family_P(Fraction(1, 2)) - I4) == Fraction(1, 20)


def test_criterion_4_spectrum():
    with criterion(4, "closed-form spectrum roots and off-circle moduli"):
        for eps in SAMPLED_EPS:
            chi = char_poly(family_P(eps))
            spectrum = family_spectrum(eps)
            for lam in spectrum:
                assert poly_eval(chi, lam) == GaussianRational(0)
            assert spectrum[0].abs_sq() == 1 + eps * eps
            assert spectrum[0].abs_sq() != 1


def test_criterion_5_condition_checks():
    with criterion(5, "cond1 at the limit, cond2 plus ComplexQuadruple off it"):
        assert satisfies_cond1(P0)
        assert 4 - rank(P0 - I4) == 3
        for eps in SAMPLED_EPS:
            p = family_P(eps)
            assert satisfies_cond2(p)
            assert classify_spectrum(p).tag is SpectralTag.COMPLEX_QUADRUPLE


def test_criterion_6_refutation_convergence():
    with criterion(6, "convergence to the limit with cond2 held and no ellipticity"):
        for k in range(1, 11):
            eps = Fraction(1, 2 ** k)
            p = family_P(eps)
            assert max_norm_dist(p, P0) == eps
            assert satisfies_cond2(p)
            assert classify_spectrum(p).tag is not SpectralTag.ELLIPTIC


def test_criterion_7_splitting_verification():
    with criterion(7, "invariant Lagrangian splitting and eigenplane agreement"):
        for eps in SAMPLED_EPS:
            p = family_P(eps)
            u, v = family_splitting(eps)
            assert is_lagrangian(u) and is_lagrangian(v)
            assert is_splitting(u, v)
            assert is_invariant(p, u) and is_invariant(p, v)
            spectrum = family_spectrum(eps)
            assert realified_eigenplane(p, spectrum[0]) == u
            assert realified_eigenplane(p, spectrum[2]) == v


def test_criterion_8_obstruction_law():
    with criterion(8, "obstruction equals -t^2, and -1 on the witness family"):
        rng = random.Random(2024)
        for _ in range(1000):
            u = tuple(rand_fraction(rng, span=9, max_den=9) for _ in range(4))
            assert omega_obstruction(P0, u) == -u[2] * u[2]
        for _ in range(100):
            a, b, c = (rand_fraction(rng) for _ in range(3))
            assert omega_obstruction(P0, (a, b, Fraction(1), c)) == -1


def test_criterion_9_property_suites():
    with criterion(9, "group laws, classification oracle, basis independence"):
        outputs = [random_symplectic(seed, 5) for seed in range(200)]
        for s in outputs:
            assert is_symplectic(s)
            assert det(s) == 1
            cs = char_poly(s).coeffs
            assert cs[0] == 1 and cs[1] == cs[3]
            inv = symplectic_inverse(s)
            assert is_symplectic(inv) and s * inv == I4
        for s, t in zip(outputs[::2], outputs[1::2]):
            assert is_symplectic(s * t)

        for name, matrix, eigenvalues in known_spectrum_matrices():
            assert classify_spectrum(matrix).tag is tag_from_eigenvalues(eigenvalues), name

        rng = random.Random(77)
        u = Plane.from_vectors((1, 0, 0, 0), (0, 1, 0, 0))
        v = family_splitting(1)[1]
        p1 = family_P(1)
        planes = [u, v, Plane.from_vectors((0, 0, 1, 0), (0, 0, 0, 1)),
                  Plane.from_vectors((1, 0, 1, 0), (0, 1, 0, 0))]
        changes = 0
        while changes < 100:
            t = Matrix([[rand_fraction(rng), rand_fraction(rng)],
                        [rand_fraction(rng), rand_fraction(rng)]])
            if det(t) == 0:
                continue
            changes += 1
            for plane in planes:
                moved = Plane(plane.basis * t)
                assert moved == plane
                assert is_lagrangian(moved) == is_lagrangian(plane)
                assert is_invariant(p1, moved) == is_invariant(p1, plane)
                for other in planes:
                    assert is_splitting(moved, other) == is_splitting(plane, other)


def test_criterion_10_cli(capsys):
    with criterion(10, "CLI verdict, round-trip, and limit-matrix classification"):
        assert main(["verify-counterexample", "--depth", "10"]) == 0
        out = capsys.readouterr().out
        assert out.strip().endswith("PASS")

        rng = random.Random(4321)
        for _ in range(100):
            m = rand_matrix(rng)
            assert parse_matrix(serialize_matrix(m)) == m

        assert main(["classify", "--matrix", str(P0_FIXTURE)]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["cond1"] is True
        assert payload["cond2"] is False
