"""Exact scalars, polynomials, and small dense matrices over the rationals.

Everything in this package is computed with arbitrary-precision rationals
(``fractions.Fraction``); floats are rejected at construction time so no
rounding can enter anywhere. This module supplies the scalar field Q and its
extension Q(i), univariate polynomials, dense matrices, and the exact
rank/kernel routines the rest of the package is built on.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

Rational = Fraction

Scalar = Union[int, str, Fraction]

_HASH_IMAG = sys.hash_info.imag


def to_rational(value: Scalar) -> Fraction:
    """Coerce ``value`` to an exact Fraction, rejecting floats outright."""
    if isinstance(value, float):
        raise TypeError("floating-point values are not accepted; pass a Fraction, int, or 'p/q' string")
    return Fraction(value)


class GaussianRational:
    """An element a + b*i of Q(i) with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Scalar = 0, im: Scalar = 0):
        object.__setattr__(self, "re", to_rational(re))
        object.__setattr__(self, "im", to_rational(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(value) -> "GaussianRational | None":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        return None

    def __add__(self, other):
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        return GaussianRational(self.re + w.re, self.im + w.im)

    __radd__ = __add__

    def __sub__(self, other):
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        return GaussianRational(self.re - w.re, self.im - w.im)

    def __rsub__(self, other):
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        return GaussianRational(w.re - self.re, w.im - self.im)

    def __mul__(self, other):
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        return GaussianRational(self.re * w.re - self.im * w.im,
                                self.re * w.im + self.im * w.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        return self * w.inverse()

    def __rtruediv__(self, other):
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        return w * self.inverse()

    def __pow__(self, exp: int):
        if not isinstance(exp, int):
            return NotImplemented
        base = self if exp >= 0 else self.inverse()
        result = GaussianRational(1)
        for _ in range(abs(exp)):
            result = result * base
        return result

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        w = self._coerce(other)
        if w is None:
            return NotImplemented
        return self.re == w.re and self.im == w.im

    def __hash__(self):
        # Matches hash(Fraction) when im == 0, so 1 + 0i hashes like 1.
        return hash(self.re) + _HASH_IMAG * hash(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs_sq(self) -> Fraction:
        """Squared modulus re^2 + im^2, an exact rational."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.abs_sq()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    @property
    def is_real(self) -> bool:
        return self.im == 0


class Polynomial:
    """Univariate polynomial with exact rational coefficients.

    ``coeffs[k]`` is the coefficient of x**k. Trailing zeros are trimmed on
    construction, so the leading stored coefficient is nonzero; the zero
    polynomial stores the empty tuple and has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for k, c in enumerate(b):
            summed[k] += c
        return Polynomial(summed)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if not self.coeffs or not other.coeffs:
                return Polynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        if isinstance(other, (int, Fraction)):
            return Polynomial(tuple(c * other for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exp: int):
        if not isinstance(exp, int) or exp < 0:
            return NotImplemented
        result = Polynomial((1,))
        for _ in range(exp):
            result = result * self
        return result

    def __call__(self, z):
        """Evaluate at ``z`` (Fraction or GaussianRational) by Horner's rule."""
        if not self.coeffs:
            return 0 * z
        acc = self.coeffs[-1] + 0 * z
        for c in reversed(self.coeffs[:-1]):
            acc = acc * z + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"


def poly_eval(p: Polynomial, z):
    """Exact Horner evaluation of ``p`` at ``z`` in Q or Q(i)."""
    return p(z)


class Matrix:
    """Immutable dense matrix of exact rationals, stored row-major."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        grid = tuple(tuple(to_rational(e) for e in row) for row in rows)
        if not grid or not grid[0]:
            raise ValueError("matrix must be nonempty")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ValueError("matrix rows must all have the same length")
        object.__setattr__(self, "rows", grid)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]]) -> "Matrix":
        return cls(list(zip(*columns)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.rows[i][j]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows))

    def trace(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("trace requires a square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    def apply(self, vector: Sequence[Scalar]) -> tuple[Fraction, ...]:
        """Matrix-vector product, returning a tuple of Fractions."""
        v = [to_rational(x) for x in vector]
        if len(v) != self.ncols:
            raise ValueError("vector length does not match matrix width")
        return tuple(sum((r * x for r, x in zip(row, v)), Fraction(0)) for row in self.rows)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise ValueError("hstack requires equal row counts")
        return Matrix(tuple(a + b for a, b in zip(self.rows, other.rows)))

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.transpose().rows
            return Matrix([[sum((a * b for a, b in zip(row, col)), Fraction(0))
                            for col in cols] for row in self.rows])
        if isinstance(other, (int, Fraction)):
            return Matrix([[e * other for e in row] for row in self.rows])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Matrix([[-e for e in row] for row in self.rows])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(e) for e in row) for row in self.rows)
        return f"Matrix[{body}]"


def block4(tl: Matrix, tr: Matrix, bl: Matrix, br: Matrix) -> Matrix:
    """Assemble a 4x4 matrix from four 2x2 blocks."""
    for blk in (tl, tr, bl, br):
        if blk.shape != (2, 2):
            raise ValueError("block4 expects 2x2 blocks")
    return Matrix([
        tl.rows[0] + tr.rows[0],
        tl.rows[1] + tr.rows[1],
        bl.rows[0] + br.rows[0],
        bl.rows[1] + br.rows[1],
    ])


def _require_square4(m: Matrix, what: str) -> None:
    if m.shape != (4, 4):
        raise ValueError(f"{what} requires a 4x4 matrix, got {m.shape}")


def _cofactor_det(grid):
    # Entries may be Fractions or Polynomials; both support ring arithmetic.
    n = len(grid)
    if n == 1:
        return grid[0][0]
    if n == 2:
        return grid[0][0] * grid[1][1] - grid[0][1] * grid[1][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in grid[1:]]
        term = grid[0][j] * _cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def det(m: Matrix) -> Fraction:
    """Exact determinant by cofactor expansion (square matrices up to 4x4)."""
    if m.nrows != m.ncols:
        raise ValueError("determinant requires a square matrix")
    return _cofactor_det([list(row) for row in m.rows])


def char_poly(m: Matrix) -> Polynomial:
    """Monic characteristic polynomial det(xI - M) of a 4x4 matrix.

    Computed by cofactor expansion over the polynomial ring, so the result is
    exact and always monic of degree 4.
    """
    _require_square4(m, "char_poly")
    grid = [[Polynomial((-m[i, j], 1)) if i == j else Polynomial((-m[i, j],))
             for j in range(4)] for i in range(4)]
    return _cofactor_det(grid)


def rank(m: Matrix) -> int:
    """Exact rank via fraction-free (Bareiss) elimination.

    Rows are first scaled to integers (rank-preserving), then eliminated with
    exact integer division. Pivoting scans the trailing submatrix row-major
    and takes the first nonzero entry, so the procedure is deterministic.
    """
    work = []
    for row in m.rows:
        scale = lcm(*(e.denominator for e in row))
        work.append([int(e * scale) for e in row])
    nrows, ncols = m.shape
    piv = 0
    prev = 1
    while piv < min(nrows, ncols):
        pivot_pos = None
        for i in range(piv, nrows):
            for j in range(piv, ncols):
                if work[i][j] != 0:
                    pivot_pos = (i, j)
                    break
            if pivot_pos:
                break
        if pivot_pos is None:
            break
        i, j = pivot_pos
        work[piv], work[i] = work[i], work[piv]
        if j != piv:
            for row in work:
                row[piv], row[j] = row[j], row[piv]
        p = work[piv][piv]
        for r in range(piv + 1, nrows):
            for c in range(piv + 1, ncols):
                work[r][c] = (work[r][c] * p - work[r][piv] * work[piv][c]) // prev
            work[r][piv] = 0
        prev = p
        piv += 1
    return piv


def rref(rows):
    """Reduced row echelon form over any exact field (Q or Q(i)).

    Takes a sequence of rows of field elements and returns ``(reduced,
    pivot_columns)`` where ``reduced`` is a list of lists. Pivots are
    normalized to 1 and cleared above and below, so the output is the
    canonical form of the row space.
    """
    work = [list(row) for row in rows]
    nrows = len(work)
    ncols = len(work[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if work[i][c] != 0), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        pivot = work[r][c]
        work[r] = [x / pivot for x in work[r]]
        for i in range(nrows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return work, pivots


def kernel_basis_gaussian(rows: Sequence[Sequence[GaussianRational]]) -> list[tuple[GaussianRational, ...]]:
    """Basis of the kernel of a matrix over Q(i), via Gauss-Jordan elimination."""
    reduced, pivots = rref(rows)
    ncols = len(rows[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [GaussianRational(0)] * ncols
        v[fc] = GaussianRational(1)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][fc]
        basis.append(tuple(v))
    return basis
