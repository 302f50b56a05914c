"""Exponent matrices of tiled orders and min-plus lattice arithmetic.

A tiled order over a discrete valuation ring with maximal ideal generated by
pi is determined by an n x n integer matrix alpha with zero diagonal that
satisfies the triangle inequality alpha[i][j] + alpha[j][k] >= alpha[i][k].
The entry alpha[i][j] is the exponent of pi in position (i, j); the ring
itself is never materialized, only these integers are.

Ideals and other full lattices are plain integer matrices with no axioms
(`LatticeMatrix`): products and intersections of ideals, and conjugates of
orders, legitimately leave the validated class.  At the exponent level the
lattice product is the min-plus matrix product and intersection is the
entrywise maximum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    LengthMismatch,
    NegativeEntry,
    NonzeroDiagonal,
    NotSquare,
    OutOfRange,
    TriangleViolation,
)

if TYPE_CHECKING:
    from .perm import Perm

Rows = tuple[tuple[int, ...], ...]


def _freeze(rows: Sequence[Sequence[int]]) -> Rows:
    return tuple(tuple(row) for row in rows)


@dataclass(frozen=True)
class ExponentMatrix:
    """Validated exponent matrix of a tiled order.

    Construct through :func:`validate`; direct construction skips the axiom
    checks and is reserved for code that guarantees them (e.g.
    :func:`hereditary_order`).
    """

    alpha: Rows

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def entries(self) -> Rows:
        return self.alpha

    def as_lattice(self) -> "LatticeMatrix":
        return LatticeMatrix(self.alpha)


@dataclass(frozen=True)
class LatticeMatrix:
    """Unvalidated integer exponent matrix for lattices and ideals.

    Negative entries are permitted (fractional lattices show up as
    conjugates); no invariants beyond squareness are enforced.
    """

    beta: Rows

    @property
    def n(self) -> int:
        return len(self.beta)

    @property
    def entries(self) -> Rows:
        return self.beta


Matrixlike = ExponentMatrix | LatticeMatrix


def validate(raw: Sequence[Sequence[int]]) -> ExponentMatrix:
    """Check the order axioms and wrap ``raw`` as an ExponentMatrix.

    Raises the first violated axiom with 1-based witness indices:
    NotSquare, NegativeEntry(i, j), NonzeroDiagonal(i) or
    TriangleViolation(i, j, k).  Axioms are checked in that sequence, each
    scanned in row-major index order.
    """
    rows = _freeze(raw)
    n = len(rows)
    if n == 0:
        raise NotSquare("matrix is empty")
    if any(len(row) != n for row in rows):
        raise NotSquare(f"expected {n} columns in every row")
    for i in range(n):
        for j in range(n):
            if rows[i][j] < 0:
                raise NegativeEntry(i + 1, j + 1)
    for i in range(n):
        if rows[i][i] != 0:
            raise NonzeroDiagonal(i + 1)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if rows[i][j] + rows[j][k] < rows[i][k]:
                    raise TriangleViolation(i + 1, j + 1, k + 1)
    return ExponentMatrix(rows)


def maximal_ideal(a: ExponentMatrix, k: int) -> LatticeMatrix:
    """The ideal M_k: copy of alpha with entry (k, k) set to 1 (k is 1-based)."""
    if not 1 <= k <= a.n:
        raise IndexOutOfRange(f"k must be in 1..{a.n}, got {k}")
    rows = [list(row) for row in a.alpha]
    rows[k - 1][k - 1] = 1
    return LatticeMatrix(_freeze(rows))


def minplus_product(a: Matrixlike, b: Matrixlike) -> LatticeMatrix:
    """Lattice product at the exponent level: C[i][j] = min_m(A[i][m] + B[m][j])."""
    if a.n != b.n:
        raise DimensionMismatch(f"sizes differ: {a.n} vs {b.n}")
    x, y = a.entries, b.entries
    n = a.n
    return LatticeMatrix(
        tuple(
            tuple(min(x[i][m] + y[m][j] for m in range(n)) for j in range(n))
            for i in range(n)
        )
    )


def intersect(a: Matrixlike, b: Matrixlike) -> LatticeMatrix:
    """Lattice intersection: entrywise maximum of the exponents."""
    if a.n != b.n:
        raise DimensionMismatch(f"sizes differ: {a.n} vs {b.n}")
    x, y = a.entries, b.entries
    return LatticeMatrix(
        tuple(
            tuple(max(p, q) for p, q in zip(rx, ry)) for rx, ry in zip(x, y)
        )
    )


def radical(a: ExponentMatrix) -> LatticeMatrix:
    """Diagonal-replacement radical: off-diagonal entries kept, diagonal set to 1."""
    rows = [list(row) for row in a.alpha]
    for i in range(a.n):
        rows[i][i] = 1
    return LatticeMatrix(_freeze(rows))


def conjugate(a: Matrixlike, sigma: "Perm", x: Sequence[int]) -> LatticeMatrix:
    """Exponent matrix of the conjugate order v(sigma)^-1 d(x)^-1 A d(x) v(sigma).

    The result C satisfies C[sigma(i)][sigma(j)] = A[i][j] - x[i] + x[j].
    This is the brute-force oracle that lift solvers are validated against;
    the output may be negative or violate the order axioms, so it is a
    LatticeMatrix.  Adding a constant to every x[i] leaves the result
    unchanged (scalar diagonals are central).
    """
    n = a.n
    if len(x) != n:
        raise LengthMismatch(f"x must have length {n}, got {len(x)}")
    if sigma.n != n:
        raise LengthMismatch(f"permutation size {sigma.n} does not match n={n}")
    src = a.entries
    img = sigma.image
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            rows[img[i] - 1][img[j] - 1] = src[i][j] - x[i] + x[j]
    return LatticeMatrix(_freeze(rows))


def is_basic(a: ExponentMatrix) -> bool:
    """True iff no two columns of alpha coincide.

    Columns i and j give isomorphic column lattices exactly when they differ
    by a constant shift c (multiplying a column by pi^c is an isomorphism).
    Rows i and j of a valid matrix force c = alpha[i][j] = -alpha[j][i], and
    non-negativity then forces c = 0, so isomorphic columns are literally
    equal columns.
    """
    cols = {tuple(row[j] for row in a.alpha) for j in range(a.n)}
    return len(cols) == a.n


def is_zero_one(a: ExponentMatrix) -> bool:
    """True iff every entry of alpha is 0 or 1."""
    return all(v in (0, 1) for row in a.alpha for v in row)


def hereditary_order(n: int) -> ExponentMatrix:
    """The triangular hereditary order: alpha[i][j] = 1 below the diagonal, else 0."""
    if n < 1:
        raise OutOfRange(f"n must be >= 1, got {n}")
    return ExponentMatrix(
        tuple(tuple(1 if i > j else 0 for j in range(n)) for i in range(n))
    )
