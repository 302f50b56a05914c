"""Exception types shared across the package.

Errors that carry witness indices (axiom violations, size guards) render as
``Name(i,j,...)`` with 1-based indices, which is also the exact diagnostic
format the CLI prints.
"""

from __future__ import annotations


class TiledOrderError(Exception):
    """Base class for all errors raised by this package."""

    def __str__(self) -> str:
        if self.args and all(isinstance(a, int) for a in self.args):
            return f"{type(self).__name__}({','.join(str(a) for a in self.args)})"
        if self.args:
            return f"{type(self).__name__}: {self.args[0]}"
        return type(self).__name__


class NotSquare(TiledOrderError):
    """Input matrix is empty, ragged, or not n x n."""


class NegativeEntry(TiledOrderError):
    """Exponent entry below zero; args are the 1-based indices (i, j)."""


class NonzeroDiagonal(TiledOrderError):
    """Diagonal entry is not zero; arg is the 1-based index (i,)."""


class TriangleViolation(TiledOrderError):
    """alpha[i][j] + alpha[j][k] < alpha[i][k]; args are 1-based (i, j, k)."""


class IndexOutOfRange(TiledOrderError):
    """A 1-based row/column index fell outside 1..n."""


class DimensionMismatch(TiledOrderError):
    """Operands have different sizes n."""


class LengthMismatch(TiledOrderError):
    """An exponent vector has the wrong length."""


class MalformedSyntax(TiledOrderError):
    """Permutation text is neither cycle notation nor a one-line image."""


class OutOfRange(TiledOrderError):
    """A parsed value lies outside the allowed range."""


class RepeatedElement(TiledOrderError):
    """A point occurs twice in a permutation description."""


class TooLarge(TiledOrderError):
    """Vertex count exceeds the enumeration guard; args are (n, max_n)."""


class NotQuiverAutomorphism(TiledOrderError):
    """The permutation does not preserve the arrow set of the quiver."""
