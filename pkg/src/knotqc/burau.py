"""Braid representation by Laurent-matrix blocks.

Each generator maps to the identity away from one 2x2 block [[1-t, t],
[1, 0]]; inverse letters use the exact closed-form inverse block
[[0, 1], [t^-1, 1 - t^-1]]. The matrices are not literally unitary for
generic |t| = 1 (they preserve a Hermitian form instead), so tests
assert braid relations, the homomorphism property, and determinants.
"""

from __future__ import annotations

import numpy as np

from .braid import BraidWord
from .laurent import LaurentPoly1

_ZERO = LaurentPoly1.zero()
_ONE = LaurentPoly1.one()
# [[1-t, t], [1, 0]] and its inverse [[0, 1], [t^-1, 1-t^-1]].
_BLOCK = (
    (LaurentPoly1({0: 1, 1: -1}), LaurentPoly1({1: 1})),
    (_ONE, _ZERO),
)
_BLOCK_INV = (
    (_ZERO, _ONE),
    (LaurentPoly1({-1: 1}), LaurentPoly1({0: 1, -1: -1})),
)


class PolyMatrix:
    """Square matrix of one-variable Laurent polynomials."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(row) for row in rows)
        n = len(self.rows)
        if any(len(row) != n for row in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls(
            tuple(
                tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)
            )
        )

    @property
    def size(self) -> int:
        return len(self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        n = self.size
        if other.size != n:
            raise ValueError("size mismatch")
        cols = tuple(zip(*other.rows))
        return PolyMatrix(
            tuple(
                tuple(
                    sum(
                        (a * b for a, b in zip(row, col) if a and b),
                        LaurentPoly1.zero(),
                    )
                    for col in cols
                )
                for row in self.rows
            )
        )

    def to_text(self, var: str = "t") -> str:
        return (
            "["
            + ", ".join(
                "[" + ", ".join(p.to_text(var) for p in row) + "]"
                for row in self.rows
            )
            + "]"
        )

    def __repr__(self) -> str:
        return f"PolyMatrix({self.to_text()})"


def generator_matrix(n: int, i: int, inverse: bool = False) -> PolyMatrix:
    """The block image of the i-th generator inside n strands."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for {n} strands")
    block = _BLOCK_INV if inverse else _BLOCK
    rows = [[_ONE if r == c else _ZERO for c in range(n)] for r in range(n)]
    for r in range(2):
        for c in range(2):
            rows[i - 1 + r][i - 1 + c] = block[r][c]
    return PolyMatrix(rows)


def burau_symbolic(b: BraidWord) -> PolyMatrix:
    """Ordered product of generator blocks over the whole word."""
    out = PolyMatrix.identity(b.strands)
    for e in b.letters:
        out = out @ generator_matrix(b.strands, abs(e), inverse=e < 0)
    return out


def _numeric_block(t: complex, inverse: bool) -> np.ndarray:
    if inverse:
        return np.array([[0, 1], [1 / t, 1 - 1 / t]], dtype=complex)
    return np.array([[1 - t, t], [1, 0]], dtype=complex)


def burau_numeric(b: BraidWord, t: complex) -> np.ndarray:
    """Entrywise evaluation, computed directly by numeric block products."""
    if t == 0:
        raise ValueError("t must be nonzero")
    n = b.strands
    out = np.eye(n, dtype=complex)
    for e in b.letters:
        g = np.eye(n, dtype=complex)
        i = abs(e) - 1
        g[i : i + 2, i : i + 2] = _numeric_block(t, e < 0)
        out = out @ g
    return out


def check_braid_relations(n: int, t: complex | None = None, tol: float = 1e-10) -> bool:
    """Verify far commutativity and the length-three relation for all indices.

    Symbolic (exact) when t is None, numeric within tol otherwise.
    """

    def rep(letters):
        word = BraidWord(n, tuple(letters))
        if t is None:
            return burau_symbolic(word)
        return burau_numeric(word, t)

    def same(x, y):
        if t is None:
            return x == y
        return bool(np.allclose(x, y, atol=tol, rtol=0))

    for i in range(1, n - 1):
        if not same(rep([i, i + 1, i]), rep([i + 1, i, i + 1])):
            return False
    for i in range(1, n):
        for j in range(i + 2, n):
            for ei in (1, -1):
                for ej in (1, -1):
                    if not same(rep([ei * i, ej * j]), rep([ej * j, ei * i])):
                        return False
    return True
