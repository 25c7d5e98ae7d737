"""Dense matrices over Q with exact Gauss-Jordan elimination."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .rat import as_rat


@dataclass(frozen=True)
class QMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("matrix entries do not match the stated shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "QMatrix":
        data = tuple(tuple(as_rat(x) for x in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "QMatrix":
        return QMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else ())

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.entries))
        return QMatrix.from_rows(
            [[sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in cols] for r in self.entries],
            other.cols,
        )

    def vstack(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.cols:
            raise ValueError("column counts differ")
        return QMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def rref(self) -> tuple[list[list[Fraction]], list[int]]:
        """Reduced row echelon form (nonzero rows only) and pivot columns."""
        m = [list(r) for r in self.entries]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
            if piv is None:
                continue
            m[r], m[piv] = m[piv], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(len(m)):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == len(m):
                break
        return m[:r], pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[list[Fraction]]:
        """Basis of {v : M v = 0}, one vector per free column."""
        basis_rows, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        out = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for row, pc in zip(basis_rows, pivots):
                v[pc] = -row[f]
            out.append(v)
        return out

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        m = [list(r) for r in self.entries]
        n = self.rows
        d = Fraction(1)
        for c in range(n):
            piv = next((i for i in range(c, n) if m[i][c] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                d = -d
            d *= m[c][c]
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    f = m[i][c] / m[c][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[c])]
        return d


def rowspace(m: QMatrix) -> tuple[int, list[list[Fraction]]]:
    """Rank and reduced echelon basis of the row space.

    Two matrices have the same row space exactly when these bases coincide.
    """
    basis, pivots = m.rref()
    return len(pivots), basis


def same_rowspace(m1: QMatrix, m2: QMatrix) -> bool:
    return rowspace(m1)[1] == rowspace(m2)[1]


def sylvester_resultant(f: Sequence, g: Sequence) -> Fraction:
    """Resultant of two univariate polynomials given by coefficient lists,
    highest degree first (leading coefficients assumed nonzero)."""
    f = [as_rat(c) for c in f]
    g = [as_rat(c) for c in g]
    m, n = len(f) - 1, len(g) - 1
    if m < 0 or n < 0:
        raise ValueError("empty polynomial")
    if m == 0 and n == 0:
        return Fraction(1)
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + f + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + g + [0] * (size - n - 1 - i))
    return QMatrix.from_rows(rows, size).det()
