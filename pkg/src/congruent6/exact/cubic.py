"""The cubic algebra Q[alpha]/(alpha^3 + a*alpha + b).

This is a ring, not necessarily a field (the cubic may be reducible), so no
division is offered.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import QMatrix
from .rat import as_rat, format_rat


@dataclass(frozen=True)
class CubicAlgElem:
    c0: Fraction
    c1: Fraction
    c2: Fraction
    a: Fraction
    b: Fraction

    def __post_init__(self):
        for f in ("c0", "c1", "c2", "a", "b"):
            object.__setattr__(self, f, as_rat(getattr(self, f)))

    @classmethod
    def from_coords(cls, a, b, c0=0, c1=0, c2=0) -> "CubicAlgElem":
        return cls(c0, c1, c2, a, b)

    @classmethod
    def alpha(cls, a, b) -> "CubicAlgElem":
        return cls(0, 1, 0, a, b)

    @property
    def context(self) -> tuple[Fraction, Fraction]:
        return (self.a, self.b)

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.c0, self.c1, self.c2)

    def _lift(self, other) -> "CubicAlgElem":
        if isinstance(other, CubicAlgElem):
            if other.context != self.context:
                raise ValueError(
                    f"cubic algebra contexts differ: {self.context} vs {other.context}"
                )
            return other
        return CubicAlgElem(as_rat(other), 0, 0, self.a, self.b)

    def __add__(self, other) -> "CubicAlgElem":
        o = self._lift(other)
        return CubicAlgElem(self.c0 + o.c0, self.c1 + o.c1, self.c2 + o.c2, self.a, self.b)

    __radd__ = __add__

    def __neg__(self) -> "CubicAlgElem":
        return CubicAlgElem(-self.c0, -self.c1, -self.c2, self.a, self.b)

    def __sub__(self, other) -> "CubicAlgElem":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "CubicAlgElem":
        return self._lift(other) - self

    def __mul__(self, other) -> "CubicAlgElem":
        o = self._lift(other)
        x, y = self.coords, o.coords
        # raw product coefficients of 1, alpha, ..., alpha^4
        p = [Fraction(0)] * 5
        for i in range(3):
            for j in range(3):
                p[i + j] += x[i] * y[j]
        a, b = self.a, self.b
        # alpha^4 = -a alpha^2 - b alpha, alpha^3 = -a alpha - b
        p[2] -= a * p[4]
        p[1] -= b * p[4]
        p[1] -= a * p[3]
        p[0] -= b * p[3]
        return CubicAlgElem(p[0], p[1], p[2], a, b)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CubicAlgElem":
        result = CubicAlgElem(1, 0, 0, self.a, self.b)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, CubicAlgElem):
            return self.coords == other.coords and self.context == other.context
        try:
            return self == self._lift(other)
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.coords, self.context))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def multiplication_matrix(self) -> QMatrix:
        cols = [(self * CubicAlgElem(*e, self.a, self.b)).coords
                for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
        return QMatrix.from_rows([[cols[j][i] for j in range(3)] for i in range(3)], 3)

    def norm(self) -> Fraction:
        """Determinant of multiplication by this element."""
        return self.multiplication_matrix().det()

    def __str__(self) -> str:
        text = ""
        for c, mono in zip(self.coords, ("", "alpha", "alpha^2")):
            if not c:
                continue
            mag = abs(c)
            body = mono if mono and mag == 1 else (f"{format_rat(mag)}*{mono}" if mono else format_rat(mag))
            if text:
                text += f" {'-' if c < 0 else '+'} {body}"
            else:
                text = f"-{body}" if c < 0 else body
        return text or "0"


def cubic_alg_mul(u: CubicAlgElem, v: CubicAlgElem) -> CubicAlgElem:
    return u * v


def det3(m) -> CubicAlgElem:
    """Determinant of a 3x3 grid by cofactor expansion (ring operations only)."""
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
