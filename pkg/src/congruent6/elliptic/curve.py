"""Short Weierstrass curves y^2 = x^3 + a x + b over Q."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import SingularCurveError
from ..exact.rat import as_rat, format_rat, rational_root


def discriminant_of(a, b):
    """-16(4a^3 + 27b^2); works for rationals and polynomials alike."""
    return -16 * (4 * a**3 + 27 * b**2)


@dataclass(frozen=True)
class Curve:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_rat(self.a))
        object.__setattr__(self, "b", as_rat(self.b))
        if discriminant_of(self.a, self.b) == 0:
            raise SingularCurveError(
                f"singular curve: a = {format_rat(self.a)}, b = {format_rat(self.b)} (discriminant is 0)"
            )

    @property
    def discriminant(self) -> Fraction:
        return discriminant_of(self.a, self.b)

    @property
    def j_invariant(self) -> Fraction:
        return (-48 * self.a) ** 3 / self.discriminant

    def twist(self, d) -> "Curve":
        """Quadratic twist y^2 = x^3 + d^2 a x + d^3 b."""
        d = as_rat(d)
        return Curve(d * d * self.a, d**3 * self.b)

    def scaled(self, u) -> "Curve":
        u = as_rat(u)
        return Curve(u**4 * self.a, u**6 * self.b)

    def contains(self, x, y) -> bool:
        x, y = as_rat(x), as_rat(y)
        return y * y == x**3 + self.a * x + self.b

    def __str__(self) -> str:
        text = "y^2 = x^3"
        if self.a:
            mag = abs(self.a)
            coeff = "" if mag == 1 else format_rat(mag) + ("*" if mag.denominator != 1 else "")
            text += f" {'-' if self.a < 0 else '+'} {coeff}x"
        if self.b:
            text += f" {'-' if self.b < 0 else '+'} {format_rat(abs(self.b))}"
        return text

    def to_dict(self) -> dict:
        return {"a": format_rat(self.a), "b": format_rat(self.b)}


def discriminant(E: Curve) -> Fraction:
    return E.discriminant


def j_invariant(E: Curve) -> Fraction:
    return E.j_invariant


def is_Q_isomorphic(E: Curve, F: Curve) -> tuple[bool, Fraction | None]:
    """Decide whether F = (u^4 a, u^6 b) for some rational u; return (answer, u)."""
    if (E.a == 0) != (F.a == 0) or (E.b == 0) != (F.b == 0):
        return False, None
    if E.a == 0:
        # j = 0: need F.b / E.b to be a sixth power
        u = rational_root(F.b / E.b, 6)
    elif E.b == 0:
        u = rational_root(F.a / E.a, 4)
    else:
        u2 = (F.b / E.b) / (F.a / E.a)
        u = rational_root(u2, 2) if u2 > 0 else None
        if u is not None and u**4 * E.a != F.a:
            u = None
    if u is None:
        return False, None
    return True, u
