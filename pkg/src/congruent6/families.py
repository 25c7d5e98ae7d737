"""Explicit families of curves 2-congruent and (directly or reversely)
3-congruent to a fixed curve E.

The coefficient formulas are written once over generic ring elements so the
same code produces numeric curves (Fractions) and symbolic identities (MPoly).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .elliptic.curve import Curve, discriminant_of
from .errors import DegenerateError
from .exact.mpoly import MPoly, symbols
from .exact.rat import as_rat, format_rat

Variant = Literal["direct", "reverse"]


@dataclass(frozen=True)
class FamilyPoint:
    kind: Literal["two", "three_direct", "three_reverse"]
    coords: tuple[Fraction, Fraction]

    def __post_init__(self):
        c = tuple(as_rat(x) for x in self.coords)
        if c == (0, 0):
            raise DegenerateError("(0:0) is not a point of P^1")
        object.__setattr__(self, "coords", c)

    def curve(self, E: Curve) -> Curve:
        s, t = self.coords
        if self.kind == "two":
            return family2(E, s, t)
        return family3(E, s, t, "direct" if self.kind == "three_direct" else "reverse")


# -- 2-congruent family --------------------------------------------------------

def family2_coeffs(a, b, u, v):
    A = 3 * (3 * a * v**2 + 9 * b * u * v - a**2 * u**2)
    B = (
        27 * b * v**3
        - 18 * a**2 * u * v**2
        - 27 * a * b * u**2 * v
        - (2 * a**3 + 27 * b**2) * u**3
    )
    return A, B


def binary_cubic(a, b, u, v):
    """v^3 + a u^2 v + b u^3, whose vanishing marks the cusps of X_E(2)."""
    return v**3 + a * u**2 * v + b * u**3


def family2(E: Curve, u, v) -> Curve:
    u, v = as_rat(u), as_rat(v)
    if (u, v) == (0, 0):
        raise DegenerateError("(u:v) = (0:0)")
    if binary_cubic(E.a, E.b, u, v) == 0:
        raise DegenerateError(
            f"(u:v) = ({format_rat(u)}:{format_rat(v)}) is a cusp: v^3 + a u^2 v + b u^3 = 0"
        )
    return Curve(*family2_coeffs(E.a, E.b, u, v))


# -- 3-congruent families ----------------------------------------------------

def c4c6(a, b):
    return -a / 27, -b / 54


def frak_direct(c4, c6, lam, mu):
    C4 = (
        c4 * lam**4
        + 4 * c6 * lam**3 * mu
        + 6 * c4**2 * lam**2 * mu**2
        + 4 * c4 * c6 * lam * mu**3
        - (3 * c4**3 - 4 * c6**2) * mu**4
    )
    C6 = (
        c6 * lam**6
        + 6 * c4**2 * lam**5 * mu
        + 15 * c4 * c6 * lam**4 * mu**2
        + 20 * c6**2 * lam**3 * mu**3
        + 15 * c4**2 * c6 * lam**2 * mu**4
        + 6 * (3 * c4**4 - 2 * c4 * c6**2) * lam * mu**5
        + (9 * c4**3 * c6 - 8 * c6**3) * mu**6
    )
    return C4, C6


def frak_reverse(c4, c6, lam, mu, mu_power: int = 4):
    """Reverse coefficients; the last monomial of the quartic uses mu^mu_power.

    Homogeneity forces mu_power = 4; the other value is kept only so the
    alternative reading can be exercised against the congruence oracle.
    """
    k = c4**3 - c6**2
    C4s = -4 * (lam**4 - 6 * c4 * lam**2 * mu**2 - 8 * c6 * lam * mu**3
                - 3 * c4**2 * mu**mu_power) / k
    C6s = -8 * frak_direct(c4, c6, lam, mu)[1] / k**2
    return C4s, C6s


def frak_coeffs(E: Curve, lam, mu, variant: Variant = "direct"):
    lam, mu = as_rat(lam), as_rat(mu)
    c4, c6 = c4c6(E.a, E.b)
    if variant == "direct":
        return frak_direct(c4, c6, lam, mu)
    if variant == "reverse":
        return frak_reverse(c4, c6, lam, mu)
    raise ValueError(f"unknown variant {variant!r}")


def family3(E: Curve, lam, mu, variant: Variant = "direct", *, mu_power: int = 4) -> Curve:
    lam, mu = as_rat(lam), as_rat(mu)
    if (lam, mu) == (0, 0):
        raise DegenerateError("(lam:mu) = (0:0)")
    if variant == "reverse" and mu_power != 4:
        C4, C6 = frak_reverse(*c4c6(E.a, E.b), lam, mu, mu_power)
    else:
        C4, C6 = frak_coeffs(E, lam, mu, variant)
    A, B = -27 * C4, -54 * C6
    if discriminant_of(A, B) == 0:
        raise DegenerateError(
            f"{variant} fiber at ({format_rat(lam)}:{format_rat(mu)}) is singular "
            "(discriminant vanishes)"
        )
    return Curve(A, B)


# -- symbolic discriminant identities -----------------------------------------

def cube_factor(a, b, lam, mu):
    """lam^4 + (2a/9) lam^2 mu^2 + (4b/27) lam mu^3 - (a^2/243) mu^4."""
    return (lam**4 + Fraction(2, 9) * a * lam**2 * mu**2
            + Fraction(4, 27) * b * lam * mu**3 - Fraction(1, 243) * a**2 * mu**4)


def family2_disc_residual(perturb: int = 0) -> MPoly:
    """Disc(F_{u,v}) - 3^6 (v^3 + a u^2 v + b u^3)^2 Disc(E) in Q[a,b,u,v]."""
    a, b, u, v = symbols("a b u v")
    A, B = family2_coeffs(a, b, u, v)
    A = A + perturb * a * u * v
    return discriminant_of(A, B) - 3**6 * binary_cubic(a, b, u, v) ** 2 * discriminant_of(a, b)


def family3_disc_residual(perturb: int = 0) -> MPoly:
    """Disc(E_{lam,mu}) - Disc(E) * cube_factor^3 in Q[a,b,lam,mu]."""
    a, b, lam, mu = symbols("a b lam mu")
    C4, C6 = frak_direct(*c4c6(a, b), lam, mu)
    C6 = C6 + perturb * b * lam**6
    return discriminant_of(-27 * C4, -54 * C6) - discriminant_of(a, b) * cube_factor(a, b, lam, mu) ** 3


def disc_identity_suite(perturb: int = 0) -> bool:
    """Both discriminant identities hold exactly (perturb != 0 breaks them)."""
    return family2_disc_residual(perturb).is_zero() and family3_disc_residual(perturb).is_zero()
