"""The genus-one models attached to E: quartic 2-coverings, cubic 3-coverings
and the Weierstrass curves that serve as their Jacobians."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from ..elliptic.counting import is_good_prime, plane_cubic_count, weierstrass_count
from ..elliptic.curve import Curve
from ..elliptic.quartic import Quartic
from ..exact.rat import as_rat, format_rat, primes_up_to, reduce_mod

SELECTORS = ("CX", "CY", "CXminus", "CYminus", "Z", "XE6", "Zminus", "Zminus1_jac", "Xminus1")


@dataclass(frozen=True)
class TwistedCubic:
    """y^3 = c (v^3 + a u^2 v + b u^3) in P^2 with coordinates (u:v:y)."""

    c: Fraction
    a: Fraction
    b: Fraction

    def __post_init__(self):
        for f in ("c", "a", "b"):
            object.__setattr__(self, f, as_rat(getattr(self, f)))
        if self.c == 0:
            raise ValueError("twisted cubic with zero scale")

    def is_smooth(self) -> bool:
        return 4 * self.a**3 + 27 * self.b**2 != 0

    def contains(self, u, v, y) -> bool:
        u, v, y = as_rat(u), as_rat(v), as_rat(y)
        return y**3 == self.c * (v**3 + self.a * u * u * v + self.b * u**3)

    def count(self, p: int) -> int:
        return plane_cubic_count(
            reduce_mod(self.c, p), reduce_mod(self.a, p), reduce_mod(self.b, p), p
        )

    def __str__(self) -> str:
        inner = "v^3"
        if self.a:
            inner += f" {'-' if self.a < 0 else '+'} {_coef(self.a)}u^2*v"
        if self.b:
            inner += f" {'-' if self.b < 0 else '+'} {_coef(self.b)}u^3"
        if self.c == 1:
            return f"y^3 = {inner}"
        return f"y^3 = {format_rat(self.c)}*({inner})"

    def to_dict(self) -> dict:
        return {"c": format_rat(self.c), "a": format_rat(self.a), "b": format_rat(self.b)}


def _coef(c: Fraction) -> str:
    return "" if abs(c) == 1 else f"{format_rat(abs(c))}*"


Model = Union[Quartic, TwistedCubic, Curve]


def inner_quartic(E: Curve) -> Quartic:
    """a l^4 + 6b l^3 m - 2a^2 l^2 m^2 - 2ab l m^3 + (-a^3/3 - 3b^2) m^4."""
    a, b = E.a, E.b
    return Quartic(a, 6 * b, -2 * a * a, -2 * a * b, -(a**3) / 3 - 3 * b * b)


def canonical_model(E: Curve, which: str) -> Model:
    a, b, D = E.a, E.b, E.discriminant
    if which == "CX":
        return Quartic(1, 0, 2 * a, 4 * b, -a * a / 3)
    if which == "CY":
        return TwistedCubic(1, a, b)
    if which == "CXminus":
        return inner_quartic(E).scaled(D)
    if which == "CYminus":
        return TwistedCubic(D, a, b)
    if which == "Z":
        return Curve(0, -27 * D)
    if which == "XE6":
        return Curve(0, D)
    if which == "Zminus":
        return Curve(0, -27 / D)
    if which == "Zminus1_jac":
        return Curve(0, 1 / D)
    if which == "Xminus1":
        # -3 y^2 = D * inner, written as y^2 = (-D/3) * inner
        return inner_quartic(E).scaled(-D / 3)
    raise ValueError(f"unknown model {which!r}; choose from {', '.join(SELECTORS)}")


@dataclass
class JacobianReport:
    curve: Curve
    rows: list[dict] = field(default_factory=list)
    skipped: list[int] = field(default_factory=list)

    @property
    def all_equal(self) -> bool:
        return all(r["CY"] == r["XE6"] and r["CYminus"] == r["Zminus1_jac"] for r in self.rows)

    def to_dict(self) -> dict:
        return {
            "curve": self.curve.to_dict(),
            "all_equal": self.all_equal,
            "counts": self.rows,
            "skipped_primes": self.skipped,
        }


def jacobian_consistency(E: Curve, p_bound: int, *, jac_plus: Curve | None = None) -> JacobianReport:
    """Compare point counts of C_Y, C_{Y-} with their claimed Jacobians.

    ``jac_plus`` replaces y^2 = x^3 + D as the comparison curve for C_Y; it
    exists so the sensitivity of the oracle can be exercised.
    """
    plus = jac_plus or canonical_model(E, "XE6")
    minus = canonical_model(E, "Zminus1_jac")
    cy, cym = canonical_model(E, "CY"), canonical_model(E, "CYminus")
    report = JacobianReport(E)
    for p in primes_up_to(p_bound):
        if p <= 3 or not is_good_prime(E, p) or not is_good_prime(plus, p):
            report.skipped.append(p)
            continue
        report.rows.append({
            "p": p,
            "CY": cy.count(p),
            "XE6": weierstrass_count(reduce_mod(plus.a, p), reduce_mod(plus.b, p), p),
            "CYminus": cym.count(p),
            "Zminus1_jac": weierstrass_count(0, reduce_mod(minus.b, p), p),
        })
    return report
