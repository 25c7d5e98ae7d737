"""Necessary-condition oracles for n-congruence and the pipelines that
produce reverse 6-congruent pairs from rational points on X^-_E(6).

Trace congruence a_p(E) = a_p(F) mod n is necessary for E[n] = F[n] but does
not distinguish direct from reverse congruence; non-isogeny is certified by a
single prime with a_p(E) != a_p(F).
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Iterable, Union

from .elliptic.counting import ap, cubic_splitting_type, good_primes
from .elliptic.curve import Curve
from .errors import DegenerateError, IndeterminacyError, SingularCurveError
from .exact.rat import as_rat, format_rat
from .families import family3
from .models.quadrics import ProjPoint6, quadrics_s
from .morphisms import map6to3_direct, map6to3_reverse

DEFAULT_BOUND = 1000
PROPERTY_BOUND = 200


def default_bound() -> int:
    value = os.environ.get("CONGRUENT6_PRIME_BOUND")
    return int(value) if value else DEFAULT_BOUND


@dataclass
class CongruenceReport:
    E: Curve
    F: Curve
    n: int
    primes: list[int]
    all_congruent: bool
    first_failure: int | None = None
    nonisogeny_witness: int | None = None
    ap_table: list[tuple[int, int, int]] | None = None
    context: dict = field(default_factory=dict)

    def to_dict(self, include_table: bool = False) -> dict:
        out = {
            "E": self.E.to_dict(),
            "F": self.F.to_dict(),
            "n": self.n,
            "primes_tested": len(self.primes),
            "max_prime": self.primes[-1] if self.primes else None,
            "all_congruent": self.all_congruent,
            "first_failure": self.first_failure,
            "nonisogeny_witness": self.nonisogeny_witness,
            "isogeny": "excluded" if self.nonisogeny_witness else "not excluded",
        }
        if self.context:
            out["context"] = self.context
        if include_table and self.ap_table is not None:
            out["ap_table"] = [{"p": p, "ap_E": x, "ap_F": y} for p, x, y in self.ap_table]
        return out


def ap_mod_n_check(E: Curve, F: Curve, n: int, bound: int | None = None) -> CongruenceReport:
    if n not in (2, 3, 6):
        raise ValueError("n must be 2, 3 or 6")
    bound = default_bound() if bound is None else bound
    primes = good_primes([E, F], bound)
    table = []
    first_failure = witness = None
    for p in primes:
        x, y = ap(E, p).ap, ap(F, p).ap
        table.append((p, x, y))
        if first_failure is None and (x - y) % n:
            first_failure = p
        if witness is None and x != y:
            witness = p
    return CongruenceReport(E, F, n, primes, first_failure is None, first_failure, witness, table)


@dataclass
class SplittingReport:
    E: Curve
    F: Curve
    primes: list[int]
    agree: bool
    first_disagreement: int | None = None

    def to_dict(self) -> dict:
        return {
            "E": self.E.to_dict(),
            "F": self.F.to_dict(),
            "primes_tested": len(self.primes),
            "agree": self.agree,
            "first_disagreement": self.first_disagreement,
        }


def mod2_type_check(E: Curve, F: Curve, bound: int = PROPERTY_BOUND) -> SplittingReport:
    """Factorization types of the 2-division cubics agree at every shared good prime."""
    primes = good_primes([E, F], bound)
    for p in primes:
        if cubic_splitting_type(E, p) != cubic_splitting_type(F, p):
            return SplittingReport(E, F, primes, False, p)
    return SplittingReport(E, F, primes, True)


# -- rational points on X^-_E(6) -------------------------------------------------

def example49_point(t) -> tuple[Curve, ProjPoint6]:
    """The curve a = -8t^2/27, b = 64t^3/729 and its rational point on X^-_E(6)."""
    t = as_rat(t)
    if t == 0:
        raise DegenerateError("t = 0 gives the singular curve y^2 = x^3")
    E = Curve(Fraction(-8, 27) * t**2, Fraction(64, 729) * t**3)
    P = ProjPoint6((
        -(2**9) * t**4 / 2187,
        2**6 * t**3 / 243,
        2 * t / 9,
        -(2**6) * t**3 / 243,
        2**5 * t**2 / 27,
        Fraction(1),
    ))
    return E, P


def example410_t(u, v) -> Fraction:
    u, v = as_rat(u), as_rat(v)
    den = (u * u - u * v + v * v) ** 2 * (u * u - u * v - v * v / 2)
    if den == 0:
        raise DegenerateError(f"t is undefined at (u:v) = ({format_rat(u)}:{format_rat(v)})")
    return Fraction(-27, 8) * (u - v) ** 3 * (u + v) ** 3 / den


def example410_point(u, v) -> tuple[Curve, ProjPoint6]:
    """A rational point on X^-_E(6) for E_t: y^2 = x^3 + t x + t."""
    u, v = as_rat(u), as_rat(v)
    t = example410_t(u, v)
    if t == 0:
        raise DegenerateError("t = 0 gives a singular curve")
    try:
        E = Curve(t, t)
    except SingularCurveError:
        raise DegenerateError(f"E_t is singular for t = {format_rat(t)}") from None
    x1 = t**3 * (Fraction(2, 3) * u**7 - Fraction(7, 2) * u**6 * v + Fraction(15, 2) * u**5 * v**2
                 - Fraction(26, 3) * u**4 * v**3 + Fraction(11, 2) * u**3 * v**4
                 - Fraction(3, 2) * u**2 * v**5 - Fraction(1, 3) * u * v**6)
    x2 = Fraction(3, 4) * t**2 * (-(u**7) + u**6 * v + 4 * u**5 * v**2 - 2 * u**4 * v**3
                                  - 5 * u**3 * v**4 + u**2 * v**5 + 2 * u * v**6)
    x3 = Fraction(3, 16) * t * (u**7 + u**6 * v - 3 * u**5 * v**2 - 3 * u**4 * v**3
                                + 3 * u**3 * v**4 + 3 * u**2 * v**5 - u * v**6 - v**7)
    # the x2 formula reappears negated in the x4 slot
    x4 = -x2
    x5 = t**2 * (u**7 - Fraction(7, 2) * u**6 * v + Fraction(7, 2) * u**5 * v**2
                 - Fraction(7, 2) * u**3 * v**4 + Fraction(7, 2) * u**2 * v**5 - u * v**6)
    x6 = t / 8 * (-2 * u**7 + 3 * u**6 * v + u**5 * v**2 - 5 * u**4 * v**3 + 4 * u**3 * v**4
                  + u**2 * v**5 - 3 * u * v**6 + v**7)
    try:
        P = ProjPoint6((x1, x2, x3, x4, x5, x6))
    except DegenerateError:
        raise DegenerateError("all coordinates vanish") from None
    return E, P


# -- pipelines ---------------------------------------------------------------------

Param = Union[Fraction, int, str, tuple]


@dataclass
class PipelineRun:
    reports: list[CongruenceReport] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)

    def __iter__(self):
        return iter(self.reports)

    def __len__(self) -> int:
        return len(self.reports)

    @property
    def all_congruent(self) -> bool:
        return all(r.all_congruent for r in self.reports)


def reverse6_pair(E: Curve, P: ProjPoint6) -> Curve:
    """The reverse 3-congruent fiber over the image of P on X^-_E(3)."""
    lam, mu = map6to3_reverse(P)
    return family3(E, lam, mu, "reverse")


def _label(param) -> str:
    if isinstance(param, tuple):
        return ":".join(format_rat(as_rat(c)) for c in param)
    return format_rat(as_rat(param))


def reverse6_pipeline(params: Iterable[Param], bound: int | None = None) -> PipelineRun:
    """For each parameter, a scalar t or a pair (u, v): build the point, map it
    to X^-_E(3), take the reverse fiber F and test E against F mod 6."""
    run = PipelineRun()
    for param in params:
        try:
            if isinstance(param, tuple):
                E, P = example410_point(*param)
                family = "uv"
            else:
                E, P = example49_point(param)
                family = "t"
            if not quadrics_s(E).vanishes_at(P):
                raise DegenerateError("constructed point is not on the nine quadrics")
            F = reverse6_pair(E, P)
        except (DegenerateError, IndeterminacyError, SingularCurveError) as exc:
            run.skipped.append({"param": _label(param), "reason": str(exc)})
            continue
        report = ap_mod_n_check(E, F, 6, bound)
        lam, mu = map6to3_reverse(P)
        report.context = {
            "family": family,
            "param": _label(param),
            "point": [format_rat(c) for c in P],
            "image_X3": [format_rat(lam), format_rat(mu)],
        }
        run.reports.append(report)
    return run


def integral_points_xe6(E: Curve, x_bound: int = 200) -> list[tuple[int, int]]:
    """Integral affine points (x, y), y >= 0, on y^2 = x^3 + D with |x| <= x_bound."""
    D = E.discriminant
    if D.denominator != 1:
        return []
    out = []
    for x in range(-x_bound, x_bound + 1):
        r = x**3 + D.numerator
        if r < 0:
            continue
        y = isqrt(r)
        if y * y == r:
            out.append((x, y))
    return out


def direct6_pair(E: Curve, P) -> Curve:
    """The directly 3-congruent fiber over the image of P in X_E(3)."""
    lam = map6to3_direct(E, P)
    return family3(E, lam, 1, "direct")


def direct6_pipeline(E: Curve, x_bound: int = 200, bound: int | None = None) -> PipelineRun:
    """Direct counterpart of :func:`reverse6_pipeline`, fed by small integral
    points of y^2 = x^3 + D (2-torsion points with y = 0 are skipped)."""
    run = PipelineRun()
    for x, y in integral_points_xe6(E, x_bound):
        if y == 0:
            continue
        try:
            F = direct6_pair(E, (x, y))
        except (DegenerateError, IndeterminacyError) as exc:
            run.skipped.append({"param": f"{x},{y}", "reason": str(exc)})
            continue
        report = ap_mod_n_check(E, F, 6, bound)
        report.context = {"point_XE6": [str(x), str(y)]}
        run.reports.append(report)
    return run

