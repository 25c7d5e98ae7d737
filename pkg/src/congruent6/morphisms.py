"""Explicit maps between the models: the 3-isogeny and isomorphism through
which X_E(6) maps to X_E(3), the forgetful maps out of the nine-quadric model
of X^-_E(6), and the two-equation birational model."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .elliptic.curve import Curve, discriminant_of
from .errors import DegenerateError, IndeterminacyError
from .exact.mpoly import MPoly, reduce_mod_square
from .exact.rat import as_rat, format_rat
from .models.canonical import canonical_model, inner_quartic
from .models.quadrics import ProjPoint6


def _coefficients(E: Curve | None):
    """(a, b, D) as rationals, or as polynomials in a, b when E is None."""
    if E is None:
        a, b = MPoly.var("a"), MPoly.var("b")
        return a, b, discriminant_of(a, b)
    return E.a, E.b, E.discriminant


@dataclass(frozen=True)
class RationalMap:
    name: str
    source: str
    target: str
    source_vars: tuple[str, ...]
    components: tuple[tuple[MPoly, MPoly], ...]
    # source relation y^2 = rhs as (y, rhs); None when the source is P^n or a
    # system of quadrics
    source_square: tuple[str, MPoly] | None = None
    target_vars: tuple[str, ...] = ()
    target_relation: MPoly | None = None

    def apply(self, point: Sequence) -> tuple[Fraction, ...]:
        bind = dict(zip(self.source_vars, (as_rat(c) for c in point)))
        out = []
        for k, (num, den) in enumerate(self.components):
            d = den.evaluate(bind)
            if d == 0:
                raise IndeterminacyError(
                    f"{self.name}: denominator {den} of component {k + 1} vanishes at "
                    + "(" + ", ".join(format_rat(bind[v]) for v in self.source_vars) + ")"
                )
            out.append(num.evaluate(bind) / d)
        return tuple(out)

    def pullback(self, poly: MPoly, degrees: Mapping[str, int] | None = None) -> MPoly:
        """poly(components) times the product of den_i^deg_i, a polynomial in
        the source variables."""
        if degrees is None:
            degrees = {v: poly.degree(v) for v in self.target_vars}
        images = dict(zip(self.target_vars, self.components))
        cache: dict[tuple[str, int, int], MPoly] = {}

        def part(v: str, e: int) -> MPoly:
            key = (v, e, degrees[v])
            if key not in cache:
                num, den = images[v]
                cache[key] = num**e * den ** (degrees[v] - e)
            return cache[key]

        total = MPoly()
        for exps, coeff in poly.collect(self.target_vars).items():
            term = coeff
            for v, e in zip(self.target_vars, exps):
                term = term * part(v, e)
            total = total + term
        return total

    def reduce(self, p: MPoly) -> MPoly:
        if self.source_square is None:
            return p
        y, rhs = self.source_square
        return reduce_mod_square(p, y, rhs)

    def certificate(self) -> bool:
        """Target relation pulled back reduces to zero on the source."""
        if self.target_relation is None:
            raise ValueError(f"{self.name} has no target relation")
        return self.reduce(self.pullback(self.target_relation)).is_zero()

    def then(self, outer: "RationalMap") -> "RationalMap":
        """outer o self."""
        comps = []
        for num, den in outer.components:
            degs = {v: max(num.degree(v), den.degree(v)) for v in outer.source_vars}
            sub = RationalMap(self.name, self.source, outer.source, self.source_vars,
                              self.components, target_vars=outer.source_vars)
            comps.append((sub.pullback(num, degs), sub.pullback(den, degs)))
        return RationalMap(
            f"{outer.name}o{self.name}", self.source, outer.target, self.source_vars,
            tuple(comps), self.source_square, outer.target_vars, outer.target_relation,
        )

    def same_component(self, k: int, num: MPoly, den: MPoly) -> bool:
        """Component k equals num/den as functions on the source."""
        n, d = self.components[k]
        return self.reduce(n * den - num * d).is_zero()

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "source": self.source,
            "target": self.target,
            "variables": list(self.source_vars),
            "components": [{"num": str(n), "den": str(d)} for n, d in self.components],
        }


def _x_y():
    return MPoly.var("x"), MPoly.var("y")


def isogeny_f(E: Curve | None = None, *, symbolic_D: bool = False) -> RationalMap:
    """The 3-isogeny from y^2 = x^3 + D to y^2 = x^3 - 27D.

    With ``symbolic_D`` the discriminant is a free variable D.
    """
    if symbolic_D:
        D = MPoly.var("D")
    else:
        D = _coefficients(E)[2]
    x, y = _x_y()
    X, Y = MPoly.var("X"), MPoly.var("Y")
    return RationalMap(
        "f", "X_E(6)", "J_X", ("x", "y"),
        ((x**3 + 4 * D, x**2), (x**3 * y - 8 * D * y, x**3)),
        ("y", x**3 + D), ("X", "Y"), Y**2 - X**3 + 27 * D,
    )


def iso_g(E: Curve | None = None) -> RationalMap:
    """The isomorphism from y^2 = x^3 - 27D onto the quartic C_X, O -> (1:0:1)."""
    a, b, D = _coefficients(E)
    x, y = _x_y()
    lam, Y = MPoly.var("lam"), MPoly.var("Y")
    den = x + 12 * a
    num1 = -y / 6 - 18 * b
    num2 = x**3 / 18 + a * x**2 - y**2 / 36 - 6 * b * y - 48 * a**3 - 324 * b**2
    cx = lam**4 + 2 * a * lam**2 + 4 * b * lam - a * a / 3
    return RationalMap(
        "g", "J_X", "C_X", ("x", "y"),
        ((MPoly.coerce(num1), MPoly.coerce(den)), (num2, den**2)),
        ("y", x**3 - 27 * D), ("lam", "Y"), Y**2 - cx,
    )


def v_function(E: Curve | None = None) -> tuple[MPoly, MPoly]:
    """Numerator and denominator of v on X_E(6)."""
    a, b, D = _coefficients(E)
    x, y = _x_y()
    num = -(x**3) * y / 6 - 18 * b * x**3 + Fraction(4, 3) * D * y
    den = x**4 + 12 * a * x**3 + 4 * D * x
    return num, den


def forgetful_6to3_direct(E: Curve | None = None) -> RationalMap:
    a, b, D = _coefficients(E)
    num, den = v_function(E)
    x, _ = _x_y()
    return RationalMap("v/3", "X_E(6)", "X_E(3)", ("x", "y"),
                       ((num, 3 * den),), ("y", x**3 + D))


def isogeny_identity_residual() -> MPoly:
    """(x^3 + D)(x^3 - 8D)^2 - (x^3 + 4D)^3 + 27 D x^6 in Q[x, D]."""
    x, D = MPoly.var("x"), MPoly.var("D")
    return (x**3 + D) * (x**3 - 8 * D) ** 2 - ((x**3 + 4 * D) ** 3 - 27 * D * x**6)


def map6to3_direct(E: Curve, P: Sequence) -> Fraction:
    """Image lambda = v/3 on X_E(3) (affine mu = 1) of an affine point of y^2 = x^3 + D."""
    x, y = (as_rat(c) for c in P)
    if y * y != x**3 + E.discriminant:
        raise ValueError(f"({format_rat(x)}, {format_rat(y)}) is not on y^2 = x^3 + D")
    return forgetful_6to3_direct(E).apply((x, y))[0]


# -- maps out of the nine-quadric model -------------------------------------------

def minors_chi2(P: ProjPoint6 | Sequence) -> tuple[Fraction, Fraction, Fraction]:
    """2x2 minors (u, v, y) of [[x1, x2, x3], [x4, x5, x6]]."""
    x1, x2, x3, x4, x5, x6 = (as_rat(c) for c in P)
    u = x2 * x6 - x3 * x5
    v = x3 * x4 - x1 * x6
    y = x1 * x5 - x2 * x4
    if u == v == y == 0:
        raise DegenerateError("all 2x2 minors vanish")
    return u, v, y


def map6to3_reverse(P: ProjPoint6 | Sequence) -> tuple[Fraction, Fraction]:
    """(x3/3 : x6) on X^-_E(3)."""
    x3, x6 = as_rat(P[2]), as_rat(P[5])
    if x3 == 0 and x6 == 0:
        raise IndeterminacyError("x3 = x6 = 0: image on X^-_E(3) undefined")
    return x3 / 3, x6


def map_to_CXminus(P: ProjPoint6 | Sequence) -> tuple[Fraction, Fraction]:
    """(x3, (-x1 x5 + x2 x4)/2) in the chart x6 = 1."""
    x = [as_rat(c) for c in P]
    if x[5] == 0:
        raise IndeterminacyError("x6 = 0: outside the affine chart x6 = 1")
    x = [c / x[5] for c in x]
    return x[2], (-x[0] * x[4] + x[1] * x[3]) / 2


def birational_coordinates(P: ProjPoint6 | Sequence) -> tuple[Fraction, Fraction, Fraction]:
    """(x, y, z) = (x3, (-x1 x5 + x2 x4)/2, x5) in the chart x6 = 1."""
    x, y = map_to_CXminus(P)
    return x, y, as_rat(P[4]) / as_rat(P[5])


def birational_model(E: Curve | None = None, *, flip_sign: bool = False) -> tuple[MPoly, MPoly]:
    """The two-equation model (f, g) in x, y, z.

    ``flip_sign`` negates the y-term of f (used to check the oracle notices).
    """
    if E is None:
        raise ValueError("the birational model divides by D; pass a curve")
    a, b, D = _coefficients(E)
    x, y, z = MPoly.var("x"), MPoly.var("y"), MPoly.var("z")
    yterm = 27 * y * (64 * a * b * x + 96 * b * b) / D
    f = (z**3 - (36 * a * x**2 + 12 * a * a) * z + 216 * b * x**3 - 144 * a * a * x**2
         - 216 * a * b * x - (16 * a**3 + 216 * b * b) + (-yterm if flip_sign else yterm))
    inner = inner_quartic(E)
    g = y**2 - D * inner.as_mpoly("x", "mu").subs({"mu": 1})
    return f, g


def cxminus_relation(E: Curve) -> MPoly:
    """y^2 - q(x, 1) for the quartic C_{X-}."""
    q = canonical_model(E, "CXminus")
    return MPoly.var("y") ** 2 - q.as_mpoly("x", "mu").subs({"mu": 1})
