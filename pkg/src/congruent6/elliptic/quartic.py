"""Binary quartic models y^2 = q(lam, mu) of 2-coverings."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ..errors import DegenerateError
from ..exact.linalg import sylvester_resultant
from ..exact.mpoly import MPoly
from ..exact.rat import as_rat, format_rat
from .curve import Curve


@dataclass(frozen=True)
class Quartic:
    """y^2 = c4 lam^4 + c3 lam^3 mu + c2 lam^2 mu^2 + c1 lam mu^3 + c0 mu^4."""

    c4: Fraction
    c3: Fraction
    c2: Fraction
    c1: Fraction
    c0: Fraction

    def __post_init__(self):
        for f in ("c4", "c3", "c2", "c1", "c0"):
            object.__setattr__(self, f, as_rat(getattr(self, f)))
        if not any(self.coeffs):
            raise ValueError("the zero quartic is not a model")

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return (self.c4, self.c3, self.c2, self.c1, self.c0)

    def scaled(self, c) -> "Quartic":
        c = as_rat(c)
        return Quartic(*(c * x for x in self.coeffs))

    def __call__(self, lam, mu=1) -> Fraction:
        lam, mu = as_rat(lam), as_rat(mu)
        return sum(c * lam ** (4 - i) * mu**i for i, c in enumerate(self.coeffs))

    def as_mpoly(self, lam: str = "lam", mu: str = "mu") -> MPoly:
        return MPoly(
            (lam, mu), {(4 - i, i): c for i, c in enumerate(self.coeffs)}
        )

    def has_repeated_root(self) -> bool:
        """Repeated root on P^1, roots at infinity included."""
        c4, c3, c2, c1, c0 = self.coeffs
        if c4 == 0:
            if c3 == 0:
                return True  # mu^2 divides the form
            f = [c3, c2, c1, c0]
        else:
            f = [c4, c3, c2, c1, c0]
        n = len(f) - 1
        df = [c * (n - i) for i, c in enumerate(f[:-1])]
        return sylvester_resultant(f, df) == 0

    def integral(self) -> "Quartic":
        """Multiply by a square so that every coefficient is an integer."""
        d = lcm(*(c.denominator for c in self.coeffs))
        return self.scaled(d * d)

    def __str__(self) -> str:
        return f"y^2 = {self.as_mpoly()}"

    def to_dict(self) -> dict:
        return {k: format_rat(getattr(self, k)) for k in ("c4", "c3", "c2", "c1", "c0")}


def quartic_invariants(q: Quartic) -> tuple[Fraction, Fraction]:
    """The classical invariants (I, J) of a binary quartic."""
    return invariants_of(*q.coeffs)


def invariants_of(c4, c3, c2, c1, c0):
    """(I, J) for raw coefficients; also accepts polynomial entries."""
    I = 12 * c4 * c0 - 3 * c3 * c1 + c2 * c2
    J = (
        72 * c4 * c2 * c0
        + 9 * c3 * c2 * c1
        - 27 * c4 * c1 * c1
        - 27 * c0 * c3 * c3
        - 2 * c2 * c2 * c2
    )
    return I, J


def quartic_discriminant(q: Quartic) -> Fraction:
    I, J = quartic_invariants(q)
    return (4 * I**3 - J * J) / 27


def jacobian_of_quartic(q: Quartic) -> Curve:
    """Jacobian y^2 = x^3 - 27 I x - 27 J of a nonsingular quartic model."""
    if q.has_repeated_root():
        raise DegenerateError(f"quartic {q} has a repeated root")
    I, J = quartic_invariants(q)
    return Curve(-27 * I, -27 * J)
