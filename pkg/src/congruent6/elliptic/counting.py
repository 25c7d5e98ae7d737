"""Naive point counting over prime fields and Frobenius traces."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from ..errors import BadPrimeError
from ..exact.rat import is_prime, primes_up_to, reduce_mod
from .curve import Curve


@dataclass(frozen=True)
class ApReport:
    p: int
    ap: int
    count: int

    def within_hasse(self) -> bool:
        return self.ap * self.ap <= 4 * self.p


@lru_cache(maxsize=None)
def square_counts(p: int) -> tuple[int, ...]:
    """counts[v] = #{y in F_p : y^2 = v}."""
    counts = [0] * p
    for y in range(p):
        counts[y * y % p] += 1
    return tuple(counts)


@lru_cache(maxsize=None)
def cube_counts(p: int) -> tuple[int, ...]:
    counts = [0] * p
    for y in range(p):
        counts[y * y * y % p] += 1
    return tuple(counts)


def legendre(n: int, p: int) -> int:
    n %= p
    if n == 0:
        return 0
    return square_counts(p)[n] - 1


@lru_cache(maxsize=65536)
def weierstrass_count(A: int, B: int, p: int) -> int:
    """Projective points on y^2 = x^3 + A x + B over F_p (p odd), A, B reduced."""
    sq = square_counts(p)
    total = 1
    for x in range(p):
        total += sq[(x * x * x + A * x + B) % p]
    return total


def _require_good(E: Curve, p: int) -> tuple[int, int]:
    if p < 3 or not is_prime(p):
        raise BadPrimeError(f"{p} is not an odd prime")
    for name, c in (("a", E.a), ("b", E.b)):
        if c.denominator % p == 0:
            raise BadPrimeError(f"p={p} divides the denominator of {name}")
    if E.discriminant.numerator % p == 0:
        raise BadPrimeError(f"p={p} divides the discriminant (bad reduction)")
    return reduce_mod(E.a, p), reduce_mod(E.b, p)


def ap(E: Curve, p: int) -> ApReport:
    A, B = _require_good(E, p)
    count = weierstrass_count(A, B, p)
    return ApReport(p, p + 1 - count, count)


def is_good_prime(E: Curve, p: int) -> bool:
    return (
        E.a.denominator % p != 0
        and E.b.denominator % p != 0
        and E.discriminant.numerator % p != 0
    )


def good_primes(curves: Iterable[Curve], bound: int) -> list[int]:
    """Primes 5 <= p <= bound of good reduction for every curve given."""
    curves = list(curves)
    return [p for p in primes_up_to(bound) if p > 3 and all(is_good_prime(E, p) for E in curves)]


def cubic_splitting_type(E: Curve, p: int) -> tuple[int, ...]:
    """Degrees of the irreducible factors of x^3 + a x + b mod p, ascending."""
    A, B = _require_good(E, p)
    roots = sum(1 for x in range(p) if (x * x * x + A * x + B) % p == 0)
    # squarefree mod p at a good prime, so 2 roots cannot occur
    return {3: (1, 1, 1), 1: (1, 2), 0: (3,)}[roots]


def quartic_count(coeffs: Sequence[int], p: int) -> int:
    """Points on y^2 = c4 l^4 + c3 l^3 m + c2 l^2 m^2 + c1 l m^3 + c0 m^4 in
    weighted projective space P(1,1,2) over F_p; coeffs already reduced."""
    c4, c3, c2, c1, c0 = coeffs
    sq = square_counts(p)
    total = sq[c4 % p]  # the point(s) over (1:0)
    for l in range(p):
        total += sq[((((c4 * l + c3) * l + c2) * l + c1) * l + c0) % p]
    return total


def plane_cubic_count(c: int, A: int, B: int, p: int) -> int:
    """Points of y^3 = c (v^3 + A u^2 v + B u^3) in P^2 over F_p."""
    cu = cube_counts(p)
    total = cu[c % p]  # (u:v) = (0:1)
    for v in range(p):
        total += cu[c * (v * v * v + A * v + B) % p]
    return total

