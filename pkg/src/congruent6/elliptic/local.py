"""Local solubility of y^2 = q(lam, mu) over Q_p by residue-class lifting."""
from __future__ import annotations

from ..errors import DegenerateError
from ..exact.rat import valuation
from .counting import legendre
from .quartic import Quartic, quartic_discriminant


def is_padic_square(n: int, p: int) -> bool:
    if n == 0:
        return True
    v = valuation(n, p)
    if v % 2:
        return False
    u = n // p**v
    if p == 2:
        return u % 8 == 1
    return legendre(u, p) == 1


def _taylor(f: list[int], x: int) -> list[int]:
    """Coefficients (ascending) of f(x + s) as a polynomial in s."""
    c = list(f)
    n = len(c)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            c[j] += x * c[j + 1]
    return c


def _class_soluble(f: list[int], x: int, e: int, p: int, depth: int) -> bool:
    # the residue class x + p^e Z_p
    h = p**e
    shifted = _taylor(f, x)
    cs = [c * h**i for i, c in enumerate(shifted)]
    c0 = cs[0]
    if c0 == 0 or is_padic_square(c0, p):
        return True
    v0 = valuation(c0, p)
    rest = [valuation(c, p) for c in cs[1:] if c]
    margin = 2 if p == 2 else 0
    if not rest or min(rest) > v0 + margin:
        # f is c0 times a square unit on the whole class
        return False
    if depth == 0:
        return False
    return any(_class_soluble(f, x + t * h, e + 1, p, depth - 1) for t in range(p))


def depth_bound(q: Quartic, p: int) -> int:
    disc = quartic_discriminant(q.integral())
    extra = 3 if p == 2 else 0
    return 2 * valuation(disc, p) + 3 + extra


def locally_soluble_at(q: Quartic, p: int) -> bool:
    """True when y^2 = q(lam, mu) has a point over Q_p."""
    if q.has_repeated_root():
        raise DegenerateError("local solubility needs a quartic without repeated roots")
    qi = q.integral()
    c = [int(x) for x in qi.coeffs]
    depth = depth_bound(q, p)
    affine = c[::-1]          # q(lam, 1), ascending in lam, lam in Z_p
    at_infinity = c           # q(1, mu), ascending in mu, mu in pZ_p
    return _class_soluble(affine, 0, 0, p, depth) or _class_soluble(at_infinity, 0, 1, p, depth)
