from fractions import Fraction
from itertools import product

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from congruent6.elliptic import (
    Curve,
    Quartic,
    ap,
    cubic_splitting_type,
    good_primes,
    is_Q_isomorphic,
    jacobian_of_quartic,
    locally_soluble_at,
    plane_cubic_count,
    quartic_count,
    quartic_invariants,
    weierstrass_count,
)
from congruent6.elliptic.quartic import quartic_discriminant
from congruent6.errors import BadPrimeError, DegenerateError, SingularCurveError
from congruent6.exact import symbols
from congruent6.exact.rat import reduce_mod

from .conftest import curves, nonzero_rationals, small_ints

PRIMES = (5, 7, 11, 13, 17, 19, 23)


# -- brute-force oracles ------------------------------------------------------------

def brute_weierstrass(A, B, p):
    return 1 + sum((y * y - x**3 - A * x - B) % p == 0 for x in range(p) for y in range(p))


def brute_roots(A, B, p):
    return sum((x**3 + A * x + B) % p == 0 for x in range(p))


def brute_quartic(c, p):
    c4, c3, c2, c1, c0 = c
    affine = sum((y * y - (c4 * l**4 + c3 * l**3 + c2 * l**2 + c1 * l + c0)) % p == 0
                 for l in range(p) for y in range(p))
    return affine + sum((y * y - c4) % p == 0 for y in range(p))


def brute_plane_cubic(c, A, B, p):
    def on(u, v, y):
        return (y**3 - c * (v**3 + A * u * u * v + B * u**3)) % p == 0
    # P^2 = {(1:v:y)} + {(0:1:y)} + {(0:0:1)}
    return (sum(on(1, v, y) for v, y in product(range(p), repeat=2))
            + sum(on(0, 1, y) for y in range(p)) + on(0, 0, 1))


# -- curves ----------------------------------------------------------------------------

def test_discriminant_and_j():
    E = Curve(-6, 8)
    assert E.discriminant == -13824
    assert Curve(-216, 1728).j_invariant == -1728
    assert Curve(0, 1).j_invariant == 0 and Curve(1, 0).j_invariant == 1728


def test_singular_curve_rejected():
    with pytest.raises(SingularCurveError):
        Curve(-3, 2)


def test_string_forms():
    assert str(Curve(0, -13824)) == "y^2 = x^3 - 13824"
    assert str(Curve(-6, 8)) == "y^2 = x^3 - 6x + 8"


@given(curves(), nonzero_rationals)
def test_scaling_is_an_isomorphism(E, u):
    F = E.scaled(u)
    assert F.j_invariant == E.j_invariant
    ok, scale = is_Q_isomorphic(E, F)
    assert ok and E.scaled(scale) == F


def test_twist_by_nonsquare_is_not_isomorphic():
    E = Curve(-6, 8)
    assert not is_Q_isomorphic(E, E.twist(5))[0]
    assert is_Q_isomorphic(E, E.twist(4))[0]
    # j = 0 and j = 1728 need sixth and fourth roots
    assert is_Q_isomorphic(Curve(0, 2), Curve(0, 128))[0]
    assert not is_Q_isomorphic(Curve(0, 2), Curve(0, 16))[0]
    assert is_Q_isomorphic(Curve(3, 0), Curve(48, 0))[0]


# -- point counts -------------------------------------------------------------------------

@given(small_ints, small_ints, st.sampled_from(PRIMES))
def test_weierstrass_count_against_brute_force(A, B, p):
    assert weierstrass_count(A % p, B % p, p) == brute_weierstrass(A, B, p)


@given(curves(), st.sampled_from(PRIMES))
def test_ap_within_hasse(E, p):
    assume(p in good_primes([E], 30))
    rep = ap(E, p)
    assert rep.within_hasse()
    A, B = reduce_mod(E.a, p), reduce_mod(E.b, p)
    assert rep.ap == p + 1 - brute_weierstrass(A, B, p)


def test_ap_known_values():
    # y^2 = x^3 - x has a_p = 0 at primes p = 3 mod 4
    E = Curve(-1, 0)
    assert all(ap(E, p).ap == 0 for p in (7, 11, 19, 23, 31))


@pytest.mark.parametrize("p", [2, 9, 31, 41])
def test_bad_primes_raise(p):
    # D(1, 1) = -496 = -16 * 31; 41 divides a denominator below
    E = Curve(1, Fraction(1, 41)) if p == 41 else Curve(1, 1)
    with pytest.raises(BadPrimeError):
        ap(E, p)


def test_good_primes_skip_discriminant_divisors():
    assert 31 not in good_primes([Curve(1, 1)], 50)
    assert good_primes([Curve(1, 1)], 20) == [5, 7, 11, 13, 17, 19]


@given(curves(), st.sampled_from(PRIMES))
def test_splitting_type_counts_roots(E, p):
    assume(p in good_primes([E], 30))
    roots = brute_roots(reduce_mod(E.a, p), reduce_mod(E.b, p), p)
    assert cubic_splitting_type(E, p) == {3: (1, 1, 1), 1: (1, 2), 0: (3,)}[roots]


@given(st.tuples(*[small_ints] * 5), st.sampled_from(PRIMES))
def test_quartic_count_against_brute_force(c, p):
    assert quartic_count([x % p for x in c], p) == brute_quartic(c, p)


@given(small_ints, small_ints, small_ints, st.sampled_from(PRIMES))
def test_plane_cubic_count_against_brute_force(c, A, B, p):
    assert plane_cubic_count(c % p, A % p, B % p, p) == brute_plane_cubic(c, A, B, p)


# -- quartics ------------------------------------------------------------------------------

quartics = st.tuples(*[small_ints] * 5).filter(lambda c: c[0] != 0)


@given(quartics, st.integers(-5, 5))
def test_invariants_are_sl2_invariant(c, k):
    # lam -> lam + k mu has determinant 1
    q = Quartic(*c)
    lam, mu = symbols("lam mu")
    moved = q.as_mpoly().subs({"lam": lam + k * mu})
    shifted = Quartic(*(moved.coefficient({"lam": 4 - i, "mu": i}) for i in range(5)))
    assert quartic_invariants(shifted) == quartic_invariants(q)


@given(quartics, st.sampled_from((5, 7, 11, 13)))
def test_jacobian_has_same_count(c, p):
    q = Quartic(*c)
    assume(not q.has_repeated_root())
    assume(quartic_discriminant(q) % p != 0)
    J = jacobian_of_quartic(q)
    assume(p in good_primes([J], 20))
    assert quartic_count([x % p for x in c], p) == weierstrass_count(
        reduce_mod(J.a, p), reduce_mod(J.b, p), p)


def test_repeated_roots():
    assert Quartic(1, -2, 1, 0, 0).has_repeated_root()      # lam^2 (lam - 1)^2
    assert Quartic(0, 0, 1, 0, -1).has_repeated_root()      # double root at infinity
    assert not Quartic(0, 1, 0, 0, -1).has_repeated_root()  # simple root at infinity
    with pytest.raises(DegenerateError):
        jacobian_of_quartic(Quartic(1, -2, 1, 0, 0))


# -- local solubility ------------------------------------------------------------------------

def _square_class(n, p, k):
    """True/False when n mod p^k decides whether n is a p-adic square, else None."""
    if n % p**k == 0:
        return None
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    if v % 2:
        return False
    return pow(n % p, (p - 1) // 2, p) == 1


def brute_local(c, p, k):
    """Search primitive (lam, mu) mod p^k; None when some class is undecided."""
    m = p**k
    undecided = False
    for lam, mu in product(range(m), repeat=2):
        if lam % p == 0 and mu % p == 0:
            continue
        val = sum(ci * lam ** (4 - i) * mu**i for i, ci in enumerate(c)) % m
        cls = _square_class(val, p, k)
        if cls:
            return True
        undecided |= cls is None
    return None if undecided else False


@given(quartics, st.sampled_from((3, 5, 7)))
def test_local_solubility_against_brute_force(c, p):
    q = Quartic(*c)
    assume(not q.has_repeated_root())
    expected = brute_local(c, p, 3)
    assume(expected is not None)
    assert locally_soluble_at(q, p) == expected


def test_local_solubility_examples():
    insoluble = Quartic(-64, 0, 128, 0, Fraction(64, 3))
    assert not locally_soluble_at(insoluble, 3)
    assert locally_soluble_at(insoluble, 7)
    assert locally_soluble_at(Quartic(1, 0, 0, 0, 1), 5)
    assert locally_soluble_at(Quartic(3, 0, 0, 0, 3), 3) == brute_local((3, 0, 0, 0, 3), 3, 4)


def test_rational_point_implies_local_points():
    # (lam, mu, y) = (1, 0, 1) lies on y^2 = lam^4 + ... so every Q_p has a point
    q = Quartic(1, 3, -5, 2, 7)
    assert all(locally_soluble_at(q, p) for p in (2, 3, 5, 7, 11, 13))
