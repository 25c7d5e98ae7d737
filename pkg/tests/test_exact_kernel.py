from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from congruent6.exact import (
    CubicAlgElem,
    MPoly,
    QMatrix,
    UnboundVariableError,
    as_rat,
    det3,
    format_rat,
    parse_rat,
    reduce_mod_square,
    same_rowspace,
    sylvester_resultant,
    symbols,
    valuation,
)
from congruent6.exact.rat import iroot, is_prime, primes_up_to, rational_root, reduce_mod

from .conftest import rationals, small_ints

# -- rationals ------------------------------------------------------------------


@pytest.mark.parametrize("text, value", [("3", 3), ("-8/27", Fraction(-8, 27)), (" 6/4 ", Fraction(3, 2))])
def test_parse_rat(text, value):
    assert parse_rat(text) == value


@pytest.mark.parametrize("bad", ["", "1/0", "x", "1.5", "2/3/4"])
def test_parse_rat_rejects(bad):
    with pytest.raises(ValueError):
        parse_rat(bad)


def test_floats_are_refused():
    with pytest.raises(TypeError):
        as_rat(0.5)


@given(rationals)
def test_format_parse_round_trip(q):
    assert parse_rat(format_rat(q)) == q


def test_valuation_and_roots():
    assert valuation(Fraction(-13824), 2) == 9
    assert valuation(Fraction(5, 27), 3) == -3
    assert iroot(13824**2, 2) == 13824 and iroot(13825, 2) is None
    assert rational_root(Fraction(64, 729), 6) == Fraction(2, 3)
    assert rational_root(Fraction(-8, 27), 3) == Fraction(-2, 3)
    assert rational_root(Fraction(-4), 2) is None


def test_primes_against_trial_division():
    trial = [n for n in range(2, 500) if all(n % d for d in range(2, n))]
    assert primes_up_to(499) == trial
    assert [n for n in range(500) if is_prime(n)] == trial


def test_reduce_mod():
    assert reduce_mod(Fraction(1, 2), 7) == 4
    with pytest.raises(ZeroDivisionError):
        reduce_mod(Fraction(1, 7), 7)


# -- polynomials -------------------------------------------------------------------

x, y, z = symbols("x y z")
polys = st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2), rationals),
                 max_size=6).map(
    lambda terms: sum((c * x**i * y**j * z**k for i, j, k, c in terms), MPoly()))
points = st.fixed_dictionaries({"x": rationals, "y": rationals, "z": rationals})


@given(polys, polys, points)
def test_ring_operations_commute_with_evaluation(p, q, pt):
    # evaluation is a ring homomorphism: an oracle independent of the term algebra
    assert (p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt)
    assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
    assert (p - q).evaluate(pt) == p.evaluate(pt) - q.evaluate(pt)
    assert (p**2).evaluate(pt) == p.evaluate(pt) ** 2


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p - p == 0


@given(polys, points)
def test_subs_matches_evaluation(p, pt):
    shifted = p.subs({"x": x + y})
    moved = dict(pt, x=pt["x"] + pt["y"])
    assert shifted.evaluate(pt) == p.evaluate(moved)


def test_canonical_form_drops_unused_generators():
    p = (x + y) - y
    assert p == x and p.variables == ("x",)
    assert hash(p) == hash(x)


def test_diff_degree_and_str():
    p = 3 * x**2 * y - y + Fraction(1, 2)
    assert p.diff("x") == 6 * x * y
    assert p.degree() == 3 and p.degree("y") == 1 and MPoly().degree() == -1
    assert str(x**2 - 1) == "x^2 - 1"


def test_unbound_variable_is_named():
    with pytest.raises(UnboundVariableError, match="y"):
        (x + y).evaluate({"x": 1})


def test_reduce_mod_square():
    rhs = x**3 + 1
    assert reduce_mod_square(y**4, "y", rhs) == rhs**2
    assert reduce_mod_square(y**3 + y, "y", rhs) == y * (rhs + 1)


def test_collect_and_homogeneity():
    lam, mu = symbols("lam mu")
    p = lam**2 * mu + 2 * lam * mu**2
    assert p.is_homogeneous(["lam", "mu"])
    assert p.collect(["lam"]) == {(2,): mu, (1,): 2 * mu**2}


# -- linear algebra -------------------------------------------------------------------

matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=1, max_size=5))


@given(matrices)
def test_rank_nullity_and_kernel(rows):
    m = QMatrix.from_rows(rows)
    kernel = m.nullspace()
    assert m.rank() + len(kernel) == m.cols
    for v in kernel:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


def _leibniz_det(rows):
    from itertools import permutations
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = Fraction(-1) ** inversions
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total


@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_against_leibniz(rows):
    assert QMatrix.from_rows(rows).det() == _leibniz_det(rows)


def test_rowspace_equality_ignores_basis():
    m1 = QMatrix.from_rows([[1, 2, 3], [0, 1, 1]])
    m2 = QMatrix.from_rows([[1, 3, 4], [2, 4, 6], [1, 1, 2]])
    assert same_rowspace(m1, m2)
    assert not same_rowspace(m1, QMatrix.from_rows([[1, 0, 0], [0, 1, 0]]))


@given(st.lists(small_ints, min_size=1, max_size=3), st.lists(small_ints, min_size=1, max_size=3))
def test_resultant_is_product_of_root_differences(rs, ss):
    # monic polynomials with known integer roots: Res(f, g) = prod (r - s)
    def from_roots(roots):
        coeffs = [Fraction(1)]
        for r in roots:
            coeffs = [c - r * d for c, d in zip(coeffs + [0], [0] + coeffs)]
        return coeffs
    expected = Fraction(1)
    for r, s in product(rs, ss):
        expected *= r - s
    assert sylvester_resultant(from_roots(rs), from_roots(ss)) == expected


# -- cubic algebra ----------------------------------------------------------------------

elems = st.tuples(rationals, rationals, rationals)


def test_alpha_satisfies_its_cubic():
    a, b = Fraction(-6), Fraction(8)
    al = CubicAlgElem.alpha(a, b)
    assert al**3 + al * a + b == 0
    assert al.norm() == -b


@given(elems, elems, elems, rationals, rationals)
def test_cubic_algebra_is_commutative_ring(u, v, w, a, b):
    U, V, W = (CubicAlgElem(*c, a, b) for c in (u, v, w))
    assert U * V == V * U
    assert (U * V) * W == U * (V * W)
    assert U * (V + W) == U * V + U * W


@given(elems, elems, rationals, rationals)
def test_norm_is_multiplicative(u, v, a, b):
    U, V = CubicAlgElem(*u, a, b), CubicAlgElem(*v, a, b)
    assert (U * V).norm() == U.norm() * V.norm()


def test_mixed_contexts_are_rejected():
    with pytest.raises(ValueError):
        CubicAlgElem(1, 0, 0, 1, 1) * CubicAlgElem(1, 0, 0, 2, 1)


def test_det3_over_rationals():
    grid = [[2, 0, 1], [1, 3, 0], [0, 1, 4]]
    assert det3(grid) == _leibniz_det(grid)
