from fractions import Fraction

import pytest
from hypothesis import given, settings

from congruent6.elliptic import (
    Curve,
    Quartic,
    is_Q_isomorphic,
    jacobian_of_quartic,
    quartic_invariants,
)
from congruent6.errors import DegenerateError
from congruent6.exact import symbols
from congruent6.models import (
    PRINTED_Q_SCALING,
    SELECTORS,
    ProjPoint6,
    QuadricSystem,
    TwistedCubic,
    build_A23,
    canonical_model,
    derive_quadrics,
    flex_inverse,
    inner_quartic,
    jacobian_consistency,
    quadrics_q_printed,
    quadrics_s,
    twist_by_flex,
    vanishes_on_image,
)

from .conftest import curves

E0 = Curve(-6, 8)


@pytest.mark.parametrize("which, text", [
    ("XE6", "y^2 = x^3 - 13824"),
    ("Z", "y^2 = x^3 + 373248"),
    ("CY", "y^3 = v^3 - 6*u^2*v + 8*u^3"),
    ("CYminus", "y^3 = -13824*(v^3 - 6*u^2*v + 8*u^3)"),
])
def test_model_strings(which, text):
    assert str(canonical_model(E0, which)) == text


def test_every_selector_builds():
    for which in SELECTORS:
        assert canonical_model(E0, which) is not None
    with pytest.raises(ValueError, match="unknown model"):
        canonical_model(E0, "CZ")


def test_cx_quartic_for_1_0():
    # C_X- for y^2 = x^3 + x is 64 (-lam^4 + 2 lam^2 mu^2 + mu^4/3)
    assert canonical_model(Curve(1, 0), "CXminus") == Quartic(-64, 0, 128, 0, Fraction(64, 3))


@given(curves())
def test_quartic_jacobians_are_isomorphic_to_targets(E):
    D = E.discriminant
    for which, target in (("CX", Curve(0, -27 * D)), ("CXminus", Curve(0, -27 / D)),
                          ("Xminus1", Curve(0, 1 / D))):
        assert is_Q_isomorphic(jacobian_of_quartic(canonical_model(E, which)), target)[0]


@given(curves())
def test_inner_quartic_invariants(E):
    I, J = quartic_invariants(inner_quartic(E))
    assert I == 0 and J == E.discriminant**2 / 64


@settings(max_examples=6)
@given(curves())
def test_plane_cubic_counts_match_jacobians(E):
    assert jacobian_consistency(E, 60).all_equal


def test_jacobian_oracle_is_sensitive():
    # comparing C_Y against a nontrivial twist of its Jacobian must fail somewhere
    wrong = Curve(0, E0.discriminant).twist(-1)
    assert not jacobian_consistency(E0, 60, jac_plus=wrong).all_equal


def test_twisted_cubic_membership():
    C = TwistedCubic(1, -6, 8)
    assert C.contains(0, 1, 1) and not C.contains(0, 1, 2)
    assert C.is_smooth()
    with pytest.raises(ValueError):
        TwistedCubic(0, 1, 1)


# -- nine quadrics -------------------------------------------------------------------

@pytest.mark.parametrize("ab", [(-6, 8), (1, 1), (0, 1), (1, 0)])
def test_kernel_and_twist(ab):
    E = Curve(*ab)
    K = derive_quadrics(E)
    assert len(K) == 9 and K.rank() == 9
    A, U, _ = build_A23(E)
    assert all(vanishes_on_image(form, A, U) for form in K.forms)
    T, rank = twist_by_flex(E, K)
    assert len(T) == 27 and rank == 9
    assert T.same_span(quadrics_s(E))


@pytest.mark.parametrize("ab", [(-6, 8), (1, 1), (0, 1), (1, 0)])
def test_q_forms_agree_with_kernel_after_rescaling(ab):
    E = Curve(*ab)
    K = derive_quadrics(E)
    assert quadrics_q_printed(E).substituted(PRINTED_Q_SCALING).same_span(K)


def test_q_forms_need_the_rescaling():
    assert not quadrics_q_printed(E0).same_span(derive_quadrics(E0))


def test_flex_inverse_is_invertible():
    assert not flex_inverse(E0).det().is_zero()


def test_quadric_system_round_trip():
    x1, x2, x6 = symbols("x1 x2 x6")
    system = QuadricSystem.from_mpolys([x1 * x2 - 3 * x6**2, x2**2])
    assert QuadricSystem.from_mpolys(system.to_mpolys()) == system
    assert system.evaluate((1, 3, 0, 0, 0, 1)) == [0, 9]


def test_projective_points():
    P = ProjPoint6.of(-192, 48, 2, -48, 48, 2)
    assert P.normalized().coords == tuple(map(Fraction, (-96, 24, 1, -24, 24, 1)))
    assert P.same_point(P.scaled(Fraction(-3, 7)))
    with pytest.raises(DegenerateError):
        ProjPoint6.of(0, 0, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        ProjPoint6.of(1, 2, 3)
