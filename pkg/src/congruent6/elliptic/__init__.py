from .counting import (
    ApReport,
    ap,
    cubic_splitting_type,
    good_primes,
    is_good_prime,
    legendre,
    plane_cubic_count,
    quartic_count,
    weierstrass_count,
)
from .curve import Curve, discriminant, discriminant_of, is_Q_isomorphic, j_invariant
from .local import locally_soluble_at
from .quartic import (
    Quartic,
    invariants_of,
    jacobian_of_quartic,
    quartic_discriminant,
    quartic_invariants,
)

__all__ = [
    "ApReport", "Curve", "Quartic", "ap", "cubic_splitting_type", "discriminant",
    "discriminant_of", "good_primes", "invariants_of", "is_Q_isomorphic",
    "is_good_prime", "j_invariant", "jacobian_of_quartic", "legendre",
    "locally_soluble_at", "plane_cubic_count", "quartic_count",
    "quartic_discriminant", "quartic_invariants", "weierstrass_count",
]
