"""Exact constructions of elliptic curves with isomorphic 6-torsion.

Everything is exact over Q: rationals are :class:`fractions.Fraction`,
polynomials are sparse :class:`~congruent6.exact.MPoly`. Claims about
congruence are tested with Frobenius-trace oracles, which are necessary
conditions only.
"""
from .congruence import (
    CongruenceReport,
    ap_mod_n_check,
    example49_point,
    example410_point,
    mod2_type_check,
    reverse6_pipeline,
)
from .elliptic import Curve, Quartic, ap, jacobian_of_quartic, locally_soluble_at
from .errors import BadPrimeError, DegenerateError, IndeterminacyError, SingularCurveError
from .families import family2, family3
from .models import ProjPoint6, canonical_model, derive_quadrics, quadrics_s, twist_by_flex

__version__ = "0.1.0"

__all__ = [
    "BadPrimeError", "CongruenceReport", "Curve", "DegenerateError", "IndeterminacyError",
    "ProjPoint6", "Quartic", "SingularCurveError", "ap", "ap_mod_n_check", "canonical_model",
    "derive_quadrics", "example410_point", "example49_point", "family2", "family3",
    "jacobian_of_quartic", "locally_soluble_at", "mod2_type_check", "quadrics_s",
    "reverse6_pipeline", "twist_by_flex",
]
