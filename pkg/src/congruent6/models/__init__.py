from .canonical import (
    SELECTORS,
    JacobianReport,
    TwistedCubic,
    canonical_model,
    inner_quartic,
    jacobian_consistency,
)
from .quadrics import (
    MONOMIALS,
    PRINTED_Q_SCALING,
    FlexMatrixInverse,
    ProjPoint6,
    QuadricSystem,
    build_A23,
    derive_quadrics,
    flex_inverse,
    q_forms_printed,
    quadrics_q_printed,
    quadrics_s,
    s_forms,
    twist_by_flex,
    vanishes_on_image,
)

__all__ = [
    "MONOMIALS", "PRINTED_Q_SCALING", "SELECTORS", "FlexMatrixInverse", "JacobianReport",
    "ProjPoint6", "QuadricSystem", "TwistedCubic", "build_A23", "canonical_model",
    "derive_quadrics", "flex_inverse", "inner_quartic", "jacobian_consistency",
    "q_forms_printed", "quadrics_q_printed", "quadrics_s", "s_forms", "twist_by_flex",
    "vanishes_on_image",
]
