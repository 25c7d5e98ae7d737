class SingularCurveError(ValueError):
    """A Weierstrass model with vanishing discriminant."""


class BadPrimeError(ValueError):
    """A prime of bad reduction (or one dividing a coefficient denominator)."""


class DegenerateError(ValueError):
    """A parameter value where a family or construction degenerates."""


class IndeterminacyError(ValueError):
    """A point in the indeterminacy locus of a rational map."""
