from .cubic import CubicAlgElem, cubic_alg_mul, det3
from .linalg import QMatrix, rowspace, same_rowspace, sylvester_resultant
from .mpoly import (
    MPoly,
    UnboundVariableError,
    reduce_mod_square,
    reduce_mod_weierstrass,
    symbols,
)
from .rat import Rat, as_rat, format_rat, parse_rat, valuation

__all__ = [
    "CubicAlgElem", "MPoly", "QMatrix", "Rat", "UnboundVariableError",
    "as_rat", "cubic_alg_mul", "det3", "format_rat", "parse_rat",
    "reduce_mod_square", "reduce_mod_weierstrass", "rowspace", "same_rowspace",
    "symbols", "sylvester_resultant", "valuation",
]
