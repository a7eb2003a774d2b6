from .streams import (
    CoeffStream,
    FormulaStream,
    ListStream,
    check_normalization,
    required_terms,
)
from .solvers import (
    additive_expansion,
    solve,
    solve_difference,
    solve_product,
    solve_ratio,
)
from .exp_log import exp_log_square_series

__all__ = [
    "CoeffStream", "FormulaStream", "ListStream", "check_normalization", "required_terms",
    "additive_expansion", "solve", "solve_difference", "solve_product", "solve_ratio",
    "exp_log_square_series",
]
