"""Full-correlation Bell inequalities on n two-setting sites."""

from ._bellcorr import (
    Error,
    SolverError,
    chsh_decompose,
    classify,
    coefficients,
    evaluate,
    ghz_correlations,
    ghz_extreme_point,
    group_order,
    id_to_signs,
    inequality_count,
    is_classical,
    l1_margin,
    lp_membership,
    max_violation,
    mermin_bound,
    mermin_id,
    orbit,
    polynomial,
    polynomial_id,
    ppt_check,
    signs_to_id,
    violation_value,
    witness_id,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
