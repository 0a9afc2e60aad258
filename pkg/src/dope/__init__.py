"""Dope matrices: which derivatives of a polynomial vanish at which points.

The public API re-exports the pieces most callers need; the submodules hold
the rest.
"""

from .census import CensusTable, census_count, sandwich_bounds, v_table_small, v_top, v_top_minus1
from .core import DopePattern, PointTuple, Polynomial, binomial, poly_derivative, poly_eval, poly_gcd
from .counting import (
    BoundReport,
    count_generic_k,
    count_generic_total,
    generic_bounds,
    grossbound_lower,
    small_m_log_bounds,
    upper_bound_count,
)
from .evaluate import dope_matrix, dope_row, max_row_weight
from .linalg import (
    LimitCoefficients,
    binomial_matrix,
    derivative_limit_coeffs,
    gv_rank_check,
    rank,
    solve,
    verify_limit_identity,
)
from .patterns import (
    combine_rows,
    combine_rows_carry,
    count_dominating_shifts,
    count_limited_saturated,
    enumerate_safe,
    is_almost_safe,
    is_safe,
    is_saturated,
    is_t_dominating,
    is_t_limited,
    matrix_to_sequence,
    sequence_to_matrix,
)
from .synthesis import SynthesisCertificate, synthesize, synthesize_limited, verify_certificate

__version__ = "0.1.0"

__all__ = [
    "CensusTable",
    "census_count",
    "sandwich_bounds",
    "v_table_small",
    "v_top",
    "v_top_minus1",
    "DopePattern",
    "PointTuple",
    "Polynomial",
    "binomial",
    "poly_derivative",
    "poly_eval",
    "poly_gcd",
    "BoundReport",
    "count_generic_k",
    "count_generic_total",
    "generic_bounds",
    "grossbound_lower",
    "small_m_log_bounds",
    "upper_bound_count",
    "dope_matrix",
    "dope_row",
    "max_row_weight",
    "LimitCoefficients",
    "binomial_matrix",
    "derivative_limit_coeffs",
    "gv_rank_check",
    "rank",
    "solve",
    "verify_limit_identity",
    "combine_rows",
    "combine_rows_carry",
    "count_dominating_shifts",
    "count_limited_saturated",
    "enumerate_safe",
    "is_almost_safe",
    "is_safe",
    "is_saturated",
    "is_t_dominating",
    "is_t_limited",
    "matrix_to_sequence",
    "sequence_to_matrix",
    "SynthesisCertificate",
    "synthesize",
    "synthesize_limited",
    "verify_certificate",
]
