"""Exact Tutte polynomials of uniform matroids and their thickenings, with
Merino-Welsh inequality verification, counterexample search, and the
asymptotics that locate the failing families."""

from .asymptotics import (
    empirical_exponent,
    entropy,
    growth_rate_x_axis,
    mw_exponent,
    optimal_alpha,
    threshold_x0,
)
from .errors import (
    DegenerateDenominatorError,
    InvalidParametersError,
    NotABasisError,
    SizeLimitError,
)
from .exact import BivariatePoly, binomial, log_rational, rational_to_float
from .matroids import (
    ExchangeGraph,
    RankOracleMatroid,
    bases,
    direct_sum,
    dual_matroid,
    exchange_graph,
    lifted_basis,
    loops_coloops,
    rank_axioms_check,
    subset_expansion_tutte,
    thicken_exchange_graph,
    thicken_matroid,
    uniform_oracle,
)
from .thickening import (
    Axis,
    MWReport,
    ThickenedUniform,
    direct_sum_dual_report,
    mw_report,
    thickened_eval,
    thickened_eval_axis,
)
from .uniform import UniformMatroid, dominant_index, eval_x_axis, tutte_eval, tutte_polynomial

__version__ = "0.1.0"

__all__ = [
    "Axis",
    "BivariatePoly",
    "DegenerateDenominatorError",
    "ExchangeGraph",
    "InvalidParametersError",
    "MWReport",
    "NotABasisError",
    "RankOracleMatroid",
    "SizeLimitError",
    "ThickenedUniform",
    "UniformMatroid",
    "bases",
    "binomial",
    "direct_sum",
    "direct_sum_dual_report",
    "dominant_index",
    "dual_matroid",
    "empirical_exponent",
    "entropy",
    "eval_x_axis",
    "exchange_graph",
    "growth_rate_x_axis",
    "lifted_basis",
    "log_rational",
    "loops_coloops",
    "mw_exponent",
    "mw_report",
    "optimal_alpha",
    "rank_axioms_check",
    "rational_to_float",
    "subset_expansion_tutte",
    "thicken_exchange_graph",
    "thicken_matroid",
    "thickened_eval",
    "thickened_eval_axis",
    "threshold_x0",
    "tutte_eval",
    "tutte_polynomial",
    "uniform_oracle",
]
