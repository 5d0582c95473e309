"""bconvlab: exact-arithmetic tools for algebraic numbers theta in (1, 2).

Classification (Pisot / Salem / Perron / Garsia, certified Mahler measure),
power-sum level sets with exact deduplication, Bernoulli-convolution measure
bounds, branching counts, and trace asymptotics.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .errors import (
    BconvlabError,
    BudgetExceeded,
    DegreeCapExceeded,
    DegreeZeroError,
    NoRealRootAboveOne,
    NotMonicError,
    NotSalemError,
    ParseError,
    PrecisionExhausted,
    ReductionDidNotTerminate,
    ZeroPolynomialError,
)
from .polynomials import IntPolynomial, parse_polynomial
from .config import RunConfig, default_config
from .algebraic import (
    AlgebraicNumber,
    ClassificationReport,
    algebraic_number,
    classify,
    mahler_measure,
    sqrt_number,
    sqrt_tower_reduce,
    unit_circle_split,
)
from .powersum import (
    ALPHABET_BINARY,
    ALPHABET_SIGNED,
    enumerate_level,
    gap_reduction_check,
    gap_series,
    garsia_entropy,
    growth_report,
)
from .measure import (
    branching_count,
    branching_growth,
    density_profile,
    local_dimension_profile,
    measure_bounds,
    net_level,
    support_interval,
)
from .spectra import (
    dominant_part,
    power_traces,
    trace_residual_report,
    unit_circle_partial_sums,
)

__all__ = [
    "__version__",
    "BconvlabError",
    "BudgetExceeded",
    "DegreeCapExceeded",
    "DegreeZeroError",
    "NoRealRootAboveOne",
    "NotMonicError",
    "NotSalemError",
    "ParseError",
    "PrecisionExhausted",
    "ReductionDidNotTerminate",
    "ZeroPolynomialError",
    "IntPolynomial",
    "parse_polynomial",
    "RunConfig",
    "default_config",
    "AlgebraicNumber",
    "ClassificationReport",
    "algebraic_number",
    "classify",
    "mahler_measure",
    "sqrt_number",
    "sqrt_tower_reduce",
    "unit_circle_split",
    "ALPHABET_BINARY",
    "ALPHABET_SIGNED",
    "enumerate_level",
    "gap_reduction_check",
    "gap_series",
    "garsia_entropy",
    "growth_report",
    "branching_count",
    "branching_growth",
    "density_profile",
    "local_dimension_profile",
    "measure_bounds",
    "net_level",
    "support_interval",
    "dominant_part",
    "power_traces",
    "trace_residual_report",
    "unit_circle_partial_sums",
]
