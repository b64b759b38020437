"""Truncated Zeta (Zipf) distribution and closed-form approximations of its normalizer."""
from .analysis import ErrorRecord, SweepGrid, relative_error, run_sweep
from .approx import (
    AVERAGE_INTEGRAL,
    EXACT,
    INTEGRAL,
    ApproxMethod,
    Kind,
    approx_pmf,
    approx_sum,
    average_integral_sum,
    integral_sum,
    trapezoidal,
    trapezoidal_denominator,
    trapezoidal_sum,
    upper_integral_sum,
)
from .core import EULER_GAMMA, ZipfParams, exact_partial_sum, harmonic_approx, power_sum
from .dist import TruncatedZeta
from .errors import (
    AlphaNearOne,
    EmptyGrid,
    InvalidK,
    InvalidParams,
    InvalidProbability,
    RankOutOfRange,
    ZipfError,
)

__version__ = "0.1.0"
