"""Exact counting of plane partition diamonds by several independent routes."""

from .diamond import (
    DiamondParams,
    build_params,
    count_compressed,
    count_via_shifts,
    diamond_polypart_bernoulli,
    diamond_polypart_compressed,
    diamond_quasipoly,
    diamond_wave,
    weight_s,
)
from .errors import BudgetExceeded, DiamondError, NonIntegralResult
from .oracles import diamond_series, enumerate_diamonds
from .partition import PartSequence, partition_count_dp, quasipoly_from_moments, sylvester_wave
from .quasipoly import QuasiPolynomial

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "DiamondError",
    "DiamondParams",
    "NonIntegralResult",
    "PartSequence",
    "QuasiPolynomial",
    "build_params",
    "count_compressed",
    "count_via_shifts",
    "diamond_polypart_bernoulli",
    "diamond_polypart_compressed",
    "diamond_quasipoly",
    "diamond_series",
    "diamond_wave",
    "enumerate_diamonds",
    "partition_count_dp",
    "quasipoly_from_moments",
    "sylvester_wave",
    "weight_s",
]
