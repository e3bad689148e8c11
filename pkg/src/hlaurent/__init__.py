"""
Laurent series in hbar^(1/2) over symmetric functions, and the modular
operad characteristics built on them
"""
from .gaussian import (
    Measure,
    functional_integral,
    gaussian_moment,
    log_functional_integral,
    moment_coefficient,
    wick_side,
)
from .laplacian import adjoint_apply_h, laplacian
from .laurent import (
    HLaurent,
    TruncationSpec,
    h_plethysm,
    ordinary_exp,
    ordinary_log,
    pleth_exp,
    pleth_log,
)
from .modular import StableCharTable, cch, feynman_char, free_modular_char, graph_sum

__all__ = [
    "HLaurent",
    "Measure",
    "StableCharTable",
    "TruncationSpec",
    "adjoint_apply_h",
    "cch",
    "feynman_char",
    "free_modular_char",
    "functional_integral",
    "gaussian_moment",
    "graph_sum",
    "h_plethysm",
    "laplacian",
    "log_functional_integral",
    "moment_coefficient",
    "ordinary_exp",
    "ordinary_log",
    "pleth_exp",
    "pleth_log",
    "wick_side",
]
