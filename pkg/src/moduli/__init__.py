"""
Euler characteristics of moduli spaces of curves and formal Gaussian integrals
"""
from .bernoulli import BernoulliCache, bernoulli, zeta_neg
from .integrals import (
    f_det_ass_char,
    f_det_ass_closed,
    f_det_ass_functional,
    f_det_ass_integral,
    formal_integral_1v,
    i_n_series,
    stirling_check,
)
from .psi import (
    HarerZagierReport,
    alpha_n,
    alpha_n_ell,
    by_euler_class,
    euler_chi_extract,
    harer_zagier_b,
    psi,
    psi_n,
)

__all__ = [
    "BernoulliCache",
    "HarerZagierReport",
    "alpha_n",
    "alpha_n_ell",
    "bernoulli",
    "by_euler_class",
    "euler_chi_extract",
    "f_det_ass_char",
    "f_det_ass_closed",
    "f_det_ass_functional",
    "f_det_ass_integral",
    "formal_integral_1v",
    "harer_zagier_b",
    "i_n_series",
    "psi",
    "psi_n",
    "stirling_check",
    "zeta_neg",
]
