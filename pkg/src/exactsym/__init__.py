"""
Exact arithmetic on truncated symmetric functions
"""
from .character import VirtualCharacter
from .operations import (
    adjoint_apply,
    character_of,
    characteristic,
    involution,
    inner_product,
    log_one_plus_p,
    pderiv,
    plethysm,
    rank,
    sym_exp,
    sym_log,
    times_p,
)
from .partitions import Partition, make_partition, partitions_of, z_lambda
from .series import PolySeries1, QSeries
from .symfunc import SymFunc, e, h, newton_convert, ring_eval

__all__ = [
    "Partition",
    "PolySeries1",
    "QSeries",
    "SymFunc",
    "VirtualCharacter",
    "adjoint_apply",
    "character_of",
    "characteristic",
    "e",
    "h",
    "inner_product",
    "involution",
    "log_one_plus_p",
    "make_partition",
    "newton_convert",
    "partitions_of",
    "pderiv",
    "plethysm",
    "rank",
    "ring_eval",
    "sym_exp",
    "sym_log",
    "times_p",
    "z_lambda",
]
