"""
Characteristics of cyclic operads and the Legendre transform
"""
from .legendre import (
    StarSymFunc,
    classical_legendre,
    cobar_char,
    compositional_inverse,
    legendre,
    plethystic_inverse,
    rank_commutes,
)
from .named import NAMED_OPERADS, named_char
from .trees import table_char, tree_char, tree_counts, tree_counts_by_legendre

__all__ = [
    "NAMED_OPERADS",
    "StarSymFunc",
    "classical_legendre",
    "cobar_char",
    "compositional_inverse",
    "legendre",
    "named_char",
    "plethystic_inverse",
    "rank_commutes",
    "table_char",
    "tree_char",
    "tree_counts",
    "tree_counts_by_legendre",
]
