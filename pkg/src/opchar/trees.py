"""
Tree sums for the Legendre transform

For a genus-0 table V the transform satisfies L(e_2 - Ch V) = h_2 + Ch(TV),
where TV is the sum over stable trees decorated by V. Ch(TV) is computed
here from the tree enumeration, independently of the transform.
"""
import logging
from fractions import Fraction
from math import factorial
from typing import Dict

from ..core.errors import PreconditionError
from ..exactsym.partitions import z_lambda
from ..exactsym.series import PolySeries1
from ..exactsym.symfunc import SymFunc
from ..graphzoo.oracles import burnside_char, wick_rank_sum
from ..hlaurent.modular import StableCharTable
from .legendre import classical_legendre

logger = logging.getLogger(__name__)


def table_char(table: StableCharTable, max_weight: int) -> SymFunc:
    """Ch(V) = sum over genus-0 entries of ch_n(V((0,n)))"""
    terms: Dict = {}
    for (g, n), chi in table.entries.items():
        if g != 0:
            raise PreconditionError("Tree sums take a genus-0 table")
        if n > max_weight:
            continue
        for tau, value in chi.values.items():
            terms[tau] = value / z_lambda(tau)
    return SymFunc(terms, max_weight)


def tree_char(table: StableCharTable, max_weight: int) -> SymFunc:
    """
    Ch(TV) through ``max_weight`` by the Burnside sum over stable trees

    Args:
        table: genus-0 table V
        max_weight: largest number of legs
    """
    if any(g for g, _ in table.entries):
        raise PreconditionError("Tree sums take a genus-0 table")
    total = SymFunc.zero(max_weight)
    for n in range(3, max_weight + 1):
        piece = burnside_char(0, n, table)
        total = total + SymFunc(dict(piece.terms), max_weight)
    logger.debug(f"Tree characteristic through weight {max_weight}")
    return total


def tree_counts(max_n: int) -> Dict[int, int]:
    """
    b_n, the number of stable trees with n labelled legs, by enumeration

    These are the coefficients of x^n/n! in the classical transform of
    x^2/2 - (e^x - 1 - x - x^2/2).
    """
    ones = {(0, n): 1 for n in range(3, max_n + 1)}
    return {n: int(wick_rank_sum(0, n, ones)) for n in range(3, max_n + 1)}


def tree_counts_by_legendre(max_n: int) -> Dict[int, int]:
    """b_n from the classical Legendre transform of x^2/2 - (e^x - 1 - x - x^2/2)"""
    coeffs = {2: Fraction(1, 2)}
    for n in range(3, max_n + 1):
        coeffs[n] = -Fraction(1, factorial(n))
    g = classical_legendre(PolySeries1(coeffs, max_n, "x"))
    return {n: int(g.coefficient(n) * factorial(n)) for n in range(3, max_n + 1)}
