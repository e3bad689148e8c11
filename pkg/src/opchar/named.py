"""
Characteristics of the named cyclic operads

    Ch(Com) = exp(sum p_n/n) - 1 - h_1 - h_2
    Ch(Ass) = -sum phi(n)/n log(1 - p_n) - h_1 - h_2
    Ch(Lie) = (1 - p_1) sum mu(n)/n log(1 - p_n) + h_1 - h_2
"""
import logging
from fractions import Fraction
from typing import Callable, Dict

from sympy.functions.combinatorial.numbers import mobius, totient

from ..core.errors import PreconditionError
from ..exactsym.operations import log_one_plus_p, sym_exp
from ..exactsym.symfunc import SymFunc, h

logger = logging.getLogger(__name__)

NAMED_OPERADS = ("com", "ass", "lie")


def _low_terms(max_weight: int) -> SymFunc:
    return h(1, max_weight) + h(2, max_weight)


def _arithmetic_log_sum(weights: Callable[[int], int], max_weight: int) -> SymFunc:
    # sum_n w(n)/n log(1 - p_n)
    total = SymFunc.zero(max_weight)
    for n in range(1, max_weight + 1):
        w = int(weights(n))
        if w:
            total = total + log_one_plus_p(n, max_weight, -1) * Fraction(w, n)
    return total


def com_char(max_weight: int) -> SymFunc:
    power_sums = SymFunc({(n,): Fraction(1, n) for n in range(1, max_weight + 1)}, max_weight)
    return sym_exp(power_sums) - 1 - _low_terms(max_weight)


def ass_char(max_weight: int) -> SymFunc:
    return -_arithmetic_log_sum(totient, max_weight) - _low_terms(max_weight)


def lie_char(max_weight: int) -> SymFunc:
    one_minus_p1 = SymFunc({(): 1, (1,): -1}, max_weight)
    return (one_minus_p1 * _arithmetic_log_sum(mobius, max_weight)
            + h(1, max_weight) - h(2, max_weight))


_BUILDERS: Dict[str, Callable[[int], SymFunc]] = {
    "com": com_char,
    "ass": ass_char,
    "lie": lie_char,
}


def named_char(which: str, max_weight: int) -> SymFunc:
    """
    Characteristic of a named cyclic operad

    Args:
        which: "com", "ass" or "lie"
        max_weight: truncation, at least 3

    Returns:
        Ch(which) exact through ``max_weight``
    """
    key = which.lower()
    if key not in _BUILDERS:
        raise PreconditionError(f"Unknown operad '{which}', expected one of {', '.join(NAMED_OPERADS)}")
    if max_weight < 3:
        raise PreconditionError(f"Named characteristics start at weight 3, got max_weight={max_weight}")
    logger.debug(f"Ch({key}) through weight {max_weight}")
    return _BUILDERS[key](max_weight)
