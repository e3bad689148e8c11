"""
Formal Gaussian functional integrals over the power sums

Two measures on the variables p_1, p_2, ...:

    nu: independent centred Gaussians, p_n with variance n*hbar^n
    mu: nu translated by the mean hbar^(n/2) on every even n, normalized

The moments are single monomials, E[p_n^m] = c * hbar^(nm/2), so an
integral is a term-by-term replacement of p-monomials. Integration keeps
the weight of every term, which makes the output finite on any window of
bounded weight and q-weight.
"""
import logging
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple, Union

from sympy import binomial, factorial2

from ..core.errors import PreconditionError, TruncationError
from ..exactsym.partitions import EMPTY, Partition, multiplicities
from ..exactsym.series import QSeries
from .laurent import HLaurent, Terms, TruncationSpec, pleth_exp, pleth_log

logger = logging.getLogger(__name__)


class Measure(str, Enum):
    MU = "mu"
    NU = "nu"


def _double_factorial(k: int) -> int:
    # (-1)!! = 1
    return 1 if k <= 0 else int(factorial2(k))


@lru_cache(maxsize=None)
def moment_coefficient(n: int, m: int, measure: Union[Measure, str] = Measure.MU) -> Fraction:
    """
    The rational c with E[p_n^m] = c * hbar^(nm/2)

    Args:
        n: index of the power sum
        m: exponent
        measure: "mu" or "nu"
    """
    if n < 1 or m < 0:
        raise ValueError(f"Moments need n >= 1 and m >= 0, got n={n}, m={m}")
    measure = Measure(measure)
    if measure is Measure.MU and n % 2 == 0:
        # E[(hbar^(n/2) + X)^m], X centred with variance n*hbar^n
        total = Fraction(0)
        for j in range(0, m + 1, 2):
            total += int(binomial(m, j)) * _double_factorial(j - 1) * Fraction(n) ** (j // 2)
        return total
    if m % 2:
        return Fraction(0)
    return _double_factorial(m - 1) * Fraction(n) ** (m // 2)


def gaussian_moment(n: int, m: int, measure: Union[Measure, str] = Measure.MU) -> QSeries:
    """m-th moment of p_n as a (monomial) series in hbar^(1/2)"""
    c = moment_coefficient(n, m, measure)
    return QSeries({(n * m, 0): c} if c else {}, None)


def monomial_moment(partition: Partition, measure: Union[Measure, str] = Measure.MU) -> Tuple[int, Fraction]:
    """
    Integral of p_lambda: (doubled hbar exponent |lambda|, coefficient)

    The variables are independent under both measures.
    """
    coeff = Fraction(1)
    for n, m in multiplicities(partition).items():
        coeff *= moment_coefficient(n, m, measure)
        if not coeff:
            break
    return sum(partition), coeff


def _output_trunc(F: HLaurent, trunc: TruncationSpec) -> TruncationSpec:
    if trunc.max_weight > F.trunc.max_weight:
        raise TruncationError(
            f"Integrand certified to weight {F.trunc.max_weight}, window asks for {trunc.max_weight}"
        )
    if F.has_q():
        if F.trunc.max_q_weight is None or trunc.max_q_weight is None:
            raise TruncationError("Integrands with q-variables need a q-weight bound on both sides")
        if trunc.max_q_weight > F.trunc.max_q_weight:
            raise TruncationError(
                f"Integrand certified to q-weight {F.trunc.max_q_weight}, "
                f"window asks for {trunc.max_q_weight}"
            )
    # weight >= 0 and |q| <= K put every output exponent at or above hbar^(-K/2)
    floor = min(trunc.hexp_min_x2, -(trunc.max_q_weight or 0))
    return trunc.with_floor(floor)


def functional_integral(F: HLaurent, measure: Union[Measure, str], trunc: TruncationSpec) -> HLaurent:
    """
    Integrate the p-variables of F against a Gaussian measure

    Every term hbar^h p_lambda q_nu becomes E[p_lambda] hbar^h q_nu at the same
    weight. Terms of negative weight are rejected: on an infinite integrand
    they could feed any window. With weight >= 0 everywhere, the output at
    weight <= W and q-weight <= K only uses terms of F in the same window,
    so F must be certified there.

    Args:
        F: integrand in p and q
        measure: "mu" or "nu"
        trunc: output window (weight bound, q-weight bound, optional hexp_max)

    Returns:
        A series in hbar and q only
    """
    measure = Measure(measure)
    negative = [key for key in F.terms if key[0] + sum(key[1]) + sum(key[2]) < 0]
    if negative:
        h2, p, q = negative[0]
        raise PreconditionError(
            f"Integrand has a term of negative weight (hbar^({h2}/2), p={list(p)}, q={list(q)}); "
            "no finite contribution bound exists"
        )
    out_trunc = _output_trunc(F, trunc)
    out: Terms = {}
    for (h2, p, q), c in F.terms.items():
        shift, moment = monomial_moment(p, measure)
        if not moment:
            continue
        key = (h2 + shift, EMPTY, q)
        if out_trunc.admits(key):
            out[key] = out.get(key, Fraction(0)) + c * moment
    logger.debug(f"Integrated {len(F.terms)} terms against d{measure.value} into {len(out)} terms")
    return HLaurent({k: v for k, v in out.items() if v}, out_trunc).window()


def log_functional_integral(exponent: HLaurent, measure: Union[Measure, str],
                            trunc: TruncationSpec) -> HLaurent:
    """
    Log of the integral of Exp(exponent)

    Args:
        exponent: element of F^1 in p and q, e.g. hbar^-1 p_1 q_1 + CCh(V)
        measure: "mu" or "nu"
        trunc: output window

    Returns:
        Log of the integral, a series in hbar and q
    """
    integrand = pleth_exp(exponent)
    integral = functional_integral(integrand, measure, trunc.model_copy(update={"hexp_max_x2": None}))
    return pleth_log(integral).window()


def coupling_term(trunc: TruncationSpec, sign: int = 1) -> HLaurent:
    """sign * hbar^-1 p_1 q_1"""
    return HLaurent({(-2, (1,), (1,)): sign}, trunc.with_floor(min(trunc.hexp_min_x2, -2)))


def wick_exponent(cch_v: HLaurent, q_weight: int, sign: int = 1) -> HLaurent:
    """sign * hbar^-1 p_1 q_1 + CCh(V) on a window carrying q-weight ``q_weight``"""
    trunc = cch_v.trunc.model_copy(update={"max_q_weight": q_weight, "hexp_max_x2": None})
    lifted = HLaurent(dict(cch_v.terms), trunc)
    return coupling_term(trunc, sign) + lifted


def h2_over_hbar(max_weight: int) -> HLaurent:
    """hbar^-1 h_2 = hbar^-1 (p_1^2 + p_2)/2"""
    trunc = TruncationSpec(max_weight=max_weight, hexp_min_x2=-2)
    return HLaurent({(-2, (1, 1), EMPTY): Fraction(1, 2), (-2, (2,), EMPTY): Fraction(1, 2)}, trunc)


def e2_over_hbar(max_weight: int) -> HLaurent:
    """hbar^-1 e_2 = hbar^-1 (p_1^2 - p_2)/2"""
    trunc = TruncationSpec(max_weight=max_weight, hexp_min_x2=-2)
    return HLaurent({(-2, (1, 1), EMPTY): Fraction(1, 2), (-2, (2,), EMPTY): Fraction(-1, 2)}, trunc)


def wick_side(cch_v: HLaurent, measure: Union[Measure, str] = Measure.MU, sign: int = 1) -> HLaurent:
    """
    The integral side of the Wick formula, read back as a series in p

    sign=+1: Log int Exp(hbar^-1 p_1 q_1 + CCh V) d mu - hbar^-1 h_2
    sign=-1: -Log int Exp(-hbar^-1 p_1 q_1 - omega~ CCh V) d mu + hbar^-1 e_2

    For a table with floor hbar^-1 the q-weight bound W + 2 certifies every
    output term of weight <= W.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    W = cch_v.trunc.max_weight
    K = W + 2
    source = cch_v if sign == 1 else -cch_v.omega_tilde()
    exponent = wick_exponent(source, K, sign)
    out_trunc = exponent.trunc
    logged = log_functional_integral(exponent, measure, out_trunc)
    as_p = logged.rename_q_to_p()
    if sign == 1:
        return as_p - h2_over_hbar(W)
    return -as_p + e2_over_hbar(W)


def moment_table(max_n: int, max_m: int, measure: Union[Measure, str] = Measure.MU) -> Dict[Tuple[int, int], Fraction]:
    return {(n, m): moment_coefficient(n, m, measure)
            for n in range(1, max_n + 1) for m in range(max_m + 1)}
