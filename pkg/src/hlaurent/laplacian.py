"""
The hbar-Laplacian and the adjoint operators D(f) over hbar-Laurent series

Delta = sum_n hbar^n (n/2 d^2/dp_n^2 + d/dp_2n) inserts one edge into a graph
sum. It preserves weight and strictly lowers the p-degree, so exp(+-Delta)
applied to a truncated series is a finite sum.
"""
import logging
from collections import Counter
from fractions import Fraction
from math import factorial

from ..exactsym.partitions import Partition
from .laurent import HLaurent, Terms, TruncationSpec, _result

logger = logging.getLogger(__name__)


def _remove(partition: Partition, part: int, times: int) -> Partition:
    parts = list(partition)
    for _ in range(times):
        parts.remove(part)
    return tuple(parts)


def _delta_terms(terms: Terms, sign: int, admits) -> Terms:
    out: Terms = {}
    for (h2, p, q), c in terms.items():
        for n, m in Counter(p).items():
            if m >= 2:
                # hbar^n (n/2) d^2/dp_n^2
                key = (h2 + 2 * n, _remove(p, n, 2), q)
                if admits(key):
                    out[key] = out.get(key, Fraction(0)) + sign * c * Fraction(n * m * (m - 1), 2)
            if n % 2 == 0:
                # hbar^(n/2) d/dp_n for the even part n = 2k
                key = (h2 + n, _remove(p, n, 1), q)
                if admits(key):
                    out[key] = out.get(key, Fraction(0)) + sign * c * m
    return {k: v for k, v in out.items() if v}


def laplacian(f: HLaurent, sign: int = 1, exponentiate: bool = False) -> HLaurent:
    """
    Apply sign*Delta, or exp(sign*Delta), to f

    Args:
        f: series (q-variables are constants for Delta)
        sign: +1 or -1
        exponentiate: compute sum_k (sign*Delta)^k f / k! instead of one step

    Returns:
        The exact result on the truncation of f
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    admits = f.trunc.admits
    current: Terms = dict(f.terms)
    if not exponentiate:
        return _result(_delta_terms(current, sign, admits), f.trunc)

    total: Terms = dict(current)
    k = 0
    while current:
        k += 1
        current = _delta_terms(current, sign, admits)
        for key, v in current.items():
            total[key] = total.get(key, Fraction(0)) + v / factorial(k)
    logger.debug(f"exp({sign:+d} Delta) summed {k} nonzero powers")
    return _result({key: v for key, v in total.items() if v}, f.trunc)


def adjoint_apply_h(f: HLaurent, g: HLaurent) -> HLaurent:
    """
    D(f) g, where D substitutes n d/dp_n for p_n and hbar acts as a scalar

    A term hbar^k p_lambda of f shifts weight by 2k - |lambda|; the result is
    certified through ``g.max_weight`` minus the largest |lambda| - 2k.
    """
    if f.has_q():
        raise ValueError("D(f) is defined for f without q-variables")
    loss = max([0] + [sum(p) - h2 for (h2, p, _) in f.terms])
    trunc: TruncationSpec = g.trunc.model_copy(
        update={"max_weight": max(g.trunc.max_weight - loss, 0)})
    out: Terms = {}
    for (fh2, lam, _), fc in f.terms.items():
        current = {key: v for key, v in g.terms.items()}
        for n in lam:
            step: Terms = {}
            for (h2, p, q), c in current.items():
                m = p.count(n)
                if not m:
                    continue
                key = (h2, _remove(p, n, 1), q)
                step[key] = step.get(key, Fraction(0)) + c * m * n
            current = step
            if not current:
                break
        for (h2, p, q), c in current.items():
            key = (h2 + fh2, p, q)
            if trunc.admits(key):
                out[key] = out.get(key, Fraction(0)) + fc * c
    return _result({k: v for k, v in out.items() if v}, trunc)
