"""
Bernoulli numbers and zeta values at negative integers
"""
import logging
from fractions import Fraction
from typing import List

from sympy import binomial

logger = logging.getLogger(__name__)


class BernoulliCache:
    """
    Memoized exact Bernoulli numbers, B_1 = -1/2

    B_r = -1/(r+1) * sum_{m<r} C(r+1, m) B_m
    """

    def __init__(self):
        self.logger = logging.getLogger(__name__)
        self._values: List[Fraction] = [Fraction(1), Fraction(-1, 2)]

    def __len__(self):
        return len(self._values)

    def get(self, k: int) -> Fraction:
        """
        The Bernoulli number B_k

        Args:
            k: index, k >= 0

        Returns:
            B_k as an exact rational
        """
        if k < 0:
            raise ValueError(f"Bernoulli numbers need k >= 0, got {k}")
        while len(self._values) <= k:
            r = len(self._values)
            if r % 2:
                self._values.append(Fraction(0))
                continue
            total = sum(int(binomial(r + 1, m)) * b for m, b in enumerate(self._values))
            self._values.append(-total / (r + 1))
        return self._values[k]

    __getitem__ = get


_CACHE = BernoulliCache()


def bernoulli(k: int) -> Fraction:
    return _CACHE.get(k)


def zeta_neg(k: int) -> Fraction:
    """
    zeta(-k) = -B_(k+1)/(k+1) for k >= 1

    Args:
        k: positive integer
    """
    if k < 1:
        raise ValueError(f"zeta(-k) is provided for k >= 1, got {k}")
    return -bernoulli(k + 1) / (k + 1)
