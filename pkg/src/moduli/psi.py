"""
The Psi series of Euler characteristics of moduli spaces of curves

    alpha_n = 1/n sum_{d|n} phi(d) hbar^(-n/d)
    Psi_n   = sum_k zeta(-k)/(-k) alpha_n^(-k) + (alpha_n + 1/2) log(n hbar^n alpha_n)
              - alpha_n + 1/(n hbar^n) - c(n)/(2n)
    Psi     = sum_n sum_l mu(l)/l Psi_n(hbar^l)

where c(n) is 1 for even n and 0 for odd n. Psi_n vanishes to order
ceil(n/6), so through hbar^N the double sum is cut at n <= 6N and l <= N.
The hbar^(g-1) coefficient of Psi is the sum of the Euler characteristics
of the coarse moduli spaces M_(gamma,nu)/S_nu with 2(gamma-1) + nu = g - 1.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, List, Union

from sympy import divisors
from sympy.functions.combinatorial.numbers import mobius, totient

from ..core.errors import PreconditionError
from ..exactsym.series import QSeries
from ..hlaurent.laurent import HLaurent
from .bernoulli import zeta_neg

logger = logging.getLogger(__name__)


def c_n(n: int) -> int:
    return 1 if n % 2 == 0 else 0


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def alpha_n(n: int) -> QSeries:
    """
    The Laurent polynomial alpha_n (exact)

    Args:
        n: positive integer
    """
    if n < 1:
        raise ValueError(f"alpha_n needs n >= 1, got {n}")
    return QSeries({(-2 * (n // d), 0): Fraction(int(totient(d)), n) for d in divisors(n)})


def beta_n(n: int) -> QSeries:
    """n hbar^n alpha_n - 1, of hbar-order n/2 for even n"""
    return QSeries({(2 * (n - n // d), 0): int(totient(d)) for d in divisors(n) if d > 1})


def _alpha_inverse(n: int, prec2: int) -> QSeries:
    # alpha_n^(-1) = n hbar^n / (1 + beta_n)
    inner = 2 * n
    if prec2 <= inner:
        return QSeries({}, prec2)
    unit = (beta_n(n) + 1).inverse(prec2 - inner)
    return (QSeries.monomial(inner, n) * unit).truncate(prec2)


@lru_cache(maxsize=None)
def psi_n(n: int, N: int) -> QSeries:
    """
    Psi_n, exact through hbar^N

    Args:
        n: positive integer
        N: hbar order

    Returns:
        QSeries with precision hbar^(N+1)
    """
    if n < 1 or N < 0:
        raise ValueError(f"psi_n needs n >= 1 and N >= 0, got n={n}, N={N}")
    prec2 = 2 * N + 2
    alpha = alpha_n(n)
    # alpha has a pole of order n, so the logarithm is needed n orders further
    log_term = beta_n(n).log1p(prec2 + 2 * n)

    result = (alpha + Fraction(1, 2)) * log_term
    result = result - alpha + QSeries.monomial(-2 * n, Fraction(1, n))
    result = result - Fraction(c_n(n), 2 * n)

    inverse = _alpha_inverse(n, prec2)
    power = QSeries.constant(1, prec2)
    for k in range(1, N // n + 1):
        power = (power * inverse).truncate(prec2)
        zeta = zeta_neg(k)
        if zeta:
            result = result + power * (zeta / -k)

    result = result.truncate(prec2)
    low = result.valuation2()
    if low is not None and low < 2 * _ceil_div(n, 6) and result.terms:
        raise PreconditionError(f"Psi_{n} has a term at hbar^({low}/2), below order ceil({n}/6)")
    logger.debug(f"Psi_{n} through hbar^{N}: {len(result.terms)} terms")
    return result


def psi(N: int, n_cut: int = None, ell_cut: int = None) -> QSeries:
    """
    The series Psi through hbar^N

    Args:
        N: hbar order, N >= 1
        n_cut: largest n in the double sum (default 6N)
        ell_cut: largest l in the double sum (default N)

    Returns:
        QSeries with precision hbar^(N+1)
    """
    if N < 1:
        raise ValueError(f"psi needs N >= 1, got {N}")
    n_cut = 6 * N if n_cut is None else n_cut
    ell_cut = N if ell_cut is None else ell_cut
    prec2 = 2 * N + 2
    total = QSeries({}, prec2)
    blocks = 0
    for ell in range(1, ell_cut + 1):
        mu = int(mobius(ell))
        if not mu:
            continue
        order = N // ell
        for n in range(1, n_cut + 1):
            if _ceil_div(n, 6) > order:
                break
            block = psi_n(n, order).subs_hbar_power(ell).truncate(prec2)
            total = total + block * Fraction(mu, ell)
            blocks += 1
    logger.info(f"Psi through hbar^{N}: {blocks} blocks summed (n <= {n_cut}, l <= {ell_cut})")
    return total


def euler_chi_extract(series: Union[QSeries, HLaurent]) -> Dict[int, Fraction]:
    """
    Euler-characteristic sums per genus g from the hbar^(g-1) coefficients

    A QSeries is read as Psi itself. For an HLaurent (the closed form of
    -hbar^(-1) e_2 + CCh(F_Det Ass)) the constant-in-p part is -Psi, so
    its coefficients are negated.

    Args:
        series: Psi as a QSeries, or the closed form as an HLaurent

    Returns:
        Map g -> sum over 2(gamma-1) + nu = g - 1 of e(|M_(gamma,nu)/S_nu|)
    """
    values: Dict[int, Fraction] = {}
    if isinstance(series, QSeries):
        for (exp2, deg), coeff in series.items():
            if deg or exp2 % 2 or exp2 < 2:
                continue
            values[exp2 // 2 + 1] = coeff
        return values
    if isinstance(series, HLaurent):
        for (h2, p, q), coeff in series.items():
            if p or q or h2 % 2 or h2 < 2:
                continue
            values[h2 // 2 + 1] = -coeff
        return values
    raise TypeError(f"Cannot extract Euler characteristics from {type(series).__name__}")


def by_euler_class(values: Dict[int, Fraction]) -> Dict[int, Fraction]:
    """Re-key genus-indexed sums by the Euler class chi = 1 - g"""
    return {1 - g: v for g, v in sorted(values.items())}


# -- the Harer-Zagier series for one puncture --------------------------------


def alpha_n_ell(n: int, ell: int) -> QSeries:
    """
    1/n sum_{d|n} mu(d/(d,l)) phi(n/d) / phi(l/(d,l)) hbar^(-d)
    """
    terms = {}
    for d in divisors(n):
        g = gcd(d, ell)
        mu = int(mobius(d // g))
        if mu:
            terms[(-2 * d, 0)] = Fraction(mu * int(totient(n // d)), n * int(totient(ell // g)))
    return QSeries(terms)


def psi_n_ell(n: int, ell: int, N: int) -> QSeries:
    """
    sum_k zeta(-k) alpha_(n,l)^(-k) + alpha_(n,l) log(n hbar^n alpha_n)
    + 1/(n hbar^n) - alpha_(n,l), exact through hbar^N
    """
    prec2 = 2 * N + 2
    alpha = alpha_n_ell(n, ell)
    depth = -alpha.valuation2()
    result = alpha * beta_n(n).log1p(prec2 + depth) + QSeries.monomial(-2 * n, Fraction(1, n)) - alpha
    if prec2 > depth:
        inverse = alpha.inverse(prec2)
        power = QSeries.constant(1, prec2)
        for k in range(1, prec2 // depth + 1):
            power = (power * inverse).truncate(prec2)
            zeta = zeta_neg(k)
            if zeta:
                result = result + power * zeta
    return result.truncate(prec2)


@dataclass
class HarerZagierReport:
    """The one-puncture series with its structural violations"""
    order: int
    series: QSeries
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def coefficient(self, k: int) -> Fraction:
        return self.series.hbar_coefficient(k)


def harer_zagier_b(N: int, n_cut: int = None, ell_cut: int = None) -> HarerZagierReport:
    """
    sum_n phi(n)/n sum_l mu(l) Psi_(n,l), cut at n <= 6N and l <= N

    The series should carry only odd powers hbar^(2 gamma - 1) with
    integer coefficients. Terms breaking that shape are collected in the
    report and logged as warnings rather than corrected.

    Args:
        N: hbar order
        n_cut: largest n (default 6N)
        ell_cut: largest l (default N)
    """
    if N < 1:
        raise ValueError(f"harer_zagier_b needs N >= 1, got {N}")
    n_cut = 6 * N if n_cut is None else n_cut
    ell_cut = N if ell_cut is None else ell_cut
    logger.warning("The one-puncture series uses Psi_(n,l) as printed; its normalization "
                   "differs from Psi_n and the l-sum is truncated")
    total = QSeries({}, 2 * N + 2)
    for n in range(1, n_cut + 1):
        weight = Fraction(int(totient(n)), n)
        for ell in range(1, ell_cut + 1):
            mu = int(mobius(ell))
            if mu:
                total = total + psi_n_ell(n, ell, N) * (weight * mu)

    violations = []
    for (exp2, _), coeff in total.items():
        if exp2 % 2:
            violations.append(f"half-integer power hbar^({exp2}/2) with coefficient {coeff}")
        elif exp2 < 0 or (exp2 // 2) % 2 == 0:
            violations.append(f"even or negative power hbar^{exp2 // 2} with coefficient {coeff}")
        elif coeff.denominator != 1:
            violations.append(f"non-integer coefficient {coeff} at hbar^{exp2 // 2}")
    for message in violations:
        logger.warning(f"One-puncture series: {message}")
    return HarerZagierReport(N, total, violations)
