"""
Formal Gaussian integrals in one variable and the separated-variables route
to CCh(F_Det Ass)

The one-variable integral

    log int# exp(hbar^-1 (x xi - f(x))) dx / sqrt(2 pi hbar)
        = hbar^-1 (xi^2/2 + sum F_(g,n) hbar^g xi^n / n!)

of f = x^2/2 + sum f_(g,n) hbar^g x^n / n! is evaluated either from the
Gaussian moments or by the Wick sum over stable graphs. Series in x, xi and
q_n are QSeries with an auxiliary variable; the weight of hbar^g y^n is
2(g - 1) + n.
"""
import logging
from fractions import Fraction
from math import factorial
from typing import Dict, Optional, Tuple

from sympy import binomial, divisors
from sympy.functions.combinatorial.numbers import mobius, totient

from ..core.errors import PreconditionError, TruncationError
from ..exactsym.partitions import EMPTY
from ..exactsym.series import QSeries
from ..graphzoo.oracles import wick_rank_sum
from ..hlaurent.gaussian import Measure, e2_over_hbar, functional_integral, wick_side
from ..hlaurent.laurent import HLaurent, TruncationSpec, ordinary_exp, ordinary_log
from ..opchar.named import named_char
from .bernoulli import zeta_neg
from .psi import alpha_n, psi, psi_n

logger = logging.getLogger(__name__)

ROUTES = ("moments", "wick")


def _weight(exp2: int, deg: int) -> int:
    # doubled hbar exponent 2g, degree n -> 2(g-1) + n
    return exp2 - 2 + deg


def _potential(f: QSeries) -> Dict[Tuple[int, int], Fraction]:
    """The terms of f other than x^2/2, validated"""
    if f.aux is None:
        raise PreconditionError("The integrand needs an auxiliary variable x")
    if f.terms.get((0, 2)) != Fraction(1, 2):
        raise PreconditionError("The integrand must start with x^2/2 (coefficient of x^2 at hbar^0)")
    rest = {}
    for (exp2, deg), coeff in f.terms.items():
        if (exp2, deg) == (0, 2):
            continue
        if _weight(exp2, deg) <= 0:
            raise PreconditionError(
                f"Term hbar^({exp2}/2) x^{deg} has 2(g-1)+n <= 0; only x^2/2 may appear there")
        rest[(exp2, deg)] = coeff
    return rest


def _bracket(terms: Dict[Tuple[int, int], Fraction], max_weight: int, xi_max: int) -> QSeries:
    kept = {key: v for key, v in terms.items() if _weight(*key) <= max_weight}
    kept[(0, 2)] = kept.get((0, 2), Fraction(0)) + Fraction(1, 2)
    return QSeries(kept, None, "xi", xi_max)


def _moments_route(potential: Dict[Tuple[int, int], Fraction], max_weight: int, xi_max: int) -> QSeries:
    # shift x -> y + xi: the integral is exp(xi^2/2hbar) E_nu[exp(-hbar^-1 V(y + xi))]
    trunc = TruncationSpec(max_weight=max_weight, hexp_min_x2=-2, max_q_weight=xi_max)
    exponent: Dict = {}
    for (exp2, n), coeff in potential.items():
        for j in range(n + 1):
            key = (exp2 - 2, (1,) * j, (1,) * (n - j))
            exponent[key] = exponent.get(key, Fraction(0)) - coeff * int(binomial(n, j))
    X = HLaurent(exponent, trunc)
    integrand = ordinary_exp(X)
    integral = functional_integral(integrand, Measure.NU, integrand.trunc)
    logged = ordinary_log(integral)
    bracket = {(h2 + 2, len(q)): v for (h2, _, q), v in logged.terms.items()}
    return _bracket(bracket, max_weight, xi_max)


def _wick_route(potential: Dict[Tuple[int, int], Fraction], max_weight: int, xi_max: int) -> QSeries:
    weights = {}
    for (exp2, n), coeff in potential.items():
        if exp2 % 2:
            raise PreconditionError("The Wick route needs integer powers of hbar")
        # exponent is -hbar^-1 f, so vertices carry -f_(g,n)
        weights[(exp2 // 2, n)] = -coeff * factorial(n)
    terms = {}
    for n in range(0, xi_max + 1):
        for g in range(0, (max_weight - n) // 2 + 2):
            if 2 * (g - 1) + n <= 0 or 2 * (g - 1) + n > max_weight:
                continue
            value = wick_rank_sum(g, n, weights)
            if value:
                terms[(2 * g, n)] = value / factorial(n)
    return _bracket(terms, max_weight, xi_max)


def formal_integral_1v(f: QSeries, route: str = "moments", max_weight: int = 4,
                       xi_max: Optional[int] = None) -> QSeries:
    """
    The bracket xi^2/2 + sum F_(g,n) hbar^g xi^n/n! of the formal integral

    Args:
        f: x^2/2 + sum f_(g,n) hbar^g x^n/n! as a QSeries in the auxiliary x
        route: "moments" or "wick"
        max_weight: terms with 2(g-1) + n <= max_weight are computed
        xi_max: largest xi-degree kept (default max_weight + 2)

    Returns:
        QSeries in the auxiliary variable xi
    """
    if route not in ROUTES:
        raise PreconditionError(f"Unknown route '{route}', expected one of {ROUTES}")
    xi_max = max_weight + 2 if xi_max is None else xi_max
    potential = {k: v for k, v in _potential(f).items() if _weight(*k) <= max_weight}
    logger.info(f"Formal integral by {route}: {len(potential)} potential terms, "
                f"weight <= {max_weight}, xi-degree <= {xi_max}")
    if route == "moments":
        return _moments_route(potential, max_weight, xi_max)
    return _wick_route(potential, max_weight, xi_max)


def coefficients(bracket: QSeries) -> Dict[Tuple[int, int], Fraction]:
    """F_(g,n) read off a bracket: (2g, n) -> coefficient times n!"""
    return {(exp2, n): v * factorial(n) for (exp2, n), v in bracket.items() if (exp2, n) != (0, 2)}


# -- Stirling -----------------------------------------------------------------


def stirling_integrand(max_degree: int) -> QSeries:
    """f = -x - log(1 - x) = x^2/2 + sum_(n>=3) x^n/n"""
    return QSeries({(0, n): Fraction(1, n) for n in range(2, max_degree + 1)}, None, "x")


def stirling_check(N: int = 10, xi_max: int = 3) -> Tuple[QSeries, QSeries]:
    """
    Both sides of the Stirling identity

        log int# exp(hbar^-1 (x xi + x + log(1 - x))) dx/sqrt(2 pi hbar)
            = hbar^-1 (xi - log(1+xi) - hbar log(1+xi) + sum_(g>=2) zeta(1-g)/(1-g) hbar^g)

    Args:
        N: hbar order of the constant part, at most 10
        xi_max: largest xi-degree compared

    Returns:
        (left bracket from the moments route, right bracket), on the same window
    """
    if not 1 <= N <= 10:
        raise PreconditionError(f"stirling_check supports 1 <= N <= 10, got {N}")
    max_weight = 2 * N - 2
    lhs = formal_integral_1v(stirling_integrand(max_weight + 2), "moments", max_weight, xi_max)

    right: Dict[Tuple[int, int], Fraction] = {}
    for k in range(1, xi_max + 1):
        log_coeff = Fraction((-1) ** (k + 1), k)
        right[(0, k)] = right.get((0, k), Fraction(0)) - log_coeff
        right[(2, k)] = -log_coeff
    right[(0, 1)] = right.get((0, 1), Fraction(0)) + 1
    for g in range(2, N + 1):
        right[(2 * g, 0)] = zeta_neg(g - 1) / (1 - g)
    rhs = QSeries({k: v for k, v in right.items() if _weight(*k) <= max_weight}, None, "xi", xi_max)
    return lhs, rhs


# -- I_n and CCh(F_Det Ass) -----------------------------------------------------


def _i_n_closed(n: int, q_max: int, N: int) -> QSeries:
    prec2 = 2 * N + 2
    pole = QSeries.monomial(-2 * n, Fraction(1, n), 1, None, "q", q_max)
    log_part = (alpha_n(n) + 1) * QSeries.log1p_aux("q", q_max)
    return (pole - log_part + psi_n(n, N)).truncate(prec2)


def _i_n_integrand(n: int, trunc: TruncationSpec) -> HLaurent:
    # r = -p_n under d mu; t = 1/(n hbar^n), t(1 + beta_n) = alpha_n
    r = (n,)
    terms: Dict = {(-2 * n, r, r): Fraction(-1, n)}
    top = (trunc.max_weight + 2 * n) // n
    for d in divisors(n):
        phi = int(totient(d))
        h2 = -2 * (n // d)
        if d > 2:
            terms[(h2, r, EMPTY)] = Fraction(phi, n)
        if d > 1:
            terms[(h2, r * 2, EMPTY)] = Fraction(-phi, 2 * n)
        for k in range(3, top + 1):
            terms[(h2, r * k, EMPTY)] = Fraction(-phi * (-1) ** k, n * k)
    return HLaurent(terms, trunc)


def _i_n_integral(n: int, q_max: int, N: int) -> QSeries:
    trunc = TruncationSpec(max_weight=2 * N + n * q_max, hexp_min_x2=-2 * n, max_q_weight=n * q_max)
    integrand = ordinary_exp(_i_n_integrand(n, trunc))
    integral = functional_integral(integrand, Measure.MU, integrand.trunc)
    logged = ordinary_log(integral)
    terms = {(h2, len(q)): v for (h2, _, q), v in logged.terms.items()}
    return QSeries(terms, 2 * N + 2, "q", q_max)


def i_n_series(n: int, q_max: int, N: int, route: str = "closed") -> QSeries:
    """
    I_n(q_n, hbar), exact through hbar^N and q_n-degree q_max

    The "closed" route is q_n/(n hbar^n) - (alpha_n + 1) log(1 + q_n) + Psi_n;
    the "integral" route evaluates the formal integral term by term, its
    constant part computed independently of Psi_n.

    Args:
        n: index of the power sum
        q_max: largest q_n-degree
        N: hbar order
        route: "closed" or "integral"
    """
    if n < 1 or q_max < 0 or N < 0:
        raise PreconditionError(f"i_n_series needs n >= 1, q_max >= 0, N >= 0 (got {n}, {q_max}, {N})")
    if route == "closed":
        return _i_n_closed(n, q_max, N)
    if route == "integral":
        return _i_n_integral(n, q_max, N)
    raise PreconditionError(f"Unknown route '{route}', expected 'closed' or 'integral'")


def _q_window(max_weight: int) -> int:
    # CCh(F_Det Ass) has floor hbar^-1, so |p| <= W + 2 at weight <= W
    return max_weight + 2


def f_det_ass_integral(max_weight: int, route: str = "integral") -> HLaurent:
    """
    CCh(F_Det Ass) = hbar^-1 e_2 - sum_(n,l) mu(l)/l I_n(q_(ln), hbar^l), read in p

    Args:
        max_weight: weight bound W
        route: how each I_n is evaluated, "integral" or "closed"
    """
    if max_weight < 0:
        raise TruncationError("max_weight must be non-negative")
    K = _q_window(max_weight)
    n_top = max(K, 6 * (max_weight // 2))
    collected: Dict = {}
    blocks = 0
    for ell in range(1, max(K, max_weight // 2) + 1):
        mu = int(mobius(ell))
        if not mu:
            continue
        for n in range(1, n_top + 1):
            q_max = K // (ell * n)
            N = max_weight // (2 * ell)
            if not q_max and -(-n // 6) > N:
                continue
            series = i_n_series(n, q_max, N, route)
            blocks += 1
            for (exp2, b), v in series.items():
                h2 = exp2 * ell
                q = (ell * n,) * b
                if h2 + sum(q) > max_weight or sum(q) > K:
                    continue
                key = (h2, EMPTY, q)
                collected[key] = collected.get(key, Fraction(0)) - v * Fraction(mu, ell)
    collected = {k: v for k, v in collected.items() if v}
    floor = min([-2] + [k[0] for k in collected])
    trunc = TruncationSpec(max_weight=max_weight, hexp_min_x2=floor, max_q_weight=K)
    logger.info(f"Assembled {blocks} I_n blocks ({route}) through weight {max_weight}")
    assembled = HLaurent(collected, trunc).rename_q_to_p()
    return assembled + e2_over_hbar(max_weight)


def f_det_ass_closed(max_weight: int) -> HLaurent:
    """
    -hbar^-1 e_2 + CCh(F_Det Ass)
        = -hbar^-1 p_1 + (hbar^-1 + 1) sum phi(n)/n log(1 + p_n) - Psi(hbar)

    Args:
        max_weight: weight bound W
    """
    trunc = TruncationSpec(max_weight=max_weight, hexp_min_x2=-2)
    terms: Dict = {(-2, (1,), EMPTY): Fraction(-1)}
    for n in range(1, max_weight + 3):
        weight = Fraction(int(totient(n)), n)
        for k in range(1, (max_weight + 2) // n + 1):
            coeff = weight * Fraction((-1) ** (k + 1), k)
            p = (n,) * k
            for h2 in (-2, 0):
                key = (h2, p, EMPTY)
                terms[key] = terms.get(key, Fraction(0)) + coeff
    if max_weight >= 2:
        for (exp2, _), v in psi(max_weight // 2).items():
            terms[(exp2, EMPTY, EMPTY)] = -v
    return HLaurent(terms, trunc)


def f_det_ass_char(max_weight: int) -> HLaurent:
    """CCh(F_Det Ass) from the closed form"""
    return f_det_ass_closed(max_weight) + e2_over_hbar(max_weight)


def f_det_ass_functional(max_weight: int) -> HLaurent:
    """
    CCh(F_Det Ass) = -Log int Exp(-hbar^-1 p_1 q_1 - omega~ CCh(Ass)) d mu + hbar^-1 e_2
    """
    trunc = TruncationSpec(max_weight=max_weight, hexp_min_x2=-2)
    cch_ass = HLaurent.from_symfunc(named_char("ass", max(max_weight + 2, 3)), trunc, h2=-2)
    return wick_side(cch_ass, Measure.MU, sign=-1)
