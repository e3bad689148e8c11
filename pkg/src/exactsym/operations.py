"""
Operations on truncated symmetric functions

Plethysm, partial derivatives in the power sums, the Hall inner product and
its adjoints, the involutions omega and omega-tilde, the rank homomorphism
and the Frobenius characteristic of symmetric-group characters. Every
operation states the truncation bound of its output.
"""
import logging
from fractions import Fraction
from typing import Dict, Tuple

from ..core.errors import PreconditionError, TruncationError
from ..core.series import graded_exp, graded_log
from .character import VirtualCharacter
from .partitions import Partition, partitions_of, scale, sign, z_lambda
from .series import PolySeries1
from .symfunc import SymFunc

logger = logging.getLogger(__name__)


def plethysm(f: SymFunc, g: SymFunc) -> SymFunc:
    """
    Plethystic composition f o g

    Args:
        f: outer symmetric function
        g: inner symmetric function without constant term

    Returns:
        f o g truncated at min(f.max_weight, g.max_weight)
    """
    if g.constant_term:
        raise PreconditionError("Plethysm needs an inner function without constant term")
    bound = min(f.max_weight, g.max_weight)
    g = g.truncate(bound)

    pn_g: Dict[int, SymFunc] = {}
    powers: Dict[Tuple[int, int], SymFunc] = {}

    def p_n_of_g(n: int) -> SymFunc:
        if n not in pn_g:
            pn_g[n] = SymFunc({scale(k, n): v for k, v in g.terms.items()}, bound)
        return pn_g[n]

    def power(n: int, k: int) -> SymFunc:
        if (n, k) not in powers:
            powers[(n, k)] = p_n_of_g(n) if k == 1 else power(n, k - 1) * p_n_of_g(n)
        return powers[(n, k)]

    result = SymFunc.zero(bound)
    for partition, coeff in f.terms.items():
        if sum(partition) > bound:
            continue
        term = SymFunc.constant(coeff, bound)
        counts: Dict[int, int] = {}
        for part in partition:
            counts[part] = counts.get(part, 0) + 1
        for part, k in counts.items():
            term = term * power(part, k)
            if term.is_zero():
                break
        result = result + term
    return result


def pderiv(f: SymFunc, n: int) -> SymFunc:
    """
    Partial derivative with respect to p_n

    The result is exact through weight ``f.max_weight - n``.
    """
    if n < 1:
        raise ValueError(f"p_n needs n >= 1, got {n}")
    terms: Dict[Partition, Fraction] = {}
    for partition, coeff in f.terms.items():
        k = partition.count(n)
        if not k:
            continue
        reduced = list(partition)
        reduced.remove(n)
        key = tuple(reduced)
        terms[key] = terms.get(key, Fraction(0)) + coeff * k
    return SymFunc(terms, max(f.max_weight - n, 0))


def times_p(f: SymFunc, n: int) -> SymFunc:
    """Multiply by p_n; exact through min(max_weight, top certified weight + n)"""
    terms = {tuple(sorted(k + (n,), reverse=True)): v for k, v in f.terms.items()}
    return SymFunc(terms, f.max_weight)


def inner_product(f: SymFunc, g: SymFunc) -> Fraction:
    """Hall inner product: <p_lambda, p_mu> = delta * z_lambda"""
    total = Fraction(0)
    small, large = (f, g) if len(f.terms) <= len(g.terms) else (g, f)
    for partition, coeff in small.terms.items():
        other = large.terms.get(partition)
        if other:
            total += coeff * other * z_lambda(partition)
    return total


def _apply_derivations(terms: Dict[Partition, Fraction], partition: Partition) -> Dict[Partition, Fraction]:
    # prod over parts n of (n d/dp_n)
    current = dict(terms)
    for n in partition:
        nxt: Dict[Partition, Fraction] = {}
        for key, coeff in current.items():
            k = key.count(n)
            if not k:
                continue
            reduced = list(key)
            reduced.remove(n)
            reduced = tuple(reduced)
            nxt[reduced] = nxt.get(reduced, Fraction(0)) + coeff * k * n
        current = nxt
        if not current:
            break
    return current


def adjoint_apply(f: SymFunc, g: SymFunc) -> SymFunc:
    """
    Apply D(f), the adjoint of multiplication by f, to g

    D(f) substitutes n * d/dp_n for p_n. A term p_lambda of f lowers the
    certified weight of g by |lambda|, so the result is exact through
    ``g.max_weight - (top weight of f)``.
    """
    top = f.top_weight()
    if top is None:
        return SymFunc.zero(g.max_weight)
    if top > g.max_weight:
        raise TruncationError(
            f"D(f) with terms of weight {top} needs g certified beyond weight {g.max_weight}"
        )
    bound = g.max_weight - top
    result: Dict[Partition, Fraction] = {}
    for partition, coeff in f.terms.items():
        for key, value in _apply_derivations(dict(g.terms), partition).items():
            result[key] = result.get(key, Fraction(0)) + coeff * value
    return SymFunc(result, bound)


def involution(f: SymFunc, which: str) -> SymFunc:
    """
    omega: p_n -> (-1)^(n-1) p_n;  omega_tilde: p_n -> -p_n
    """
    if which == "omega":
        return SymFunc({k: v * sign(k) for k, v in f.terms.items()}, f.max_weight)
    if which in ("omega_tilde", "omega~"):
        return SymFunc({k: v * (-1) ** len(k) for k, v in f.terms.items()}, f.max_weight)
    raise PreconditionError(f"Unknown involution: {which}")


def rank(f: SymFunc) -> PolySeries1:
    """Rank homomorphism p_1 -> x, p_n -> 0 (n > 1)"""
    coeffs = {len(k): v for k, v in f.terms.items() if all(part == 1 for part in k)}
    return PolySeries1(coeffs, f.max_weight, "x")


def characteristic(chi: VirtualCharacter, max_weight: int = None) -> SymFunc:
    """
    Frobenius characteristic sum_tau Tr(tau)/z_tau p_tau

    Args:
        chi: virtual character of S_n
        max_weight: truncation of the result, at least n (defaults to n)
    """
    bound = chi.n if max_weight is None else max_weight
    if bound < chi.n:
        raise TruncationError(f"Characteristic of S_{chi.n} does not fit weight {bound}")
    return SymFunc({tau: value / z_lambda(tau) for tau, value in chi.values.items()}, bound)


def character_of(f: SymFunc, n: int) -> VirtualCharacter:
    """Inverse of ``characteristic`` on the weight-n part: Tr(tau) = <f, p_tau>"""
    if n > f.max_weight:
        raise TruncationError(f"Weight {n} is beyond the truncation {f.max_weight}")
    return VirtualCharacter(n, {tau: f.coefficient(tau) * z_lambda(tau) for tau in partitions_of(n)})


def sym_exp(f: SymFunc) -> SymFunc:
    """Ordinary exponential of a function without constant term"""
    if f.constant_term:
        raise PreconditionError("exp needs an argument without constant term")
    pieces = graded_exp(f.homogeneous_parts(), SymFunc.one(f.max_weight),
                        SymFunc.zero(f.max_weight), f.max_weight, lambda a, b: a * b)
    return sum(pieces.values(), SymFunc.zero(f.max_weight))


def sym_log(F: SymFunc) -> SymFunc:
    """Ordinary logarithm of a function with constant term 1"""
    if F.constant_term != 1:
        raise PreconditionError("log needs an argument with constant term 1")
    rest = {w: part for w, part in F.homogeneous_parts().items() if w > 0}
    pieces = graded_log(rest, SymFunc.zero(F.max_weight), F.max_weight, lambda a, b: a * b)
    return sum(pieces.values(), SymFunc.zero(F.max_weight))


def log_one_plus_p(n: int, max_weight: int, sign_of_p: int = 1) -> SymFunc:
    """log(1 + s*p_n) truncated at ``max_weight`` (s = +1 or -1)"""
    terms = {}
    for k in range(1, max_weight // n + 1):
        terms[(n,) * k] = Fraction((-1) ** (k + 1) * sign_of_p ** k, k)
    return SymFunc(terms, max_weight)
