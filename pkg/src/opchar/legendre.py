"""
Plethystic and classical Legendre transforms

For f in the admissible set (no terms of weight 0 or 1, nonzero coefficient
of x^2/2 in rk f) the transform is the unique g with

    g o (df/dp_1) + f = p_1 * df/dp_1

computed as g = (p_1 df/dp_1 - f) o v where v is the plethystic inverse of
df/dp_1. The same algorithm over one-variable series gives the classical
transform, and rk carries one to the other.
"""
import logging
from fractions import Fraction
from typing import Union

from ..core.errors import PreconditionError
from ..exactsym.operations import involution, pderiv, plethysm, rank
from ..exactsym.series import PolySeries1
from ..exactsym.symfunc import SymFunc, h

logger = logging.getLogger(__name__)


class StarSymFunc:
    """
    A symmetric function admitted by the Legendre transform

    The weight-2 part is kept as a*h_2 + b*e_2; admission asks for no terms
    of weight below 2 and a + b != 0 (the coefficient of x^2/2 in rk f).
    """

    __slots__ = ("f", "h2_coefficient", "e2_coefficient")

    def __init__(self, f: SymFunc):
        low = [k for k in f.terms if sum(k) < 2]
        if low:
            raise PreconditionError(
                f"Legendre transform needs no terms of weight 0 or 1, found p{list(low[0])}"
            )
        if f.max_weight < 2:
            raise PreconditionError("Legendre transform needs a truncation of weight at least 2")
        c11 = f.coefficient((1, 1))
        c2 = f.coefficient((2,))
        self.f = f
        self.h2_coefficient = c11 + c2
        self.e2_coefficient = c11 - c2
        if not self.a2:
            raise PreconditionError("The coefficient a_2 of x^2/2 in rk(f) vanishes")

    @property
    def a2(self) -> Fraction:
        return self.h2_coefficient + self.e2_coefficient

    @property
    def max_weight(self) -> int:
        return self.f.max_weight

    def __eq__(self, other):
        if isinstance(other, StarSymFunc):
            return self.f == other.f
        if isinstance(other, SymFunc):
            return self.f == other
        return NotImplemented

    def __hash__(self):
        return hash(self.f)

    def __repr__(self):
        return (f"StarSymFunc({self.h2_coefficient}*h_2 + {self.e2_coefficient}*e_2 + ...; "
                f"W={self.max_weight})")


def _as_star(f: Union[SymFunc, StarSymFunc]) -> StarSymFunc:
    return f if isinstance(f, StarSymFunc) else StarSymFunc(f)


def _lift(f: SymFunc, max_weight: int) -> SymFunc:
    # Re-declare the bound; valid where the caller only reads weights the input certifies
    return SymFunc(dict(f.terms), max_weight)


def plethystic_inverse(u: SymFunc) -> SymFunc:
    """
    The v with u o v = v o u = p_1

    Args:
        u: c*p_1 + (terms of weight >= 2), c != 0

    Returns:
        v on the truncation of u, solved weight by weight
    """
    W = u.max_weight
    if u.constant_term:
        raise PreconditionError("Plethystic inverse needs a series without constant term")
    c = u.coefficient((1,))
    if not c:
        raise PreconditionError("Plethystic inverse needs a nonzero coefficient of p_1")
    rest = u - SymFunc({(1,): c}, W)
    v = SymFunc({(1,): 1 / c}, W)
    for d in range(2, W + 1):
        # weight-d part of u o v is c*v_d + (rest o v_{<d})_d
        defect = plethysm(rest, v).homogeneous(d)
        v = v - defect / c
    return v


def compositional_inverse(u: PolySeries1) -> PolySeries1:
    """The series v with u(v(x)) = v(u(x)) = x, for u = c x + O(x^2), c != 0"""
    D = u.max_degree
    if u.coefficient(0):
        raise PreconditionError("Compositional inverse needs a series without constant term")
    c = u.coefficient(1)
    if not c:
        raise PreconditionError("Compositional inverse needs a nonzero linear coefficient")
    rest = u - PolySeries1({1: c}, D, u.variable)
    v = PolySeries1({1: 1 / c}, D, u.variable)
    for d in range(2, D + 1):
        defect = rest.compose(v).coefficient(d)
        v = v - PolySeries1({d: defect / c}, D, u.variable)
    return v


def legendre(f: Union[SymFunc, StarSymFunc]) -> StarSymFunc:
    """
    Plethystic Legendre transform

    Args:
        f: admissible symmetric function certified through weight W

    Returns:
        L(f), also certified through weight W
    """
    star = _as_star(f)
    W = star.max_weight
    u = pderiv(star.f, 1)
    v = plethystic_inverse(u)
    p1_u = SymFunc.p(1, W) * _lift(u, W)
    # the outer function has no terms of weight 1, so v through W-1 fixes weight W
    g = plethysm(p1_u - star.f, _lift(v, W))
    logger.debug(f"Legendre transform through weight {W}")
    return StarSymFunc(g)


def classical_legendre(f: PolySeries1) -> PolySeries1:
    """
    Classical transform g o f' + f = x f' on x^2 * (unit)

    Args:
        f: series with f(0) = f'(0) = 0 and f''(0) != 0
    """
    if f.coefficient(0) or f.coefficient(1):
        raise PreconditionError("Classical Legendre transform needs f(0) = f'(0) = 0")
    if not f.coefficient(2):
        raise PreconditionError("Classical Legendre transform needs a nonzero x^2 coefficient")
    D = f.max_degree
    u = f.derivative()
    v = compositional_inverse(u)
    x = PolySeries1({1: 1}, D, f.variable)
    x_u = x * PolySeries1(dict(u.coefficients), D, f.variable)
    lifted_v = PolySeries1(dict(v.coefficients), D, f.variable)
    return (x_u - f).compose(lifted_v)


def cobar_char(a: SymFunc, max_weight: int = None) -> SymFunc:
    """
    Ch(B a) = L(omega~(h_2 + a)) - h_2

    Args:
        a: characteristic of a cyclic operad (no terms of weight <= 2)
        max_weight: optional lower truncation for the computation
    """
    if max_weight is not None:
        a = a.truncate(max_weight)
    low = [k for k in a.terms if sum(k) <= 2]
    if low:
        raise PreconditionError(f"Cobar characteristic needs no terms of weight <= 2, found p{list(low[0])}")
    W = a.max_weight
    h2 = h(2, W)
    return legendre(involution(h2 + a, "omega_tilde")).f - h2


def rank_commutes(f: Union[SymFunc, StarSymFunc]) -> bool:
    """rk(L f) == classical L(rk f)"""
    star = _as_star(f)
    return rank(legendre(star).f) == classical_legendre(rank(star.f))
