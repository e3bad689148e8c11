"""
Characteristics of stable S-modules and of the modular operads they generate

CCh(V) = sum hbar^(g-1) ch_n(V((g,n))). The free modular operad and the
Feynman transform act on characteristics as

    CCh(MV) = Log(exp(Delta) Exp(CCh V)),    Log(exp(-Delta) Exp(CCh V)).
"""
import logging
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Optional, Tuple

from ..core.errors import PreconditionError, TruncationError
from ..exactsym.character import VirtualCharacter
from ..exactsym.partitions import EMPTY, z_lambda
from .laplacian import laplacian
from .laurent import HLaurent, TruncationSpec, pleth_exp, pleth_log

logger = logging.getLogger(__name__)

GenusArity = Tuple[int, int]


def is_stable(g: int, n: int) -> bool:
    return g >= 0 and n >= 0 and 2 * (g - 1) + n > 0


class StableCharTable:
    """
    A stable S-module at character level: (g, n) -> virtual character of S_n
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Optional[Mapping[GenusArity, VirtualCharacter]] = None):
        clean: Dict[GenusArity, VirtualCharacter] = {}
        for (g, n), chi in (entries or {}).items():
            if not is_stable(g, n):
                raise PreconditionError(f"Entry ({g},{n}) violates stability 2(g-1)+n > 0")
            if chi.n != n:
                raise PreconditionError(f"Entry ({g},{n}) carries a character of S_{chi.n}")
            clean[(g, n)] = chi
        self._entries = MappingProxyType(clean)

    @classmethod
    def trivial(cls, support: Iterable[GenusArity]) -> "StableCharTable":
        """Trivial representation at every listed (g, n)"""
        return cls({(g, n): VirtualCharacter.trivial(n) for g, n in support})

    @classmethod
    def from_dimensions(cls, dims: Mapping[GenusArity, object]) -> "StableCharTable":
        """
        Multiples of the regular representation scaled to the given dimensions

        ch = (a/n!) p_1^n, so the rank of the characteristic is a x^n/n!.
        """
        return cls({
            (g, n): VirtualCharacter(n, {(1,) * n: Fraction(a)})
            for (g, n), a in dims.items() if Fraction(a)
        })

    @property
    def entries(self) -> Mapping[GenusArity, VirtualCharacter]:
        return self._entries

    def get(self, g: int, n: int) -> Optional[VirtualCharacter]:
        return self._entries.get((g, n))

    def min_genus(self) -> Optional[int]:
        return min((g for g, _ in self._entries), default=None)

    def max_weight(self) -> int:
        return max((2 * (g - 1) + n for g, n in self._entries), default=0)

    def suspension(self) -> "StableCharTable":
        """Character-level suspension: values twisted by (-1)^(number of cycles)"""
        return StableCharTable({
            key: VirtualCharacter(chi.n, {tau: v * (-1) ** len(tau) for tau, v in chi.values.items()})
            for key, chi in self._entries.items()
        })

    def __eq__(self, other):
        if not isinstance(other, StableCharTable):
            return NotImplemented
        return dict(self._entries) == dict(other._entries)

    def __repr__(self):
        return f"StableCharTable({sorted(self._entries)})"


def default_trunc(table: StableCharTable, max_weight: Optional[int] = None) -> TruncationSpec:
    return TruncationSpec(max_weight=table.max_weight() if max_weight is None else max_weight,
                          hexp_min_x2=-2)


def cch(table: StableCharTable, trunc: Optional[TruncationSpec] = None) -> HLaurent:
    """
    sum over entries of hbar^(g-1) ch_n(V((g,n)))

    Args:
        table: stable character table
        trunc: output window; its hbar floor must reach hbar^-1 when the
            table has genus-0 entries

    Returns:
        CCh(V) in F^1 with floor hbar^-1
    """
    trunc = trunc or default_trunc(table)
    if table.min_genus() == 0 and trunc.hexp_min_x2 > -2:
        raise TruncationError("The window does not reach hbar^-1, needed by genus-0 entries")
    terms = {}
    for (g, n), chi in table.entries.items():
        for tau, value in chi.values.items():
            terms[(2 * (g - 1), tau, EMPTY)] = value / z_lambda(tau)
    return HLaurent(terms, trunc.with_floor(min(trunc.hexp_min_x2, -2)))


def graph_sum(x: HLaurent, sign: int = 1) -> HLaurent:
    """Log(exp(sign*Delta) Exp(x)) for x in F^1"""
    exp_x = pleth_exp(x)
    glued = laplacian(exp_x, sign=sign, exponentiate=True)
    return pleth_log(glued)


def _checked_trunc(table: StableCharTable, trunc: Optional[TruncationSpec]) -> TruncationSpec:
    trunc = trunc or default_trunc(table)
    if trunc.hexp_min_x2 > -2:
        raise TruncationError(
            f"Window floor hbar^({trunc.hexp_min_x2}/2) cannot represent the hbar^-1 layer of CCh"
        )
    return trunc


def free_modular_char(table: StableCharTable, trunc: Optional[TruncationSpec] = None) -> HLaurent:
    """
    CCh(MV) = Log(exp(Delta) Exp(CCh V))

    Args:
        table: stable character table V
        trunc: output window (weight bound and hbar floor <= -1)

    Returns:
        The characteristic of the free modular operad on V
    """
    trunc = _checked_trunc(table, trunc)
    logger.info(f"Free modular characteristic of {len(table.entries)} entries, W={trunc.max_weight}")
    return graph_sum(cch(table, trunc), 1).window()


def feynman_char(table: StableCharTable, trunc: Optional[TruncationSpec] = None) -> HLaurent:
    """Log(exp(-Delta) Exp(CCh V)), the Feynman-transform characteristic"""
    trunc = _checked_trunc(table, trunc)
    logger.info(f"Feynman characteristic of {len(table.entries)} entries, W={trunc.max_weight}")
    return graph_sum(cch(table, trunc), -1).window()
