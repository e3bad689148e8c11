"""
Truncated symmetric functions in the power-sum basis

A ``SymFunc`` is a finite map from partitions to exact rationals together with
a weight bound ``max_weight``: the value is known exactly in every weight up
to the bound and nothing is claimed above it. Arithmetic between values with
different bounds is refused unless one side is explicitly coerced with
``truncate``.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from ..core.errors import PreconditionError, TruncationError
from .partitions import (
    EMPTY,
    Partition,
    format_partition,
    is_partition,
    merge,
    sort_key,
)

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"Exact coefficient expected, got {type(value).__name__}")


class SymFunc:
    """
    Symmetric function truncated at a total weight (deg p_n = n)
    """

    __slots__ = ("_terms", "max_weight")

    def __init__(self, terms: Optional[Mapping[Partition, Scalar]] = None, max_weight: int = 0):
        if max_weight < 0:
            raise ValueError(f"max_weight must be non-negative, got {max_weight}")
        clean: Dict[Partition, Fraction] = {}
        for partition, coeff in (terms or {}).items():
            partition = tuple(partition)
            if not is_partition(partition):
                raise ValueError(f"Not a descending partition: {list(partition)}")
            if sum(partition) > max_weight:
                continue
            coeff = _as_fraction(coeff)
            if coeff:
                clean[partition] = clean.get(partition, Fraction(0)) + coeff
        self._terms = MappingProxyType({k: v for k, v in clean.items() if v})
        self.max_weight = max_weight

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, max_weight: int) -> "SymFunc":
        return cls({}, max_weight)

    @classmethod
    def one(cls, max_weight: int) -> "SymFunc":
        return cls({EMPTY: 1}, max_weight)

    @classmethod
    def constant(cls, value: Scalar, max_weight: int) -> "SymFunc":
        return cls({EMPTY: value}, max_weight)

    @classmethod
    def p(cls, n: int, max_weight: int) -> "SymFunc":
        """The power sum p_n"""
        if n < 1:
            raise ValueError(f"p_n needs n >= 1, got {n}")
        return cls({(n,): 1}, max_weight)

    @classmethod
    def monomial(cls, partition: Sequence[int], coeff: Scalar = 1, max_weight: int = 0) -> "SymFunc":
        return cls({tuple(partition): coeff}, max_weight)

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> Mapping[Partition, Fraction]:
        return self._terms

    def items(self) -> Iterator[Tuple[Partition, Fraction]]:
        """Terms in canonical (weight, lexicographic) order"""
        for partition in sorted(self._terms, key=sort_key):
            yield partition, self._terms[partition]

    def coefficient(self, partition: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(partition), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get(EMPTY, Fraction(0))

    def min_weight(self) -> Optional[int]:
        """Lowest weight carrying a nonzero term, ``None`` for zero"""
        if not self._terms:
            return None
        return min(sum(partition) for partition in self._terms)

    def top_weight(self) -> Optional[int]:
        if not self._terms:
            return None
        return max(sum(partition) for partition in self._terms)

    def homogeneous(self, w: int) -> "SymFunc":
        """Weight-``w`` part, keeping the truncation bound"""
        return SymFunc({k: v for k, v in self._terms.items() if sum(k) == w}, self.max_weight)

    def homogeneous_parts(self) -> Dict[int, "SymFunc"]:
        parts: Dict[int, Dict[Partition, Fraction]] = {}
        for partition, coeff in self._terms.items():
            parts.setdefault(sum(partition), {})[partition] = coeff
        return {w: SymFunc(terms, self.max_weight) for w, terms in parts.items()}

    def truncate(self, max_weight: int) -> "SymFunc":
        """Explicit coercion to a lower truncation bound"""
        if max_weight > self.max_weight:
            raise TruncationError(
                f"Cannot raise truncation from {self.max_weight} to {max_weight}"
            )
        return SymFunc(self._terms, max_weight)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "SymFunc":
        if isinstance(other, SymFunc):
            if other.max_weight != self.max_weight:
                raise TruncationError(
                    f"Incompatible truncations {self.max_weight} and {other.max_weight}; "
                    "coerce one side with truncate()"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return SymFunc.constant(other, self.max_weight)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for partition, coeff in other._terms.items():
            terms[partition] = terms.get(partition, Fraction(0)) + coeff
        return SymFunc(terms, self.max_weight)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc({k: -v for k, v in self._terms.items()}, self.max_weight)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return SymFunc.zero(self.max_weight)
            return SymFunc({k: v * other for k, v in self._terms.items()}, self.max_weight)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        bound = self.max_weight
        terms: Dict[Partition, Fraction] = {}
        right = [(k, sum(k), v) for k, v in other._terms.items()]
        for a, ca in self._terms.items():
            wa = sum(a)
            for b, wb, cb in right:
                if wa + wb > bound:
                    continue
                key = merge(a, b)
                terms[key] = terms.get(key, Fraction(0)) + ca * cb
        return SymFunc(terms, bound)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("Negative powers are not defined")
        result = SymFunc.one(self.max_weight)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, SymFunc):
            return self.max_weight == other.max_weight and dict(self._terms) == dict(other._terms)
        if isinstance(other, (int, Fraction)):
            return dict(self._terms) == ({EMPTY: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash((self.max_weight, frozenset(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            body = "0"
        else:
            body = " + ".join(f"{coeff}*{format_partition(k)}" for k, coeff in self.items())
        return f"SymFunc({body}; W={self.max_weight})"


def ring_eval(combination: Iterable[Tuple[Scalar, Sequence[SymFunc]]],
              max_weight: Optional[int] = None) -> SymFunc:
    """
    Evaluate a linear combination of products of symmetric functions

    Args:
        combination: pairs (scalar, factors); each pair contributes the
            scalar times the product of its factors
        max_weight: explicit output bound; when omitted every factor must
            share the same truncation

    Returns:
        The exact truncated result
    """
    combination = [(coeff, list(factors)) for coeff, factors in combination]
    bounds = {f.max_weight for _, factors in combination for f in factors}
    if max_weight is None:
        if len(bounds) > 1:
            raise TruncationError(
                f"Operands carry truncations {sorted(bounds)}; supply max_weight to coerce"
            )
        max_weight = bounds.pop() if bounds else 0
    elif bounds and max_weight > min(bounds):
        raise TruncationError(
            f"Output bound {max_weight} exceeds the smallest operand bound {min(bounds)}"
        )

    total = SymFunc.zero(max_weight)
    for coeff, factors in combination:
        term = SymFunc.constant(coeff, max_weight)
        for factor in factors:
            term = term * factor.truncate(max_weight)
        total = total + term
    return total


@lru_cache(maxsize=None)
def _newton_terms(symbol: str, n: int) -> Tuple[Tuple[Partition, Fraction], ...]:
    # n*h_n = sum_i p_i h_{n-i};  n*e_n = sum_i (-1)^(i-1) p_i e_{n-i}
    if n == 0:
        return ((EMPTY, Fraction(1)),)
    acc: Dict[Partition, Fraction] = {}
    for i in range(1, n + 1):
        sign = 1 if symbol == "h" or i % 2 == 1 else -1
        for partition, coeff in _newton_terms(symbol, n - i):
            key = merge((i,), partition)
            acc[key] = acc.get(key, Fraction(0)) + sign * coeff / n
    return tuple((k, v) for k, v in sorted(acc.items(), key=lambda kv: sort_key(kv[0])) if v)


def newton_convert(basis_symbol: str, n: int, max_weight: int) -> SymFunc:
    """
    Complete (``h``) or elementary (``e``) symmetric function in the p-basis

    Args:
        basis_symbol: ``"h"`` or ``"e"`` (``"h_n"``/``"e_n"`` accepted)
        n: degree
        max_weight: truncation bound of the result

    Returns:
        h_n or e_n with exact rational coefficients; n = 0 gives 1
    """
    symbol = basis_symbol.split("_")[0].lower()
    if symbol not in ("h", "e"):
        raise PreconditionError(f"Unknown basis symbol: {basis_symbol}")
    if n < 0:
        raise PreconditionError(f"Degree must be non-negative, got {n}")
    if n > max_weight:
        raise TruncationError(f"{symbol}_{n} does not fit truncation {max_weight}")
    return SymFunc(dict(_newton_terms(symbol, n)), max_weight)


def h(n: int, max_weight: int) -> SymFunc:
    return newton_convert("h", n, max_weight)


def e(n: int, max_weight: int) -> SymFunc:
    return newton_convert("e", n, max_weight)
