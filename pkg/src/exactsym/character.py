"""
Virtual characters of symmetric groups, stored per cycle type
"""
from fractions import Fraction
from math import factorial
from types import MappingProxyType
from typing import Dict, Mapping, Optional, Sequence

from .partitions import Partition, format_partition, is_partition, partitions_of, sign


class VirtualCharacter:
    """
    Class function on the symmetric group S_n

    Missing cycle types have value 0.
    """

    __slots__ = ("n", "_values")

    def __init__(self, n: int, values: Optional[Mapping[Sequence[int], object]] = None):
        if n < 0:
            raise ValueError(f"Symmetric group degree must be non-negative, got {n}")
        clean: Dict[Partition, Fraction] = {}
        for cycle_type, value in (values or {}).items():
            cycle_type = tuple(cycle_type)
            if not is_partition(cycle_type):
                raise ValueError(f"Cycle type must be a descending partition: {list(cycle_type)}")
            if sum(cycle_type) != n:
                raise ValueError(f"Cycle type {list(cycle_type)} does not have weight {n}")
            value = Fraction(value)
            if value:
                clean[cycle_type] = value
        self.n = n
        self._values = MappingProxyType(clean)

    @classmethod
    def trivial(cls, n: int) -> "VirtualCharacter":
        return cls(n, {tau: 1 for tau in partitions_of(n)})

    @classmethod
    def sign_character(cls, n: int) -> "VirtualCharacter":
        return cls(n, {tau: sign(tau) for tau in partitions_of(n)})

    @classmethod
    def regular(cls, n: int, multiplicity: object = 1) -> "VirtualCharacter":
        """``multiplicity`` copies of the regular representation"""
        return cls(n, {(1,) * n: Fraction(multiplicity) * factorial(n)})

    @property
    def values(self) -> Mapping[Partition, Fraction]:
        return self._values

    def value(self, cycle_type: Sequence[int]) -> Fraction:
        return self._values.get(tuple(cycle_type), Fraction(0))

    @property
    def dimension(self) -> Fraction:
        return self.value((1,) * self.n)

    def __add__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        if other.n != self.n:
            raise ValueError(f"Characters of S_{self.n} and S_{other.n} cannot be added")
        values = dict(self._values)
        for tau, v in other._values.items():
            values[tau] = values.get(tau, Fraction(0)) + v
        return VirtualCharacter(self.n, values)

    def __mul__(self, scalar) -> "VirtualCharacter":
        return VirtualCharacter(self.n, {tau: v * scalar for tau, v in self._values.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        return self.n == other.n and dict(self._values) == dict(other._values)

    def __hash__(self):
        return hash((self.n, frozenset(self._values.items())))

    def __repr__(self):
        body = ", ".join(
            f"{format_partition(tau)}: {v}" for tau, v in sorted(self._values.items())
        )
        return f"VirtualCharacter(n={self.n}, {{{body}}})"
