"""
Integer partitions

A partition is a tuple of positive integers sorted in descending order. The
empty tuple is the partition of 0.
"""
from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Tuple

from sympy.utilities.iterables import partitions as _sympy_partitions

Partition = Tuple[int, ...]

EMPTY: Partition = ()


def make_partition(parts: Iterable[int]) -> Partition:
    """Sort ``parts`` into a partition, rejecting non-positive parts"""
    parts = tuple(int(part) for part in parts)
    if any(part <= 0 for part in parts):
        raise ValueError(f"Partition parts must be positive: {parts}")
    return tuple(sorted(parts, reverse=True))


def is_partition(parts: Tuple[int, ...]) -> bool:
    """True when ``parts`` is already in canonical descending form"""
    return all(part > 0 for part in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def weight(partition: Partition) -> int:
    return sum(partition)


def merge(a: Partition, b: Partition) -> Partition:
    """Union of two partitions (product of power-sum monomials)"""
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


def scale(partition: Partition, n: int) -> Partition:
    """Multiply every part by ``n`` (the action of p_n on a monomial)"""
    return tuple(part * n for part in partition)


def multiplicities(partition: Partition) -> Counter:
    return Counter(partition)


@lru_cache(maxsize=None)
def z_lambda(partition: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type ``partition``"""
    result = 1
    for part, mult in Counter(partition).items():
        result *= part ** mult * factorial(mult)
    return result


def sign(partition: Partition) -> int:
    """Sign of a permutation with the given cycle type"""
    return -1 if (sum(partition) - len(partition)) % 2 else 1


def sort_key(partition: Partition) -> Tuple[int, Partition]:
    """Canonical ordering: by weight, then lexicographically"""
    return (sum(partition), partition)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Partition, ...]:
    """All partitions of ``n`` in canonical order"""
    if n < 0:
        return ()
    if n == 0:
        return (EMPTY,)
    result = []
    for counts in _sympy_partitions(n):
        parts = []
        for part, mult in counts.items():
            parts.extend([part] * mult)
        result.append(make_partition(parts))
    return tuple(sorted(result))


def partitions_up_to(max_weight: int) -> Iterator[Partition]:
    for n in range(max_weight + 1):
        yield from partitions_of(n)


def format_partition(partition: Partition) -> str:
    """Render as ``p[3,1]``; the empty partition renders as ``1``"""
    if not partition:
        return "1"
    return "p[" + ",".join(str(part) for part in partition) + "]"
