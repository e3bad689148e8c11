"""
Graded exponential and logarithm

Exp and log of an element split into homogeneous pieces by a grading in
which every piece of the argument has grade at least 1. The pieces of the
result follow from the Euler-operator recurrence

    w * E_w = sum_{j=1..w} j * X_j * E_{w-j}

so a truncation at grade ``max_grade`` costs one product per pair of grades
instead of a full power series in the argument.
"""
import logging
from fractions import Fraction
from typing import Callable, Dict, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")


def graded_exp(parts: Dict[int, T], one: T, zero: T, max_grade: int,
               multiply: Callable[[T, T], T]) -> Dict[int, T]:
    """
    Exponential of a graded element

    Args:
        parts: homogeneous pieces of the argument keyed by grade (all >= 1)
        one: unit element (the grade-0 piece of the result)
        zero: additive identity
        max_grade: largest grade computed
        multiply: truncating product of two elements

    Returns:
        Homogeneous pieces of exp(X) for grades 0..max_grade
    """
    if any(grade < 1 for grade in parts):
        raise ValueError("graded_exp needs an argument of positive grade")
    result = {0: one}
    for w in range(1, max_grade + 1):
        acc = zero
        for j in range(1, w + 1):
            piece = parts.get(j)
            if piece is None or (w - j) not in result:
                continue
            acc = acc + multiply(piece, result[w - j]) * Fraction(j, w)
        result[w] = acc
    return result


def graded_log(parts: Dict[int, T], zero: T, max_grade: int,
               multiply: Callable[[T, T], T]) -> Dict[int, T]:
    """
    Logarithm of 1 + (graded element of positive grade)

    Args:
        parts: pieces of E - 1 keyed by grade (all >= 1)
        zero: additive identity
        max_grade: largest grade computed
        multiply: truncating product of two elements

    Returns:
        Homogeneous pieces of log(E) for grades 1..max_grade
    """
    if any(grade < 1 for grade in parts):
        raise ValueError("graded_log needs 1 plus an element of positive grade")
    result: Dict[int, T] = {}
    for w in range(1, max_grade + 1):
        acc = parts.get(w, zero)
        for j in range(1, w):
            if j not in result or (w - j) not in parts:
                continue
            acc = acc - multiply(result[j], parts[w - j]) * Fraction(j, w)
        result[w] = acc
    return result
