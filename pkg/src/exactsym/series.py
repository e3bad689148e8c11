"""
One-variable exact series

``PolySeries1`` is a truncated power series in a single variable (the target
of the rank homomorphism). ``QSeries`` is a Laurent series in hbar^(1/2),
exponents stored doubled, optionally tensored with polynomials in one
auxiliary variable, with an explicit precision: every coefficient below the
precision is exact, nothing is claimed at or above it.
"""
import logging
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterator, Mapping, Optional, Tuple

from ..core.errors import PreconditionError, TruncationError

logger = logging.getLogger(__name__)


class PolySeries1:
    """Power series in one variable, exact through ``max_degree``"""

    __slots__ = ("_coefficients", "variable", "max_degree")

    def __init__(self, coefficients: Optional[Mapping[int, object]] = None,
                 max_degree: int = 0, variable: str = "x"):
        if max_degree < 0:
            raise ValueError("max_degree must be non-negative")
        clean = {}
        for exponent, coeff in (coefficients or {}).items():
            if exponent < 0:
                raise ValueError(f"Negative exponent {exponent} in a power series")
            if exponent > max_degree:
                continue
            coeff = Fraction(coeff)
            if coeff:
                clean[exponent] = clean.get(exponent, Fraction(0)) + coeff
        self._coefficients = MappingProxyType({k: v for k, v in clean.items() if v})
        self.max_degree = max_degree
        self.variable = variable

    @classmethod
    def monomial(cls, exponent: int, coeff: object = 1, max_degree: int = 0,
                 variable: str = "x") -> "PolySeries1":
        return cls({exponent: coeff}, max_degree, variable)

    @property
    def coefficients(self) -> Mapping[int, Fraction]:
        return self._coefficients

    def coefficient(self, exponent: int) -> Fraction:
        return self._coefficients.get(exponent, Fraction(0))

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        for exponent in sorted(self._coefficients):
            yield exponent, self._coefficients[exponent]

    def valuation(self) -> Optional[int]:
        return min(self._coefficients) if self._coefficients else None

    def _check(self, other: "PolySeries1"):
        if other.variable != self.variable or other.max_degree != self.max_degree:
            raise TruncationError(
                f"Incompatible series ({self.variable}, {self.max_degree}) and "
                f"({other.variable}, {other.max_degree})"
            )

    def truncate(self, max_degree: int) -> "PolySeries1":
        if max_degree > self.max_degree:
            raise TruncationError(f"Cannot raise precision {self.max_degree} to {max_degree}")
        return PolySeries1(self._coefficients, max_degree, self.variable)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolySeries1({0: other}, self.max_degree, self.variable)
        self._check(other)
        coeffs = dict(self._coefficients)
        for k, v in other._coefficients.items():
            coeffs[k] = coeffs.get(k, Fraction(0)) + v
        return PolySeries1(coeffs, self.max_degree, self.variable)

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolySeries1({k: v * other for k, v in self._coefficients.items()},
                               self.max_degree, self.variable)
        self._check(other)
        coeffs: Dict[int, Fraction] = {}
        for a, ca in self._coefficients.items():
            for b, cb in other._coefficients.items():
                if a + b <= self.max_degree:
                    coeffs[a + b] = coeffs.get(a + b, Fraction(0)) + ca * cb
        return PolySeries1(coeffs, self.max_degree, self.variable)

    __rmul__ = __mul__

    def derivative(self) -> "PolySeries1":
        """Derivative, exact through one degree less"""
        return PolySeries1({k - 1: k * v for k, v in self._coefficients.items() if k},
                           max(self.max_degree - 1, 0), self.variable)

    def compose(self, inner: "PolySeries1") -> "PolySeries1":
        """
        Substitute ``inner`` (zero constant term) for the variable

        The result is exact through the smaller of the two precisions.
        """
        if inner.coefficient(0):
            raise PreconditionError("Composition needs an inner series without constant term")
        bound = min(self.max_degree, inner.max_degree)
        inner = PolySeries1(inner._coefficients, bound, inner.variable)
        result = PolySeries1({}, bound, inner.variable)
        power = PolySeries1({0: 1}, bound, inner.variable)
        for k in range(bound + 1):
            coeff = self.coefficient(k)
            if coeff:
                result = result + power * coeff
            power = power * inner
        return result

    def __eq__(self, other):
        if not isinstance(other, PolySeries1):
            return NotImplemented
        return (self.variable == other.variable and self.max_degree == other.max_degree
                and dict(self._coefficients) == dict(other._coefficients))

    def __hash__(self):
        return hash((self.variable, self.max_degree, frozenset(self._coefficients.items())))

    def __repr__(self):
        body = " + ".join(f"{v}*{self.variable}^{k}" for k, v in self.items()) or "0"
        return f"PolySeries1({body}; deg<={self.max_degree})"


Key = Tuple[int, int]


class QSeries:
    """
    Laurent series in hbar^(1/2) with an optional auxiliary variable

    Terms are keyed by (doubled hbar exponent, auxiliary degree). ``prec2``
    is the doubled precision: terms with exponent >= prec2 are dropped and
    unknown; ``None`` means the series is exact. ``aux_max`` bounds the
    auxiliary degree (a polynomial truncation, exact below the bound).
    """

    __slots__ = ("_terms", "prec2", "aux", "aux_max")

    def __init__(self, terms: Optional[Mapping[Key, object]] = None, prec2: Optional[int] = None,
                 aux: Optional[str] = None, aux_max: Optional[int] = None):
        clean: Dict[Key, Fraction] = {}
        for (exp2, deg), coeff in (terms or {}).items():
            if deg < 0:
                raise ValueError(f"Negative auxiliary degree {deg}")
            if deg and aux is None:
                raise ValueError("Auxiliary degree given for a series without auxiliary variable")
            if prec2 is not None and exp2 >= prec2:
                continue
            if aux_max is not None and deg > aux_max:
                continue
            coeff = Fraction(coeff)
            if coeff:
                clean[(exp2, deg)] = clean.get((exp2, deg), Fraction(0)) + coeff
        self._terms = MappingProxyType({k: v for k, v in clean.items() if v})
        self.prec2 = prec2
        self.aux = aux
        self.aux_max = aux_max

    # -- constructors ------------------------------------------------------

    @classmethod
    def monomial(cls, exp2: int, coeff: object = 1, deg: int = 0, prec2: Optional[int] = None,
                 aux: Optional[str] = None, aux_max: Optional[int] = None) -> "QSeries":
        return cls({(exp2, deg): coeff}, prec2, aux, aux_max)

    @classmethod
    def constant(cls, coeff: object, prec2: Optional[int] = None) -> "QSeries":
        return cls({(0, 0): coeff}, prec2)

    @classmethod
    def log1p_aux(cls, aux: str, aux_max: int) -> "QSeries":
        """log(1 + y) in the auxiliary variable y, exact below degree aux_max + 1"""
        return cls({(0, k): Fraction((-1) ** (k + 1), k) for k in range(1, aux_max + 1)},
                   None, aux, aux_max)

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> Mapping[Key, Fraction]:
        return self._terms

    def items(self) -> Iterator[Tuple[Key, Fraction]]:
        for key in sorted(self._terms):
            yield key, self._terms[key]

    def coefficient(self, exp2: int, deg: int = 0) -> Fraction:
        if self.prec2 is not None and exp2 >= self.prec2:
            raise TruncationError(f"Coefficient at hbar^({exp2}/2) is beyond the precision")
        return self._terms.get((exp2, deg), Fraction(0))

    def hbar_coefficient(self, k: int, deg: int = 0) -> Fraction:
        """Coefficient of hbar^k (integer k)"""
        return self.coefficient(2 * k, deg)

    def is_zero(self) -> bool:
        return not self._terms

    def valuation2(self) -> Optional[int]:
        """Lowest doubled hbar exponent carrying a term (``prec2`` for zero)"""
        if not self._terms:
            return self.prec2
        return min(exp2 for exp2, _ in self._terms)

    def aux_part(self, deg: int) -> "QSeries":
        """Coefficient of aux^deg as a series in hbar"""
        return QSeries({(e, 0): v for (e, d), v in self._terms.items() if d == deg}, self.prec2)

    # -- arithmetic --------------------------------------------------------

    def _merge_meta(self, other: "QSeries") -> Tuple[Optional[str], Optional[int]]:
        aux = self.aux or other.aux
        if self.aux and other.aux and self.aux != other.aux:
            raise ValueError(f"Auxiliary variables differ: {self.aux} and {other.aux}")
        bounds = [b for b in (self.aux_max, other.aux_max) if b is not None]
        return aux, (min(bounds) if bounds else None)

    @staticmethod
    def _min_prec(a: Optional[int], b: Optional[int]) -> Optional[int]:
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSeries.constant(other)
        aux, aux_max = self._merge_meta(other)
        terms = dict(self._terms)
        for k, v in other._terms.items():
            terms[k] = terms.get(k, Fraction(0)) + v
        return QSeries(terms, self._min_prec(self.prec2, other.prec2), aux, aux_max)

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QSeries({k: v * other for k, v in self._terms.items()},
                           self.prec2, self.aux, self.aux_max)
        aux, aux_max = self._merge_meta(other)
        # a known to prec(a) times b starting at val(b) is known to prec(a) + val(b)
        prec2 = None
        if self.prec2 is not None:
            prec2 = self.prec2 + (other.valuation2() if other._terms or other.prec2 is not None else 0)
        if other.prec2 is not None:
            candidate = other.prec2 + (self.valuation2() if self._terms or self.prec2 is not None else 0)
            prec2 = candidate if prec2 is None else min(prec2, candidate)
        terms: Dict[Key, Fraction] = {}
        for (ea, da), ca in self._terms.items():
            for (eb, db), cb in other._terms.items():
                e, d = ea + eb, da + db
                if prec2 is not None and e >= prec2:
                    continue
                if aux_max is not None and d > aux_max:
                    continue
                terms[(e, d)] = terms.get((e, d), Fraction(0)) + ca * cb
        return QSeries(terms, prec2, aux, aux_max)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = QSeries.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def truncate(self, prec2: int) -> "QSeries":
        """Lower the precision to ``prec2``"""
        if self.prec2 is not None:
            prec2 = min(prec2, self.prec2)
        return QSeries(self._terms, prec2, self.aux, self.aux_max)

    def subs_hbar_power(self, ell: int) -> "QSeries":
        """Substitute hbar -> hbar^ell"""
        if ell < 1:
            raise ValueError("Substitution power must be positive")
        prec2 = None if self.prec2 is None else self.prec2 * ell
        return QSeries({(e * ell, d): v for (e, d), v in self._terms.items()},
                       prec2, self.aux, self.aux_max)

    def inverse(self, prec2: Optional[int] = None) -> "QSeries":
        """
        Multiplicative inverse of a series with a unit leading term

        Args:
            prec2: requested doubled precision; required when the inverse is
                not a finite Laurent polynomial

        Returns:
            The inverse, exact below the requested (or attainable) precision
        """
        if self.aux is not None and any(d for _, d in self._terms):
            raise PreconditionError("Inverse is only defined for series without auxiliary terms")
        if not self._terms:
            raise PreconditionError("Cannot invert a series with no leading unit")
        lead2 = self.valuation2()
        lead = self._terms[(lead2, 0)]
        if self.prec2 is not None:
            attainable = self.prec2 - 2 * lead2
            prec2 = attainable if prec2 is None else min(prec2, attainable)
        if prec2 is None:
            if len(self._terms) == 1:
                return QSeries.monomial(-lead2, 1 / lead)
            raise TruncationError("Inverse of a non-monomial needs an explicit precision")
        # a = lead * hbar^lead * (1 + gamma), val(gamma) > 0
        gamma = QSeries({(e - lead2, 0): v / lead for (e, _), v in self._terms.items()
                         if e != lead2}, None if self.prec2 is None else self.prec2 - lead2)
        rel_prec = prec2 + lead2
        geometric = QSeries.constant(1, rel_prec)
        power = QSeries.constant(1, rel_prec)
        step = gamma.valuation2()
        if step is not None and step > 0:
            for _ in range(1, rel_prec // step + 1):
                power = (power * gamma * -1).truncate(rel_prec)
                geometric = geometric + power
        elif step is not None:
            raise PreconditionError("Leading term is not a unit")
        return (geometric * (Fraction(1) / lead)).shift(-lead2).truncate(prec2)

    def shift(self, exp2: int) -> "QSeries":
        """Multiply by hbar^(exp2/2)"""
        prec2 = None if self.prec2 is None else self.prec2 + exp2
        return QSeries({(e + exp2, d): v for (e, d), v in self._terms.items()},
                       prec2, self.aux, self.aux_max)

    def log1p(self, prec2: int) -> "QSeries":
        """
        log(1 + self) for a series of positive hbar valuation

        Args:
            prec2: doubled precision of the result
        """
        val = self.valuation2()
        if self._terms and (val is None or val <= 0):
            raise PreconditionError("log1p needs positive hbar valuation")
        if self.prec2 is not None:
            prec2 = min(prec2, self.prec2)
        x = self.truncate(prec2)
        result = QSeries({}, prec2, self.aux, self.aux_max)
        power = QSeries.constant(1, prec2)
        if not x._terms:
            return result
        for j in range(1, prec2 // val + 1):
            power = (power * x).truncate(prec2)
            result = result + power * Fraction((-1) ** (j + 1), j)
        return result

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (self.prec2 == other.prec2 and self.aux == other.aux
                and self.aux_max == other.aux_max and dict(self._terms) == dict(other._terms))

    def __hash__(self):
        return hash((self.prec2, self.aux, self.aux_max, frozenset(self._terms.items())))

    def __repr__(self):
        parts = []
        for (e, d), v in self.items():
            mono = f"hbar^({e}/2)"
            if d:
                mono += f"*{self.aux}^{d}"
            parts.append(f"{v}*{mono}")
        prec = "" if self.prec2 is None else f"; O(hbar^({self.prec2}/2))"
        return f"QSeries({' + '.join(parts) or '0'}{prec})"
