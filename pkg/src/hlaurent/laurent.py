"""
Laurent series in hbar^(1/2) with symmetric-function coefficients

Terms are keyed by (doubled hbar exponent, p-partition, q-partition). The
weight of a term is 2*hexp + |p| + |q|; the grade used by the exponential
recurrences is weight + |q|, which is positive on every term of an
argument of Exp (terms of weight 0 must carry q-variables).

Every value carries a ``TruncationSpec``: terms above the weight bound (or
above the q-weight bound) are dropped, and a term below the hbar floor is an
error, so all infinite sums in this package are finite on a truncation.
"""
import logging
from fractions import Fraction
from types import MappingProxyType
from typing import Callable, Dict, Iterator, Mapping, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator
from sympy.functions.combinatorial.numbers import mobius

from ..core.errors import PreconditionError, TruncationError
from ..core.series import graded_exp, graded_log
from ..exactsym.partitions import EMPTY, Partition, format_partition, is_partition, merge, scale
from ..exactsym.series import QSeries
from ..exactsym.symfunc import SymFunc

logger = logging.getLogger(__name__)

Key = Tuple[int, Partition, Partition]
Terms = Dict[Key, Fraction]


class TruncationSpec(BaseModel):
    """
    Truncation window of an HLaurent value

    Exponents of hbar are stored doubled, so ``hexp_min_x2 = -2`` is the floor
    hbar^-1.
    """
    model_config = ConfigDict(frozen=True)

    max_weight: int = Field(..., ge=0, description="Largest term weight kept")
    hexp_min_x2: int = Field(-2, description="Doubled lower bound on the hbar exponent")
    max_q_weight: Optional[int] = Field(None, ge=0, description="Largest |q| kept")
    hexp_max_x2: Optional[int] = Field(None, description="Doubled upper end of the output window")

    @field_validator("hexp_min_x2")
    @classmethod
    def validate_floor(cls, v):
        if v > 0:
            raise ValueError("The hbar floor must not be positive")
        return v

    def admits(self, key: Key) -> bool:
        h2, p, q = key
        if h2 + sum(p) + sum(q) > self.max_weight:
            return False
        if self.max_q_weight is not None and sum(q) > self.max_q_weight:
            return False
        return True

    @property
    def max_grade(self) -> int:
        return self.max_weight + (self.max_q_weight or 0)

    def with_floor(self, hexp_min_x2: int) -> "TruncationSpec":
        return self.model_copy(update={"hexp_min_x2": hexp_min_x2})


def term_weight(key: Key) -> int:
    h2, p, q = key
    return h2 + sum(p) + sum(q)


def term_grade(key: Key) -> int:
    return term_weight(key) + sum(key[2])


class _TermMap:
    """Mutable-free dict wrapper used inside the graded recurrences"""

    __slots__ = ("terms",)

    def __init__(self, terms: Terms):
        self.terms = terms

    def __add__(self, other: "_TermMap") -> "_TermMap":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return _TermMap({k: v for k, v in out.items() if v})

    def __sub__(self, other: "_TermMap") -> "_TermMap":
        return self + other * -1

    def __mul__(self, scalar) -> "_TermMap":
        return _TermMap({k: v * scalar for k, v in self.terms.items()})


def _multiply(a: Terms, b: Terms, keep: Callable[[Key], bool]) -> Terms:
    out: Terms = {}
    right = list(b.items())
    for (h1, p1, q1), c1 in a.items():
        for (h2, p2, q2), c2 in right:
            key = (h1 + h2, merge(p1, p2), merge(q1, q2))
            if not keep(key):
                continue
            out[key] = out.get(key, Fraction(0)) + c1 * c2
    return {k: v for k, v in out.items() if v}


def _pn_action(terms: Terms, n: int, keep: Callable[[Key], bool]) -> Terms:
    # p_n o (hbar^h p_lambda q_mu) = hbar^(nh) p_{n lambda} q_{n mu}
    out: Terms = {}
    for (h2, p, q), c in terms.items():
        key = (h2 * n, scale(p, n), scale(q, n))
        if keep(key):
            out[key] = out.get(key, Fraction(0)) + c
    return out


def _split_by_grade(terms: Terms) -> Dict[int, _TermMap]:
    parts: Dict[int, Terms] = {}
    for key, c in terms.items():
        parts.setdefault(term_grade(key), {})[key] = c
    return {g: _TermMap(t) for g, t in parts.items()}


class HLaurent:
    """
    Element of the truncated ring of hbar-Laurent series over symmetric functions
    """

    __slots__ = ("_terms", "trunc")

    def __init__(self, terms: Optional[Mapping[Key, object]] = None, trunc: TruncationSpec = None):
        if trunc is None:
            raise ValueError("HLaurent needs a TruncationSpec")
        clean: Terms = {}
        for (h2, p, q), coeff in (terms or {}).items():
            p, q = tuple(p), tuple(q)
            if not is_partition(p) or not is_partition(q):
                raise ValueError(f"Not a descending partition in term {(h2, list(p), list(q))}")
            key = (int(h2), p, q)
            if not trunc.admits(key):
                continue
            coeff = Fraction(coeff)
            if not coeff:
                continue
            clean[key] = clean.get(key, Fraction(0)) + coeff
        clean = {k: v for k, v in clean.items() if v}
        for h2, p, q in clean:
            if h2 < trunc.hexp_min_x2:
                raise TruncationError(
                    f"Term hbar^({h2}/2) {format_partition(p)} lies below the floor "
                    f"hbar^({trunc.hexp_min_x2}/2)"
                )
        self._terms = MappingProxyType(clean)
        self.trunc = trunc

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, trunc: TruncationSpec) -> "HLaurent":
        return cls({}, trunc)

    @classmethod
    def one(cls, trunc: TruncationSpec) -> "HLaurent":
        return cls({(0, EMPTY, EMPTY): 1}, trunc)

    @classmethod
    def monomial(cls, h2: int, p=(), q=(), coeff: object = 1,
                 trunc: TruncationSpec = None) -> "HLaurent":
        return cls({(h2, tuple(p), tuple(q)): coeff}, trunc)

    @classmethod
    def from_symfunc(cls, f: SymFunc, trunc: TruncationSpec, h2: int = 0) -> "HLaurent":
        """hbar^(h2/2) * f; terms of f must be certified up to the weight bound"""
        if f.max_weight < trunc.max_weight - h2:
            raise TruncationError(
                f"SymFunc certified to weight {f.max_weight} cannot fill weight "
                f"{trunc.max_weight} at hbar^({h2}/2)"
            )
        return cls({(h2, k, EMPTY): v for k, v in f.terms.items()}, trunc)

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> Mapping[Key, Fraction]:
        return self._terms

    def items(self) -> Iterator[Tuple[Key, Fraction]]:
        def order(key: Key):
            h2, p, q = key
            return (h2, sum(p), p, sum(q), q)
        for key in sorted(self._terms, key=order):
            yield key, self._terms[key]

    def coefficient(self, h2: int, p=(), q=()) -> Fraction:
        return self._terms.get((h2, tuple(p), tuple(q)), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def has_q(self) -> bool:
        return any(q for _, _, q in self._terms)

    def min_grade(self) -> Optional[int]:
        return min((term_grade(k) for k in self._terms), default=None)

    def min_hexp_x2(self) -> Optional[int]:
        return min((k[0] for k in self._terms), default=None)

    def hbar_coefficient(self, h2: int) -> SymFunc:
        """Coefficient of hbar^(h2/2) as a SymFunc in p (q-free terms only)"""
        bound = max(self.trunc.max_weight - h2, 0)
        return SymFunc({p: v for (e, p, q), v in self._terms.items() if e == h2 and not q}, bound)

    def hbar_exponents_x2(self) -> Tuple[int, ...]:
        return tuple(sorted({k[0] for k in self._terms}))

    # -- truncation --------------------------------------------------------

    def coerce(self, trunc: TruncationSpec) -> "HLaurent":
        """Re-truncate to a window that is not larger than the current one"""
        if trunc.max_weight > self.trunc.max_weight:
            raise TruncationError(
                f"Cannot raise weight bound {self.trunc.max_weight} to {trunc.max_weight}"
            )
        if self.trunc.max_q_weight is not None and (
                trunc.max_q_weight is None or trunc.max_q_weight > self.trunc.max_q_weight):
            raise TruncationError("Cannot raise the q-weight bound")
        return HLaurent(self._terms, trunc)

    def window(self) -> "HLaurent":
        """Apply the output window hexp_max of the truncation"""
        top = self.trunc.hexp_max_x2
        if top is None:
            return self
        return HLaurent({k: v for k, v in self._terms.items() if k[0] <= top}, self.trunc)

    def _check(self, other: "HLaurent"):
        a, b = self.trunc, other.trunc
        if a.max_weight != b.max_weight or a.max_q_weight != b.max_q_weight:
            raise TruncationError(
                f"Incompatible truncations (W={a.max_weight}, K={a.max_q_weight}) and "
                f"(W={b.max_weight}, K={b.max_q_weight}); coerce one side"
            )

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HLaurent({(0, EMPTY, EMPTY): other}, self.trunc)
        if isinstance(other, SymFunc):
            other = HLaurent.from_symfunc(other, self.trunc)
        self._check(other)
        terms = dict(self._terms)
        for k, v in other._terms.items():
            terms[k] = terms.get(k, Fraction(0)) + v
        floor = min(self.trunc.hexp_min_x2, other.trunc.hexp_min_x2)
        return HLaurent(terms, self.trunc.with_floor(floor))

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return HLaurent({k: v * other for k, v in self._terms.items()}, self.trunc)
        if isinstance(other, SymFunc):
            other = HLaurent.from_symfunc(other, self.trunc)
        self._check(other)
        floor = self.trunc.hexp_min_x2 + other.trunc.hexp_min_x2
        trunc = self.trunc.with_floor(floor)
        return HLaurent(_multiply(dict(self._terms), dict(other._terms), trunc.admits), trunc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, HLaurent):
            return NotImplemented
        return (self.trunc.max_weight == other.trunc.max_weight
                and self.trunc.max_q_weight == other.trunc.max_q_weight
                and dict(self._terms) == dict(other._terms))

    def __hash__(self):
        return hash((self.trunc.max_weight, self.trunc.max_q_weight,
                     frozenset(self._terms.items())))

    def __repr__(self):
        parts = []
        for (h2, p, q), v in self.items():
            mono = f"hbar^({h2}/2)*{format_partition(p)}"
            if q:
                mono += "*q[" + ",".join(map(str, q)) + "]"
            parts.append(f"{v}*{mono}")
        return f"HLaurent({' + '.join(parts) or '0'}; W={self.trunc.max_weight})"

    # -- structure maps ----------------------------------------------------

    def omega_tilde(self) -> "HLaurent":
        """p_n -> -p_n on the p-variables, q untouched"""
        return HLaurent({k: v * (-1) ** len(k[1]) for k, v in self._terms.items()}, self.trunc)

    def rename_q_to_p(self) -> "HLaurent":
        """Read a q-only series as a series in p"""
        if any(p for _, p, _ in self._terms):
            raise PreconditionError("rename_q_to_p needs a series without p-variables")
        trunc = self.trunc.model_copy(update={"max_q_weight": None})
        return HLaurent({(h2, q, EMPTY): v for (h2, _, q), v in self._terms.items()}, trunc)

    def p_n_action(self, n: int) -> "HLaurent":
        """p_n o self: hbar -> hbar^n, p_k -> p_nk, q_k -> q_nk"""
        floor = min(self.trunc.hexp_min_x2 * n, self.trunc.hexp_min_x2)
        trunc = self.trunc.with_floor(floor)
        return HLaurent(_pn_action(dict(self._terms), n, trunc.admits), trunc)

    def rank(self) -> QSeries:
        """
        Rank specialization p_1 -> x, p_n -> 0 on q-free terms

        The coefficient of hbar^(h2/2) x^n is certified when h2 + n is within
        the weight bound.
        """
        terms = {}
        for (h2, p, q), v in self._terms.items():
            if q or any(part != 1 for part in p):
                continue
            terms[(h2, len(p))] = v
        return QSeries(terms, None, "x")


def _require_positive_grade(f: HLaurent, what: str):
    grade = f.min_grade()
    if grade is not None and grade < 1:
        raise PreconditionError(
            f"{what} needs an argument in F^1: found a term of weight "
            f"{grade} without q-variables"
        )
    if f.has_q() and f.trunc.max_q_weight is None:
        raise TruncationError(f"{what} of a series with q-variables needs max_q_weight")


def _result(terms: Terms, trunc: TruncationSpec) -> HLaurent:
    floor = min([trunc.hexp_min_x2, 0] + [k[0] for k in terms])
    return HLaurent(terms, trunc.with_floor(floor))


def h_plethysm(f: Union[SymFunc, HLaurent], g: HLaurent) -> HLaurent:
    """
    Plethysm f o g with hbar -> hbar^n under p_n o -

    Args:
        f: outer function (p-variables only); its own hbar powers are scalars
        g: inner series in F^1 (weight-0 terms allowed only when they carry q)

    Returns:
        f o g on the truncation of g, with the tight hbar floor
    """
    _require_positive_grade(g, "Plethysm")
    if isinstance(f, SymFunc):
        f_terms = {(0, k, EMPTY): v for k, v in f.terms.items()}
    else:
        if f.has_q():
            raise PreconditionError("The outer function of a plethysm must not contain q")
        f_terms = dict(f.terms)
    trunc = g.trunc
    keep = trunc.admits
    g_terms = dict(g.terms)
    cache: Dict[int, Terms] = {}

    def in_grade(key: Key) -> bool:
        return term_grade(key) <= trunc.max_grade

    out: Terms = {}
    for (h2, p, _), coeff in f_terms.items():
        if sum(p) > trunc.max_grade:
            continue
        product: Terms = {(h2, EMPTY, EMPTY): coeff}
        for part in p:
            if part not in cache:
                cache[part] = _pn_action(g_terms, part, in_grade)
            product = _multiply(product, cache[part], in_grade)
            if not product:
                break
        for key, v in product.items():
            if keep(key):
                out[key] = out.get(key, Fraction(0)) + v
    return _result({k: v for k, v in out.items() if v}, trunc)


def ordinary_exp(f: HLaurent) -> HLaurent:
    """exp(f) for f in F^1"""
    _require_positive_grade(f, "exp")
    trunc = f.trunc
    parts = _split_by_grade(dict(f.terms))
    pieces = graded_exp(parts, _TermMap({(0, EMPTY, EMPTY): Fraction(1)}), _TermMap({}),
                        trunc.max_grade,
                        lambda a, b: _TermMap(_multiply(a.terms, b.terms, trunc.admits)))
    total = _TermMap({})
    for piece in pieces.values():
        total = total + piece
    return _result(total.terms, trunc)


def ordinary_log(F: HLaurent) -> HLaurent:
    """log(F) for F = 1 + (element of F^1)"""
    trunc = F.trunc
    if F.coefficient(0) != 1:
        raise PreconditionError("log needs constant term 1")
    rest = {k: v for k, v in F.terms.items() if k != (0, EMPTY, EMPTY)}
    _require_positive_grade(HLaurent(rest, F.trunc), "log")
    pieces = graded_log(_split_by_grade(rest), _TermMap({}), trunc.max_grade,
                        lambda a, b: _TermMap(_multiply(a.terms, b.terms, trunc.admits)))
    total = _TermMap({})
    for piece in pieces.values():
        total = total + piece
    return _result(total.terms, trunc)


def pleth_exp(f: HLaurent) -> HLaurent:
    """
    Plethystic exponential Exp(f) = exp(sum_n (p_n o f)/n)

    Args:
        f: series in F^1

    Returns:
        Exp(f) on the truncation of f
    """
    _require_positive_grade(f, "Exp")
    trunc = f.trunc
    wide = trunc.with_floor(min(trunc.hexp_min_x2 * max(trunc.max_grade, 1), 0))
    total: Terms = {}
    for n in range(1, trunc.max_grade + 1):
        for key, v in _pn_action(dict(f.terms), n, wide.admits).items():
            total[key] = total.get(key, Fraction(0)) + v / n
    argument = HLaurent({k: v for k, v in total.items() if v}, wide)
    logger.debug(f"Exp over {len(argument.terms)} terms up to grade {trunc.max_grade}")
    return ordinary_exp(argument)


def pleth_log(F: HLaurent) -> HLaurent:
    """
    Plethystic logarithm Log(F) = sum_n mu(n)/n * p_n o log(F)

    Args:
        F: series 1 + (element of F^1)
    """
    log_f = ordinary_log(F)
    trunc = log_f.trunc
    wide = trunc.with_floor(min(trunc.hexp_min_x2 * max(trunc.max_grade, 1), 0))
    total: Terms = {}
    for n in range(1, trunc.max_grade + 1):
        mu = int(mobius(n))
        if not mu:
            continue
        for key, v in _pn_action(dict(log_f.terms), n, wide.admits).items():
            total[key] = total.get(key, Fraction(0)) + v * Fraction(mu, n)
    return _result({k: v for k, v in total.items() if v}, trunc)
