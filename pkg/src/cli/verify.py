"""
Self-verification suites

Each suite recomputes a quantity along independent routes (closed forms,
graph enumeration, Gaussian integrals) and compares them exactly. Random
inputs come from a seeded numpy generator, so a report is reproducible from
the configuration alone.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Tuple

import numpy as np
from tqdm import tqdm

from ..core.config import WorkbenchConfig
from ..exactsym.character import VirtualCharacter
from ..exactsym.operations import pderiv, plethysm
from ..exactsym.partitions import format_partition, partitions_of
from ..exactsym.series import QSeries
from ..exactsym.symfunc import SymFunc, e, h
from ..graphzoo.oracles import burnside_char, wick_rank_sum
from ..hlaurent.laplacian import adjoint_apply_h, laplacian
from ..hlaurent.laurent import HLaurent, TruncationSpec, pleth_exp
from ..hlaurent.modular import StableCharTable, cch, free_modular_char, graph_sum, is_stable
from ..moduli.bernoulli import zeta_neg
from ..moduli.integrals import (
    f_det_ass_char,
    f_det_ass_functional,
    f_det_ass_integral,
    formal_integral_1v,
    i_n_series,
    stirling_check,
)
from ..moduli.psi import euler_chi_extract, psi
from ..opchar.legendre import cobar_char, legendre, plethystic_inverse, rank_commutes
from ..opchar.named import named_char

logger = logging.getLogger(__name__)

PSI_COEFFICIENTS = (2, 2, 4, 2, 6, 6, 6, 1)
ZETA_VALUES = {1: Fraction(-1, 12), 2: Fraction(0), 3: Fraction(1, 120)}
BURNSIDE_TYPES = ((0, 3), (0, 4), (0, 5), (1, 1), (1, 2), (2, 1))
MAX_DUMPED = 5


@dataclass
class CheckResult:
    """Outcome of one exact comparison"""
    suite: str
    name: str
    passed: bool
    counterexample: List[Dict[str, str]] = field(default_factory=list)

    def to_dict(self) -> Dict:
        data = {"suite": self.suite, "check": self.name, "passed": self.passed}
        if self.counterexample:
            data["counterexample"] = self.counterexample
        return data


@dataclass
class VerificationReport:
    """Machine-readable pass/fail per check"""
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def to_dict(self) -> Dict:
        return {
            "passed": self.passed,
            "total": len(self.checks),
            "failed": len(self.failures),
            "checks": [check.to_dict() for check in self.checks],
        }

    def rows(self) -> List[List[str]]:
        return [[c.suite, c.name, "pass" if c.passed else "FAIL"] for c in self.checks]


def _diff(left: Mapping, right: Mapping) -> List[Dict[str, str]]:
    """The first few keys where two term maps disagree"""
    dumped = []
    for key in sorted(set(left) | set(right), key=repr):
        a, b = left.get(key, Fraction(0)), right.get(key, Fraction(0))
        if a != b:
            dumped.append({"term": repr(key), "left": str(a), "right": str(b)})
            if len(dumped) == MAX_DUMPED:
                break
    return dumped


def _compare(suite: str, name: str, left: Mapping, right: Mapping) -> CheckResult:
    dumped = _diff(dict(left), dict(right))
    return CheckResult(suite, name, not dumped, dumped)


Check = Tuple[str, Callable[[], Tuple[Mapping, Mapping]]]


# -- random inputs ----------------------------------------------------------------


def random_star(rng: np.random.Generator, max_weight: int) -> SymFunc:
    """A random symmetric function admitted by the Legendre transform"""
    a = int(rng.integers(1, 3))
    b = int(rng.integers(0, 2))
    f = h(2, max_weight) * a + e(2, max_weight) * b
    terms = dict(f.terms)
    for w in range(3, max_weight + 1):
        for partition in partitions_of(w):
            if rng.random() < 0.5:
                terms[partition] = Fraction(int(rng.integers(-2, 3)))
    return SymFunc(terms, max_weight)


def random_dimensions(rng: np.random.Generator, bound: int) -> Dict[Tuple[int, int], int]:
    """Random integer dimensions on every stable (g, n) with 2(g-1)+n <= bound"""
    dims = {}
    for g in range(0, bound // 2 + 2):
        for n in range(0, bound + 3):
            if is_stable(g, n) and 2 * (g - 1) + n <= bound:
                dims[(g, n)] = int(rng.integers(-3, 4))
    return dims


def random_potential(rng: np.random.Generator, bound: int) -> QSeries:
    """x^2/2 + sum f_(g,n) hbar^g x^n/n! with random integer f_(g,n)"""
    terms = {(0, 2): Fraction(1, 2)}
    for g in range(0, bound // 2 + 2):
        for n in range(0, bound + 3):
            if 0 < 2 * (g - 1) + n <= bound:
                terms[(2 * g, n)] = Fraction(int(rng.integers(-2, 3)), factorial(n))
    return QSeries(terms, None, "x")


# -- suites ---------------------------------------------------------------------


def legendre_checks(config: WorkbenchConfig, rng: np.random.Generator) -> Iterator[Check]:
    W = config.max_weight
    yield "L(h_2) = e_2", lambda: (legendre(h(2, W)).f.terms, e(2, W).terms)
    yield "L(e_2) = h_2", lambda: (legendre(e(2, W)).f.terms, h(2, W).terms)
    yield "cobar Ch(Com) = Ch(Lie)", lambda: (cobar_char(named_char("com", W)).terms,
                                             named_char("lie", W).terms)
    for index in range(config.random_samples):
        f = random_star(rng, W)

        def involution(f=f):
            return legendre(legendre(f)).f.terms, f.terms

        def inverse_pair(f=f):
            u = pderiv(f, 1)
            return plethysm(pderiv(legendre(f).f, 1), u).terms, SymFunc.p(1, u.max_weight).terms

        def inverse(f=f):
            u = pderiv(f, 1)
            v = plethystic_inverse(u)
            left = {(side, k): c for side, composite in (("u o v", plethysm(u, v)), ("v o u", plethysm(v, u)))
                    for k, c in composite.terms.items()}
            return left, {("u o v", (1,)): Fraction(1), ("v o u", (1,)): Fraction(1)}

        def rank(f=f):
            return {"commutes": rank_commutes(f)}, {"commutes": True}

        yield f"L(L f) = f, sample {index}", involution
        yield f"L f' o f' = p_1, sample {index}", inverse_pair
        yield f"plethystic inverse, sample {index}", inverse
        yield f"rk L = L rk, sample {index}", rank


def wick_checks(config: WorkbenchConfig, rng: np.random.Generator) -> Iterator[Check]:
    bound = config.wick_bound
    for index in range(max(1, config.random_samples // 10)):
        dims = random_dimensions(rng, bound)

        def compare(dims=dims):
            table = StableCharTable.from_dimensions(dims)
            ranked = free_modular_char(table, TruncationSpec(max_weight=bound, hexp_min_x2=-2)).rank()
            left, right = {}, {}
            for g, n in sorted(dims):
                if n < 1:
                    continue
                left[(g, n)] = ranked.coefficient(2 * (g - 1), n) * factorial(n)
                right[(g, n)] = wick_rank_sum(g, n, dims)
            return left, right

        yield f"rank of CCh(MV) = Wick sums, table {index}", compare


def burnside_tables() -> List[StableCharTable]:
    trivial = StableCharTable.trivial(BURNSIDE_TYPES)
    mixed = StableCharTable({
        (0, 3): VirtualCharacter.sign_character(3),
        (0, 4): VirtualCharacter.trivial(4) + VirtualCharacter.sign_character(4),
        (0, 5): VirtualCharacter.regular(5),
        (1, 1): VirtualCharacter.trivial(1) * 2,
        (1, 2): VirtualCharacter.sign_character(2),
        (2, 1): VirtualCharacter.trivial(1) * -1,
    })
    return [trivial, mixed]


def burnside_checks(config: WorkbenchConfig, rng: np.random.Generator) -> Iterator[Check]:
    W = max(2 * (g - 1) + n for g, n in BURNSIDE_TYPES)
    for index, table in enumerate(burnside_tables()):
        for g, n in BURNSIDE_TYPES:

            def compare(table=table, g=g, n=n):
                modular = free_modular_char(table, TruncationSpec(max_weight=W, hexp_min_x2=-2))
                coefficient = modular.hbar_coefficient(2 * (g - 1)).homogeneous(n)
                return coefficient.terms, burnside_char(g, n, table).terms

            yield f"Burnside ({g},{n}), table {index}", compare


def laplacian_checks(config: WorkbenchConfig, rng: np.random.Generator) -> Iterator[Check]:
    top = 6
    exp_h2 = pleth_exp(HLaurent({(2, (1, 1), ()): Fraction(1, 2), (2, (2,), ()): Fraction(1, 2)},
                                TruncationSpec(max_weight=2 * top, hexp_min_x2=0)))
    trunc = TruncationSpec(max_weight=top, hexp_min_x2=0)
    for w in range(1, top + 1):
        for partition in partitions_of(w):

            def compare(partition=partition):
                f = HLaurent.monomial(0, partition, (), 1, trunc)
                return (laplacian(f, exponentiate=True).terms,
                        adjoint_apply_h(exp_h2, f).terms)

            yield f"exp(Delta) = D(Exp(hbar h_2)) on {format_partition(partition)}", compare


def psi_checks(config: WorkbenchConfig, rng: np.random.Generator) -> Iterator[Check]:
    order = min(config.psi_order, len(PSI_COEFFICIENTS))
    yield "zeta at -1, -2, -3", lambda: ({k: zeta_neg(k) for k in ZETA_VALUES}, ZETA_VALUES)

    def coefficients():
        series = psi(order)
        return ({k: series.hbar_coefficient(k) for k in range(1, order + 1)},
                {k: Fraction(v) for k, v in enumerate(PSI_COEFFICIENTS[:order], start=1)})

    yield f"Psi through hbar^{order}", coefficients

    def extraction():
        values = euler_chi_extract(psi(order))
        return ({g: values.get(g, Fraction(0)) for g in range(2, order + 2)},
                {k + 1: Fraction(v) for k, v in enumerate(PSI_COEFFICIENTS[:order], start=1)})

    yield "Euler characteristics from Psi", extraction


def stirling_checks(config: WorkbenchConfig, rng: np.random.Generator) -> Iterator[Check]:
    N = config.stirling_order

    def compare():
        lhs, rhs = stirling_check(N)
        return lhs.terms, rhs.terms

    yield f"Stirling identity through hbar^{N}", compare


def integral_checks(config: WorkbenchConfig, rng: np.random.Generator) -> Iterator[Check]:
    bound = config.wick_bound
    for index in range(max(1, config.random_samples // 10)):
        f = random_potential(rng, bound)

        def compare(f=f):
            return (formal_integral_1v(f, "moments", bound).terms,
                    formal_integral_1v(f, "wick", bound).terms)

        yield f"one-variable Wick, potential {index}", compare
    for n in (1, 2, 3):

        def i_n(n=n):
            return i_n_series(n, 3, 4, "closed").terms, i_n_series(n, 3, 4, "integral").terms

        yield f"I_{n} closed = integral", i_n


def fdet_checks(config: WorkbenchConfig, rng: np.random.Generator) -> Iterator[Check]:
    W = min(config.max_weight, 6)
    yield f"F_Det Ass closed = separated integrals, W={W}", lambda: (
        f_det_ass_char(W).terms, f_det_ass_integral(W).terms)
    yield f"F_Det Ass closed = functional integral, W={W}", lambda: (
        f_det_ass_char(W).terms, f_det_ass_functional(W).terms)


def feynman_inverts_free(table: StableCharTable, trunc: TruncationSpec) -> Tuple[Mapping, Mapping]:
    """Log(exp(-Delta) Exp(CCh MV)) against CCh V"""
    modular = free_modular_char(table, trunc)
    return graph_sum(modular, -1).terms, cch(table, trunc).terms


def free_modular_checks(config: WorkbenchConfig, rng: np.random.Generator) -> Iterator[Check]:
    table = StableCharTable.trivial([(1, 1)])
    expected = {(0, (1,), ()): Fraction(1), (2, (), ()): Fraction(1)}
    for W in (2, 4):
        yield f"CCh(M trivial(1,1)) = p_1 + hbar, W={W}", lambda W=W: (
            free_modular_char(table, TruncationSpec(max_weight=W, hexp_min_x2=-2)).terms, expected)
    for index, other in enumerate(burnside_tables()):
        yield f"Feynman inverts free, table {index}", lambda other=other: feynman_inverts_free(
            other, TruncationSpec(max_weight=3, hexp_min_x2=-2))


SUITES: Dict[str, Callable[[WorkbenchConfig, np.random.Generator], Iterator[Check]]] = {
    "legendre": legendre_checks,
    "wick": wick_checks,
    "burnside": burnside_checks,
    "laplacian": laplacian_checks,
    "psi": psi_checks,
    "stirling": stirling_checks,
    "integral": integral_checks,
    "fdet": fdet_checks,
    "free-modular": free_modular_checks,
}


def run_verification(config: WorkbenchConfig, suites: Optional[List[str]] = None,
                     progress: bool = False) -> VerificationReport:
    """
    Run the selected suites

    Args:
        config: truncation, sample counts and seed
        suites: suite names (all when omitted)
        progress: show a tqdm bar on stderr

    Returns:
        The report; it never raises on a failed comparison
    """
    names = list(SUITES) if not suites else list(suites)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ValueError(f"Unknown verification suites {unknown}, expected among {list(SUITES)}")
    rng = np.random.default_rng(config.seed)
    report = VerificationReport()
    for name in names:
        checks = list(SUITES[name](config, rng))
        logger.info(f"Suite {name}: {len(checks)} checks")
        for label, run in tqdm(checks, desc=name, disable=not progress, leave=False):
            left, right = run()
            result = _compare(name, label, left, right)
            if not result.passed:
                logger.warning(f"{name}: {label} failed")
            report.checks.append(result)
    return report
