"""
Tests for zeta values, the Psi series and formal Gaussian integrals
"""
from fractions import Fraction

import pytest

from src.core.errors import PreconditionError
from src.exactsym import QSeries
from src.hlaurent import HLaurent, TruncationSpec
from src.moduli import (
    BernoulliCache,
    HarerZagierReport,
    alpha_n,
    bernoulli,
    by_euler_class,
    euler_chi_extract,
    f_det_ass_char,
    f_det_ass_functional,
    f_det_ass_integral,
    formal_integral_1v,
    harer_zagier_b,
    i_n_series,
    psi,
    psi_n,
    stirling_check,
    zeta_neg,
)
from src.moduli.integrals import coefficients

PSI_COEFFICIENTS = (2, 2, 4, 2, 6, 6, 6, 1)


class TestBernoulli:
    def test_first_values(self):
        assert [bernoulli(k) for k in range(5)] == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)]

    def test_zeta_at_negative_integers(self):
        assert zeta_neg(1) == Fraction(-1, 12)
        assert zeta_neg(2) == 0
        assert zeta_neg(3) == Fraction(1, 120)

    def test_cache_grows_on_demand(self):
        cache = BernoulliCache()
        assert cache[12] == Fraction(-691, 2730)
        assert len(cache) == 13

    def test_zeta_needs_positive_argument(self):
        with pytest.raises(ValueError):
            zeta_neg(0)


class TestPsi:
    def test_alpha(self):
        assert dict(alpha_n(1).terms) == {(-2, 0): 1}
        assert dict(alpha_n(2).terms) == {(-4, 0): Fraction(1, 2), (-2, 0): Fraction(1, 2)}

    def test_psi_n_vanishes_to_order(self):
        low = psi_n(7, 3).valuation2()
        assert low is None or low >= 4

    def test_psi_coefficients(self):
        series = psi(4)
        assert [series.hbar_coefficient(k) for k in range(1, 5)] == list(PSI_COEFFICIENTS[:4])

    @pytest.mark.slow
    def test_psi_through_eight(self):
        series = psi(8)
        assert [series.hbar_coefficient(k) for k in range(1, 9)] == list(PSI_COEFFICIENTS)

    @pytest.mark.filterwarnings("error::sympy.utilities.exceptions.SymPyDeprecationWarning")
    def test_number_theory_helpers_are_current(self):
        assert [psi(3).hbar_coefficient(k) for k in range(1, 4)] == list(PSI_COEFFICIENTS[:3])

    def test_euler_extraction(self):
        values = euler_chi_extract(psi(3))
        assert values[2] == 2
        assert by_euler_class(values)[-1] == 2

    def test_extraction_from_closed_form_negates(self):
        series = QSeries({(2, 0): 5})
        closed = HLaurent({(2, (), ()): -5}, TruncationSpec(max_weight=2))
        assert euler_chi_extract(series) == euler_chi_extract(closed) == {2: 5}

    def test_one_puncture_report(self):
        report = harer_zagier_b(2)
        assert isinstance(report, HarerZagierReport)
        assert report.order == 2
        assert report.ok == (not report.violations)


class TestOneVariableIntegral:
    @staticmethod
    def potential(f03=0, f11=0, f04=0):
        return QSeries({(0, 2): Fraction(1, 2), (0, 3): Fraction(f03, 6),
                        (2, 1): f11, (0, 4): Fraction(f04, 24)}, None, "x")

    @pytest.mark.parametrize("route", ["moments", "wick"])
    def test_tree_level_and_tadpole(self, route):
        bracket = formal_integral_1v(self.potential(f03=1), route, max_weight=1)
        values = coefficients(bracket)
        assert values[(0, 3)] == -1
        assert values[(2, 1)] == Fraction(-1, 2)

    @pytest.mark.parametrize("route", ["moments", "wick"])
    def test_genus_one_vertex(self, route):
        values = coefficients(formal_integral_1v(self.potential(f11=3), route, max_weight=1))
        assert values[(2, 1)] == -3

    def test_routes_agree(self):
        f = self.potential(f03=2, f11=-1, f04=1)
        assert formal_integral_1v(f, "moments", 3) == formal_integral_1v(f, "wick", 3)

    def test_integrand_must_start_with_square(self):
        with pytest.raises(PreconditionError):
            formal_integral_1v(QSeries({(0, 2): 1}, None, "x"))
        with pytest.raises(PreconditionError):
            formal_integral_1v(QSeries({(0, 2): Fraction(1, 2), (0, 1): 1}, None, "x"))

    def test_unknown_route(self):
        with pytest.raises(PreconditionError):
            formal_integral_1v(self.potential(f03=1), "saddle")

    def test_stirling_low_order(self):
        lhs, rhs = stirling_check(3)
        assert lhs == rhs
        assert rhs.terms[(4, 0)] == Fraction(1, 12)

    @pytest.mark.slow
    def test_stirling_through_ten(self):
        lhs, rhs = stirling_check(10)
        assert lhs == rhs


class TestDeterminantTwist:
    @pytest.mark.parametrize("n", [1, 2])
    def test_i_n_routes_agree(self, n):
        assert i_n_series(n, 2, 2, "closed") == i_n_series(n, 2, 2, "integral")

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_i_n_routes_agree_deeper(self, n):
        assert i_n_series(n, 3, 4, "closed") == i_n_series(n, 3, 4, "integral")

    def test_i_n_rejects_unknown_route(self):
        with pytest.raises(PreconditionError):
            i_n_series(1, 1, 1, "series")

    def test_closed_form_matches_integral_assembly(self):
        assert dict(f_det_ass_integral(2).terms) == dict(f_det_ass_char(2).terms)

    @pytest.mark.slow
    def test_three_routes_agree(self):
        closed = dict(f_det_ass_char(4).terms)
        assert dict(f_det_ass_integral(4).terms) == closed
        assert dict(f_det_ass_functional(4).terms) == closed
