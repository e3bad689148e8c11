"""
Tests for named characteristics, the Legendre transform and tree sums
"""
from fractions import Fraction

import pytest

from src.core.errors import PreconditionError
from src.exactsym import PolySeries1, SymFunc, e, h, plethysm, rank
from src.hlaurent import StableCharTable
from src.opchar import (
    StarSymFunc,
    classical_legendre,
    cobar_char,
    compositional_inverse,
    legendre,
    named_char,
    plethystic_inverse,
    rank_commutes,
    table_char,
    tree_char,
    tree_counts,
    tree_counts_by_legendre,
)

TREE_COUNTS = {3: 1, 4: 4, 5: 26, 6: 236}


class TestNamedOperads:
    def test_lie_in_weight_three_is_e3(self):
        assert named_char("lie", 3).homogeneous(3) == e(3, 3)

    @pytest.mark.filterwarnings("error::sympy.utilities.exceptions.SymPyDeprecationWarning")
    def test_arithmetic_weights_are_current(self):
        assert named_char("lie", 4).homogeneous(3) == e(3, 4).homogeneous(3)
        assert named_char("ass", 4).homogeneous(4).terms

    def test_com_starts_at_h3(self):
        com = named_char("com", 4)
        assert com.homogeneous(3) == h(3, 4).homogeneous(3)
        assert com.homogeneous(4) == h(4, 4)

    def test_ass_rank_counts_cyclic_orders(self):
        # (n-1)! cyclic orders on n points
        ass = named_char("ass", 5)
        r = rank(ass)
        assert r.coefficient(3) == Fraction(2, 6)
        assert r.coefficient(4) == Fraction(6, 24)

    def test_rejects_unknown_and_small(self):
        with pytest.raises(PreconditionError):
            named_char("pre-lie", 4)
        with pytest.raises(PreconditionError):
            named_char("com", 2)

    def test_name_is_case_insensitive(self):
        assert named_char("COM", 3) == named_char("com", 3)


class TestLegendre:
    def test_h2_and_e2_are_exchanged(self):
        assert legendre(h(2, 6)).f == e(2, 6)
        assert legendre(e(2, 6)).f == h(2, 6)

    def test_involution(self):
        f = h(2, 5) + SymFunc({(3,): 2, (2, 1): -1, (1, 1, 1, 1): Fraction(1, 3)}, 5)
        assert legendre(legendre(f)) == f

    def test_admission(self):
        with pytest.raises(PreconditionError):
            StarSymFunc(SymFunc({(1,): 1, (2,): 1}, 3))
        with pytest.raises(PreconditionError):
            # a*h_2 + b*e_2 with a + b = 0
            StarSymFunc(h(2, 3) - e(2, 3))

    def test_star_keeps_h2_e2_split(self):
        star = StarSymFunc(h(2, 4) * 3 + e(2, 4))
        assert (star.h2_coefficient, star.e2_coefficient) == (3, 1)
        assert star.a2 == 4

    def test_plethystic_inverse(self):
        u = SymFunc({(1,): 2, (2,): 1, (1, 1): -1, (3,): 5}, 5)
        v = plethystic_inverse(u)
        assert plethysm(u, v) == SymFunc.p(1, 5)
        assert plethysm(v, u) == SymFunc.p(1, 5)

    def test_compositional_inverse(self):
        u = PolySeries1({1: 1, 2: 1}, 5, "x")
        v = compositional_inverse(u)
        assert u.compose(v) == PolySeries1({1: 1}, 5, "x")

    def test_classical_transform_of_square(self):
        square = PolySeries1({2: Fraction(1, 2)}, 6, "x")
        assert classical_legendre(square) == square

    def test_rank_commutes(self):
        f = e(2, 6) - h(3, 6) + SymFunc({(4,): 1, (2, 2, 1): -2}, 6)
        assert rank_commutes(f)


class TestCobar:
    def test_cobar_of_com_is_lie(self):
        assert cobar_char(named_char("com", 6)) == named_char("lie", 6)

    @pytest.mark.slow
    def test_cobar_of_com_is_lie_through_eight(self):
        assert cobar_char(named_char("com", 8)) == named_char("lie", 8)

    def test_cobar_needs_operad_in_weight_three(self):
        with pytest.raises(PreconditionError):
            cobar_char(h(2, 4))


class TestTrees:
    def test_counts_by_enumeration(self):
        assert tree_counts(6) == TREE_COUNTS

    def test_counts_by_legendre(self):
        assert tree_counts_by_legendre(6) == TREE_COUNTS

    def test_tree_sum_matches_transform(self):
        table = StableCharTable.trivial([(0, 3), (0, 4)])
        W = 5
        transformed = legendre(e(2, W) - table_char(table, W)).f
        assert transformed == h(2, W) + tree_char(table, W)

    def test_tree_sums_need_genus_zero(self):
        with pytest.raises(PreconditionError):
            tree_char(StableCharTable.trivial([(1, 1)]), 4)
