"""
Tests for exact symmetric functions, characters and one-variable series
"""
from fractions import Fraction

import pytest

from src.core.errors import PreconditionError, TruncationError
from src.exactsym import (
    PolySeries1,
    QSeries,
    SymFunc,
    VirtualCharacter,
    adjoint_apply,
    character_of,
    characteristic,
    e,
    h,
    inner_product,
    involution,
    make_partition,
    partitions_of,
    pderiv,
    plethysm,
    rank,
    sym_exp,
    sym_log,
    times_p,
    z_lambda,
)
from src.exactsym.partitions import format_partition, sort_key


class TestPartitions:
    def test_partitions_in_canonical_order(self):
        assert partitions_of(4) == ((1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,))
        assert partitions_of(0) == ((),)

    def test_make_partition_sorts(self):
        assert make_partition([1, 3, 2]) == (3, 2, 1)
        with pytest.raises(ValueError):
            make_partition([2, 0])

    def test_z_lambda(self):
        assert z_lambda((1, 1, 1)) == 6
        assert z_lambda((2, 1, 1)) == 4
        assert z_lambda((3,)) == 3

    def test_format(self):
        assert format_partition((3, 1)) == "p[3,1]"
        assert format_partition(()) == "1"

    def test_sort_key_orders_by_weight_first(self):
        ordered = sorted([(3,), (1, 1), (2,), (1,)], key=sort_key)
        assert ordered == [(1,), (1, 1), (2,), (3,)]


class TestSymFunc:
    def test_rejects_unsorted_partition(self):
        with pytest.raises(ValueError):
            SymFunc({(1, 3): 1}, 4)

    def test_drops_terms_above_truncation(self):
        f = SymFunc({(1,): 1, (2, 2): 5}, 3)
        assert dict(f.terms) == {(1,): Fraction(1)}

    def test_incompatible_truncations_refused(self):
        with pytest.raises(TruncationError):
            SymFunc.p(1, 3) + SymFunc.p(1, 4)
        assert SymFunc.p(1, 3) + SymFunc.p(1, 4).truncate(3) == SymFunc({(1,): 2}, 3)

    def test_complete_and_elementary(self):
        assert dict(h(2, 2).terms) == {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)}
        assert dict(e(2, 2).terms) == {(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)}
        h3 = h(3, 3)
        assert h3.coefficient((1, 1, 1)) == Fraction(1, 6)
        assert h3.coefficient((2, 1)) == Fraction(1, 2)
        assert h3.coefficient((3,)) == Fraction(1, 3)

    def test_items_canonical_order(self):
        f = SymFunc({(3,): 1, (1, 1): 2, (2,): 3, (1,): 4}, 3)
        assert [k for k, _ in f.items()] == [(1,), (1, 1), (2,), (3,)]


class TestOperations:
    def test_plethysm_with_p1_is_identity(self):
        f = h(3, 4) + SymFunc({(2, 1): 3}, 4)
        assert plethysm(f, SymFunc.p(1, 4)) == f
        assert plethysm(SymFunc.p(1, 4), f) == f

    def test_plethysm_of_power_sum(self):
        g = SymFunc({(1,): 1, (2,): 1}, 4)
        assert plethysm(SymFunc.p(2, 4), g) == SymFunc({(2,): 1, (4,): 1}, 4)

    def test_plethysm_needs_no_constant_term(self):
        with pytest.raises(PreconditionError):
            plethysm(h(2, 3), SymFunc.one(3))

    def test_pderiv(self):
        assert pderiv(h(2, 2), 1) == SymFunc({(1,): 1}, 1)
        assert pderiv(SymFunc({(2, 2): 3}, 4), 2) == SymFunc({(2,): 6}, 2)

    def test_times_p(self):
        assert times_p(SymFunc({(1,): 1}, 3), 2) == SymFunc({(2, 1): 1}, 3)

    def test_hall_inner_product(self):
        assert inner_product(h(2, 2), h(2, 2)) == 1
        assert inner_product(h(2, 2), e(2, 2)) == 0

    def test_adjoint_of_p1(self):
        # D(p_1) = d/dp_1
        assert adjoint_apply(SymFunc.p(1, 3), h(3, 3)) == h(2, 2)

    def test_involutions(self):
        assert involution(h(2, 2), "omega") == e(2, 2)
        tilde = involution(SymFunc({(1,): 1, (1, 1): 1, (2,): 1}, 2), "omega_tilde")
        assert dict(tilde.terms) == {(1,): Fraction(-1), (1, 1): Fraction(1), (2,): Fraction(-1)}
        with pytest.raises(PreconditionError):
            involution(h(2, 2), "omega_hat")

    def test_rank(self):
        assert rank(h(3, 3)) == PolySeries1({3: Fraction(1, 6)}, 3)
        assert rank(e(2, 2)) == PolySeries1({2: Fraction(1, 2)}, 2)

    def test_exp_log_inverse(self):
        f = SymFunc({(1,): 1, (2,): Fraction(1, 2), (2, 1): -3}, 5)
        assert sym_log(sym_exp(f)) == f

    def test_exp_of_power_sums_is_sum_of_h(self):
        power_sums = SymFunc({(n,): Fraction(1, n) for n in range(1, 5)}, 4)
        expected = SymFunc.one(4) + h(1, 4) + h(2, 4) + h(3, 4) + h(4, 4)
        assert sym_exp(power_sums) == expected


class TestCharacters:
    def test_trivial_and_sign(self):
        assert characteristic(VirtualCharacter.trivial(3)) == h(3, 3)
        assert characteristic(VirtualCharacter.sign_character(3)) == e(3, 3)

    def test_character_of_inverts_characteristic(self):
        chi = VirtualCharacter(3, {(1, 1, 1): 2, (2, 1): 0, (3,): -1})
        assert character_of(characteristic(chi), 3) == chi

    def test_regular_representation(self):
        assert characteristic(VirtualCharacter.regular(3)) == SymFunc({(1, 1, 1): 1}, 3)

    def test_cycle_type_weight_checked(self):
        with pytest.raises(ValueError):
            VirtualCharacter(3, {(2, 1, 1): 1})


class TestQSeries:
    def test_inverse_geometric(self):
        one_plus = QSeries({(0, 0): 1, (2, 0): 1})
        inverse = one_plus.inverse(8)
        assert dict(inverse.terms) == {(0, 0): 1, (2, 0): -1, (4, 0): 1, (6, 0): -1}

    def test_inverse_of_monomial_is_exact(self):
        assert QSeries.monomial(-4, 3).inverse() == QSeries.monomial(4, Fraction(1, 3))

    def test_log1p(self):
        log = QSeries({(2, 0): 1}).log1p(8)
        assert dict(log.terms) == {(2, 0): 1, (4, 0): Fraction(-1, 2), (6, 0): Fraction(1, 3)}

    def test_log1p_needs_positive_valuation(self):
        with pytest.raises(PreconditionError):
            QSeries({(0, 0): 1}).log1p(6)

    def test_substitution(self):
        s = QSeries({(1, 0): 2, (2, 0): 3}, 6)
        t = s.subs_hbar_power(2)
        assert dict(t.terms) == {(2, 0): 2, (4, 0): 3}
        assert t.prec2 == 12

    def test_coefficient_beyond_precision_refused(self):
        with pytest.raises(TruncationError):
            QSeries({(2, 0): 1}, 4).coefficient(4)
