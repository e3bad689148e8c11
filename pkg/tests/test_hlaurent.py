"""
Tests for hbar-Laurent series, the Laplacian, CCh and Gaussian integrals
"""
from fractions import Fraction

import pytest

from src.core.errors import PreconditionError, TruncationError
from src.exactsym import SymFunc, VirtualCharacter, h
from src.graphzoo.oracles import burnside_char
from src.hlaurent import (
    HLaurent,
    Measure,
    StableCharTable,
    TruncationSpec,
    adjoint_apply_h,
    cch,
    free_modular_char,
    functional_integral,
    gaussian_moment,
    h_plethysm,
    laplacian,
    moment_coefficient,
    pleth_exp,
    pleth_log,
    wick_side,
)
from src.hlaurent.gaussian import monomial_moment


def trunc(W, floor=-2, **kwargs):
    return TruncationSpec(max_weight=W, hexp_min_x2=floor, **kwargs)


class TestArithmetic:
    def test_products_add_exponents(self):
        t = trunc(4)
        product = HLaurent.monomial(-2, (1,), trunc=t) * HLaurent.monomial(2, (1,), trunc=t)
        assert dict(product.terms) == {(0, (1, 1), ()): Fraction(1)}

    def test_half_powers(self):
        t = trunc(4)
        root = HLaurent.monomial(1, trunc=t)
        assert dict((root * root).terms) == {(2, (), ()): Fraction(1)}

    def test_floor_enforced(self):
        with pytest.raises(TruncationError):
            HLaurent({(-4, (3, 3), ()): 1}, trunc(4))

    def test_positive_floor_rejected(self):
        with pytest.raises(ValueError):
            TruncationSpec(max_weight=3, hexp_min_x2=2)

    def test_mismatched_windows_need_coercion(self):
        with pytest.raises(TruncationError):
            HLaurent.one(trunc(3)) + HLaurent.one(trunc(4))
        coerced = HLaurent.one(trunc(4)).coerce(trunc(3))
        assert HLaurent.one(trunc(3)) + coerced == HLaurent({(0, (), ()): 2}, trunc(3))


class TestPlethysm:
    def test_hbar_raised_under_power_sums(self):
        g = HLaurent.monomial(2, (2,), trunc=trunc(12))
        result = h_plethysm(SymFunc.p(3, 12), g)
        assert dict(result.terms) == {(6, (6,), ()): Fraction(1)}

    def test_p1_is_identity(self):
        f = HLaurent({(0, (1,), ()): 1, (2, (2, 1), ()): 3}, trunc(6))
        assert dict(h_plethysm(SymFunc.p(1, 6), f).terms) == dict(f.terms)

    def test_weight_zero_argument_rejected(self):
        with pytest.raises(PreconditionError):
            h_plethysm(SymFunc.p(2, 4), HLaurent.monomial(-2, (2,), trunc=trunc(4)))

    def test_exp_of_p1(self):
        exp_p1 = pleth_exp(HLaurent.monomial(0, (1,), trunc=trunc(3)))
        expected = SymFunc.one(3) + h(1, 3) + h(2, 3) + h(3, 3)
        assert dict(exp_p1.terms) == {(0, k, ()): v for k, v in expected.terms.items()}

    def test_exp_of_zero(self):
        assert dict(pleth_exp(HLaurent.zero(trunc(4))).terms) == {(0, (), ()): Fraction(1)}

    def test_log_inverts_exp(self):
        f = HLaurent({(0, (1,), ()): 1, (2, (2,), ()): 3, (-2, (1, 1, 1), ()): Fraction(1, 6)}, trunc(4))
        assert dict(pleth_log(pleth_exp(f)).terms) == dict(f.terms)

    @pytest.mark.filterwarnings("error::sympy.utilities.exceptions.SymPyDeprecationWarning")
    def test_log_uses_current_mobius(self):
        f = HLaurent.monomial(0, (1,), trunc=trunc(4))
        assert dict(pleth_log(pleth_exp(f)).terms) == dict(f.terms)

    def test_exp_is_a_homomorphism(self):
        f = HLaurent({(0, (1,), ()): 1}, trunc(4))
        g = HLaurent({(-2, (1, 1, 1), ()): 2, (2, (1,), ()): -1}, trunc(4))
        assert dict(pleth_exp(f + g).terms) == dict((pleth_exp(f) * pleth_exp(g)).terms)


class TestLaplacian:
    def test_second_derivative_term(self):
        f = HLaurent.monomial(0, (1, 1), trunc=trunc(2, 0))
        assert dict(laplacian(f).terms) == {(2, (), ()): Fraction(1)}

    def test_first_derivative_term(self):
        f = HLaurent.monomial(0, (2,), trunc=trunc(2, 0))
        assert dict(laplacian(f).terms) == {(2, (), ()): Fraction(1)}

    def test_exponential(self):
        f = HLaurent.monomial(0, (1, 1), trunc=trunc(2, 0))
        assert dict(laplacian(f, exponentiate=True).terms) == {(0, (1, 1), ()): 1, (2, (), ()): 1}

    def test_exp_plus_and_minus_cancel(self):
        f = HLaurent({(0, (2, 1, 1), ()): 1, (0, (1, 1, 1, 1), ()): 3, (2, (2,), ()): -2}, trunc(4, 0))
        back = laplacian(laplacian(f, 1, True), -1, True)
        assert dict(back.terms) == dict(f.terms)

    @pytest.mark.parametrize("partition", [(1, 1), (2,), (2, 2), (1, 1, 1, 1), (4, 2), (2, 1, 1, 1, 1)])
    def test_exp_laplacian_is_adjoint_of_exp_h2(self, partition):
        exp_h2 = pleth_exp(HLaurent({(2, (1, 1), ()): Fraction(1, 2), (2, (2,), ()): Fraction(1, 2)},
                                    trunc(12, 0)))
        f = HLaurent.monomial(0, partition, trunc=trunc(6, 0))
        assert dict(adjoint_apply_h(exp_h2, f).terms) == dict(laplacian(f, exponentiate=True).terms)


class TestCharacteristics:
    def test_cch_of_trivial_trivalent(self):
        table = StableCharTable.trivial([(0, 3)])
        result = cch(table, trunc(3))
        assert dict(result.terms) == {(-2, k, ()): v for k, v in h(3, 3).terms.items()}

    def test_cch_of_genus_one(self):
        result = cch(StableCharTable.trivial([(1, 1)]), trunc(3))
        assert dict(result.terms) == {(0, (1,), ()): Fraction(1)}

    def test_unstable_entry_rejected(self):
        with pytest.raises(PreconditionError):
            StableCharTable({(0, 2): VirtualCharacter.trivial(2)})

    def test_suspension_is_omega_tilde(self):
        table = StableCharTable({(0, 3): VirtualCharacter.trivial(3), (1, 2): VirtualCharacter.sign_character(2)})
        assert cch(table.suspension(), trunc(4)) == cch(table, trunc(4)).omega_tilde()

    def test_window_must_reach_hbar_inverse(self):
        with pytest.raises(TruncationError):
            free_modular_char(StableCharTable.trivial([(0, 3)]), trunc(3, 0))

    @pytest.mark.parametrize("W", [2, 3, 4])
    def test_free_modular_on_genus_one_leg(self, W):
        result = free_modular_char(StableCharTable.trivial([(1, 1)]), trunc(W))
        assert dict(result.terms) == {(0, (1,), ()): Fraction(1), (2, (), ()): Fraction(1)}

    def test_empty_table(self):
        assert free_modular_char(StableCharTable(), trunc(3)).is_zero()

    def test_loop_on_trivalent_vertex(self):
        result = free_modular_char(StableCharTable.trivial([(0, 3)]), trunc(1))
        assert result.coefficient(0, (1,)) == 1

    @pytest.mark.parametrize("g,n", [(0, 4), (1, 1), (1, 2)])
    def test_free_modular_matches_burnside(self, g, n):
        table = StableCharTable.trivial([(0, 3), (1, 1)])
        result = free_modular_char(table, trunc(2))
        coefficient = result.hbar_coefficient(2 * (g - 1)).homogeneous(n)
        assert dict(coefficient.terms) == dict(burnside_char(g, n, table).terms)


class TestGaussian:
    def test_moments(self):
        assert moment_coefficient(1, 2, Measure.NU) == 1
        assert moment_coefficient(2, 2, Measure.NU) == 2
        assert moment_coefficient(1, 1, Measure.MU) == 0
        assert moment_coefficient(2, 1, Measure.MU) == 1
        assert moment_coefficient(2, 2, Measure.MU) == 3
        assert dict(gaussian_moment(2, 1, "mu").terms) == {(2, 0): Fraction(1)}

    def test_monomial_moment(self):
        assert monomial_moment((1, 1), Measure.NU) == (2, Fraction(1))

    def test_integral_of_one(self):
        result = functional_integral(HLaurent.one(trunc(4)), Measure.MU, trunc(4))
        assert dict(result.terms) == {(0, (), ()): Fraction(1)}

    def test_negative_weight_integrand_rejected(self):
        F = HLaurent({(-2, (1,), ()): 1}, trunc(4))
        with pytest.raises(PreconditionError):
            functional_integral(F, Measure.NU, trunc(4))

    @pytest.mark.slow
    def test_wick_formula_on_genus_one_leg(self):
        table = StableCharTable.trivial([(1, 1)])
        integral_side = wick_side(cch(table, trunc(4)), Measure.MU, sign=1)
        assert dict(integral_side.terms) == dict(free_modular_char(table, trunc(4)).terms)
