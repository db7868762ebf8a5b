import random
from fractions import Fraction

import pytest

from symchar.pfdcore import (
    binomial_poly,
    fundamental_coefficient,
    pfd_decompose,
    sl2_coefficient,
)
from symchar.polyring import FactoredRational, LaurentPoly, PoleError
from symchar.rootsys import build_root_system, weight_diff
from symchar.weightsys import weight_system


def q(exponent, coeff=1):
    return LaurentPoly.monomial((exponent,), coeff)


class TestBinomialPoly:
    def test_order_one_is_constant(self):
        assert all(binomial_poly(1, n) == 1 for n in range(10))

    def test_order_two_is_linear(self):
        assert all(binomial_poly(2, n) == n + 1 for n in range(10))

    def test_iterated_summation_value(self):
        # triple nested unit sum up to 4
        assert binomial_poly(3, 4) == 15

    def test_rejects_zero_order(self):
        with pytest.raises(ValueError):
            binomial_poly(0, 3)
        with pytest.raises(ValueError):
            binomial_poly(2, -1)


class TestSl2Adjoint:
    def test_paper_coefficients(self, sl2_adjoint):
        closed = pfd_decompose(sl2_adjoint)
        got = {(term.weight, term.order): term.coeff for term in closed.terms}
        assert got[((2,), 1)] == FactoredRational(q(6), [((2,), 1), ((4,), 1)])
        assert got[((0,), 1)] == FactoredRational(q(2, -1), [((2,), 2)])
        assert got[((-2,), 1)] == FactoredRational(LaurentPoly.one(1), [((2,), 1), ((4,), 1)])

    def test_coefficients_sum_to_one(self, sl2_adjoint):
        assert pfd_decompose(sl2_adjoint).coefficient_sum() == 1


def test_trivial_module(a1):
    closed = pfd_decompose(weight_system(a1, (0,)))
    assert len(closed.terms) == 1
    term = closed.terms[0]
    assert term.weight == (0,) and term.order == 1
    assert term.coeff == 1


class TestSl3Adjoint:
    def test_zero_weight_coefficients(self, sl3_adjoint):
        closed = pfd_decompose(sl3_adjoint)
        got = {(term.weight, term.order): term.coeff for term in closed.terms}
        # -3 a^4 b^4 / ((ab-1)^2 (a-b^2)^2 (a^2-b)^2), rewritten over binomials
        expected = FactoredRational(
            LaurentPoly.monomial((-2, 4), -3),
            [((1, 1), 2), ((-1, 2), 2), ((-2, 1), 2)],
        )
        assert expected.evaluate((Fraction(2), Fraction(3))) == Fraction(-3888, 1225)
        assert got[((0, 0), 1)] == expected
        assert ((0, 0), 2) in got
        # the order-2 coefficient is the same product without the derivative factor 3
        assert got[((0, 0), 2)] == expected * Fraction(1, 3)

    def test_term_count_matches_total_multiplicity(self, sl3_adjoint):
        closed = pfd_decompose(sl3_adjoint)
        assert len(closed.terms) == sum(sl3_adjoint.entries.values())

    def test_orders_bounded_by_multiplicity(self, sl3_adjoint):
        closed = pfd_decompose(sl3_adjoint)
        for term in closed.terms:
            assert 1 <= term.order <= sl3_adjoint.multiplicity(term.weight)

    def test_denominators_are_support_differences(self, sl3_adjoint):
        support = set(sl3_adjoint.support())
        differences = {
            weight_diff(nu, mu) for nu in support for mu in support if nu != mu
        }
        closed = pfd_decompose(sl3_adjoint)
        for term in closed.terms:
            for alpha in term.coeff.factors:
                negated = tuple(-x for x in alpha)
                assert alpha in differences or negated in differences


class TestMultiplicityFree:
    @pytest.mark.parametrize(
        "series,rank,highest",
        [("A", 1, (3,)), ("A", 2, (1, 0)), ("B", 2, (0, 1)), ("A", 3, (1, 0, 0))],
    )
    def test_order_one_product_formula(self, series, rank, highest):
        rs = build_root_system(series, rank)
        table = weight_system(rs, highest)
        assert all(count == 1 for count in table.entries.values())
        closed = pfd_decompose(table)
        for term in closed.terms:
            assert term.order == 1
            expected = FactoredRational(
                LaurentPoly.one(rank),
                [(weight_diff(nu, term.weight), 1) for nu in table.support() if nu != term.weight],
            )
            assert term.coeff == expected


class TestSumToOne:
    @pytest.mark.parametrize(
        "series,rank,highest",
        [("A", 1, (4,)), ("A", 2, (1, 1)), ("A", 2, (2, 0)), ("B", 2, (1, 0)), ("G", 2, (1, 0))],
    )
    def test_unit_sum(self, series, rank, highest):
        rs = build_root_system(series, rank)
        closed = pfd_decompose(weight_system(rs, highest))
        assert closed.coefficient_sum() == 1


class TestReconstruction:
    @pytest.mark.parametrize("series,rank,highest", [("A", 1, (3,)), ("A", 2, (1, 1))])
    def test_reconstruction_at_random_points(self, series, rank, highest):
        rs = build_root_system(series, rank)
        table = weight_system(rs, highest)
        closed = pfd_decompose(table)
        rng = random.Random(17)
        checked = 0
        while checked < 10:
            point = tuple(Fraction(rng.randint(2, 9), rng.randint(1, 3)) for _ in range(rank))
            z = Fraction(rng.randint(1, 5), rng.randint(6, 11))
            try:
                lhs = Fraction(0)
                for term in closed.terms:
                    base = Fraction(1)
                    for value, e in zip(point, term.weight):
                        base *= value**e
                    lhs += term.coeff.evaluate(point) / (1 - base * z) ** term.order
                rhs = Fraction(1)
                for mu in table.support():
                    base = Fraction(1)
                    for value, e in zip(point, mu):
                        base *= value**e
                    rhs /= (1 - base * z) ** table.multiplicity(mu)
            except (PoleError, ZeroDivisionError):
                continue
            assert lhs == rhs
            checked += 1


class TestClosedForms:
    @pytest.mark.parametrize("m", range(7))
    def test_sl2_closed_form_matches_decomposition(self, a1, m):
        closed = pfd_decompose(weight_system(a1, (m,)))
        got = {term.weight: term.coeff for term in closed.terms}
        for i in range(m + 1):
            assert got[(m - 2 * i,)] == sl2_coefficient(m, i)

    def test_sl2_closed_form_values(self):
        assert sl2_coefficient(2, 0) == FactoredRational(q(6), [((2,), 1), ((4,), 1)])
        assert sl2_coefficient(2, 1) == FactoredRational(q(2, -1), [((2,), 2)])
        # q^12/((q^6-1)(q^4-1)(q^2-1)) carries three sign flips over binomials
        assert sl2_coefficient(3, 0) == FactoredRational(
            q(12, -1), [((2,), 1), ((4,), 1), ((6,), 1)]
        )
        assert sl2_coefficient(0, 0) == 1

    def test_sl2_index_range(self):
        with pytest.raises(ValueError):
            sl2_coefficient(3, 4)
        with pytest.raises(ValueError):
            sl2_coefficient(3, -1)

    @pytest.mark.parametrize("rank", [1, 2, 3, 4])
    def test_fundamental_closed_form_matches_decomposition(self, rank):
        rs = build_root_system("A", rank)
        highest = (1,) + (0,) * (rank - 1)
        table = weight_system(rs, highest)
        closed = pfd_decompose(table)
        got = {term.weight: term.coeff for term in closed.terms}
        support = table.support()
        for i in range(rank + 1):
            # weight -w_i + w_(i+1) with the boundary convention w_0 = w_(r+1) = 0
            weight = tuple(int(t == i) - int(t == i - 1) for t in range(rank))
            assert weight in got, (i, support)
            assert got[weight] == fundamental_coefficient(rank, i)

    def test_fundamental_rank_one_matches_sl2(self):
        assert fundamental_coefficient(1, 0) == sl2_coefficient(1, 0)
        assert fundamental_coefficient(1, 1) == sl2_coefficient(1, 1)

    def test_fundamental_rank_one_values(self):
        # q^2/(q^2 - 1) = -q^2/(1 - q^2) and -1/(q^2 - 1) = 1/(1 - q^2)
        assert fundamental_coefficient(1, 0) == FactoredRational(q(2, -1), [((2,), 1)])
        assert fundamental_coefficient(1, 1) == FactoredRational(LaurentPoly.one(1), [((2,), 1)])

    def test_fundamental_index_range(self):
        with pytest.raises(ValueError):
            fundamental_coefficient(2, 3)
