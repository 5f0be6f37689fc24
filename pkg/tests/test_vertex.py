from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings

from conftest import P, odd_polynomials
from corequot.exceptions import PreconditionError, ValidationError
from corequot.linalg import SolveStatus
from corequot.symfunc import GradedPolynomial, parse_polynomial, reduced_schur
from corequot.vertex import (
    Operator,
    as_odd_polynomial,
    commutator_apply,
    commutator_fit,
    exp_xi_coefficient,
    heisenberg_apply,
    heisenberg_relations,
    odd_monomials,
    vertex_apply,
    vertex_relations,
)

ONE = GradedPolynomial.constant(1)
t1 = GradedPolynomial.variable(1)
t3 = GradedPolynomial.variable(3)


class TestHeisenberg:
    def test_derivative_and_multiplication(self):
        assert heisenberg_apply(1, t1 * t1) == 2 * t1
        assert heisenberg_apply(-3, ONE) == 3 * t3
        assert heisenberg_apply(3, t1) == 0

    @pytest.mark.parametrize("j", [0, 2, -4])
    def test_rejects_even_index(self, j):
        with pytest.raises(PreconditionError):
            heisenberg_apply(j, ONE)

    def test_relations_on_small_degrees(self):
        assert all(check.holds for check in heisenberg_relations(3, 6))


class TestExpCoefficients:
    def test_first_terms(self):
        assert exp_xi_coefficient(0) == 1
        assert exp_xi_coefficient(1) == 2 * t1
        assert exp_xi_coefficient(2) == 2 * t1 * t1
        assert exp_xi_coefficient(3) == Fraction(4, 3) * t1 * t1 * t1 + 2 * t3

    def test_negative(self):
        with pytest.raises(PreconditionError):
            exp_xi_coefficient(-1)

    def test_matches_product_of_exponentials(self):
        # exp(2 xi) = prod_{j odd} sum_e (2 t_j)^e p^{je} / e!, truncated at p^12
        top = 12
        series = ONE
        for j in range(1, top + 1, 2):
            factor = GradedPolynomial()
            for e in range(top // j + 1):
                factor = factor + GradedPolynomial.monomial({j: e}, Fraction(2**e, factorial(e)))
            series = series * factor
        for m in range(top + 1):
            assert exp_xi_coefficient(m) == series.homogeneous_component(m), m


class TestVertexOperator:
    def test_vacuum_values(self):
        assert vertex_apply(0, ONE) == Fraction(-1, 2)
        assert vertex_apply(-1, ONE) == -t1
        assert vertex_apply(1, ONE) == 0

    def test_linear(self):
        f, g = t1 * t1, t3
        assert vertex_apply(1, f + 2 * g) == vertex_apply(1, f) + 2 * vertex_apply(1, g)

    @settings(max_examples=30)
    @given(odd_polynomials(5))
    def test_lowers_degree_by_k(self, f):
        for k in range(-5, 6):
            for d in f.degrees():
                image = vertex_apply(k, f.homogeneous_component(d))
                assert image.is_homogeneous(d - k)

    @pytest.mark.slow
    def test_degree_shift_on_every_monomial_up_to_ten(self):
        for g in odd_monomials(10):
            d = g.max_degree
            for k in range(-5, 6):
                assert vertex_apply(k, g).is_homogeneous(d - k), (g.pretty(), k)

    def test_output_stays_odd(self):
        image = vertex_apply(-2, reduced_schur(P("2,2")))
        assert image.is_odd_supported()

    def test_commutes_with_heisenberg_as_expected(self):
        assert all(check.holds for check in vertex_relations(3, 2, 6))

    def test_rejects_even_variables(self):
        with pytest.raises(ValidationError):
            as_odd_polynomial(parse_polynomial("t2"))


class TestOperator:
    @pytest.mark.parametrize(
        "text, kind, index",
        [("a3", "a", 3), ("a-1", "a", -1), ("X0", "X", 0), ("X-2", "X", -2), ("I", "I", 0)],
    )
    def test_parse(self, text, kind, index):
        op = Operator.parse(text)
        assert (op.kind, op.index) == (kind, index)
        assert str(op) == text

    @pytest.mark.parametrize("text", ["b2", "a", "X", "a1.5", ""])
    def test_parse_errors(self, text):
        with pytest.raises(ValidationError):
            Operator.parse(text)

    def test_even_heisenberg_index(self):
        with pytest.raises(PreconditionError):
            Operator("a", 2)

    def test_degree_shift(self):
        assert Operator.parse("a3").degree_shift == 3
        assert Operator.parse("X-2").degree_shift == -2
        assert Operator.parse("I").degree_shift == 0

    def test_commutator_of_identity_vanishes(self):
        assert commutator_apply(Operator("I"), Operator("X", 1), t1 * t3) == 0


class TestCommutatorFit:
    def test_heisenberg_vertex(self):
        fit = commutator_fit(Operator("a", 1), Operator("X", 1), 6)
        assert fit.status is SolveStatus.unique
        assert fit.coefficients == {"X2": 2, "I": 0}
        assert fit.combination() == "2·X2"

    def test_central_term(self):
        fit = commutator_fit(Operator("a", 1), Operator("a", -1), 4)
        assert fit.consistent
        assert fit.coefficients["I"] == 1
        assert fit.coefficients["X0"] == 0
        assert fit.combination() == "I"

    def test_combination_text(self):
        fit = commutator_fit(Operator("a", 1), Operator("a", -1), 2)
        fit.coefficients = {"X0": Fraction(-1), "I": Fraction(1, 2)}
        assert fit.combination() == "-X0 + 1/2·I"
        fit.coefficients = {"X0": Fraction(0), "I": Fraction(0)}
        assert fit.combination() == "0"

    def test_vertex_pair_is_reported(self):
        fit = commutator_fit(Operator("X", 1), Operator("X", -1), 4)
        assert fit.checked == len(odd_monomials(4))
        assert fit.to_json()["commutator"] == "[X1,X-1]"

    def test_negative_bound(self):
        with pytest.raises(PreconditionError):
            commutator_fit(Operator("X", 0), Operator("X", 0), -1)


def test_odd_monomials():
    assert [m.pretty() for m in odd_monomials(3)] == ["1", "t1", "t1^2", "t3", "t1^3"]


@pytest.mark.slow
def test_relations_at_acceptance_scale():
    assert all(check.holds for check in heisenberg_relations(7, 10))
    assert all(check.holds for check in vertex_relations(7, 4, 10))
