"""Exterior algebra oracle tests against hand-computed small cases."""
from fractions import Fraction

import pytest

from hermlie.forms import Form, all_index_tuples, merge_sign, sort_sign
from hermlie.scalars import GR_ONE, GaussianRational


def f(*indices):
    return Form.basis(6, indices)


class TestIndexBookkeeping:
    def test_sort_sign(self):
        assert sort_sign((1, 2, 3)) == (1, (1, 2, 3))
        assert sort_sign((2, 1, 3)) == (-1, (1, 2, 3))
        assert sort_sign((3, 1, 2)) == (1, (1, 2, 3))
        assert sort_sign((1, 1)) == (0, None)

    def test_merge_sign(self):
        assert merge_sign((1, 3), (2, 4)) == (-1, (1, 2, 3, 4))
        assert merge_sign((1, 2), (3, 4)) == (1, (1, 2, 3, 4))
        assert merge_sign((1, 2), (2, 3)) == (0, None)

    def test_unsorted_constructor_input(self):
        assert Form(6, 2, {(2, 1): GR_ONE}) == -f(1, 2)
        assert Form(6, 2, {(1, 1): GR_ONE}) == Form.zero(6, 2)

    def test_degree_and_range_validation(self):
        with pytest.raises(ValueError):
            Form(6, 2, {(1, 2, 3): GR_ONE})
        with pytest.raises(ValueError):
            Form(6, 1, {(7,): GR_ONE})


class TestAlgebra:
    def test_coeff_sign(self):
        w = f(1, 2)
        assert w.coeff(1, 2) == GR_ONE
        assert w.coeff(2, 1) == -GR_ONE
        assert w.coeff(1, 1) == 0
        assert w.coeff(3, 4) == 0

    def test_wedge_oracle(self):
        assert f(1).wedge(f(2)) == f(1, 2)
        assert f(2).wedge(f(1)) == -f(1, 2)
        assert f(1, 2).wedge(f(1, 3)) == Form.zero(6, 4)
        assert f(1, 3).wedge(f(2, 4)) == -f(1, 2, 3, 4)
        two_form = f(1, 2) + f(3, 4)
        assert two_form.wedge(two_form) == 2 * f(1, 2, 3, 4)

    def test_zero_coefficients_dropped(self):
        w = f(1, 2) - f(1, 2)
        assert not w
        assert w.coeffs == {}

    def test_contract_oracle(self):
        e1 = [1, 0, 0, 0, 0, 0]
        e2 = [0, 1, 0, 0, 0, 0]
        assert f(1, 2).contract(e1) == f(2)
        assert f(1, 2).contract(e2) == -f(1)
        assert f(1, 2).evaluate(e1, e2) == 1
        assert f(1, 2).evaluate(e2, e1) == -1
        assert f(1, 2).evaluate(e1, e1) == 0

    def test_evaluate_bilinear(self):
        u = [Fraction(1, 2), 0, Fraction(3), 0, 0, 0]
        v = [0, Fraction(2), 0, 0, 0, Fraction(-1)]
        w = f(1, 2) + 4 * f(3, 6)
        # hand expansion: (1/2)(2) + 4*3*(-1)
        assert w.evaluate(u, v) == Fraction(1) - 12

    def test_substitute_basis_roundtrip(self):
        w = f(1, 2) + 3 * f(2, 5)
        swap = {1: f(2), 2: f(1)}
        assert w.substitute_basis(swap).substitute_basis(swap) == w
        assert w.substitute_basis(swap) == -f(1, 2) + 3 * f(1, 5)

    def test_conjugate(self):
        w = Form(6, 1, {(1,): GaussianRational(Fraction(1), Fraction(2))})
        assert w.conjugate() == Form(
            6, 1, {(1,): GaussianRational(Fraction(1), Fraction(-2))})

    def test_all_index_tuples(self):
        assert len(all_index_tuples(6, 2)) == 15
        assert len(all_index_tuples(6, 6)) == 1
        assert all_index_tuples(6, 0) == [()]
