"""Lie algebra layer: parsing, differential, series, nilradical certificates.

Oracles are tiny algebras whose brackets are known by hand: the 3-dimensional
Heisenberg algebra (padded to dimension 6 with abelian directions), the
2-dimensional affine algebra, and the abelian algebra.
"""
from fractions import Fraction

import pytest

from hermlie.forms import Form
from hermlie.liealg import (
    LieAlgebra,
    ce_differential,
    derived_series,
    find_nilradical,
    from_json,
    is_nilpotent,
    is_solvable,
    is_strongly_unimodular,
    jacobi_holds,
    lower_central_series,
    parse_form,
    parse_scalar,
    parse_structure_equations,
    print_structure_equations,
    to_json,
    verify_nilradical,
)
from hermlie.scalars import GR_ONE, GR_ZERO, GaussianRational

HEIS = "(0, 0, f12, 0, 0, 0)"        # [f1, f2] = -f3
AFFINE = "(f12, 0, 0, 0, 0, 0)"      # [f1, f2] = -f1, not unimodular
ABELIAN = "(0, 0, 0, 0, 0, 0)"


def basis_vector(i, dim=6):
    return [GR_ONE if t == i - 1 else GR_ZERO for t in range(dim)]


class TestParsing:
    def test_parse_and_print_roundtrip(self):
        text = "(f35+f16, f45-f26, f36, -f46, 0, 0)"
        g = parse_structure_equations(text)
        g2 = parse_structure_equations(print_structure_equations(g))
        assert [f.coeffs for f in g.d1] == [f.coeffs for f in g2.d1]

    def test_parse_with_parameters(self):
        g = parse_structure_equations("(p f12, -2p f12, 0, 0, 0, 0)",
                                      {"p": Fraction(1, 3)})
        assert g.d1[0].coeff(1, 2) == Fraction(1, 3)
        assert g.d1[1].coeff(1, 2) == Fraction(-2, 3)

    def test_parse_scalar(self):
        assert parse_scalar("-1/2") == GaussianRational(Fraction(-1, 2))
        assert parse_scalar("2(1+q)^2", {"q": Fraction(1)}) == 8

    def test_parse_form(self):
        w = parse_form("f12+4f34-f56")
        assert w.coeff(3, 4) == 4 and w.coeff(5, 6) == -1

    def test_parse_errors(self):
        with pytest.raises(ValueError):
            parse_structure_equations("(0, 0, 0)")  # wrong entry count
        with pytest.raises(ValueError):
            parse_structure_equations("0, 0, 0, 0, 0, 0")  # missing parens

    def test_json_roundtrip(self):
        g = parse_structure_equations(HEIS, name="heis")
        g2 = from_json(to_json(g))
        assert g2.name == "heis"
        assert [f.coeffs for f in g.d1] == [f.coeffs for f in g2.d1]


class TestStructureConstants:
    def test_bracket_sign_convention(self):
        # d f^3 = f^12 encodes [f1, f2] = -f3
        g = parse_structure_equations(HEIS)
        assert g.bracket(basis_vector(1), basis_vector(2)) == [
            GR_ZERO, GR_ZERO, -GR_ONE, GR_ZERO, GR_ZERO, GR_ZERO]
        assert g.structure_constant(3, 1, 2) == -1

    def test_bracket_antisymmetry_and_ad(self):
        g = parse_structure_equations("(f35+f16, f45-f26, f36, -f46, 0, 0)")
        u, v = basis_vector(3), basis_vector(5)
        uv = g.bracket(u, v)
        vu = g.bracket(v, u)
        assert uv == [-x for x in vu]
        A = g.ad_matrix(u)
        # columns of ad_u are the brackets [u, f_j]
        for j in range(6):
            col = [A[i][j] for i in range(6)]
            assert col == g.bracket(u, basis_vector(j + 1))

    def test_dual_pairing(self):
        # d f^i (X, Y) = -f^i([X, Y]) for every basis pair
        g = parse_structure_equations("(f35+f16, f45-f26, f36, -f46, 0, 0)")
        for i in range(1, 7):
            for j in range(1, 7):
                for k in range(j + 1, 7):
                    lhs = g.d1[i - 1].evaluate(basis_vector(j), basis_vector(k))
                    rhs = -g.bracket(basis_vector(j), basis_vector(k))[i - 1]
                    assert lhs == rhs


class TestDifferential:
    def test_d_squared_zero_iff_jacobi(self):
        good = parse_structure_equations(HEIS)
        assert jacobi_holds(good)
        # d f^1 = f^23 with d f^3 = f^45 gives d^2 f^1 = -f^245
        bad = LieAlgebra(6, [
            Form(6, 2, {(2, 3): GR_ONE}),
            Form.zero(6, 2),
            Form(6, 2, {(4, 5): GR_ONE}),
            Form.zero(6, 2), Form.zero(6, 2), Form.zero(6, 2)])
        assert not jacobi_holds(bad)

    def test_antiderivation_on_oracle(self):
        g = parse_structure_equations(HEIS)
        u = Form.basis(6, (3,))
        v = Form.basis(6, (4,))
        assert ce_differential(g, u.wedge(v)) == (
            ce_differential(g, u).wedge(v) - u.wedge(ce_differential(g, v)))


class TestSeriesAndNilradical:
    def test_abelian(self):
        g = parse_structure_equations(ABELIAN)
        assert is_nilpotent(g) and is_solvable(g)
        assert len(find_nilradical(g)) == 6

    def test_heisenberg_nilpotent(self):
        g = parse_structure_equations(HEIS)
        assert is_nilpotent(g)
        assert len(lower_central_series(g)[-1]) == 0

    def test_affine_solvable_not_nilpotent(self):
        g = parse_structure_equations(AFFINE)
        assert is_solvable(g)
        assert not is_nilpotent(g)
        assert len(derived_series(g)[-1]) == 0

    def test_strongly_unimodular(self):
        five = [basis_vector(i) for i in range(1, 6)]
        ok = parse_structure_equations("(f35+f16, f45-f26, f36, -f46, 0, 0)")
        assert is_strongly_unimodular(ok, five)
        # the affine direction has nonzero trace on the nilradical quotient
        bad = parse_structure_equations("(f16, 0, 0, 0, 0, 0)")
        assert not is_strongly_unimodular(bad)

    def test_verify_nilradical_certificate(self):
        g = parse_structure_equations("(f35+f16, f45-f26, f36, -f46, 0, 0)")
        five = [basis_vector(i) for i in range(1, 6)]
        report = verify_nilradical(g, five)
        assert report["certified_nilradical"]
        # the full space is an ideal but not a nilpotent one
        whole = [basis_vector(i) for i in range(1, 7)]
        assert not verify_nilradical(g, whole)["certified_nilradical"]
