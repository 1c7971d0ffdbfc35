"""Complex structures, complex coframes, and the named structure families."""
from fractions import Fraction

import pytest

from hermlie.cpx import (
    Complexification,
    apply_matrix,
    coframe_from_J,
    conj_alpha,
    instantiate_family,
    is_integrable,
    j_from_images,
    nijenhuis,
    realify,
    squares_to_minus_id,
    standard_j,
)
from hermlie.forms import Form
from hermlie.liealg import ce_differential, jacobi_holds, parse_structure_equations
from hermlie.scalars import GR_I, GR_ONE, GR_ZERO, GaussianRational

ABELIAN = parse_structure_equations("(0, 0, 0, 0, 0, 0)")
CONTROL = parse_structure_equations("(f35+f16, f45-f26, f36, -f46, 0, 0)")


class TestJMatrices:
    def test_standard_j_squares_to_minus_id(self):
        assert squares_to_minus_id(standard_j(6))
        assert not squares_to_minus_id([[GR_ZERO] * 6 for _ in range(6)])

    def test_j_from_images(self):
        J = j_from_images({1: [0, 1, 0, 0, 0, 0],
                           3: [0, 0, 0, 1, 0, 0],
                           5: [0, 0, 0, 0, 0, 1]})
        assert [[GaussianRational.coerce(x) for x in row] for row in J] == [
            [GaussianRational.coerce(x) for x in row] for row in standard_j(6)]

    def test_apply_matrix(self):
        v = apply_matrix(standard_j(6), [GR_ONE] + [GR_ZERO] * 5)
        assert v[1] == GR_ONE and not any(v[:1] + v[2:])


class TestIntegrability:
    def test_abelian_always_integrable(self):
        assert is_integrable(ABELIAN, standard_j(6))
        assert not nijenhuis(ABELIAN, standard_j(6))[(1, 2)][0]

    def test_control_rejects_standard_j(self):
        assert not is_integrable(CONTROL, standard_j(6))
        nj = nijenhuis(CONTROL, standard_j(6))
        assert any(any(v) for v in nj.values())

    def test_from_real_rejects_non_integrable(self):
        with pytest.raises(ValueError):
            Complexification.from_real(CONTROL, standard_j(6))

    def test_nijenhuis_tensoriality(self):
        # N is antisymmetric in its arguments; keys cover i < j only
        nj = nijenhuis(CONTROL, standard_j(6))
        assert set(nj) == {(i, j) for i in range(1, 7) for j in range(i + 1, 7)}


class TestComplexification:
    def cx(self):
        return Complexification.from_real(ABELIAN, standard_j(6))

    def test_alpha_coframe_eigenstructure(self):
        cx = self.cx()
        # alpha(J X) = i alpha(X) for each (1,0)-coframe element
        for a in cx.alphas:
            for k in range(6):
                e = [GR_ONE if t == k else GR_ZERO for t in range(6)]
                je = apply_matrix(cx.J, e)
                lhs = a.evaluate(je)
                rhs = GR_I * GaussianRational.coerce(a.evaluate(e))
                assert GaussianRational.coerce(lhs) == rhs

    def test_to_alpha_to_real_roundtrip(self):
        cx = self.cx()
        w = Form(6, 2, {(1, 2): GaussianRational(Fraction(1, 2)),
                        (3, 6): GR_ONE, (4, 5): GR_ONE})
        assert cx.to_real(cx.to_alpha(w)) == w

    def test_frame_d_matches_real_differential(self):
        ex_cx = None
        from hermlie.catalog import get_entry
        entry = get_entry("s6.25")
        ex = entry.examples[0]
        g = ex.algebra_instance()
        ex_cx = Complexification.from_real(g, ex.j())
        w = ex_cx.to_alpha(Form(6, 2, {(1, 4): GR_ONE, (2, 3): GR_ONE}))
        lhs = ex_cx.frame.d(w)
        rhs = ex_cx.to_alpha(ce_differential(g, ex_cx.to_real(w)))
        assert lhs == rhs


class TestFrameOperators:
    def frame(self):
        from hermlie.catalog import get_entry
        entry = get_entry("s6.25")
        ex = entry.examples[0]
        return Complexification.from_real(ex.algebra_instance(), ex.j()).frame

    def test_bigrade_partition(self):
        fr = self.frame()
        w = Form(6, 3, {(1, 2, 4): GR_ONE, (1, 4, 5): GR_ONE, (4, 5, 6): GR_ONE})
        graded = fr.bigrade(w)
        assert set(graded) == {(2, 1), (1, 2), (0, 3)}
        total = Form.zero(6, 3)
        for part in graded.values():
            total = total + part
        assert total == w

    def test_del_dbar_decompose_d(self):
        fr = self.frame()
        w = Form(6, 2, {(1, 5): GR_ONE})  # type (1,1)
        assert fr.del_(w) + fr.dbar(w) == fr.d(w)

    def test_mixed_type_rejected(self):
        fr = self.frame()
        w = Form(6, 2, {(1, 2): GR_ONE, (1, 4): GR_ONE})
        with pytest.raises(ValueError):
            fr.del_(w)

    def test_conj_alpha(self):
        w = Form(6, 2, {(1, 5): GR_I})
        assert conj_alpha(w) == Form(6, 2, {(4, 2): -GR_I})


class TestFamilies:
    @pytest.mark.parametrize("fid,params", [
        ("HT-s6.162^1", {}),
        ("HT-h3+s3.3^0", {"eps": 1}),
        ("N51-145", {"nu": 0, "c": 1}),
    ])
    def test_realified_families_are_lie_algebras(self, fid, params):
        fam = instantiate_family(fid, params)
        assert fam.frame.integrable()
        cx = fam.complexification()
        assert jacobi_holds(cx.g)

    def test_unknown_family(self):
        with pytest.raises(KeyError):
            instantiate_family("nonexistent-family")

    def test_unit_circle_parameter_validated(self):
        with pytest.raises(ValueError):
            instantiate_family("N51-145", {"nu": 0, "c": 2})
