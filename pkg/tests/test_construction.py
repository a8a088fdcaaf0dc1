import json
import random
from fractions import Fraction as F

import pytest

from curvejac.construction import (
    Fixture,
    a11_closed_form,
    a22_closed_form,
    block_decompose,
    build_special_hypersurface,
    gradient_pairing_map,
    permute_z4_first,
    reassemble_blocks,
    render_matrix,
    select_special_points,
    smooth_along_curve,
    verify_construction,
)
from curvejac.errors import InputError
from curvejac.incidence import (
    CurveParam,
    jacobian_evaluation_form,
    symmetry_kernel_vectors,
)
from curvejac.linalg import RationalMatrix, det_exact, kernel_exact, rank_exact
from curvejac.poly import MultiPoly, UniPoly, compose_with_curve

import propcheck

A_POINTS = [F(-1, 2), F(1), F(2), F(3), F(5), F(7)]


def fermat_quartic():
    return MultiPoly(
        5,
        {(4, 0, 0, 0, 0): 1, (0, 4, 0, 0, 0): 1, (0, 0, 4, 0, 0): 1,
         (0, 0, 0, 4, 0): 1, (0, 0, 0, 0, 4): 1},
    )


class TestBuildSpecialHypersurface:
    def test_zero_quartic(self):
        z4 = MultiPoly.monomial((0, 0, 0, 0, 1))
        p = fermat_quartic()
        f = build_special_hypersurface(z4, MultiPoly.zero(5), p)
        assert f == z4 * p

    def test_fixture_inputs_give_quintic(self, fixture_a):
        f = build_special_hypersurface(fixture_a.l, fixture_a.q, fixture_a.p)
        assert f.homogeneous_degree() == 5
        assert f == fixture_a.f0

    def test_vanishes_on_any_curve_on_the_quartic(self, fixture_b):
        # any curve with q(c) = 0 and zero last component kills both summands
        assert compose_with_curve(fixture_b.f0, fixture_b.c0.components).is_zero

    def test_restriction_identity_for_random_curves(self, fixture_a):
        rng = random.Random(12)
        for _ in range(10):
            c = propcheck.random_curve(rng, 4, 2)
            lhs = compose_with_curve(fixture_a.f0, c.components)
            rhs = (
                compose_with_curve(fixture_a.l, c.components)
                * compose_with_curve(fixture_a.q, c.components)
                + c.components[4] * compose_with_curve(fixture_a.p, c.components)
            )
            assert lhs == rhs

    def test_rejects_q_with_z4(self):
        q_bad = MultiPoly.monomial((0, 0, 0, 3, 1))
        with pytest.raises(InputError):
            build_special_hypersurface(MultiPoly.monomial((1, 0, 0, 0, 0)), q_bad, fermat_quartic())

    def test_rejects_wrong_degrees(self, fixture_a):
        with pytest.raises(InputError):
            build_special_hypersurface(fixture_a.q, fixture_a.q, fixture_a.p)


class TestSelectSpecialPoints:
    def test_fixture_a(self, fixture_a):
        pts = select_special_points(fixture_a.c0, fixture_a.l, fixture_a.p)
        assert pts.field == "rational"
        assert pts.root_points == (F(-1, 2),)
        assert len(pts.generic_points) == 5
        pc = compose_with_curve(fixture_a.p, fixture_a.c0.components)
        assert pc.evaluate(F(-1, 2)) == F(17, 16)

    def test_fixture_b(self, fixture_b):
        pts = select_special_points(fixture_b.c0, fixture_b.l, fixture_b.p)
        assert pts.root_points == (F(-1), F(1))
        assert len(pts.all_points) == 11
        assert len(set(pts.all_points)) == 11

    def test_nonsplit_goes_complex(self, fixture_b_nonsplit):
        fx = fixture_b_nonsplit
        pts = select_special_points(fx.c0, fx.l, fx.p)
        assert pts.field == "complex"
        assert [round(z.imag) for z in pts.root_points] == [-1, 1]

    def test_repeated_root_rejected(self, fixture_a):
        # l restricting to (1 + 2t)^2 on the line: 1 + 4t + 4t^2 needs d >= 2,
        # so use the conic fixture's curve with z0 + 4 z1 + 4 z2.
        l = MultiPoly(5, {(1, 0, 0, 0, 0): 1, (0, 1, 0, 0, 0): 4, (0, 0, 1, 0, 0): 4})
        conic = CurveParam(
            4, 2,
            (UniPoly.of(1), UniPoly.of(0, 1), UniPoly.of(0, 0, 1), UniPoly.zero(), UniPoly.zero()),
        )
        with pytest.raises(ValueError, match="l not generic"):
            select_special_points(conic, l, fermat_quartic())

    def test_p_vanishing_at_root_rejected(self, fixture_b):
        p_bad = MultiPoly(5, {(4, 0, 0, 0, 0): 1, (0, 4, 0, 0, 0): -1})
        with pytest.raises(ValueError, match="p not generic"):
            select_special_points(fixture_b.c0, fixture_b.l, p_bad)

    def test_degree_drop_rejected(self, fixture_b):
        l = MultiPoly.monomial((1, 0, 0, 0, 0))  # restricts to the constant 1
        with pytest.raises(ValueError, match="root at infinity"):
            select_special_points(fixture_b.c0, l, fixture_b.p)

    def test_seeded_retry_draws_differ(self, fixture_a):
        p0 = select_special_points(fixture_a.c0, fixture_a.l, fixture_a.p, seed=0, attempt=1)
        p1 = select_special_points(fixture_a.c0, fixture_a.l, fixture_a.p, seed=0, attempt=2)
        assert p0.generic_points != p1.generic_points
        again = select_special_points(fixture_a.c0, fixture_a.l, fixture_a.p, seed=0, attempt=1)
        assert p0.generic_points == again.generic_points


class TestBlocks:
    def blocks_a(self, fixture_a):
        jac = jacobian_evaluation_form(fixture_a.problem, fixture_a.c0, A_POINTS)
        return jac, block_decompose(jac, fixture_a.l)

    def test_shapes(self, fixture_a):
        _, blocks = self.blocks_a(fixture_a)
        assert (blocks.a11.rows, blocks.a11.cols) == (2, 2)
        assert (blocks.a12.rows, blocks.a12.cols) == (2, 8)
        assert (blocks.a21.rows, blocks.a21.cols) == (4, 2)
        assert (blocks.a22.rows, blocks.a22.cols) == (4, 8)
        assert (blocks.a0.rows, blocks.a0.cols) == (4, 8)

    def test_reassembly(self, fixture_a):
        jac, blocks = self.blocks_a(fixture_a)
        assert reassemble_blocks(blocks).entries == permute_z4_first(jac).entries

    def test_a12_row_at_root_vanishes(self, fixture_a):
        _, blocks = self.blocks_a(fixture_a)
        assert all(x == 0 for x in blocks.a12.row(0))
        # the extra row (at the d+1-th point) does not vanish here
        assert any(x != 0 for x in blocks.a12.row(1))

    def test_a12_factorization(self, fixture_a):
        # every entry is l(c0(t_s)) * (dq/dz_m)(c0(t_s)) * t_s^i
        _, blocks = self.blocks_a(fixture_a)
        lc = compose_with_curve(fixture_a.l, fixture_a.c0.components)
        grads = [
            compose_with_curve(fixture_a.q.partial_derivative(m), fixture_a.c0.components)
            for m in range(4)
        ]
        for s, t in enumerate(A_POINTS[:2]):
            col = 0
            for m in range(4):
                for i in range(2):
                    assert blocks.a12.entry(s, col) == lc.evaluate(t) * grads[m].evaluate(t) * t**i
                    col += 1

    def test_a11_closed_form_values(self, fixture_a):
        closed = a11_closed_form(fixture_a.c0, fixture_a.p, A_POINTS[:2])
        assert closed.to_rows() == [[F(-17, 32), F(17, 16)], [F(2), F(2)]]
        assert det_exact(closed) == F(-51, 16)

    def test_a11_matches_extracted_up_to_column_reversal(self, fixture_a):
        _, blocks = self.blocks_a(fixture_a)
        closed = a11_closed_form(fixture_a.c0, fixture_a.p, A_POINTS[:2])
        reversed_cols = blocks.a11.submatrix([0, 1], [1, 0])
        assert reversed_cols.entries == closed.entries

    def test_a11_det_identity(self, fixture_b):
        # det(A11 desc) = reversal sign * vandermonde det * prod p(c0(t_s))
        pts = [F(-1), F(1), F(2)]
        closed = a11_closed_form(fixture_b.c0, fixture_b.p, pts)
        pc = compose_with_curve(fixture_b.p, fixture_b.c0.components)
        vdet = F(1)
        for i in range(3):
            for j in range(i + 1, 3):
                vdet *= pts[j] - pts[i]
        prod_p = pc.evaluate(pts[0]) * pc.evaluate(pts[1]) * pc.evaluate(pts[2])
        sign = -1  # column reversal on 3 columns is one transposition
        assert det_exact(closed) == sign * vdet * prod_p == F(-23670)

    def test_a11_constant_p_is_vandermonde(self, fixture_a):
        one = MultiPoly.monomial((0, 0, 0, 0, 0))
        closed = a11_closed_form(fixture_a.c0, one, A_POINTS[:2])
        assert closed.to_rows() == [[F(-1, 2), F(1)], [F(1), F(1)]]

    def test_a22_closed_form_row(self, fixture_a):
        closed = a22_closed_form(fixture_a.c0, fixture_a.l, fixture_a.q, A_POINTS[2:])
        # at t = 2: l(c0(2)) = 5, gradient = (0, 0, 1, 8)
        assert list(closed.row(0)) == [0, 0, 0, 0, 5, 10, 40, 80]

    def test_a22_matches_extracted(self, fixture_a):
        _, blocks = self.blocks_a(fixture_a)
        closed = a22_closed_form(fixture_a.c0, fixture_a.l, fixture_a.q, A_POINTS[2:])
        assert blocks.a22.entries == closed.entries

    def test_a22_zero_when_gradient_vanishes_along_curve(self, fixture_a):
        q = MultiPoly.monomial((0, 0, 0, 4, 0))  # z3^4; gradient dies on the line
        closed = a22_closed_form(fixture_a.c0, fixture_a.l, q, A_POINTS[2:])
        assert all(x == 0 for x in closed.entries)

    def test_a0_rank(self, fixture_a):
        _, blocks = self.blocks_a(fixture_a)
        assert rank_exact(blocks.a0) == 4
        assert blocks.flagged_rows == ()

    def test_a22_is_a0_rescaled_rowwise(self, fixture_a):
        _, blocks = self.blocks_a(fixture_a)
        for s, lval in enumerate(blocks.l_values):
            assert list(blocks.a22.row(s)) == [lval * x for x in blocks.a0.row(s)]


class TestGradientPairing:
    def test_fixture_a_matrix(self, fixture_a):
        m = gradient_pairing_map(fixture_a.q, fixture_a.c0)
        assert (m.rows, m.cols) == (5, 8)
        # map is (v0..v3) -> v2(t) + t^3 v3(t): columns for m=2 hit rows 0,1;
        # columns for m=3 hit rows 3,4
        expected = [[F(0)] * 8 for _ in range(5)]
        expected[0][4] = expected[1][5] = expected[3][6] = expected[4][7] = F(1)
        assert m.to_rows() == expected
        assert rank_exact(m) == 4
        assert kernel_exact(m).dim == 4

    def test_fixture_b_kernel(self, fixture_b):
        m = gradient_pairing_map(fixture_b.q, fixture_b.c0)
        assert (m.rows, m.cols) == (9, 12)
        assert rank_exact(m) == 8
        assert kernel_exact(m).dim == 4

    def test_kernel_contains_restricted_symmetry_vectors(self, fixture_a, fixture_b):
        for fix in (fixture_a, fixture_b):
            m = gradient_pairing_map(fix.q, fix.c0)
            d = fix.d
            for v in symmetry_kernel_vectors(fix.c0):
                restricted = v[: 4 * (d + 1)]
                assert all(x == 0 for x in m.matvec(restricted))

    def test_rejects_curve_off_quartic(self, fixture_a):
        line = fixture_a.c0
        q = MultiPoly.monomial((4, 0, 0, 0, 0))  # z0^4 does not vanish on the line
        with pytest.raises(ValueError):
            gradient_pairing_map(q, line)


class TestSmoothAlongCurve:
    def test_fixtures_smooth(self, fixture_a, fixture_b):
        assert smooth_along_curve(fixture_a.q, fixture_a.c0)
        assert smooth_along_curve(fixture_b.q, fixture_b.c0)

    def test_non_reduced_fails(self, fixture_a):
        # z2^2 * (z0^2 + z1^2): gradient vanishes identically along the line
        q = MultiPoly(5, {(2, 0, 2, 0, 0): 1, (0, 2, 2, 0, 0): 1})
        assert not smooth_along_curve(q, fixture_a.c0)

    def test_common_factor_fails(self, fixture_a):
        # q = z1^3 z2: the only gradient entry surviving on the line is
        # (dq/dz2)(c0(t)) = t^3, so the gcd is nonconstant
        q = MultiPoly(5, {(0, 3, 1, 0, 0): 1})
        assert not smooth_along_curve(q, fixture_a.c0)


class TestVerifyConstruction:
    def test_fixture_a_all_pass(self, fixture_a):
        rep = verify_construction(fixture_a, seed=0)
        assert rep.passed
        assert [c.check_id for c in rep.checks] == list(range(1, 11))
        assert all(c.status == "pass" for c in rep.checks)
        assert rep.attempts == 1
        det = next(c for c in rep.checks if c.check_id == 4).details["det"]
        assert det == "-51/16"

    def test_fixture_b_all_pass(self, fixture_b):
        rep = verify_construction(fixture_b, seed=0)
        assert rep.passed
        by_id = {c.check_id: c for c in rep.checks}
        assert by_id[7].details["rank"] == 8
        assert by_id[9].details["rank"] == 11
        assert by_id[9].details["tangent_dim"] == 4

    def test_complex_path(self, fixture_b_nonsplit):
        rep = verify_construction(fixture_b_nonsplit, seed=0)
        assert rep.field == "complex"
        assert rep.passed

    def test_byte_stable(self, fixture_b):
        a = verify_construction(fixture_b, seed=3).to_json()
        b = verify_construction(fixture_b, seed=3).to_json()
        assert a == b
        json.loads(a)  # valid JSON

    def test_extra_row_census_reported(self, fixture_a):
        rep = verify_construction(fixture_a, seed=0)
        census = next(c for c in rep.checks if c.check_id == 5)
        rows = census.details["rows"]
        assert rows[0]["is_zero"] is True  # root of l(c0)
        assert rows[1]["is_zero"] is False  # the extra point, reported as-is

    def test_error_path_p_vanishing_at_root(self, fixture_a):
        # p = z0^3 (z0 + 2 z1) restricts to 1 + 2t, vanishing at the l-root
        p_bad = MultiPoly(5, {(4, 0, 0, 0, 0): 1, (3, 1, 0, 0, 0): 2})
        fx = Fixture.build("A-bad-p", fixture_a.q, fixture_a.l, p_bad, fixture_a.c0, 1)
        rep = verify_construction(fx, seed=0)
        by_id = {c.check_id: c for c in rep.checks}
        assert by_id[2].status == "fail"
        assert "p not generic" in by_id[2].details["error"]
        # the remaining checks still ran on fallback points
        assert set(by_id) == set(range(1, 11))
        assert not rep.passed


class TestFixtureBundle:
    def test_round_trip(self, fixture_a, fixture_b):
        for fix in (fixture_a, fixture_b):
            back = Fixture.from_obj(fix.to_obj())
            assert back.f0 == fix.f0
            assert back.c0 == fix.c0

    def test_off_quartic_curve_rejected(self, fixture_a):
        obj = fixture_a.to_obj()
        obj["q"] = MultiPoly.monomial((4, 0, 0, 0, 0)).to_obj()
        with pytest.raises(InputError, match=r"q\(c0\(t\)\) == 0"):
            Fixture.from_obj(obj)

    def test_nonzero_z4_component_rejected(self, fixture_a):
        obj = fixture_a.to_obj()
        obj["c0"]["components"][4] = {"coeffs": ["1"]}
        with pytest.raises(InputError, match="z4-component"):
            Fixture.from_obj(obj)


class TestFiniteFieldSmoothnessOracle:
    def test_fixture_a_quartic_has_no_singular_points(self, fixture_a):
        from curvejac.fixtures import quartic_smooth_over_prime_field

        assert quartic_smooth_over_prime_field(fixture_a.q, 11)
        assert quartic_smooth_over_prime_field(fixture_a.q, 13)

    def test_singular_quartic_detected(self):
        from curvejac.fixtures import quartic_smooth_over_prime_field

        q_sing = MultiPoly(5, {(2, 2, 0, 0, 0): 1})  # z0^2 z1^2, singular along two lines
        assert not quartic_smooth_over_prime_field(q_sing, 11)


def test_render_matrix_elides_wide_matrices():
    wide = RationalMatrix.from_rows([[F(i) for i in range(15)]])
    rows = render_matrix(wide, max_cols=12)
    assert len(rows[0]) == 12
    assert rows[0][-1] == "... (4 more)"
    narrow = RationalMatrix.from_rows([[F(1, 2), F(3)]])
    assert render_matrix(narrow) == [["1/2", "3"]]
