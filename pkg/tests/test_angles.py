import itertools
import math

import numpy as np
import pytest

from grassdist import corpus
from grassdist.angles import (AngleRoute, angle_report, asymmetric_angle,
                              cos2_theta_from_gram, disjointness_angle,
                              orthogonal_partition_check, projection_factor,
                              pythagorean_sum, real_complex_relation_check,
                              sine_identity_sum, sin2_psi_from_gram,
                              sin2_upsilon_from_gram,
                              spherical_pythagorean_check,
                              supplementation_angle)
from grassdist.errors import DegenerateBasisError, DimensionError
from grassdist.numerics import Field
from grassdist.subspace import (Subspace, direct_sum, orthogonal_complement,
                                principal_angles, random_subspace,
                                random_unitary, sum_subspace)

from conftest import random_matrix

R = Field.REAL
C = Field.COMPLEX
ROUTES = [AngleRoute.PRINCIPAL, AngleRoute.GRAM, AngleRoute.EXTERIOR]


def sub(cols, field=R):
    return Subspace.from_columns(cols, field)


class TestGoldenCorpus:
    @pytest.mark.parametrize("route", ROUTES, ids=lambda r: r.value)
    def test_all_golden_values(self, route):
        for g in corpus.corpus():
            checks = [
                (g.theta_vw, asymmetric_angle(g.v, g.w, route)),
                (g.theta_wv, asymmetric_angle(g.w, g.v, route)),
                (g.upsilon, disjointness_angle(g.v, g.w, route)),
                (g.psi, supplementation_angle(g.v, g.w, route)),
            ]
            for want, got in checks:
                if want is not None:
                    assert got == pytest.approx(want, abs=1e-7), g.name

    def test_gram_route_on_raw_bases(self):
        # the spanning sets of the paper examples, without orthonormalizing
        c2 = cos2_theta_from_gram(corpus.DISTINCT_DIM_V, corpus.DISTINCT_DIM_W, R)
        assert c2 == pytest.approx(0.5, abs=1e-12)
        c2 = cos2_theta_from_gram(corpus.DISTINCT_DIM_W, corpus.DISTINCT_DIM_V, R)
        assert c2 == pytest.approx(0.0, abs=1e-12)
        c2 = cos2_theta_from_gram(corpus.FORMULA_BASES_V, corpus.FORMULA_BASES_W, C)
        assert c2 == pytest.approx(1 / 3, abs=1e-12)
        s2 = sin2_upsilon_from_gram(corpus.DISTINCT_DIM_V, corpus.DISTINCT_DIM_W, R)
        assert s2 == pytest.approx(0.5, abs=1e-12)
        s2 = sin2_upsilon_from_gram(corpus.BLADES_A, corpus.BLADES_B, R)
        assert s2 == pytest.approx(17 / 36, abs=1e-12)

    def test_psi_gram_route_on_raw_bases(self):
        # determinant-sum formula needs an orthonormal w-basis
        w = np.eye(3, dtype=complex)[:, :2]
        w[1, 1] = np.exp(2j * np.pi / 3)
        w[:, 1] /= np.linalg.norm(w[:, 1])
        s2 = sin2_psi_from_gram(corpus.FORMULA_BASES_V, w, C)
        assert s2 == pytest.approx(2 / 3, abs=1e-12)
        s2 = sin2_psi_from_gram(corpus.R4_PLANES_V, corpus.R4_PLANES_W, R)
        assert s2 == pytest.approx(0.0, abs=1e-12)

    def test_singular_gram_rejected(self):
        dependent = np.array([[1.0, 2.0], [2.0, 4.0], [0.0, 0.0]])
        with pytest.raises(DegenerateBasisError):
            cos2_theta_from_gram(np.eye(3)[:, :1], dependent, R)
        with pytest.raises(DegenerateBasisError):
            cos2_theta_from_gram(dependent, np.eye(3)[:, :1], R)


class TestConventions:
    @pytest.mark.parametrize("route", ROUTES, ids=lambda r: r.value)
    def test_zero_and_dimension_conventions(self, route, field):
        z = Subspace.zero(4, field)
        v = random_subspace(4, 2, field, 1)
        x = Subspace.full(4, field)
        assert asymmetric_angle(z, v, route) == pytest.approx(0)
        assert asymmetric_angle(v, z, route) == pytest.approx(math.pi / 2)
        assert asymmetric_angle(z, z, route) == pytest.approx(0)
        assert disjointness_angle(z, v, route) == pytest.approx(math.pi / 2)
        assert disjointness_angle(v, z, route) == pytest.approx(math.pi / 2)
        assert supplementation_angle(v, x, route) == pytest.approx(math.pi / 2)
        assert supplementation_angle(z, v, route) == pytest.approx(0)

    def test_equal_subspaces(self, field):
        v = random_subspace(5, 3, field, 2)
        assert asymmetric_angle(v, v) == pytest.approx(0, abs=1e-7)

    def test_theta_zero_iff_contained(self, rng, field):
        w = random_subspace(6, 4, field, 3)
        v = Subspace(6, field, w.basis[:, :2])
        assert asymmetric_angle(v, w) < 1e-7
        assert asymmetric_angle(w, v) == pytest.approx(math.pi / 2)

    def test_theta_right_angle_iff_partially_orthogonal(self, rng, field):
        from grassdist.subspace import is_partially_orthogonal
        for seed in range(5):
            v = random_subspace(5, int(rng.integers(1, 5)), field, seed)
            w = random_subspace(5, int(rng.integers(1, 5)), field, seed + 100)
            right = asymmetric_angle(v, w) > math.pi / 2 - 1e-9
            assert right == is_partially_orthogonal(v, w)


class TestRouteAgreement:
    def test_random_pairs(self, rng, field):
        for seed in range(25):
            n = int(rng.integers(2, 9))
            p = int(rng.integers(0, n + 1))
            q = int(rng.integers(0, n + 1))
            v = random_subspace(n, p, field, 1000 + seed)
            w = random_subspace(n, q, field, 2000 + seed)
            for fn in (asymmetric_angle, disjointness_angle, supplementation_angle):
                vals = [fn(v, w, route) for route in ROUTES]
                assert max(vals) - min(vals) < 1e-8, (fn.__name__, n, p, q)


class TestProjectionFactor:
    def test_real_paper_pair_area_contraction(self):
        v, w = sub(corpus.REAL_PA_V), sub(corpus.REAL_PA_W)
        assert projection_factor(v, w) == pytest.approx(0.5, abs=1e-12)

    def test_complex_paper_pair(self):
        v, w = sub(corpus.COMPLEX_PA_V, C), sub(corpus.COMPLEX_PA_W, C)
        assert projection_factor(v, w) == pytest.approx(1 / 8, abs=1e-12)

    def test_contained(self, field):
        w = random_subspace(5, 3, field, 4)
        v = Subspace(5, field, w.basis[:, :1])
        assert projection_factor(v, w) == pytest.approx(1, abs=1e-7)


class TestRealComplexRelation:
    def test_paper_pair(self):
        v, w = sub(corpus.COMPLEX_PA_V, C), sub(corpus.COMPLEX_PA_W, C)
        lhs, rhs = real_complex_relation_check(v, w)
        assert lhs == pytest.approx(1 / 8, abs=1e-9)
        assert rhs == pytest.approx(1 / 8, abs=1e-9)
        theta_r = asymmetric_angle(*(map(__import__("grassdist").underlying_real,
                                         (v, w))))
        assert math.degrees(theta_r) == pytest.approx(82.819, abs=5e-3)

    def test_random_pairs_agree(self, rng):
        for seed in range(10):
            v = random_subspace(3, int(rng.integers(1, 3)), C, 300 + seed)
            w = random_subspace(3, int(rng.integers(1, 4)), C, 400 + seed)
            lhs, rhs = real_complex_relation_check(v, w)
            assert lhs == pytest.approx(rhs, abs=1e-9)

    def test_contained(self):
        w = random_subspace(4, 3, C, 5)
        v = Subspace(4, C, w.basis[:, :2])
        lhs, rhs = real_complex_relation_check(v, w)
        assert lhs == pytest.approx(1, abs=1e-9)
        assert rhs == pytest.approx(1, abs=1e-9)

    def test_real_rejected(self):
        v = random_subspace(3, 1, R, 6)
        with pytest.raises(DimensionError):
            real_complex_relation_check(v, v)


class TestUpsilonPsiStructure:
    def test_symmetry(self, rng, field):
        for seed in range(8):
            v = random_subspace(6, int(rng.integers(1, 6)), field, 500 + seed)
            w = random_subspace(6, int(rng.integers(1, 6)), field, 600 + seed)
            assert disjointness_angle(v, w) == pytest.approx(
                disjointness_angle(w, v), abs=1e-9)
            assert supplementation_angle(v, w) == pytest.approx(
                supplementation_angle(w, v), abs=1e-9)

    def test_upsilon_zero_iff_intersecting(self, rng, field):
        q = random_unitary(6, field, 7)
        v = Subspace(6, field, q[:, :3])
        w = Subspace(6, field, q[:, 2:5])
        assert disjointness_angle(v, w) < 1e-7
        v2 = random_subspace(6, 2, field, 8)
        w2 = random_subspace(6, 3, field, 9)
        assert disjointness_angle(v2, w2) > 1e-3  # generic pair is disjoint

    def test_psi_zero_iff_not_supplementary(self, field):
        v = random_subspace(6, 2, field, 10)
        w = random_subspace(6, 3, field, 11)
        assert supplementation_angle(v, w) == 0.0  # p + q < n
        v3 = random_subspace(6, 3, field, 12)
        w3 = random_subspace(6, 4, field, 13)
        assert supplementation_angle(v3, w3) > 1e-3

    def test_psi_equals_upsilon_when_dims_complementary(self, rng, field):
        v = random_subspace(6, 2, field, 14)
        w = random_subspace(6, 4, field, 15)
        assert supplementation_angle(v, w) == pytest.approx(
            disjointness_angle(v, w), abs=1e-9)

    def test_ambiguous_intersection_dimension_raises(self):
        # a principal angle below angle_tol that the rank cutoff still
        # resolves: the supplementarity case analysis must refuse to guess
        from grassdist.errors import NumericalDegeneracyError
        eps = 5e-10
        v = Subspace.from_columns(np.eye(2)[:, :1], R)
        w = Subspace.from_columns(
            np.array([[math.cos(eps)], [math.sin(eps)]]), R)
        with pytest.raises(NumericalDegeneracyError):
            supplementation_angle(v, w)

    def test_definitions_via_complements(self, rng, field):
        # Upsilon = pi/2 - Theta(V, W-perp), Psi = pi/2 - Theta(V-perp, W)
        for seed in range(6):
            v = random_subspace(6, int(rng.integers(1, 6)), field, 700 + seed)
            w = random_subspace(6, int(rng.integers(1, 6)), field, 800 + seed)
            assert disjointness_angle(v, w) == pytest.approx(
                math.pi / 2 - asymmetric_angle(v, orthogonal_complement(w)),
                abs=1e-9)
            assert supplementation_angle(v, w) == pytest.approx(
                math.pi / 2 - asymmetric_angle(orthogonal_complement(v), w),
                abs=1e-9)

    def test_ordering_bounds(self, rng, field):
        for seed in range(8):
            v = random_subspace(5, int(rng.integers(1, 5)), field, 900 + seed)
            w = random_subspace(5, int(rng.integers(1, 5)), field, 950 + seed)
            theta = principal_angles(v, w)
            nonzero = theta[theta > 1e-9]
            if len(nonzero) == 0:
                continue
            bound = max(disjointness_angle(v, w), supplementation_angle(v, w))
            assert bound <= nonzero.min() + 1e-9
            assert nonzero.max() <= asymmetric_angle(v, w) + 1e-9


class TestThetaProperties:
    def test_perp_duality(self, rng, field):
        for seed in range(8):
            v = random_subspace(6, int(rng.integers(1, 6)), field, 1100 + seed)
            w = random_subspace(6, int(rng.integers(1, 6)), field, 1200 + seed)
            lhs = asymmetric_angle(orthogonal_complement(v),
                                   orthogonal_complement(w))
            assert lhs == pytest.approx(asymmetric_angle(w, v), abs=1e-9)

    def test_padding_invariance(self, rng, field):
        v = random_subspace(8, 2, field, 16)
        w = random_subspace(8, 3, field, 17)
        vw = sum_subspace(v, w)
        comp = orthogonal_complement(vw)
        u = Subspace(8, field, comp.basis[:, :2])
        padded = direct_sum(w, u)
        assert asymmetric_angle(v, padded) == pytest.approx(
            asymmetric_angle(v, w), abs=1e-9)

    def test_unitary_invariance(self, rng, field):
        v = random_subspace(6, 3, field, 18)
        w = random_subspace(6, 2, field, 19)
        t = random_unitary(6, field, 20)
        tv, tw = Subspace(6, field, t @ v.basis), Subspace(6, field, t @ w.basis)
        for fn in (asymmetric_angle, disjointness_angle, supplementation_angle):
            assert fn(tv, tw) == pytest.approx(fn(v, w), abs=1e-9)

    def test_monotonicity(self, rng, field):
        n, p, q = 7, 3, 5
        v = random_subspace(n, p, field, 21)
        w = random_subspace(n, q, field, 22)
        mix = np.linalg.qr(random_matrix(rng, q, 4, field))[0]
        w_sub = Subspace(n, field, w.basis @ mix)
        assert asymmetric_angle(v, w_sub) >= asymmetric_angle(v, w) - 1e-9
        mixv = np.linalg.qr(random_matrix(rng, p, 2, field))[0]
        v_sub = Subspace(n, field, v.basis @ mixv)
        assert asymmetric_angle(v_sub, w) <= asymmetric_angle(v, w) + 1e-9

    def test_extrema_via_projective_split(self, rng, field):
        from grassdist.subspace import projective_split
        v = random_subspace(7, 2, field, 23)
        w = random_subspace(7, 4, field, 24)
        w_p, w_perp = projective_split(v, w)
        assert asymmetric_angle(v, w_p) == pytest.approx(
            asymmetric_angle(v, w), abs=1e-9)
        assert asymmetric_angle(direct_sum(v, w_perp), w) == pytest.approx(
            asymmetric_angle(v, w), abs=1e-9)

    def test_line_triangle_equality_witness(self, rng, field):
        # aligned u, v, w with v = kappa*u + lambda*w attain equality
        for seed in range(6):
            r2 = np.random.default_rng(seed)
            n = 5
            q = random_unitary(n, field, 3000 + seed)
            alpha = r2.uniform(0.2, 1.3)
            u = q[:, 0]
            w = math.cos(alpha) * q[:, 0] + math.sin(alpha) * q[:, 1]
            kappa, lam = r2.uniform(0.3, 2, size=2)
            v = kappa * u + lam * w
            ju = Subspace.from_columns(u.reshape(-1, 1), field)
            jv = Subspace.from_columns(v.reshape(-1, 1), field)
            jw = Subspace.from_columns(w.reshape(-1, 1), field)
            lhs = asymmetric_angle(ju, jw)
            rhs = asymmetric_angle(ju, jv) + asymmetric_angle(jv, jw)
            assert lhs == pytest.approx(rhs, abs=1e-9)


class TestPythagoreanSum:
    def test_complex_plane_example(self):
        v = sub(corpus.PYTHAGORAS_C2_V, C)
        w1 = Subspace.from_columns(np.eye(2, dtype=complex)[:, :1], C)
        w2 = Subspace.from_columns(np.eye(2, dtype=complex)[:, 1:], C)
        assert asymmetric_angle(v, w1) == pytest.approx(math.pi / 3, abs=1e-12)
        assert asymmetric_angle(v, w2) == pytest.approx(math.pi / 6, abs=1e-12)
        total = pythagorean_sum(v, np.eye(2, dtype=complex))
        assert total == pytest.approx(1, abs=1e-9)

    def test_underlying_real_version(self):
        from grassdist.subspace import underlying_real
        v = underlying_real(sub(corpus.PYTHAGORAS_C2_V, C))
        total = pythagorean_sum(v, np.eye(4))
        assert total == pytest.approx(1, abs=1e-9)
        want = sorted([math.degrees(math.acos(x))
                       for x in (0.25, math.sqrt(3) / 4, math.sqrt(3) / 4,
                                 0.0, 0.0, 0.75)])
        got = sorted(
            math.degrees(asymmetric_angle(
                v, Subspace.from_columns(np.eye(4)[:, list(c)], R)))
            for c in itertools.combinations(range(4), 2))
        np.testing.assert_allclose(got, want, atol=0.05)

    def test_symmetric_c3_example(self):
        v = sub(corpus.FORMULA_BASES_V, C)
        xi = np.exp(2j * np.pi / 3)
        basis = np.diag([1, xi, xi ** 2]).astype(complex)
        for combo in itertools.combinations(range(3), 2):
            w = Subspace.from_columns(basis[:, list(combo)], C)
            assert math.cos(asymmetric_angle(v, w)) == pytest.approx(
                1 / math.sqrt(3), abs=1e-9)
        assert pythagorean_sum(v, basis) == pytest.approx(1, abs=1e-9)

    def test_coordinate_subspace(self):
        v = Subspace.from_columns(np.eye(4)[:, :2], R)
        assert pythagorean_sum(v, np.eye(4)) == pytest.approx(1, abs=1e-12)

    def test_random(self, rng, field):
        v = random_subspace(6, 3, field, 25)
        basis = random_unitary(6, field, 26)
        assert pythagorean_sum(v, basis) == pytest.approx(1, abs=1e-9)

    def test_rejects_non_orthonormal_basis(self):
        v = random_subspace(3, 1, R, 27)
        with pytest.raises(DimensionError):
            pythagorean_sum(v, np.full((3, 3), 0.5))


class TestSineIdentity:
    def test_paper_example(self):
        v, w = sub(corpus.REAL_PA_V), sub(corpus.REAL_PA_W)
        total, sin2 = sine_identity_sum(v, w)
        assert total == pytest.approx(0.75, abs=1e-9)
        assert sin2 == pytest.approx(0.75, abs=1e-9)

    def test_contained(self, field):
        w = random_subspace(5, 3, field, 28)
        v = Subspace(5, field, w.basis[:, :2])
        total, sin2 = sine_identity_sum(v, w)
        assert total == pytest.approx(0, abs=1e-9)
        assert sin2 == pytest.approx(0, abs=1e-9)

    def test_random(self, rng, field):
        v = random_subspace(5, 2, field, 29)
        w = random_subspace(5, 3, field, 30)
        total, sin2 = sine_identity_sum(v, w)
        assert total == pytest.approx(sin2, abs=1e-9)


class TestSphericalPythagorean:
    def test_w_sub_equals_w(self, rng, field):
        v = random_subspace(6, 2, field, 31)
        w = random_subspace(6, 4, field, 32)
        lhs, rhs = spherical_pythagorean_check(v, w, w)
        assert lhs == pytest.approx(rhs, abs=1e-9)

    def test_random_subspace_of_w(self, rng, field):
        for seed in range(6):
            v = random_subspace(6, 2, field, 3300 + seed)
            w = random_subspace(6, 4, field, 3400 + seed)
            mix = np.linalg.qr(random_matrix(rng, 4, 2, field))[0]
            w_sub = Subspace(6, field, w.basis @ mix)
            lhs, rhs = spherical_pythagorean_check(v, w, w_sub)
            assert lhs == pytest.approx(rhs, abs=1e-9)

    def test_containment_enforced(self):
        v = random_subspace(6, 2, R, 33)
        w = random_subspace(6, 3, R, 34)
        other = random_subspace(6, 2, R, 35)
        with pytest.raises(DimensionError):
            spherical_pythagorean_check(v, w, other)


class TestOrthogonalPartition:
    def test_random(self, rng, field):
        for seed in range(6):
            q = random_unitary(6, field, 3600 + seed)
            v1 = Subspace(6, field, q[:, :2])
            v2 = Subspace(6, field, q[:, 2:3])
            w = random_subspace(6, 4, field, 3700 + seed)
            lhs, rhs = orthogonal_partition_check(v1, v2, w)
            assert lhs == pytest.approx(rhs, abs=1e-9)

    def test_v1_orthogonal_to_w_gives_zero(self):
        v1 = Subspace.from_columns(np.eye(5)[:, :1], R)
        v2 = Subspace.from_columns(np.eye(5)[:, 1:2], R)
        w = Subspace.from_columns(np.eye(5)[:, 2:4], R)
        lhs, rhs = orthogonal_partition_check(v1, v2, w)
        assert lhs == pytest.approx(0, abs=1e-12)
        assert rhs == pytest.approx(0, abs=1e-12)

    def test_non_orthogonal_rejected(self):
        v = random_subspace(5, 2, R, 36)
        with pytest.raises(DimensionError):
            orthogonal_partition_check(v, v, random_subspace(5, 2, R, 37))


class TestAngleReport:
    def test_report_contents(self):
        v, w = sub(corpus.BLADES_A), sub(corpus.BLADES_B)
        rep = angle_report(v, w)
        assert rep.dims == (2, 2, 5)
        assert rep.theta_vw == pytest.approx(math.acos(1 / 6), abs=1e-9)
        assert rep.upsilon == pytest.approx(math.asin(math.sqrt(17) / 6), abs=1e-9)
        assert rep.psi == 0.0
        assert len(rep.principal_angles) == 2
        assert not rep.psi_ill_conditioned

    def test_invariant_ordering(self, rng, field):
        v = random_subspace(5, 2, field, 38)
        w = random_subspace(5, 3, field, 39)
        rep = angle_report(v, w)
        nz = [t for t in rep.principal_angles if t > 1e-9]
        assert max(rep.upsilon, rep.psi) <= min(nz) + 1e-9
        assert max(nz) <= rep.theta_vw + 1e-9
