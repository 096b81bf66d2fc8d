from fractions import Fraction

import pytest

from admissible_weights import (
    AffineWeight,
    CriticalLevelError,
    DomainError,
    NotAdmissibleError,
    RealRoot,
    build_root_system,
    diagram_twist_group,
    duflo_joseph_move,
    is_admissible_weight,
    is_module_over_simple_vertex_algebra,
    isomorphic_integral_systems,
    kostant_subset,
    level_context,
    necessary_condition_battery,
    reduction_data,
    simple_integral_roots,
    vacuum_weight,
    weyl_elements,
)
from admissible_weights.affine import identity_element, simple_affine_reflection
from admissible_weights.classify import (
    base_system_label,
    generator_by_name,
    sl2_reduction_admissible,
)
from admissible_weights.errors import InputError
from admissible_weights.finite import finite_length, weyl_order
from admissible_weights.rationals import vneg


def _fund(rs, lam):
    return tuple(rs.fundamental_coordinates(lam.finite))


class TestContext:
    def test_rejects_non_admissible_level(self):
        with pytest.raises(NotAdmissibleError, match="not admissible"):
            level_context("A1", Fraction(-3, 2))

    def test_rejects_critical_level(self):
        with pytest.raises(CriticalLevelError):
            level_context("A1", -2)

    def test_certificate_and_base(self, a1):
        ctx = level_context("A1", Fraction(-1, 2))
        assert (ctx.p, ctx.q) == (3, 2)
        assert set(ctx.base_system.simple_roots) == {
            RealRoot(a1.simple_roots[0], 0),
            RealRoot(vneg(a1.simple_roots[0]), 2),
        }
        assert base_system_label(ctx) == "A1~(1)"


class TestDominantWeights:
    def test_a1_half(self):
        ctx = level_context("A1", Fraction(-1, 2))
        assert [_fund(ctx.rs, w) for w in ctx.dominant_weights] == [
            (Fraction(0),),
            (Fraction(1),),
        ]

    def test_a1_level_zero(self):
        ctx = level_context("A1", 0)
        assert len(ctx.dominant_weights) == 1
        assert _fund(ctx.rs, ctx.dominant_weights[0]) == (Fraction(0),)

    def test_a1_count_is_p_minus_one(self):
        from math import gcd

        for p in range(2, 7):
            for q in range(1, 6):
                if gcd(p, q) != 1:
                    continue
                ctx = level_context("A1", Fraction(p, q) - 2)
                assert len(ctx.dominant_weights) == p - 1

    def test_b2_case_two_bound(self):
        # Oracle: filter every dominant integral weight in a box through the
        # short-coroot bound, then cross-check each against the weight test.
        ctx = level_context("B2", Fraction(5, 2) - 3)
        rs = ctx.rs
        assert not ctx.long_case
        expected = set()
        for c1 in range(4):
            for c2 in range(4):
                lam = rs.weight_from_fundamental([Fraction(c1), Fraction(c2)])
                if rs.pairing(lam, rs.theta_s) <= ctx.p - rs.coxeter_number:
                    expected.add(lam)
        assert {w.finite for w in ctx.dominant_weights} == expected
        for w in ctx.dominant_weights:
            assert is_admissible_weight(rs, w).admissible

    def test_dominant_members_pass_oracle(self):
        ctx = level_context("B2", Fraction(5, 2) - 3)
        for w in ctx.dominant_weights:
            assert is_module_over_simple_vertex_algebra(ctx, w).is_module


class TestTwists:
    def test_identity_always_included(self):
        for label, k in [("A1", Fraction(-1, 2)), ("A2", Fraction(-3, 2))]:
            ctx = level_context(label, k)
            assert identity_element(ctx.rs) in ctx.twists

    def test_a1_half_has_four(self):
        # Oracle: brute-force box scan over the coweight lattice with
        # |(alpha|mu)| <= 4 and both Weyl elements.
        ctx = level_context("A1", Fraction(-1, 2))
        rs = ctx.rs
        from admissible_weights.affine import (
            ExtendedWeylElement,
            act_on_root,
            is_positive_real_root,
        )
        from admissible_weights.rationals import vscale

        base = ctx.base_system.simple_roots
        brute = set()
        for w in weyl_elements(rs):
            for c in range(-4, 5):
                mu = vscale(Fraction(c, 2), rs.simple_roots[0])  # c * omega^vee
                g = ExtendedWeylElement(w, mu)
                if all(
                    is_positive_real_root(rs, act_on_root(rs, g, b)) for b in base
                ):
                    brute.add((w.matrix, mu))
        assert len(brute) == 4
        assert {(g.finite_factor.matrix, g.translation) for g in ctx.twists} == brute

    def test_integer_level_twists_are_diagram_rotations(self):
        for label, k in [("A1", 1), ("A2", 2)]:
            ctx = level_context(label, k)
            rotations = {
                (g.finite_factor.matrix, g.translation)
                for g, _ in diagram_twist_group(ctx.rs)
            }
            got = {(g.finite_factor.matrix, g.translation) for g in ctx.twists}
            assert got == rotations


class TestModuleWeights:
    def test_a1_half_members(self):
        ctx = level_context("A1", Fraction(-1, 2))
        values = sorted(_fund(ctx.rs, w)[0] for w in ctx.module_weights)
        assert values == [Fraction(-3, 2), Fraction(-1, 2), Fraction(0), Fraction(1)]

    def test_a1_integrable(self):
        ctx = level_context("A1", 3)
        values = sorted(_fund(ctx.rs, w)[0] for w in ctx.module_weights)
        assert values == [0, 1, 2, 3]

    def test_every_member_is_admissible(self):
        for label, k in [("A1", Fraction(-1, 2)), ("A2", Fraction(4, 3) - 3)]:
            ctx = level_context(label, k)
            for w in ctx.module_weights:
                report = is_admissible_weight(ctx.rs, w)
                assert report.admissible
                assert isomorphic_integral_systems(report.system, ctx.base_system)

    def test_twist_stability(self):
        # Dotting a dominant member with any twist keeps admissibility and
        # the base-isomorphic integral system.
        from admissible_weights.affine import dot_action

        ctx = level_context("A2", Fraction(-3, 2))
        for y in ctx.twists:
            for lam in ctx.dominant_weights:
                moved = dot_action(ctx.rs, y, lam)
                moved = AffineWeight(moved.finite, moved.level, Fraction(0))
                report = is_admissible_weight(ctx.rs, moved)
                assert report.admissible
                assert isomorphic_integral_systems(report.system, ctx.base_system)


class TestOracle:
    def test_vacuum_is_module(self):
        ctx = level_context("A1", Fraction(-1, 2))
        report = is_module_over_simple_vertex_algebra(
            ctx, vacuum_weight(ctx.rs, ctx.level)
        )
        assert report.is_module
        assert report.integral_system == "A1~(1)"
        assert report.failures == ()

    def test_two_omega_fails_regularity_with_zero_pairing(self):
        ctx = level_context("A1", Fraction(-1, 2))
        rs = ctx.rs
        lam = AffineWeight(rs.weight_from_fundamental([Fraction(2)]), ctx.level)
        report = is_module_over_simple_vertex_algebra(ctx, lam)
        assert not report.is_module
        assert report.admissibility.failed_condition == "regularity"
        assert report.admissibility.witness == RealRoot(vneg(rs.simple_roots[0]), 2)
        assert report.admissibility.pairing == 0
        assert [f.check for f in report.failures] == ["admissible:regularity"]

    def test_level_mismatch_rejected(self):
        ctx = level_context("A1", Fraction(-1, 2))
        with pytest.raises(DomainError, match="level"):
            is_module_over_simple_vertex_algebra(ctx, vacuum_weight(ctx.rs, 1))

    def test_grid_agreement_with_enumeration(self):
        # Exhaustive equivalence on the (1/q)-grid inside a box.
        ctx = level_context("A1", Fraction(-1, 2))
        rs = ctx.rs
        members = set()
        for a in range(-16, 17):
            lam = AffineWeight(
                rs.weight_from_fundamental([Fraction(a, ctx.q)]), ctx.level
            )
            if is_module_over_simple_vertex_algebra(ctx, lam).is_module:
                members.add(Fraction(a, ctx.q))
        assert members == {_fund(rs, w)[0] for w in ctx.module_weights}

    def test_a2_grid_agreement_with_enumeration(self):
        # Rank-two exhaustive self-consistency: enumeration and oracle agree
        # on the full (1/q)-grid inside a box covering the family.
        ctx = level_context("A2", Fraction(3, 2) - 3)
        rs = ctx.rs
        box = ctx.p * ctx.q + 2
        enumerated = {_fund(rs, w) for w in ctx.module_weights}
        assert all(
            abs(v) <= box for coords in enumerated for v in coords
        )
        members = set()
        for a in range(-box, box + 1):
            for b in range(-box, box + 1):
                lam = AffineWeight(
                    rs.weight_from_fundamental(
                        [Fraction(a, ctx.q), Fraction(b, ctx.q)]
                    ),
                    ctx.level,
                )
                if is_module_over_simple_vertex_algebra(ctx, lam).is_module:
                    members.add((Fraction(a, ctx.q), Fraction(b, ctx.q)))
        assert members == enumerated


class TestReduction:
    def test_a1_level_passthrough(self):
        ctx = level_context("A1", Fraction(-1, 2))
        (datum,) = reduction_data(ctx, vacuum_weight(ctx.rs, ctx.level))
        assert datum.level_i == ctx.level
        assert datum.h_value == 0

    def test_b2_long_and_short(self):
        ctx = level_context("B2", Fraction(5, 2) - 3)
        rs = ctx.rs
        data = reduction_data(ctx, vacuum_weight(rs, ctx.level))
        by_length = {
            rs.bilinear(rs.simple_roots[d.index - 1], rs.simple_roots[d.index - 1]): d
            for d in data
        }
        assert by_length[Fraction(2)].level_i + 2 == Fraction(5, 2)
        assert by_length[Fraction(1)].level_i + 2 == Fraction(5)

    def test_g2_short_root_integer_level(self):
        ctx = level_context("G2", Fraction(7, 3) - 4)
        rs = ctx.rs
        data = reduction_data(ctx, vacuum_weight(rs, ctx.level))
        short = next(
            d for d in data
            if rs.bilinear(rs.simple_roots[d.index - 1], rs.simple_roots[d.index - 1]) != 2
        )
        assert short.level_i + 2 == 7

    def test_restrictions_of_members_are_admissible(self):
        ctx = level_context("G2", Fraction(7, 3) - 4)
        for lam in ctx.module_weights:
            for datum in reduction_data(ctx, lam):
                assert sl2_reduction_admissible(datum).admissible


class TestBattery:
    def test_vacuum_all_pass(self):
        ctx = level_context("A1", Fraction(-1, 2))
        report = necessary_condition_battery(ctx, vacuum_weight(ctx.rs, ctx.level))
        assert report.all_passed and report.consistent

    def test_two_omega_fails_matching_oracle(self):
        ctx = level_context("A1", Fraction(-1, 2))
        lam = AffineWeight(
            ctx.rs.weight_from_fundamental([Fraction(2)]), ctx.level
        )
        report = necessary_condition_battery(ctx, lam)
        assert not report.all_passed
        assert report.consistent  # oracle is false as well
        failing = {c.name for c in report.checks if c.applicable and not c.passed}
        assert "dominant-bound" in failing

    def test_non_integral_weight_marks_bound_inapplicable(self):
        ctx = level_context("A1", Fraction(-1, 2))
        lam = AffineWeight(
            ctx.rs.weight_from_fundamental([Fraction(-1, 2)]), ctx.level
        )
        report = necessary_condition_battery(ctx, lam)
        bound = next(c for c in report.checks if c.name == "dominant-bound")
        assert not bound.applicable
        assert report.consistent

    def test_members_pass_battery(self):
        ctx = level_context("B2", Fraction(5, 2) - 3)
        for lam in ctx.module_weights:
            report = necessary_condition_battery(ctx, lam)
            assert report.all_passed


class TestKostant:
    def test_a1(self, a1):
        subset = kostant_subset(a1, 1)
        assert len(subset) == 1
        assert subset[0].word == ()

    def test_b2_half_of_group(self, b2):
        for i in (1, 2):
            assert len(kostant_subset(b2, i)) == 4

    def test_a2(self, a2):
        assert len(kostant_subset(a2, 1)) == 3

    @pytest.mark.parametrize("label", ["A2", "B2", "G2"])
    def test_length_partition_recurrence(self, label):
        # N_j(W) = N_j(W_i) + N_{j-1}(W_i): the subset and its s_i-shift
        # partition the group, lengths computed by brute force.
        rs = build_root_system(label)
        lengths_all = {}
        for w in weyl_elements(rs):
            lengths_all[finite_length(rs, w)] = lengths_all.get(finite_length(rs, w), 0) + 1
        for i in range(1, rs.rank + 1):
            subset = kostant_subset(rs, i)
            assert len(subset) == weyl_order(rs.lie_type) // 2
            lengths_sub = {}
            for w in subset:
                lengths_sub[finite_length(rs, w)] = lengths_sub.get(finite_length(rs, w), 0) + 1
            top = max(lengths_all)
            for j in range(top + 1):
                assert lengths_all.get(j, 0) == lengths_sub.get(j, 0) + lengths_sub.get(j - 1, 0)


class TestDufloJosephMove:
    def test_identity_move(self):
        ctx = level_context("A1", Fraction(-1, 2))
        lam = vacuum_weight(ctx.rs, ctx.level)
        result = duflo_joseph_move(ctx, lam, identity_element(ctx.rs))
        assert result.applied and result.weight == lam

    def test_s0_from_vacuum(self):
        # Inversion set {-alpha + delta}; pairing -1 + 3/2 = 1/2 is not a
        # positive integer, so the move applies.
        ctx = level_context("A1", Fraction(-1, 2))
        rs = ctx.rs
        result = duflo_joseph_move(
            ctx, vacuum_weight(rs, ctx.level), simple_affine_reflection(rs, 0)
        )
        assert result.applied
        assert _fund(rs, result.weight) == (Fraction(1),)

    def test_blocked_move_names_root(self):
        # From the member with pairing 1, s_1 inverts alpha_1 whose shifted
        # pairing is 2, a positive integer.
        ctx = level_context("A1", Fraction(-1, 2))
        rs = ctx.rs
        lam = AffineWeight(rs.weight_from_fundamental([Fraction(1)]), ctx.level)
        result = duflo_joseph_move(ctx, lam, simple_affine_reflection(rs, 1))
        assert not result.applied
        assert result.blocking_root == RealRoot(rs.simple_roots[0], 0)
        assert result.blocking_pairing == 2


class TestDiagramTwistGroup:
    @pytest.mark.parametrize(
        "label,order", [("A1", 2), ("A2", 3), ("A3", 4), ("B2", 2), ("G2", 1), ("D4", 4)]
    )
    def test_order_matches_cartan_determinant(self, label, order):
        assert len(diagram_twist_group(build_root_system(label))) == order

    def test_permutations_are_distinct(self, a2):
        perms = [perm for _, perm in diagram_twist_group(a2)]
        assert len(set(perms)) == len(perms)


class TestGeneratorNames:
    def test_reflections_and_translations(self, a1):
        assert generator_by_name(a1, "s0") == simple_affine_reflection(a1, 0)
        assert generator_by_name(a1, "s1") == simple_affine_reflection(a1, 1)
        t1 = generator_by_name(a1, "t1")
        assert t1.translation == a1.fundamental_coweights[0]

    def test_diagram_twist(self, a1):
        g = generator_by_name(a1, "d10")
        from admissible_weights.affine import permutes_simple_affine_roots

        assert permutes_simple_affine_roots(a1, g)
        assert generator_by_name(a1, "d01") == identity_element(a1)

    def test_rejects_unknown(self, a1):
        for bad in ["x1", "s9", "t0", "t9", "d21", "d0", "dxy"]:
            with pytest.raises(InputError):
                generator_by_name(a1, bad)

    def test_g2_has_no_nontrivial_twist(self, g2):
        with pytest.raises(InputError, match="diagram rotation"):
            generator_by_name(g2, "d021")
