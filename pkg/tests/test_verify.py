"""Hypothesis checks, comparison verdicts, probes, and engineered defects.

Oracles frozen here were computed independently first: fixed-set quotients
of the reflection circle and hexagon by listing cells, the diagonal-witness
order in the torsion probe by hand (lcm of cyclic orders), and the Borel
kernel pattern for the one-point space from the classifying-space homology
already pinned in the cell-structure tests.
"""

import pytest

from orbifunctor.exact_abelian import (
    AbHom,
    FpAbGroup,
    IntMatrix,
)
from orbifunctor.fincat import FinGroup, SubgroupFamily, standard_category
from orbifunctor.catmod import constant_module
from orbifunctor.chainplex import cat_complex_concentrated
from orbifunctor.cellspaces import (
    classifying_model,
    cellular_chain_complex,
    fixed_point_chains,
    free_orbit_points,
    point_space,
    reflection_circle,
)
from orbifunctor.verify import (
    ALMOST,
    ALMOST_ISO,
    ISO,
    NEITHER,
    STRICT,
    GradedSeqSpec,
    TheoremInstance,
    borel_vs_quotient_check,
    check_hypotheses,
    classify_map,
    instance_s3_hexagon,
    instance_z2_reflection,
    interchange_criterion,
    sub_factorization_check,
    tor_interchange_probe,
    transport_pi0_module,
    twisted_coefficient_system,
    verify_comparison,
    with_inflated_floor,
    with_padded_degree,
)

Z = FpAbGroup.free(1)


def one_by_one(src, tgt, entry):
    return AbHom(src, tgt, IntMatrix.from_columns([[entry]], nrows=1))


class TestInstanceValidation:
    def test_desk_instance_builds(self):
        inst = instance_z2_reflection()
        assert inst.top_degree == 2
        assert inst.through_degree == 2
        assert inst.vanishing_floor == 0
        assert inst.mode == STRICT

    def test_unknown_mode_rejected(self):
        inst = instance_z2_reflection()
        with pytest.raises(ValueError, match="unknown mode"):
            TheoremInstance(inst.index_cat, inst.free_complex, inst.group,
                            inst.family, inst.space, inst.coefficients,
                            2, 2, mode="sloppy")

    def test_negative_top_degree_rejected(self):
        inst = instance_z2_reflection()
        with pytest.raises(ValueError, match="top degree"):
            TheoremInstance(inst.index_cat, inst.free_complex, inst.group,
                            inst.family, inst.space, inst.coefficients,
                            -1, 2)

    def test_free_complex_over_wrong_category(self):
        inst = instance_z2_reflection()
        other = standard_category("chain", 2)
        with pytest.raises(ValueError, match="index category"):
            TheoremInstance(other, inst.free_complex, inst.group,
                            inst.family, inst.space, inst.coefficients, 2, 2)

    def test_unmarked_free_complex_rejected(self):
        inst = instance_z2_reflection()
        plain = cat_complex_concentrated(
            constant_module(inst.index_cat, Z, "contra"), 0)
        with pytest.raises(ValueError, match="free markers"):
            TheoremInstance(inst.index_cat, plain, inst.group, inst.family,
                            inst.space, inst.coefficients, 2, 2)

    def test_space_from_wrong_group_rejected(self):
        inst = instance_z2_reflection()
        stranger = point_space(FinGroup.cyclic(3))
        with pytest.raises(ValueError, match="different group"):
            TheoremInstance(inst.index_cat, inst.free_complex, inst.group,
                            inst.family, stranger, inst.coefficients, 2, 2)

    def test_coefficients_over_wrong_orbit_category(self):
        inst = instance_z2_reflection()
        with pytest.raises(ValueError, match="orbit leg"):
            TheoremInstance(inst.index_cat, inst.free_complex,
                            FinGroup.cyclic(3),
                            SubgroupFamily.all(FinGroup.cyclic(3)),
                            inst.space, inst.coefficients, 2, 2)

    def test_space_given_as_chain_complex(self):
        inst = instance_z2_reflection()
        chains = fixed_point_chains(inst.space, inst.family)
        direct = TheoremInstance(inst.index_cat, inst.free_complex,
                                 inst.group, inst.family, chains,
                                 inst.coefficients, 2, 2)
        rep = check_hypotheses(direct)
        assert rep.passed
        assert "not sampled" in rep.d.note

    def test_space_of_wrong_kind_rejected(self):
        inst = instance_z2_reflection()
        with pytest.raises(ValueError, match="cell data or a chain complex"):
            TheoremInstance(inst.index_cat, inst.free_complex, inst.group,
                            inst.family, "circle", inst.coefficients, 2, 2)


class TestHypotheses:
    def test_reflection_instance_passes(self):
        rep = check_hypotheses(instance_z2_reflection())
        assert rep.passed
        assert rep.a.passed and rep.b.passed and rep.c.passed and rep.d.passed
        assert rep.mode == STRICT

    def test_orbit_type_count_reported(self):
        rep = check_hypotheses(instance_z2_reflection())
        assert "2 orbit types" in rep.c.note

    def test_fixed_quotient_homology_witnesses(self):
        # X^(C2) is two points with trivial centralizer action: H_0 = Z^2.
        # X/C2 is an interval: H_0 = Z, H_1 = 0.  Hand count.
        rep = check_hypotheses(instance_z2_reflection())
        table = {(lab, p): grp for lab, p, grp in rep.d.witnesses}
        assert table[((0, 1), 0)] == FpAbGroup.free(2)
        assert table[((0, 1), 1)].is_trivial()
        assert table[((0,), 0)] == Z
        assert table[((0,), 1)].is_trivial()

    def test_hexagon_members_without_fixed_cells(self):
        # rotations fix nothing on the hexagon, so the rotation subgroup and
        # the full group contribute empty fixed sets
        rep = check_hypotheses(instance_s3_hexagon())
        assert rep.passed
        empties = [lab for lab, p, note in rep.d.witnesses if p is None]
        assert len(empties) == 2
        assert all(len(lab) in (3, 6) for lab in empties)

    def test_almost_mode_reports_annihilator(self):
        inst = instance_z2_reflection()
        almost = TheoremInstance(inst.index_cat, inst.free_complex,
                                 inst.group, inst.family, inst.space,
                                 inst.coefficients, 2, 2, mode=ALMOST)
        rep = check_hypotheses(almost)
        assert rep.mode == ALMOST
        assert "annihilator candidate 1" in rep.d.note


class TestComparison:
    def test_reflection_all_degrees_iso(self):
        rep = verify_comparison(instance_z2_reflection())
        assert rep.all_iso and rep.passed
        assert sorted(rep.per_degree) == [0, 1, 2]
        for m in rep.per_degree.values():
            assert m.kind == ISO
            assert m.kernel.is_trivial() and m.cokernel.is_trivial()

    def test_hexagon_all_degrees_iso(self):
        rep = verify_comparison(instance_s3_hexagon())
        assert rep.all_iso and rep.passed

    def test_mixed_mode_warns(self):
        inst = instance_z2_reflection()
        with pytest.warns(UserWarning, match="mixed modes"):
            rep = verify_comparison(inst, mode=ALMOST)
        assert rep.mode == ALMOST
        assert rep.passed

    def test_truncated_window_refused(self):
        inst = instance_z2_reflection()
        marked = TheoremInstance(inst.index_cat, inst.free_complex,
                                 inst.group, inst.family, inst.space,
                                 inst.coefficients, 2, 2,
                                 coeff_truncated=True)
        with pytest.raises(ValueError, match="unreliable"):
            verify_comparison(marked)

    def test_classify_map_kinds(self):
        assert classify_map(one_by_one(Z, Z, 1)).kind == ISO
        doubling = classify_map(one_by_one(Z, Z, 2))
        assert doubling.kind == ALMOST_ISO
        assert doubling.annihilator == 2
        assert doubling.cokernel == FpAbGroup.cyclic(2)
        collapse = classify_map(one_by_one(Z, Z, 0))
        assert collapse.kind == NEITHER
        assert collapse.annihilator is None


class TestEngineeredDefects:
    def test_padded_degree_detected(self):
        rep = check_hypotheses(with_padded_degree(instance_z2_reflection()))
        assert not rep.a.passed
        assert rep.a.witnesses == (3,)
        assert not rep.passed

    def test_inflated_floor_detected(self):
        rep = check_hypotheses(with_inflated_floor(instance_z2_reflection()))
        assert not rep.b.passed
        assert not rep.passed
        degrees = {q for _, _, q, _ in rep.b.witnesses}
        assert degrees == {0}
        groups = {grp for _, _, _, grp in rep.b.witnesses}
        assert groups == {Z}

    def test_twisted_system_fails_factorization(self):
        idx = standard_category("chain", 1)
        group, family, e = twisted_coefficient_system(idx)
        rep = sub_factorization_check(group, family, e)
        assert not rep.passed
        assert rep.violations
        for i, ref, other, q in rep.violations:
            assert ref != other
            assert q == 0

    def test_clean_instance_passes_factorization(self):
        inst = instance_z2_reflection()
        rep = sub_factorization_check(inst.group, inst.family,
                                      inst.coefficients)
        assert rep.passed
        assert rep.classes_checked >= 1
        assert rep.violations == ()

    def test_hexagon_passes_factorization(self):
        inst = instance_s3_hexagon()
        rep = sub_factorization_check(inst.group, inst.family,
                                      inst.coefficients)
        assert rep.passed

    def test_factorization_needs_matching_category(self):
        inst = instance_z2_reflection()
        with pytest.raises(ValueError, match="does not match"):
            sub_factorization_check(FinGroup.cyclic(3),
                                    SubgroupFamily.all(FinGroup.cyclic(3)),
                                    inst.coefficients)


class TestTransportModule:
    def test_values_are_connected_components(self):
        # coset spaces are transitive, so every transport groupoid is
        # connected and every value is a single copy of Z
        group = FinGroup.symmetric(3)
        mod = transport_pi0_module(group, SubgroupFamily.all(group))
        for obj in mod.cat.objects:
            assert mod.value(obj) == Z

    def test_actions_are_identity_on_components(self):
        group = FinGroup.cyclic(2)
        mod = transport_pi0_module(group, SubgroupFamily.all(group))
        for f in mod.cat.morphisms:
            assert mod.action(f).matrix.rows == ((1,),)


class TestSeqSpecValidation:
    def test_empty_prefix_rejected(self):
        with pytest.raises(ValueError, match="nonempty"):
            GradedSeqSpec((), ("bounded-by", 0), (0,), ("bounded-by", 0),
                          {}, 0, 0)

    def test_non_monotone_prefix_rejected(self):
        with pytest.raises(ValueError, match="monotone"):
            GradedSeqSpec((2, 1), ("bounded-by", 3), (0,), ("bounded-by", 0),
                          {}, 0, 0)

    def test_tail_bound_below_prefix_rejected(self):
        with pytest.raises(ValueError, match="below the last prefix"):
            GradedSeqSpec((0, 4), ("bounded-by", 3), (0,), ("bounded-by", 0),
                          {}, 0, 0)

    def test_unknown_tail_tag_rejected(self):
        with pytest.raises(ValueError, match="tail tag"):
            GradedSeqSpec((0,), "eventually-periodic", (0,),
                          ("bounded-by", 0), {}, 0, 0)

    def test_profile_below_floor_rejected(self):
        with pytest.raises(ValueError, match="inconsistent tail tags"):
            GradedSeqSpec((0,), ("bounded-by", 0), (0,), ("bounded-by", 0),
                          {1: FpAbGroup.cyclic(2)}, 3, 0)

    def test_sequence_extension_rules(self):
        spec = GradedSeqSpec((0, 2), ("bounded-by", 4),
                             (1,), "strictly-increasing-unbounded",
                             {}, 0, 0)
        assert [spec.sequence_value("m", i) for i in range(5)] == [0, 2, 4, 4, 4]
        assert [spec.sequence_value("n", j) for j in range(4)] == [1, 2, 3, 4]


class TestInterchange:
    def test_divergent_upper_bounded_lower_surjective(self):
        spec = GradedSeqSpec(
            (0, 1), "strictly-increasing-unbounded",
            (0, 2), ("bounded-by", 5),
            {0: Z, 3: FpAbGroup.cyclic(2)}, 0, 1)
        rep = interchange_criterion(spec)
        assert rep.surjective_symbolic is True
        assert rep.injective and rep.window_iso

    def test_constant_upper_recurring_hit_not_surjective(self):
        spec = GradedSeqSpec(
            (2, 2), ("bounded-by", 2),
            (0, 1, 3), "strictly-increasing-unbounded",
            {2: FpAbGroup.cyclic(4)}, 0, 1)
        rep = interchange_criterion(spec)
        assert rep.surjective_symbolic is False
        assert rep.injective

    def test_both_unbounded_undecided(self):
        spec = GradedSeqSpec(
            (0,), "strictly-increasing-unbounded",
            (0,), "strictly-increasing-unbounded",
            {5: FpAbGroup.cyclic(3)}, 2, 0)
        rep = interchange_criterion(spec)
        assert rep.surjective_symbolic is None

    def test_bounded_tails_straddling_support_undecided(self):
        # the upper limit settles at 1 or 2; only one of the two shifted
        # degrees lands on the support, so the tags cannot decide
        spec = GradedSeqSpec(
            (1, 1), ("bounded-by", 2),
            (0,), ("bounded-by", 0),
            {0: FpAbGroup.cyclic(2)}, 0, 1)
        rep = interchange_criterion(spec)
        assert rep.surjective_symbolic is None

    def test_bounded_tails_clear_of_support_surjective(self):
        spec = GradedSeqSpec(
            (4, 4), ("bounded-by", 4),
            (0,), ("bounded-by", 1),
            {5: FpAbGroup.cyclic(2)}, 0, 0)
        rep = interchange_criterion(spec)
        assert rep.surjective_symbolic is True

    def test_bounded_tails_certain_hit_not_surjective(self):
        # the upper limit is 1 or 2; the certain lower value 3 shifts onto
        # the support either way (3-1=2, 3-2=1)
        spec = GradedSeqSpec(
            (1, 1), ("bounded-by", 2),
            (3,), ("bounded-by", 5),
            {1: FpAbGroup.cyclic(2), 2: FpAbGroup.cyclic(2)}, 0, 0)
        rep = interchange_criterion(spec)
        assert rep.surjective_symbolic is False

    def test_window_groups_match_up_to_reorder(self):
        spec = GradedSeqSpec(
            (0, 1), ("bounded-by", 2),
            (0, 1), ("bounded-by", 3),
            {0: FpAbGroup.cyclic(2), 1: Z, 2: FpAbGroup.cyclic(6)}, 0, 0)
        rep = interchange_criterion(spec, window=(4, 5))
        assert rep.window == (4, 5)
        assert rep.window_iso
        assert rep.source == rep.target

    def test_degenerate_window_rejected(self):
        spec = GradedSeqSpec((0,), ("bounded-by", 0), (0,),
                             ("bounded-by", 0), {}, 0, 0)
        with pytest.raises(ValueError, match="at least one"):
            interchange_criterion(spec, window=(0, 3))


class TestTorProbe:
    def test_diagonal_witness_order(self):
        # the diagonal has a generator in each Z/2^n for n = 2..N, so its
        # order is 2^N; checked for every N up to 8
        for n_top in range(2, 9):
            rep = tor_interchange_probe(2, 4, n_top)
            assert rep.delta_order == 2 ** n_top

    def test_membership_exactly_when_block_reaches(self):
        for m_top in range(2, 6):
            for n_top in range(2, 6):
                rep = tor_interchange_probe(2, m_top, n_top)
                assert rep.membership == (m_top >= n_top)
                assert rep.membership_boundary

    def test_window_is_isomorphism(self):
        rep = tor_interchange_probe(3, 4, 3)
        assert rep.window_iso
        assert rep.top_order_bound == 27

    def test_odd_prime(self):
        rep = tor_interchange_probe(3, 2, 5)
        assert rep.delta_order == 3 ** 5
        assert not rep.membership

    def test_composite_rejected(self):
        with pytest.raises(ValueError, match="not prime"):
            tor_interchange_probe(6, 3, 3)

    def test_bounds_rejected(self):
        with pytest.raises(ValueError, match="bounds exceeded"):
            tor_interchange_probe(2, 1, 5)
        with pytest.raises(ValueError, match="bounds exceeded"):
            tor_interchange_probe(2, 3, 17)


class TestBorelVsQuotient:
    def test_fixed_point_free_action_trivial_discrepancy(self):
        group = FinGroup.cyclic(2)
        rep = borel_vs_quotient_check(group, free_orbit_points(group), 4)
        assert rep.passed
        for ker, coker, _, ok in rep.per_degree.values():
            assert ker.is_trivial() and coker.is_trivial() and ok

    def test_one_point_space_kernel_pattern(self):
        # kernels are the positive-degree classifying-space homology of Z/2:
        # Z/2 in odd degrees, zero in positive even degrees
        group = FinGroup.cyclic(2)
        rep = borel_vs_quotient_check(group, point_space(group), 5)
        assert rep.passed
        assert rep.valid_through == 4
        for p, (ker, coker, ann, ok) in rep.per_degree.items():
            expected = FpAbGroup.cyclic(2) if p % 2 else FpAbGroup.zero()
            assert ker == expected
            assert coker.is_trivial()
            assert ok

    def test_explicit_annihilators(self):
        group = FinGroup.cyclic(2)
        rep = borel_vs_quotient_check(group, point_space(group), 5,
                                      annihilators={1: 2, 3: 2})
        assert rep.passed
        assert sorted(rep.per_degree) == [1, 3]

    def test_insufficient_annihilator_fails(self):
        group = FinGroup.cyclic(2)
        rep = borel_vs_quotient_check(group, point_space(group), 4,
                                      annihilators={1: 3})
        assert not rep.passed

    def test_truncation_too_small(self):
        group = FinGroup.cyclic(2)
        with pytest.raises(ValueError, match="truncation too small"):
            borel_vs_quotient_check(group, point_space(group), 3,
                                    annihilators={5: 32})


class TestModelFeed:
    def test_rf_model_feeds_the_instance(self):
        # the desk instances consume the staircase window directly; pin the
        # degree support the hypothesis check sees
        model = classifying_model("RF", 3)
        cx = cellular_chain_complex(model)
        ranks = [cx.module(p).total_rank() for p in range(4)]
        assert ranks[3] == 0
        assert ranks[0] > 0 and ranks[1] > 0 and ranks[2] > 0
