"""Tests for finite groups and the concrete categories built on them.

Counting oracles (subgroup counts, hom-set sizes, Weyl groups) were worked out
by hand for Z/2, Z/4, Klein four, and S_3 before implementation.
"""

import pytest

from orbifunctor.fincat import (
    CatFunctor,
    FinCategory,
    FinGroup,
    GROUP_ORDER_BOUND,
    SubgroupFamily,
    coset_g_set,
    family_closure,
    group_analysis,
    one_object_category,
    orbit_category,
    pi0,
    standard_category,
    sub_category_and_projection,
    transport_groupoid,
    validate_category,
    validate_functor,
)

S3 = FinGroup.symmetric(3)
SWAP01 = (1, 0, 2)      # the transposition exchanging 0 and 1
A3 = S3.subgroup_generated([(1, 2, 0)])


# -- groups -----------------------------------------------------------------


def test_cyclic_group():
    g = FinGroup.cyclic(4)
    assert g.order == 4
    assert g.mult(3, 2) == 1
    assert g.inverse(3) == 1
    assert g.is_abelian()


def test_symmetric_group():
    assert S3.order == 6
    assert not S3.is_abelian()
    assert S3.mult(SWAP01, SWAP01) == S3.identity
    # (p*q)(i) = p(q(i))
    p, q = (1, 0, 2), (0, 2, 1)
    assert S3.mult(p, q) == (1, 2, 0)


def test_from_table_validation():
    with pytest.raises(ValueError):
        FinGroup.from_table([0, 1], {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 1})
    good = FinGroup.from_table(
        [0, 1], {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0})
    assert good.identity == 0


def test_dihedral_and_products():
    assert FinGroup.dihedral(4).order == 8
    klein = FinGroup.direct_product(FinGroup.cyclic(2), FinGroup.cyclic(2))
    assert klein.order == 4
    assert klein.is_abelian()
    assert len(klein.all_subgroups()) == 5


def test_hexagon_realization_of_s3():
    # k |-> k+2 and k |-> -k generate a nonabelian group of order 6 on Z/6
    rot2 = tuple((k + 2) % 6 for k in range(6))
    flip = tuple((-k) % 6 for k in range(6))
    g = FinGroup.from_permutations([rot2, flip])
    assert g.order == 6
    assert not g.is_abelian()
    # r^-1 s r = s r^2
    lhs = g.conjugate(rot2, flip)
    rhs = g.mult(flip, g.mult(rot2, rot2))
    assert lhs == rhs


def test_subgroup_lattices():
    z2 = FinGroup.cyclic(2)
    assert len(z2.all_subgroups()) == 2
    assert z2.centralizer([0]) == frozenset([0, 1])
    z4 = FinGroup.cyclic(4)
    an4 = group_analysis(z4)
    assert len(an4.subgroups) == 3
    assert all(an4.centralizers[s] == frozenset(z4.elements)
               for s in an4.subgroups)
    an3 = group_analysis(S3)
    assert len(an3.subgroups) == 6
    assert len(an3.conjugacy_classes) == 4
    swap_sub = frozenset([S3.identity, SWAP01])
    assert an3.centralizers[swap_sub] == swap_sub


def test_group_analysis_bound():
    with pytest.raises(ValueError):
        group_analysis(FinGroup.cyclic(GROUP_ORDER_BOUND + 1))


def test_quotient():
    q, proj = S3.quotient(A3)
    assert q.order == 2
    assert proj[SWAP01] != q.identity
    with pytest.raises(ValueError):
        S3.quotient(frozenset([S3.identity, SWAP01]))


def test_element_classes():
    classes = S3.element_classes()
    assert sorted(len(c) for c in classes) == [1, 2, 3]


# -- families ---------------------------------------------------------------


def test_family_closure_oracles():
    z2 = FinGroup.cyclic(2)
    triv = family_closure(z2, [[0]])
    assert len(triv) == 1
    swaps = family_closure(S3, [frozenset([S3.identity, SWAP01])])
    assert len(swaps) == 4      # trivial + the three 2-element subgroups
    everything = family_closure(S3, [S3.elements])
    assert len(everything) == 6
    assert SubgroupFamily.all(S3).members == everything.members


def test_family_validation():
    with pytest.raises(ValueError):
        SubgroupFamily(S3, [frozenset([S3.identity, SWAP01])])
    with pytest.raises(ValueError):
        family_closure(S3, [[SWAP01]])


# -- orbit categories -------------------------------------------------------


def test_orbit_category_z2_counts():
    z2 = FinGroup.cyclic(2)
    cat = orbit_category(z2, SubgroupFamily.all(z2))
    one, whole = (0,), (0, 1)
    assert len(cat.objects) == 2
    assert len(cat.mor(one, one)) == 2
    assert len(cat.mor(one, whole)) == 1
    assert cat.mor(whole, one) == ()
    assert len(cat.mor(whole, whole)) == 1
    assert validate_category(cat) == []


def test_orbit_category_trivial_group():
    t = FinGroup.trivial()
    cat = orbit_category(t, SubgroupFamily.all(t))
    assert len(cat.objects) == 1
    assert len(cat.morphisms) == 1


def test_orbit_category_trivial_family():
    z2 = FinGroup.cyclic(2)
    cat = orbit_category(z2, SubgroupFamily.trivial(z2))
    assert len(cat.objects) == 1
    assert len(cat.morphisms) == 2
    assert validate_category(cat) == []


@pytest.mark.parametrize("group", [
    FinGroup.cyclic(2), FinGroup.cyclic(4),
    FinGroup.direct_product(FinGroup.cyclic(2), FinGroup.cyclic(2)),
    S3, FinGroup.cyclic(6), FinGroup.dihedral(4), FinGroup.cyclic(12),
], ids=["Z2", "Z4", "V4", "S3", "Z6", "D4", "Z12"])
def test_orbit_category_validates_and_counts(group):
    cat = orbit_category(group, SubgroupFamily.all(group))
    assert validate_category(cat) == []
    one = (group.identity,)
    for obj in cat.objects:
        assert len(cat.mor(one, obj)) == group.order // len(obj)
        if obj != one:
            assert cat.mor(obj, one) == ()


# -- subgroup category and projection ---------------------------------------


def test_sub_category_z2():
    z2 = FinGroup.cyclic(2)
    data = sub_category_and_projection(z2, SubgroupFamily.all(z2))
    one = (0,)
    assert len(data.sub.mor(one, one)) == 1
    assert len(data.orbit.mor(one, one)) == 2
    assert validate_category(data.sub) == []
    assert validate_functor(data.projection) == []


def test_sub_category_s3_weyl_counts():
    data = sub_category_and_projection(S3, SubgroupFamily.all(S3))
    swap = tuple(sorted([S3.identity, SWAP01]))
    a3 = tuple(sorted(A3))
    assert len(data.sub.mor(swap, swap)) == 1    # W(<swap>) trivial
    assert len(data.sub.mor(a3, a3)) == 2        # W(A_3) = Z/2
    assert validate_category(data.sub) == []
    assert validate_functor(data.projection) == []


@pytest.mark.parametrize("group", [
    FinGroup.cyclic(4),
    FinGroup.direct_product(FinGroup.cyclic(2), FinGroup.cyclic(2)),
    S3,
], ids=["Z4", "V4", "S3"])
def test_projection_fibers_are_centralizer_orbits(group):
    data = sub_category_and_projection(group, SubgroupFamily.all(group))
    orb, sub, pr = data.orbit, data.sub, data.projection
    for f_sub in sub.morphisms:
        fiber = [f for f in orb.morphisms if pr.mor_map[f] == f_sub]
        assert fiber
        h_sub = frozenset(f_sub[0])
        centralizer = group.centralizer(h_sub)
        # the fiber is one orbit of Z_G H acting by left multiplication
        base = fiber[0]
        orbit = set()
        for z in centralizer:
            moved = tuple(sorted(group.mult(group.mult(z, min(base[2])), k)
                                 for k in frozenset(base[1])))
            orbit.add((base[0], base[1], moved))
        assert set(fiber) == orbit
    # pr is surjective on morphisms (full)
    assert set(pr.mor_map.values()) == set(sub.morphisms)


@pytest.mark.parametrize("group", [
    FinGroup.cyclic(4),
    FinGroup.direct_product(FinGroup.cyclic(2), FinGroup.cyclic(2)),
    S3,
], ids=["Z4", "V4", "S3"])
def test_sub_automorphisms_are_weyl_groups(group):
    """aut in the quotient category is N_G H / (H * Z_G H), as groups."""
    data = sub_category_and_projection(group, SubgroupFamily.all(group))
    sub, pr = data.sub, data.projection
    for h_sub in group.all_subgroups():
        h_lab = tuple(sorted(h_sub))
        normalizer = group.normalizer(h_sub)
        hz = group.subgroup_product(h_sub, group.centralizer(h_sub))
        auts = sub.mor(h_lab, h_lab)

        def phi(n):
            coset = tuple(sorted(group.mult(n, k) for k in h_sub))
            return pr.mor_map[(h_lab, h_lab, coset)]

        # homomorphism (diagrammatically), surjective, kernel H * Z_G H
        for m in normalizer:
            for n in normalizer:
                assert phi(group.mult(m, n)) == sub.compose(phi(m), phi(n))
        assert {phi(n) for n in normalizer} == set(auts)
        kernel = {n for n in normalizer if sub.is_identity(phi(n))}
        assert kernel == set(hz)
        assert len(auts) * len(hz) == len(normalizer)


# -- transport groupoids ----------------------------------------------------


def test_transport_regular_action():
    z2 = FinGroup.cyclic(2)
    elements, action = coset_g_set(z2, [0])
    cat = transport_groupoid(z2, elements, action)
    assert len(cat.objects) == 2
    assert len(cat.morphisms) == 4
    assert len(pi0(cat)) == 1
    assert validate_category(cat) == []


def test_transport_one_point():
    cat = transport_groupoid(S3, *coset_g_set(S3, S3.elements))
    assert len(cat.objects) == 1
    assert len(cat.morphisms) == 6


def test_transport_all_invertible():
    z4 = FinGroup.cyclic(4)
    elements, action = coset_g_set(z4, [0, 2])
    cat = transport_groupoid(z4, elements, action)
    for f in cat.morphisms:
        inverses = [g for g in cat.mor(cat.cod[f], cat.dom[f])
                    if cat.is_identity(cat.compose(f, g))
                    and cat.is_identity(cat.compose(g, f))]
        assert len(inverses) == 1


def test_transport_disconnected():
    z2 = FinGroup.cyclic(2)
    elements = ["a", "b"]
    action = {(g, s): s for g in z2.elements for s in elements}
    cat = transport_groupoid(z2, elements, action)
    assert len(pi0(cat)) == 2


def test_transport_invalid_action():
    z2 = FinGroup.cyclic(2)
    action = {(0, "a"): "a", (1, "a"): "b"}
    with pytest.raises(ValueError):
        transport_groupoid(z2, ["a"], action)


# -- index categories and one-object categories -----------------------------


def test_chain_category():
    cat = standard_category("chain", 2)
    assert len(cat.objects) == 3
    assert len(cat.morphisms) == 6
    assert validate_category(cat) == []
    assert cat.compose((0, 1), (1, 2)) == (0, 2)
    assert cat.mor(2, 0) == ()


def test_grid_category():
    cat = standard_category("grid", 3)
    assert len(cat.mor(0, 2)) == 3
    assert validate_category(cat) == []
    # the square of generators commutes: both orders give the (1,1) step
    a = cat.compose((0, 1, (1, 0)), (1, 2, (0, 1)))
    b = cat.compose((0, 1, (0, 1)), (1, 2, (1, 0)))
    assert a == b == (0, 2, (1, 1))


def test_grid_counts():
    cat = standard_category("grid", 2)
    assert len(cat.mor(0, 0)) == 1
    assert len(cat.mor(0, 1)) == 2
    assert len(cat.mor(1, 0)) == 0


def test_standard_category_errors():
    with pytest.raises(ValueError):
        standard_category("ladder", 2)
    with pytest.raises(ValueError):
        standard_category("chain", -1)


def test_one_object_category():
    z3 = FinGroup.cyclic(3)
    cat = one_object_category(z3)
    assert len(cat.objects) == 1
    assert len(cat.morphisms) == 3
    assert validate_category(cat) == []
    # diagrammatic: compose(a, b) = b * a
    assert cat.compose(1, 1) == 2


def test_validate_catches_broken_associativity():
    morphisms = ["1", "a", "b"]
    dom = {f: "*" for f in morphisms}
    cod = dict(dom)
    table = {("1", f): f for f in morphisms}
    table.update({(f, "1"): f for f in morphisms})
    table.update({("a", "a"): "b", ("a", "b"): "a",
                  ("b", "a"): "1", ("b", "b"): "1"})
    cat = FinCategory(["*"], morphisms, dom, cod, table, {"*": "1"})
    problems = validate_category(cat)
    assert len(problems) == 1
    assert "associativity" in problems[0]


def test_validate_catches_missing_identity():
    cat = FinCategory(["*"], ["f"], {"f": "*"}, {"f": "*"},
                      {("f", "f"): "f"}, {})
    assert any("identity" in p for p in validate_category(cat))


def test_validate_functor_catches_bad_map():
    z2 = FinGroup.cyclic(2)
    bg = one_object_category(z2)
    bad = CatFunctor(bg, bg, {"*": "*"}, {0: 0, 1: 0})
    assert validate_functor(bad) == []      # collapsing Z/2 is a real functor
    worse = CatFunctor(bg, bg, {"*": "*"}, {0: 1, 1: 0})
    assert any("identity" in p for p in validate_functor(worse))
