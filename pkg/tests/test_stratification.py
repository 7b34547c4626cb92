"""Branch-locus assembly and the closure relation at genus 2 and 3."""

import pytest

from equisym.signatures import hyperelliptic_signature
from equisym.stratification import (
    AtlasConfig,
    Containment,
    analyze_dim0_rigidity,
    build_branch_locus,
    build_closure_relation,
    degrade_relation,
    find_isolated,
)
from equisym import singerman

CFG = AtlasConfig()


def keys(strata):
    return [(s.order, str(s.signature)) for s in strata]


@pytest.fixture(scope="module")
def genus3():
    strata = build_branch_locus(3, CFG)
    relation = build_closure_relation(strata, 3, CFG)
    return strata, relation


@pytest.fixture(scope="module")
def genus2():
    strata = build_branch_locus(2, CFG)
    relation = build_closure_relation(strata, 2, CFG)
    return strata, relation


class TestGenus3Locus:
    def test_stratum_list(self, genus3):
        strata, _ = genus3
        assert keys(strata) == [
            (2, "0;2,2,2,2,2,2,2,2"),
            (2, "1;2,2,2,2"),
            (2, "2;"),
            (3, "0;3,3,3,3,3"),
            (3, "1;3,3"),
            (4, "0;2,2,2,4,4"),
            (7, "0;7,7,7"),
        ]

    def test_dimensions(self, genus3):
        strata, _ = genus3
        assert [s.dim for s in strata] == [10, 8, 6, 4, 4, 4, 0]
        assert [s.codim for s in strata] == [2, 4, 6, 8, 8, 8, 12]

    def test_maximality_flags(self, genus3):
        strata, relation = genus3
        assert [s.maximal for s in strata] == [True, True, False, True, False, True, False]
        assert list(relation.stratum_maximal) == [True, True, False, True, False, False, False]

    def test_closure_pairs(self, genus3):
        _, relation = genus3
        assert relation.yes_pairs() == [(2, 0), (2, 1), (4, 1), (5, 0), (6, 1), (6, 4)]

    def test_order3_type_a_in_closure_of_type_b(self, genus3):
        strata, relation = genus3
        a = strata[4]  # (3, (1;3,3))
        b = strata[1]  # (2, (1;2,2,2,2))
        assert relation.contains(a, b) is Containment.YES

    def test_order7_point_reaches_maximal_codim4_stratum(self, genus3):
        strata, relation = genus3
        assert relation.matrix[(6, 4)] is Containment.YES
        assert relation.matrix[(6, 1)] is Containment.YES  # transitive

    def test_klein_point_not_claimed_inside_order3_sphere_stratum(self, genus3):
        # the order-3 elements available to the order-7 points have two
        # fixed points, not five: containment in (3, (0;3^5)) stays open
        _, relation = genus3
        assert relation.matrix[(6, 3)] is Containment.UNKNOWN

    def test_unknowns_are_the_expected_conservative_ones(self, genus3):
        _, relation = genus3
        assert relation.unknown_pairs() == [(4, 0), (4, 2), (6, 0), (6, 2), (6, 3), (6, 5)]
        assert relation.completeness == "conservative"

    def test_no_isolated_at_genus3(self, genus3):
        strata, relation = genus3
        assert find_isolated(strata, relation) == []

    def test_order4_default_is_square_root_only(self):
        strata = build_branch_locus(3, AtlasConfig(extra_orders=(4,)))
        with_all = keys(strata)
        assert (4, "0;4,4,4,4") in with_all
        assert (4, "1;2,2") in with_all

    def test_primes_only(self):
        strata = build_branch_locus(3, AtlasConfig(primes_only=True))
        assert all(s.order in (2, 3, 7) for s in strata)
        assert len(strata) == 6


class TestGenus2Locus:
    def test_stratum_list_excludes_hyperelliptic(self, genus2):
        strata, _ = genus2
        assert keys(strata) == [(2, "1;2,2"), (3, "0;3,3,3,3"), (5, "0;5,5,5")]
        assert all(s.signature != hyperelliptic_signature(2) for s in strata)

    def test_relation_is_complete(self, genus2):
        _, relation = genus2
        assert relation.completeness == "exact"
        assert relation.yes_pairs() == [(1, 0)]

    def test_genus2_order5_point_isolated(self, genus2):
        strata, relation = genus2
        assert find_isolated(strata, relation) == [2]
        assert strata[2].dim == 0

    def test_rigidity_analysis(self, genus2):
        strata, _ = genus2
        report = analyze_dim0_rigidity(strata[2], singerman.default_table(), CFG)
        assert report.status == "rigid"
        assert (10, (0, (2, 5, 10))) in report.realized

    def test_order3_stratum_in_closure_of_involution_stratum(self, genus2):
        strata, relation = genus2
        assert relation.contains(strata[1], strata[0]) is Containment.YES


class TestRelationAxioms:
    @pytest.mark.parametrize("genus", [2, 3, 4, 6])
    def test_partial_order(self, genus):
        strata = build_branch_locus(genus, CFG)
        relation = build_closure_relation(strata, genus, CFG)
        n = len(strata)
        for i in range(n):
            assert relation.matrix[(i, i)] is Containment.YES
        for i in range(n):
            for j in range(n):
                if i != j and relation.matrix[(i, j)] is Containment.YES:
                    assert relation.matrix[(j, i)] is not Containment.YES
                    assert strata[i].dim <= strata[j].dim
                for k in range(n):
                    if (
                        relation.matrix[(i, j)] is Containment.YES
                        and relation.matrix[(j, k)] is Containment.YES
                    ):
                        assert relation.matrix[(i, k)] is Containment.YES

    def test_yes_needs_dimension_monotone(self, genus3):
        strata, relation = genus3
        for (i, j) in relation.yes_pairs():
            assert strata[i].dim < strata[j].dim or i == j

    def test_degrade_helper(self, genus3):
        strata, relation = genus3
        degraded = degrade_relation(relation, [(4, 1)])
        assert degraded.matrix[(4, 1)] is Containment.UNKNOWN
        assert degraded.completeness == "conservative"
        # original untouched
        assert relation.matrix[(4, 1)] is Containment.YES


class TestModuleLevelContains:
    def test_matches_relation(self, genus3):
        strata, relation = genus3
        from equisym.stratification import closure_contains

        assert closure_contains(strata[4], strata[1], relation) is Containment.YES
        assert closure_contains(strata[0], strata[1], relation) is Containment.NO
        assert closure_contains(strata[6], strata[3], relation) is Containment.UNKNOWN
        assert closure_contains(strata[2], strata[2], relation) is Containment.YES


class TestConfigRobustness:
    @pytest.mark.parametrize(
        "genus,orders",
        [(2, (6,)), (2, (8,)), (2, (10,)), (3, (4, 8)), (4, (4, 6)), (5, (4, 8, 9))],
    )
    def test_composite_configs_build_cleanly(self, genus, orders):
        cfg = AtlasConfig(extra_orders=orders)
        strata = build_branch_locus(genus, cfg)
        relation = build_closure_relation(strata, genus, cfg)
        n = len(strata)
        for i in range(n):
            for j in range(n):
                if i != j and relation.matrix[(i, j)] is Containment.YES:
                    # antisymmetry and the dimension monotonicity invariant:
                    # equality only along dimension-preserving extensions
                    assert relation.matrix[(j, i)] is not Containment.YES
                    assert strata[i].dim <= strata[j].dim

    def test_equal_dimension_yes_via_restriction(self):
        # genus 2: the order-6 label restricts to the order-3 stratum with
        # the same two-dimensional image (a dimension-preserving extension)
        cfg = AtlasConfig(extra_orders=(6,))
        strata = build_branch_locus(2, cfg)
        relation = build_closure_relation(strata, 2, cfg)
        by = {(s.order, str(s.signature)): i for i, s in enumerate(strata)}
        i = by[(6, "0;2,2,3,3")]
        j = by[(3, "0;3,3,3,3")]
        assert relation.matrix[(i, j)] is Containment.YES
        assert strata[i].dim == strata[j].dim
        assert relation.matrix[(j, i)] is Containment.UNKNOWN


class TestRigidityAtHigherGenus:
    def test_order7_genus3_not_rigid(self, genus3):
        # the hyperelliptic curve with an order-7 symmetry shares the
        # signature entry, so the stratum is not rigid
        strata, _ = genus3
        assert analyze_dim0_rigidity(strata[6], singerman.default_table(), CFG).status == "not_rigid"

    def test_dim_requirement(self, genus3):
        strata, _ = genus3
        with pytest.raises(ValueError):
            analyze_dim0_rigidity(strata[0], singerman.default_table(), CFG)
