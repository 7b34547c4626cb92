"""Generating-vector enumeration against the brute-force oracle.

Counts marked as derived were computed with `brute_force_count` (full-grid
scan, no shortcuts) and then frozen; the enumeration path must keep
agreeing with it.
"""

import pytest

from equisym.actions import (
    GeneratingVector,
    SizeGuard,
    brute_force_count,
    canonical_torsion_class,
    cyclic_restriction,
    enumerate_vectors,
    find_one_vector,
    prime_type_by_formula,
    reduce_types,
)
from equisym.signatures import (
    Signature,
    enumerate_prime_quotient_data,
    hyperelliptic_signature,
    primes_up_to,
)

# (signature, order, genus) -> vector count, frozen from brute_force_count
FROZEN_COUNTS = [
    (Signature(0, (5, 5, 5)), 5, 2, 12),
    (Signature(0, (2,) * 8), 2, 3, 1),
    (Signature(1, (3, 3)), 3, 3, 18),
    (Signature(0, (3,) * 5), 3, 3, 10),
    (Signature(0, (7, 7, 7)), 7, 3, 30),
    (Signature(0, (3, 3, 3, 3)), 3, 2, 6),
    (Signature(1, (2, 2)), 2, 2, 4),
    (Signature(2, ()), 2, 3, 15),
    (Signature(0, (2, 2, 2, 4, 4)), 4, 3, 2),
]


class TestEnumeration:
    @pytest.mark.parametrize("sig,n,g,count", FROZEN_COUNTS)
    def test_frozen_counts(self, sig, n, g, count):
        vectors = enumerate_vectors(sig, n, g)
        assert len(vectors) == count
        assert brute_force_count(sig, n, g) == count

    @pytest.mark.parametrize("sig,n,g,count", FROZEN_COUNTS)
    def test_every_vector_revalidates(self, sig, n, g, count):
        for v in enumerate_vectors(sig, n, g):
            v.validate(sig)

    def test_lexicographic_order(self):
        vectors = enumerate_vectors(Signature(0, (5, 5, 5)), 5, 2)
        flats = [v.flat() for v in vectors]
        assert flats == sorted(flats)

    def test_wrong_genus_is_empty(self):
        assert enumerate_vectors(Signature(0, (5, 5, 5)), 5, 3) == []

    def test_no_vector_when_sum_cannot_vanish(self):
        # single cone point: its image must be 0 mod n, impossible at full order
        assert enumerate_vectors(Signature(1, (5,)), 5, 3) == []
        assert brute_force_count(Signature(1, (5,)), 5, 3) == 0

    def test_size_guard(self):
        with pytest.raises(SizeGuard):
            enumerate_vectors(Signature(0, (5, 5, 5)), 5, 2, max_candidates=10)
        with pytest.raises(SizeGuard):
            brute_force_count(Signature(0, (5, 5, 5)), 5, 2, max_candidates=10)

    def test_find_one_matches_enumerate(self):
        for sig, n, g, count in FROZEN_COUNTS:
            first = find_one_vector(sig, n)
            if count:
                assert first == enumerate_vectors(sig, n, g)[0]

    def test_oracle_equivalence_sweep(self):
        # every prime stratum with a small grid at genus 2..4
        for g in (2, 3, 4):
            for p in primes_up_to(4 * g + 2):
                for h, r in enumerate_prime_quotient_data(g, p):
                    if p ** (2 * h + r) > 10**5:
                        continue
                    sig = Signature(h, (p,) * r)
                    assert len(enumerate_vectors(sig, p, g)) == brute_force_count(sig, p, g)


class TestValidation:
    def test_order_mismatch(self):
        v = GeneratingVector(4, (), (2, 2, 2, 2, 2))
        assert not v.is_valid(Signature(0, (2, 2, 2, 4, 4)))

    def test_sum_condition(self):
        v = GeneratingVector(5, (), (1, 1, 1))
        assert not v.is_valid(Signature(0, (5, 5, 5)))

    def test_surjectivity(self):
        v = GeneratingVector(4, (0, 0), (2, 2))
        assert not v.is_valid(Signature(1, (2, 2)))

    def test_out_of_range(self):
        v = GeneratingVector(5, (), (6, 1, 3))
        assert not v.is_valid(Signature(0, (5, 5, 5)))


class TestReduceTypes:
    def test_genus2_order5_point_single_type(self):
        sig = Signature(0, (5, 5, 5))
        vectors = enumerate_vectors(sig, 5, 2)
        types = reduce_types(vectors, sig)
        assert len(types) == 1
        assert types[0].orbit_size == 12
        assert types[0].orbit_representative.torsion_images == (1, 1, 3)

    def test_genus3_order2_three_types_total(self):
        total = []
        for h, r in enumerate_prime_quotient_data(3, 2):
            sig = Signature(h, (2,) * r)
            total.extend(reduce_types(enumerate_vectors(sig, 2, 3), sig))
        assert len(total) == 3

    def test_genus3_order3_two_types_total(self):
        total = []
        for h, r in enumerate_prime_quotient_data(3, 3):
            sig = Signature(h, (3,) * r)
            total.extend(reduce_types(enumerate_vectors(sig, 3, 3), sig))
        assert len(total) == 2

    def test_genus3_order7_two_classes(self):
        # the signature-level stratum carries two genuinely distinct
        # vector classes: (1,1,5) and (1,2,4)
        sig = Signature(0, (7, 7, 7))
        types = reduce_types(enumerate_vectors(sig, 7, 3), sig)
        reps = sorted(t.orbit_representative.torsion_images for t in types)
        assert reps == [(1, 1, 5), (1, 2, 4)]
        assert sorted(t.orbit_size for t in types) == [12, 18]

    def test_orbit_sizes_sum_to_count(self):
        for sig, n, g, count in FROZEN_COUNTS:
            vectors = enumerate_vectors(sig, n, g)
            types = reduce_types(vectors, sig)
            assert sum(t.orbit_size for t in types) == count

    def test_unit_action_stays_in_orbit(self):
        sig = Signature(0, (7, 7, 7))
        vectors = enumerate_vectors(sig, 7, 3)
        types = reduce_types(vectors, sig)
        for t in types:
            rep = t.orbit_representative
            for u in (2, 3, 6):
                scaled = tuple((u * x) % 7 for x in rep.torsion_images)
                assert canonical_torsion_class(sig, 7, scaled) == canonical_torsion_class(
                    sig, 7, rep.torsion_images
                )

    def test_forced_at_order_two(self):
        for g in (2, 3, 4, 5):
            for h, r in enumerate_prime_quotient_data(g, 2):
                sig = Signature(h, (2,) * r)
                if g == 2 and sig == hyperelliptic_signature(2):
                    pass  # still a single class; nothing special to skip
                types = reduce_types(enumerate_vectors(sig, 2, g), sig)
                assert len(types) == 1


class TestFormulaPath:
    def test_matches_exact_reduction(self):
        for sig, p, g, _ in FROZEN_COUNTS:
            if sig.periods and sig.periods[0] != sig.periods[-1]:
                continue  # formula path is for prime strata
            if p == 4:
                continue
            ty = prime_type_by_formula(sig, p, g)
            types = reduce_types(enumerate_vectors(sig, p, g), sig)
            best = min(types, key=lambda t: t.orbit_representative.flat())
            assert ty.orbit_representative == best.orbit_representative
            assert ty.orbit_size == best.orbit_size

    def test_big_sweep_reps_validate(self):
        for g in (10, 25, 40):
            for p in primes_up_to(4 * g + 2):
                for h, r in enumerate_prime_quotient_data(g, p):
                    sig = Signature(h, (p,) * r)
                    ty = prime_type_by_formula(sig, p, g)
                    if r == 1:
                        assert ty is None
                        continue
                    assert ty is not None
                    ty.orbit_representative.validate(sig)


class TestCyclicRestriction:
    def test_order4_square_root_of_hyperellipticity(self):
        sig = Signature(0, (2, 2, 2, 4, 4))
        for v in enumerate_vectors(sig, 4, 3):
            restricted, entries = cyclic_restriction(sig, v, 2)
            assert restricted == hyperelliptic_signature(3)
            assert entries == (1,) * 8

    def test_order4_on_four_fours_restricts_to_type_b(self):
        sig = Signature(0, (4, 4, 4, 4))
        v = enumerate_vectors(sig, 4, 3)[0]
        restricted, _ = cyclic_restriction(sig, v, 2)
        assert restricted == Signature(1, (2, 2, 2, 2))

    def test_order10_genus2_restrictions(self):
        sig = Signature(0, (2, 5, 10))
        v = enumerate_vectors(sig, 10, 2)[0]
        assert cyclic_restriction(sig, v, 5)[0] == Signature(0, (5, 5, 5))
        assert cyclic_restriction(sig, v, 2)[0] == hyperelliptic_signature(2)

    def test_order14_genus3_restrictions(self):
        # the hyperelliptic order-7 surface: restriction data of its full group
        sig = Signature(0, (2, 7, 14))
        v = enumerate_vectors(sig, 14, 3)[0]
        sub7, entries = cyclic_restriction(sig, v, 7)
        assert sub7 == Signature(0, (7, 7, 7))
        assert canonical_torsion_class(sub7, 7, entries) == (1, 1, 5)
        assert cyclic_restriction(sig, v, 2)[0] == hyperelliptic_signature(3)
