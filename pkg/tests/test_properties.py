"""Randomized invariant suites.

Each suite runs well over a thousand randomized cases with a fixed seed:
Riemann-Hurwitz round trips, dimension parity, the fixed-point bound,
partial-order axioms of the closure relation, and verdict monotonicity
under relation degradation.
"""

import random

from hypothesis import given, settings, strategies as st

from equisym.actions import enumerate_vectors, reduce_types
from equisym.classifier import classify_genus, classify_stratum
from equisym.signatures import (
    Signature,
    enumerate_prime_quotient_data,
    primes_up_to,
    rh_kernel_genus,
    teich_dimension,
)
from equisym.stratification import (
    AtlasConfig,
    Containment,
    build_branch_locus,
    build_closure_relation,
    degrade_relation,
    find_isolated,
)

OUTCOME_STRENGTH = {"Undetermined": 0, "NonSingular": 1, "Singular": 1}


def random_hyperbolic_signature(rng):
    while True:
        h = rng.randint(0, 4)
        r = rng.randint(0, 6)
        periods = tuple(rng.randint(2, 12) for _ in range(r))
        try:
            return Signature(h, periods)
        except ValueError:
            continue


def test_rh_round_trip_1000():
    rng = random.Random(20260810)
    checked = 0
    while checked < 1000:
        g = rng.randint(2, 40)
        primes = primes_up_to(4 * g + 2)
        p = primes[rng.randrange(len(primes))]
        data = enumerate_prime_quotient_data(g, p)
        for h, r in data:
            assert rh_kernel_genus(Signature(h, (p,) * r), p) == g
            checked += 1
        if not data:
            checked += 1  # an empty answer is itself a checked case
    assert checked >= 1000


def test_dimension_parity_and_identity_1000():
    rng = random.Random(1)
    for _ in range(1200):
        sig = random_hyperbolic_signature(rng)
        dim = teich_dimension(sig)
        assert dim % 2 == 0
        assert dim == 6 * sig.quotient_genus - 6 + 2 * sig.r
        assert (dim == 0) == sig.is_triangle


def test_fixed_point_bound_and_codim_bound_1000():
    rng = random.Random(2)
    checked = 0
    while checked < 1000:
        g = rng.randint(2, 40)
        primes = primes_up_to(4 * g + 2)
        p = primes[rng.randrange(len(primes))]
        for h, r in enumerate_prime_quotient_data(g, p):
            assert r <= 2 * g - 4 * h + 2
            codim = (6 * g - 6) - teich_dimension(Signature(h, (p,) * r))
            assert codim == 6 * g - 6 * h - 2 * r
            assert codim >= 2 * g + 2 * h - 4
            checked += 1


def test_closure_partial_order_axioms_1000():
    rng = random.Random(3)
    relations = []
    for g in (2, 3, 4, 5, 7):
        strata = build_branch_locus(g, AtlasConfig())
        relations.append(build_closure_relation(strata, g, AtlasConfig()))
    checked = 0
    while checked < 1200:
        rel = relations[rng.randrange(len(relations))]
        n = len(rel.strata)
        i, j, k = (rng.randrange(n) for _ in range(3))
        assert rel.matrix[(i, i)] is Containment.YES
        if i != j and rel.matrix[(i, j)] is Containment.YES:
            assert rel.matrix[(j, i)] is not Containment.YES
        if rel.matrix[(i, j)] is Containment.YES and rel.matrix[(j, k)] is Containment.YES:
            assert rel.matrix[(i, k)] is Containment.YES
        checked += 1


def test_verdict_monotonicity_1000():
    rng = random.Random(4)
    atlases = [classify_genus(2), classify_genus(3)]
    trials = 0
    while trials < 1000:
        atlas = atlases[rng.randrange(2)]
        relation = atlas.relation
        candidates = [k for k, v in relation.matrix.items() if k[0] != k[1] and v is not Containment.UNKNOWN]
        dropped = [k for k in candidates if rng.random() < 0.4]
        degraded = degrade_relation(relation, dropped)
        iso = find_isolated(list(degraded.strata), degraded)
        for s, v in zip(atlas.strata, atlas.verdicts):
            v2 = classify_stratum(s, list(degraded.strata), degraded, iso)
            if v2.outcome != v.outcome:
                assert OUTCOME_STRENGTH[v2.outcome] < OUTCOME_STRENGTH[v.outcome]
        trials += 1


def test_type_reduction_partition_property():
    rng = random.Random(5)
    for _ in range(60):
        g = rng.choice((2, 3, 4))
        primes = primes_up_to(4 * g + 2)
        p = primes[rng.randrange(len(primes))]
        data = enumerate_prime_quotient_data(g, p)
        if not data:
            continue
        h, r = data[rng.randrange(len(data))]
        if p ** (2 * h + r) > 10**5:
            continue
        sig = Signature(h, (p,) * r)
        vectors = enumerate_vectors(sig, p, g)
        types = reduce_types(vectors, sig)
        assert sum(t.orbit_size for t in types) == len(vectors)
        reps = [t.orbit_representative for t in types]
        assert len(set(reps)) == len(reps)


@given(
    h=st.integers(min_value=0, max_value=5),
    periods=st.lists(st.integers(min_value=2, max_value=20), max_size=7),
)
@settings(max_examples=300, deadline=None)
def test_signature_invariants_hypothesis(h, periods):
    try:
        sig = Signature(h, tuple(periods))
    except ValueError:
        return
    assert sig.periods == tuple(sorted(periods))
    assert sig.orbifold_euler_characteristic < 0
    dim = teich_dimension(sig)
    assert dim >= 0 and dim % 2 == 0


@given(st.integers(min_value=2, max_value=25), st.integers(min_value=2, max_value=30))
@settings(max_examples=300, deadline=None)
def test_rh_is_even_or_error_hypothesis(g, n):
    # any prime quotient datum that survives must reproduce its genus
    if n < 2:
        return
    for p in primes_up_to(min(n, 4 * g + 2)):
        for h, r in enumerate_prime_quotient_data(g, p):
            assert rh_kernel_genus(Signature(h, (p,) * r), p) == g
