"""Surface-kernel epimorphisms onto cyclic groups, as generating vectors.

An action of ``Z/n`` on a genus-``g`` surface with quotient data
``(h; m_1, ..., m_r)`` is encoded combinatorially by a *generating vector*:
residues assigned to the canonical generators of the quotient orbifold
group, one for each handle generator pair and one for each cone point.
Three conditions characterise the vectors that actually arise:

* each torsion image has order exactly its period (the kernel is then
  torsion-free, i.e. a surface group),
* the torsion images sum to zero mod ``n`` (the long relation, with
  commutators dying in an abelian target),
* the images generate ``Z/n`` (surjectivity).

`enumerate_vectors` lists them constructively; `brute_force_count` recounts
by exhaustive scan with no shortcuts and serves as the independent oracle
for tests and CI.  `reduce_types` collapses vectors to topological types
under a deliberately coarse equivalence: simultaneous multiplication by a
unit, permutation of equal-period torsion slots, and arbitrary replacement
of the handle images.  For prime order this separates exactly the
(quotient genus, fixed-point count, rotation data) invariants; it is NOT
full mapping-class-group equivalence, which is out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd, factorial

from .signatures import (
    GenusTooSmall,
    NonIntegral,
    Signature,
    rh_kernel_genus,
)


class SizeGuard(RuntimeError):
    """Raw search space exceeds the configured ceiling."""

    def __init__(self, candidates: int, ceiling: int):
        super().__init__(
            "search space of %d candidates exceeds the ceiling %d" % (candidates, ceiling)
        )
        self.candidates = candidates
        self.ceiling = ceiling


def element_order(x: int, n: int) -> int:
    return n // gcd(x % n, n)


@dataclass(frozen=True, order=True)
class GeneratingVector:
    """Images of the canonical orbifold generators in ``Z/n``.

    ``hyperbolic_images`` has one residue per handle generator (``2h`` of
    them), ``torsion_images`` one per cone point, aligned with the sorted
    periods of the signature.
    """

    modulus: int
    hyperbolic_images: tuple[int, ...]
    torsion_images: tuple[int, ...]

    def validate(self, sig: Signature) -> None:
        n = self.modulus
        if n < 2:
            raise ValueError("modulus must be >= 2")
        if len(self.hyperbolic_images) != 2 * sig.quotient_genus:
            raise ValueError("expected %d hyperbolic images" % (2 * sig.quotient_genus))
        if len(self.torsion_images) != sig.r:
            raise ValueError("expected %d torsion images" % sig.r)
        for x in self.flat():
            if not 0 <= x < n:
                raise ValueError("image %d is not a residue mod %d" % (x, n))
        for x, m in zip(self.torsion_images, sig.periods):
            if element_order(x, n) != m:
                raise ValueError(
                    "torsion image %d has order %d, period is %d" % (x, element_order(x, n), m)
                )
        if sum(self.torsion_images) % n != 0:
            raise ValueError("torsion images do not sum to zero mod %d" % n)
        if gcd(n, *self.flat()) != 1:
            raise ValueError("images do not generate Z/%d" % n)

    def is_valid(self, sig: Signature) -> bool:
        try:
            self.validate(sig)
        except ValueError:
            return False
        return True

    def flat(self) -> tuple[int, ...]:
        return self.hyperbolic_images + self.torsion_images


def _generates(n: int, images: tuple[int, ...]) -> bool:
    g = n
    for x in images:
        g = gcd(g, x)
    return g == 1


def _rh_matches(sig: Signature, n: int, genus: int) -> bool:
    if any(n % m != 0 for m in sig.periods):
        return False
    try:
        return rh_kernel_genus(sig, n) == genus
    except (NonIntegral, GenusTooSmall):
        return False


def enumerate_vectors(
    sig: Signature, n: int, target_genus: int, max_candidates: int = 10**8
) -> list[GeneratingVector]:
    """All generating vectors for ``(sig, n)`` with kernel genus ``target_genus``.

    Returns ``[]`` when Riemann-Hurwitz rules the cover out.  Deterministic
    lexicographic order on (hyperbolic_images, torsion_images).  Raises
    :class:`SizeGuard` when ``n ** (2h + r)`` exceeds ``max_candidates``.
    """
    if not _rh_matches(sig, n, target_genus):
        return []
    h, r = sig.quotient_genus, sig.r
    raw = n ** (2 * h + r)
    if raw > max_candidates:
        raise SizeGuard(raw, max_candidates)

    slot_candidates = [
        [x for x in range(1, n) if element_order(x, n) == m] for m in sig.periods
    ]
    out: list[GeneratingVector] = []
    if r == 0:
        for hyp in product(range(n), repeat=2 * h):
            if _generates(n, hyp):
                out.append(GeneratingVector(n, hyp, ()))
        return out
    # the last torsion image is forced by the zero-sum relation; solving for
    # it preserves lexicographic output order
    last_ok = set(slot_candidates[-1])
    for hyp in product(range(n), repeat=2 * h):
        for prefix in product(*slot_candidates[:-1]):
            last = (-sum(prefix)) % n
            if last not in last_ok:
                continue
            tor = prefix + (last,)
            if not _generates(n, hyp + tor):
                continue
            out.append(GeneratingVector(n, hyp, tor))
    return out


def find_one_vector(sig: Signature, n: int, max_candidates: int = 10**8) -> GeneratingVector | None:
    """First vector in lexicographic order, or ``None``; cheap existence probe."""
    h, r = sig.quotient_genus, sig.r
    if any(n % m != 0 for m in sig.periods):
        return None
    slot_candidates = [
        [x for x in range(1, n) if element_order(x, n) == m] for m in sig.periods
    ]
    if any(not c for c in slot_candidates):
        return None
    raw = n ** (2 * h + r)
    if raw > max_candidates:
        raise SizeGuard(raw, max_candidates)
    for hyp in product(range(n), repeat=2 * h):
        for tor in product(*slot_candidates):
            if sum(tor) % n != 0:
                continue
            if _generates(n, hyp + tor):
                return GeneratingVector(n, hyp, tor)
    return None


def brute_force_count(sig: Signature, n: int, genus: int, max_candidates: int = 10**7) -> int:
    """Count vectors by scanning the full ``n ** (2h + r)`` grid.

    No slot filtering, no algebraic shortcuts: every tuple is checked
    against the invariants independently.  This is the oracle that
    `enumerate_vectors` must agree with.
    """
    if not _rh_matches(sig, n, genus):
        return 0
    h, r = sig.quotient_genus, sig.r
    raw = n ** (2 * h + r)
    if raw > max_candidates:
        raise SizeGuard(raw, max_candidates)
    count = 0
    for flat in product(range(n), repeat=2 * h + r):
        vec = GeneratingVector(n, flat[: 2 * h], flat[2 * h :])
        if vec.is_valid(sig):
            count += 1
    return count


@dataclass(frozen=True)
class TopologicalType:
    """One equivalence class of vectors, with its canonical representative."""

    signature: Signature
    orbit_representative: GeneratingVector
    orbit_size: int


@lru_cache(maxsize=None)
def _units(n: int) -> tuple[int, ...]:
    return tuple(u for u in range(1, n) if gcd(u, n) == 1)


def _period_classes(sig: Signature) -> list[list[int]]:
    """Torsion slot indices grouped by equal period (periods are sorted)."""
    classes: list[list[int]] = []
    for i, m in enumerate(sig.periods):
        if classes and sig.periods[classes[-1][0]] == m:
            classes[-1].append(i)
        else:
            classes.append([i])
    return classes


def canonical_torsion_class(sig: Signature, n: int, torsion: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical form of torsion data under units and equal-period slot permutations."""
    classes = _period_classes(sig)
    best: tuple[int, ...] | None = None
    for u in _units(n):
        scaled = tuple((u * x) % n for x in torsion)
        arranged: list[int] = []
        for cls in classes:
            arranged.extend(sorted(scaled[i] for i in cls))
        cand = tuple(arranged)
        if best is None or cand < best:
            best = cand
    return best if best is not None else ()


def _sorted_per_class(sig: Signature, torsion: tuple[int, ...]) -> tuple[int, ...]:
    arranged: list[int] = []
    for cls in _period_classes(sig):
        arranged.extend(sorted(torsion[i] for i in cls))
    return tuple(arranged)


def reduce_types(vectors: list[GeneratingVector], sig: Signature) -> list[TopologicalType]:
    """Partition vectors into topological types under the coarse equivalence.

    Orbit sizes sum to the input length; the representative of each orbit
    is its lexicographically least member (on the flat image tuple).
    Vectors must all share ``sig``'s shape and one modulus.
    """
    if not vectors:
        return []
    n = vectors[0].modulus
    if any(v.modulus != n for v in vectors):
        raise ValueError("vectors must share a modulus")
    # canonicalising under units is the expensive step; do it once per
    # distinct slot-sorted multiset rather than once per vector
    by_multiset: dict[tuple[int, ...], list[GeneratingVector]] = {}
    for v in vectors:
        by_multiset.setdefault(_sorted_per_class(sig, v.torsion_images), []).append(v)
    orbits: dict[tuple[int, ...], list[GeneratingVector]] = {}
    for multiset, members in by_multiset.items():
        key = canonical_torsion_class(sig, n, multiset)
        orbits.setdefault(key, []).extend(members)
    types = []
    for key in sorted(orbits):
        members = orbits[key]
        rep = min(members, key=lambda v: v.flat())
        types.append(TopologicalType(sig, rep, len(members)))
    return types


def cyclic_restriction(
    sig: Signature, vector: GeneratingVector, d: int
) -> tuple[Signature, tuple[int, ...]]:
    """Quotient data of the order-``d`` subgroup of a ``Z/n`` action.

    ``Z/n`` has a unique subgroup of each order ``d | n``; restricting the
    action to it multiplies points and divides stabilisers.  For each cone
    point with period ``m`` and image ``a`` the restricted stabiliser has
    order ``gcd(m, d)``, there are ``(n/m) * gcd(m, d) / d`` cone points
    above it, and each carries the image ``a * m / gcd(m, d)`` rescaled
    into ``Z/d``.  The new quotient genus is solved exactly from
    Riemann-Hurwitz.  Returns the restricted signature and its torsion
    images.
    """
    n = vector.modulus
    if d < 2 or n % d != 0:
        raise ValueError("%d is not a proper subgroup order of Z/%d" % (d, n))
    cones: list[tuple[int, int]] = []
    for a, m in zip(vector.torsion_images, sig.periods):
        dj = gcd(m, d)
        if dj == 1:
            continue
        orbits = (n // m) * dj // d
        w = (a * (m // dj)) % n
        assert w % (n // d) == 0
        entry = (w // (n // d)) % d
        for _ in range(orbits):
            cones.append((dj, entry))
    cones.sort()
    total = Fraction(2 * rh_genus_unchecked(sig, n) - 2, d)
    budget = total - sum(Fraction(dj - 1, dj) for dj, _ in cones) + 2
    if budget.denominator != 1 or budget.numerator % 2 != 0:
        raise ValueError("restricted quotient genus is not integral")
    hq = budget.numerator // 2
    periods = tuple(dj for dj, _ in cones)
    entries = tuple(e for _, e in cones)
    assert sum(entries) % d == 0
    return Signature(hq, periods), entries


def rh_genus_unchecked(sig: Signature, n: int) -> int:
    """Kernel genus with no ``g >= 2`` floor (internal covers may be small)."""
    rhs = n * sig.area_factor
    assert rhs.denominator == 1 and rhs.numerator % 2 == 0
    return rhs.numerator // 2 + 1


# --- formula-backed construction for large prime strata ------------------
#
# For a prime modulus the vector count per stratum can be huge (the handle
# images are free), but the canonical type data is determined by small
# arithmetic.  These helpers build the same TopologicalType objects as
# enumerate+reduce without touching the exponential grid.


def _lex_least_torsion_prime(p: int, r: int) -> tuple[int, ...] | None:
    if r == 0:
        return ()
    if r == 1:
        return None
    if p == 2:
        return (1,) * r if r % 2 == 0 else None
    x = (-(r - 1)) % p
    if x != 0:
        return (1,) * (r - 1) + (x,)
    # (1,...,1,0) is invalid; bump the second-to-last slot
    y = (-r) % p
    assert y != 0
    return (1,) * (r - 2) + (2, y)


def _unit_orbit_of_multiset(n: int, torsion: tuple[int, ...]) -> int:
    seen = set()
    base = tuple(sorted(torsion))
    for u in _units(n):
        seen.add(tuple(sorted((u * x) % n for x in torsion)))
    assert base in seen
    return len(seen)


def _arrangements(sig: Signature, torsion: tuple[int, ...]) -> int:
    """Distinct slot arrangements of the torsion data within equal-period classes."""
    total = 1
    for cls in _period_classes(sig):
        vals = [torsion[i] for i in cls]
        counts: dict[int, int] = {}
        for v in vals:
            counts[v] = counts.get(v, 0) + 1
        arr = factorial(len(vals))
        for c in counts.values():
            arr //= factorial(c)
        total *= arr
    return total


def _hyperbolic_completions_prime(p: int, h: int, torsion_generates: bool) -> int:
    if torsion_generates:
        return p ** (2 * h)
    # no torsion constraint available: any nonzero handle tuple generates
    return p ** (2 * h) - 1


def prime_type_by_formula(sig: Signature, p: int, genus: int) -> TopologicalType | None:
    """Lex-least type of the prime stratum ``(sig, p)`` without enumeration.

    Returns ``None`` when no vector exists (``r = 1``, or odd ``r`` at
    ``p = 2``).  The orbit size counts all vectors equivalent to the
    representative, handle images included.
    """
    if not _rh_matches(sig, p, genus):
        return None
    h, r = sig.quotient_genus, sig.r
    torsion = _lex_least_torsion_prime(p, r)
    if torsion is None:
        return None
    if r == 0 and h == 0:
        return None
    hyp: tuple[int, ...]
    if r > 0:
        hyp = (0,) * (2 * h)
    else:
        hyp = (0,) * (2 * h - 1) + (1,)
    rep = GeneratingVector(p, hyp, torsion)
    rep.validate(sig)
    size = (
        _unit_orbit_of_multiset(p, torsion)
        * _arrangements(sig, torsion)
        * _hyperbolic_completions_prime(p, h, torsion_generates=r > 0)
    )
    return TopologicalType(sig, rep, size)
