"""Branch-locus assembly: strata, closure relation, isolated points.

The branch locus of the genus-``g`` moduli space is stratified by
equisymmetric strata.  This package models its cyclic skeleton: one
stratum per (cyclic order, quotient signature) that admits a surface-kernel
epimorphism, each carrying the canonical topological-type representative,
the Teichmueller dimension, the codimension inside the ``6g - 6``
dimensional moduli space, and a signature-maximality flag.

Containment of one stratum in the closure of another is decided
three-valued.  ``YES`` requires a witness:

* reflexivity,
* a cyclic subgroup restriction whose quotient data matches the target
  (exact residue-order bookkeeping, all vector classes of the source), or
* an embedded finite-group extension witness, re-verified from scratch
  (:mod:`equisym.certificates`).

``NO`` requires an obstruction: a dimension drop the wrong way, equal
dimensions across distinct strata with a maximal side, a maximal source
signature whose unique cyclic symmetry cannot restrict to the target, or a
completed rigidity analysis of a zero-dimensional stratum.  Everything
else stays ``UNKNOWN``; the classifier is written to stay sound under
``UNKNOWN``, and isolation testing treats it as disqualifying.

At genus 2 the hyperelliptic involution acts trivially on moduli; its
quotient datum ``(0; 2^6)`` is excluded from the stratum list and ignored
by the rigidity content analysis.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from . import singerman
from .actions import (
    SizeGuard,
    TopologicalType,
    canonical_torsion_class,
    cyclic_restriction,
    enumerate_vectors,
    find_one_vector,
    prime_type_by_formula,
    reduce_types,
)
from .certificates import (
    FORCED_SUBGROUP_ORDER,
    VerifiedExtension,
    is_cyclic_only_order,
    verified_witnesses,
)
from .signatures import (
    Signature,
    enumerate_cyclic_quotient_data,
    enumerate_prime_quotient_data,
    hyperelliptic_signature,
    is_maximal_signature,
    is_prime,
    prime_order_bound,
    primes_up_to,
    teich_dimension,
)


class Containment(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class InconsistentRelation(RuntimeError):
    """The closure relation violates partial-order axioms."""


@dataclass(frozen=True)
class Stratum:
    genus: int
    order: int
    signature: Signature
    type_rep: TopologicalType
    num_types: int | None
    types: tuple[TopologicalType, ...]
    dim: int
    codim: int
    maximal: bool
    notes: tuple[str, ...] = ()

    @property
    def key(self) -> tuple[int, tuple[int, tuple[int, ...]]]:
        return (self.order, self.signature.key())

    def type_classes(self) -> tuple[tuple[int, ...], ...] | None:
        """Canonical torsion classes of all vector classes, if known exactly."""
        if self.num_types is None:
            return None
        return tuple(
            canonical_torsion_class(self.signature, self.order, t.orbit_representative.torsion_images)
            for t in self.types
        )


@dataclass(frozen=True)
class AtlasConfig:
    primes_only: bool = False
    extra_orders: tuple[int, ...] = ()
    include_default_composites: bool = True
    max_candidates: int = 10**8
    exact_types_guard: int = 10**4
    singerman_path: str | None = None

    def table(self) -> singerman.ExtensionTable:
        if self.singerman_path:
            return singerman.load_table(self.singerman_path)
        return singerman.default_table()


# Composite orders included by default, per genus.  Genus 3 needs order 4,
# restricted to the square-roots of hyperellipticity: the order-4 strata
# whose square is the hyperelliptic involution.
DEFAULT_COMPOSITE_ORDERS: dict[int, tuple[int, ...]] = {3: (4,)}

# Fixed annotations keyed by (genus, order, signature).
_STRATUM_NOTES: dict[tuple[int, int, str], tuple[str, ...]] = {
    (2, 2, "1;2,2"): (
        "full automorphism group C2 x C2; the hyperelliptic involution acts "
        "trivially on moduli, leaving an effective order-2 rotation",
    ),
    (2, 5, "0;5,5,5"): (
        "the unique genus-2 class with an order-5 symmetry (y^2 = x^5 - 1)",
    ),
    (3, 2, "0;2,2,2,2,2,2,2,2"): ("the hyperelliptic locus",),
    (3, 4, "0;2,2,2,4,4"): (
        "square root of hyperellipticity: the square of the generator is the "
        "hyperelliptic involution",
    ),
    (3, 7, "0;7,7,7"): (
        "two vector classes share this entry: (1,1,5) (hyperelliptic, "
        "y^2 = x^7 - 1) and (1,2,4) (the Klein quartic); the closure "
        "containment is witnessed for the class (1,2,4)",
    ),
}


def _enumeration_cost(sig: Signature, n: int) -> int:
    """Leaves actually visited by `enumerate_vectors` (last slot is solved)."""
    from .actions import element_order

    cost = n ** (2 * sig.quotient_genus)
    counts = [
        sum(1 for x in range(1, n) if element_order(x, n) == m) for m in sig.periods
    ]
    for c in counts[:-1]:
        cost *= c
    return cost


def _make_stratum(
    genus: int,
    order: int,
    sig: Signature,
    config: AtlasConfig,
    table: singerman.ExtensionTable,
    notes: tuple[str, ...] = (),
) -> Stratum | None:
    """Build one stratum, or ``None`` when no surface-kernel epimorphism exists."""
    raw = order ** (2 * sig.quotient_genus + sig.r)
    types: tuple[TopologicalType, ...]
    num_types: int | None
    if _enumeration_cost(sig, order) <= config.exact_types_guard and raw <= config.max_candidates:
        vectors = enumerate_vectors(sig, order, genus, config.max_candidates)
        if not vectors:
            return None
        tys = reduce_types(vectors, sig)
        types = tuple(tys)
        num_types = len(tys)
    else:
        # the shortcut is valid for prime orders only; composite strata
        # must stay under the exact guard
        if not is_prime(order):
            raise SizeGuard(raw, config.exact_types_guard)
        ty = prime_type_by_formula(sig, order, genus)
        if ty is None:
            return None
        types = (ty,)
        num_types = None
    rep = min(types, key=lambda t: t.orbit_representative.flat())
    dim = teich_dimension(sig)
    return Stratum(
        genus=genus,
        order=order,
        signature=sig,
        type_rep=rep,
        num_types=num_types,
        types=types,
        dim=dim,
        codim=(6 * genus - 6) - dim,
        maximal=is_maximal_signature(sig, table),
        notes=notes + _STRATUM_NOTES.get((genus, order, str(sig)), ()),
    )


def _is_square_root_of_hyperellipticity(genus: int, stratum: Stratum) -> bool:
    if stratum.order != 4:
        return False
    target = hyperelliptic_signature(genus)
    for ty in stratum.types:
        restricted, _ = cyclic_restriction(stratum.signature, ty.orbit_representative, 2)
        if restricted != target:
            return False
    return True


def build_branch_locus(genus: int, config: AtlasConfig = AtlasConfig()) -> list[Stratum]:
    """All cyclic strata of the configured orders, sorted deterministically.

    Always contains every prime-order stratum for primes up to ``4g + 2``.
    At genus 2 the hyperelliptic stratum ``(2, (0; 2^6))`` is excluded: its
    involution acts trivially on moduli and does not belong to the branch
    locus.  Composite orders come from the per-genus default (order 4 at
    genus 3, square roots of hyperellipticity only) and from
    ``config.extra_orders`` (all strata of those orders).
    """
    if genus < 2:
        raise ValueError("genus must be >= 2")
    table = config.table()
    strata: list[Stratum] = []
    for p in primes_up_to(prime_order_bound(genus)):
        for h, r in enumerate_prime_quotient_data(genus, p):
            sig = Signature(h, (p,) * r)
            if genus == 2 and p == 2 and sig == hyperelliptic_signature(2):
                continue
            s = _make_stratum(genus, p, sig, config, table)
            if s is not None:
                strata.append(s)

    composite_orders: set[int] = set()
    if not config.primes_only:
        if config.include_default_composites:
            composite_orders.update(DEFAULT_COMPOSITE_ORDERS.get(genus, ()))
        composite_orders.update(config.extra_orders)
    prime_set = set(primes_up_to(prime_order_bound(genus)))
    for n in sorted(composite_orders):
        if n in prime_set:
            continue
        default_only = n in DEFAULT_COMPOSITE_ORDERS.get(genus, ()) and n not in config.extra_orders
        for h, periods in enumerate_cyclic_quotient_data(genus, n):
            sig = Signature(h, periods)
            s = _make_stratum(genus, n, sig, config, table)
            if s is None:
                continue
            if default_only and not _is_square_root_of_hyperellipticity(genus, s):
                continue
            strata.append(s)
    strata.sort(key=lambda s: s.key)
    return strata


# --- closure relation -----------------------------------------------------


@dataclass
class ClosureRelation:
    strata: tuple[Stratum, ...]
    matrix: dict[tuple[int, int], Containment]
    witness_notes: dict[tuple[int, int], str]
    completeness: str
    stratum_maximal: tuple[bool, ...] = field(default=())

    def contains(self, a: Stratum, b: Stratum) -> Containment:
        i = self.strata.index(a)
        j = self.strata.index(b)
        return self.matrix[(i, j)]

    def yes_pairs(self) -> list[tuple[int, int]]:
        return sorted(k for k, v in self.matrix.items() if v is Containment.YES and k[0] != k[1])

    def unknown_pairs(self) -> list[tuple[int, int]]:
        return sorted(k for k, v in self.matrix.items() if v is Containment.UNKNOWN)


def _restriction_signatures(a: Stratum, d: int) -> set[Signature]:
    out = set()
    for ty in a.types:
        sig, _ = cyclic_restriction(a.signature, ty.orbit_representative, d)
        out.add(sig)
    return out


def _pairwise(
    a: Stratum, b: Stratum, witnesses: tuple[VerifiedExtension, ...]
) -> tuple[Containment, str]:
    """Containment of ``a`` in the closure of ``b``, no transitivity."""
    if a.key == b.key:
        return Containment.YES, "reflexive"
    if a.dim > b.dim:
        return Containment.NO, "dimension obstruction"

    restriction_match = False
    restriction_known = False
    if b.order < a.order and a.order % b.order == 0 and a.num_types is not None:
        restriction_known = True
        sigs = _restriction_signatures(a, b.order)
        if sigs == {b.signature}:
            restriction_match = True
        elif b.signature in sigs:
            # mixed classes: some restrict to b, some do not
            return Containment.UNKNOWN, "restriction matches only part of the stratum"
    if restriction_match:
        return Containment.YES, "cyclic subgroup restriction"

    if a.maximal:
        # a maximal signature pins the generic full group to Z/order(a);
        # the only strata through generic points of a are its restrictions
        return Containment.NO, "maximal signature admits only cyclic restrictions"

    for ver in witnesses:
        w = ver.witness
        if (w.lower_order, w.lower_sig) != (a.order, str(a.signature)):
            continue
        if (w.target_order, w.target_sig) != (b.order, str(b.signature)):
            continue
        classes = a.type_classes()
        if classes is not None and ver.lower_class not in classes:
            continue
        note = "extension witness %s" % w.name
        if classes is not None and len(classes) > 1:
            note += " (covers the vector class %s)" % (ver.lower_class,)
        return Containment.YES, note

    if a.dim == b.dim and b.maximal:
        # equal-dimension containment would force equal closures, hence a
        # larger generic group on b's side, impossible for maximal b
        return Containment.NO, "equal dimension against a maximal signature"
    return Containment.UNKNOWN, ""


def _hurwitz_bound(genus: int) -> int:
    return 84 * (genus - 1)


def _cyclic_order_acts(order: int, genus: int, max_candidates: int) -> bool:
    for h, periods in enumerate_cyclic_quotient_data(genus, order):
        if find_one_vector(Signature(h, periods), order, max_candidates) is not None:
            return True
    return False


@dataclass(frozen=True)
class RigidityReport:
    """Outcome of the extension-route analysis of a zero-dimensional stratum.

    ``status`` is ``"rigid"`` (no route realizes any positive-dimensional
    stratum membership beyond the excluded hyperelliptic datum),
    ``"not_rigid"`` (some route does), or ``"unresolved"`` (a route needs
    group theory beyond scope).  ``realized`` lists the (order, signature)
    labels of cyclic extension actions that do exist; they describe the
    same points under a larger group and are exempt from the derived
    ``NO`` entries.
    """

    status: str
    realized: frozenset[tuple[int, tuple[int, tuple[int, ...]]]]


def analyze_dim0_rigidity(
    s: Stratum, table: singerman.ExtensionTable, config: AtlasConfig
) -> RigidityReport:
    """Decide whether a zero-dimensional stratum admits extra symmetry.

    Triangle signatures are rigid, so every possible enlargement of the
    symmetry group corresponds to an entry of the (transitively closed)
    extension table.  Each route is settled when the overgroup is forced
    cyclic, either by a period equal to the group order or because the
    order admits only cyclic groups, or when a forced subgroup reduces it
    to a smaller settled case.
    """
    if s.dim != 0:
        raise ValueError("rigidity analysis applies to zero-dimensional strata only")
    genus = s.genus
    excluded = hyperelliptic_signature(2) if genus == 2 else None
    max_mult = _hurwitz_bound(genus) // s.order
    unresolved = False
    not_rigid = False
    realized_keys: set[tuple[int, tuple[int, tuple[int, ...]]]] = set()
    for (hk, periods), mult in table.tower(*s.signature.key(), max_multiplier=max_mult):
        upper = Signature(hk, periods)
        n_big = s.order * mult
        cyclic_forced = max(upper.periods, default=1) == n_big or is_cyclic_only_order(n_big)
        if cyclic_forced:
            try:
                vectors = enumerate_vectors(upper, n_big, genus, config.max_candidates)
            except SizeGuard:
                unresolved = True
                continue
            realized = [
                v
                for v in vectors
                if cyclic_restriction(upper, v, s.order)[0] == s.signature
            ]
            if realized:
                realized_keys.add((n_big, upper.key()))
            for v in realized:
                for d in range(2, n_big):
                    if n_big % d != 0:
                        continue
                    rsig, _ = cyclic_restriction(upper, v, d)
                    if rsig == s.signature or rsig == excluded:
                        continue
                    if teich_dimension(rsig) > 0:
                        not_rigid = True
                    else:
                        realized_keys.add((d, rsig.key()))
            continue
        if n_big in FORCED_SUBGROUP_ORDER:
            sub = FORCED_SUBGROUP_ORDER[n_big]
            if is_cyclic_only_order(sub) and not _cyclic_order_acts(sub, genus, config.max_candidates):
                continue
        unresolved = True
    if not_rigid:
        status = "not_rigid"
    elif unresolved:
        status = "unresolved"
    else:
        status = "rigid"
    return RigidityReport(status, frozenset(realized_keys))


def build_closure_relation(
    strata: list[Stratum], genus: int, config: AtlasConfig = AtlasConfig()
) -> ClosureRelation:
    table = config.table()
    witnesses = verified_witnesses(genus)
    n = len(strata)
    matrix: dict[tuple[int, int], Containment] = {}
    notes: dict[tuple[int, int], str] = {}
    for i, a in enumerate(strata):
        for j, b in enumerate(strata):
            verdict, note = _pairwise(a, b, witnesses)
            matrix[(i, j)] = verdict
            if note:
                notes[(i, j)] = note

    # rigidity upgrades Unknown -> No on rows of settled zero-dim strata,
    # except against labels that are realized extensions of the same points
    for i, a in enumerate(strata):
        if a.dim != 0:
            continue
        if not any(matrix[(i, j)] is Containment.UNKNOWN for j in range(n)):
            continue
        report = analyze_dim0_rigidity(a, table, config)
        if report.status != "rigid":
            continue
        for j in range(n):
            if matrix[(i, j)] is Containment.UNKNOWN and strata[j].key not in report.realized:
                matrix[(i, j)] = Containment.NO
                notes[(i, j)] = "rigidity analysis: no effective extension exists"

    # transitive closure of YES
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for k in range(n):
                if matrix[(i, k)] is not Containment.YES:
                    continue
                for j in range(n):
                    if matrix[(k, j)] is Containment.YES and matrix[(i, j)] is not Containment.YES:
                        if matrix[(i, j)] is Containment.NO:
                            raise InconsistentRelation(
                                "transitivity contradicts an obstruction: %s -> %s"
                                % (strata[i].key, strata[j].key)
                            )
                        matrix[(i, j)] = Containment.YES
                        notes[(i, j)] = "transitive via %s" % (strata[k].key,)
                        changed = True

    for i in range(n):
        for j in range(i + 1, n):
            if matrix[(i, j)] is Containment.YES and matrix[(j, i)] is Containment.YES:
                raise InconsistentRelation(
                    "distinct strata contain each other: %s, %s"
                    % (strata[i].key, strata[j].key)
                )

    complete = all(v is not Containment.UNKNOWN for v in matrix.values())
    stratum_maximal = tuple(
        all(matrix[(i, j)] is Containment.NO for j in range(n) if j != i) for i in range(n)
    )
    return ClosureRelation(
        strata=tuple(strata),
        matrix=matrix,
        witness_notes=notes,
        completeness="exact" if complete else "conservative",
        stratum_maximal=stratum_maximal,
    )


def closure_contains(a: Stratum, b: Stratum, relation: ClosureRelation) -> Containment:
    """Is stratum ``a`` contained in the closure of stratum ``b``?

    Answers from the built relation (witness rules, obstruction rules,
    rigidity, transitive closure).  ``UNKNOWN`` means no witness and no
    obstruction: never guessed.
    """
    return relation.contains(a, b)


def degrade_relation(relation: ClosureRelation, pairs: list[tuple[int, int]]) -> ClosureRelation:
    """Forget information: turn the given non-reflexive entries into ``UNKNOWN``.

    Used to test that verdicts are monotone in the relation (losing
    containment knowledge can only push verdicts toward Undetermined).
    Stratum maximality and completeness are recomputed.
    """
    matrix = dict(relation.matrix)
    for i, j in pairs:
        if i != j:
            matrix[(i, j)] = Containment.UNKNOWN
    n = len(relation.strata)
    stratum_maximal = tuple(
        all(matrix[(i, j)] is Containment.NO for j in range(n) if j != i) for i in range(n)
    )
    complete = all(v is not Containment.UNKNOWN for v in matrix.values())
    return ClosureRelation(
        strata=relation.strata,
        matrix=matrix,
        witness_notes={},
        completeness="exact" if complete else "conservative",
        stratum_maximal=stratum_maximal,
    )


def find_isolated(strata: list[Stratum], relation: ClosureRelation) -> list[int]:
    """Indices of strata proven isolated: dimension zero, definite ``NO``
    against every other stratum in both directions.  ``UNKNOWN`` anywhere
    disqualifies; the result is conservative."""
    out = []
    n = len(strata)
    for i, s in enumerate(strata):
        if s.dim != 0:
            continue
        row_ok = all(
            relation.matrix[(i, j)] is Containment.NO for j in range(n) if j != i
        )
        col_ok = all(
            relation.matrix[(j, i)] is Containment.NO for j in range(n) if j != i
        )
        if row_ok and col_ok:
            out.append(i)
    return out
