"""Certified finite-group extension witnesses for closure containments.

Some branch-locus containments cannot be derived from cyclic-subgroup
bookkeeping alone: they hold because every surface in a stratum with a
non-maximal signature acquires a larger, generally non-abelian symmetry
group, and a *different* cyclic subgroup of that group produces the target
stratum's quotient data.  Enumerating non-abelian actions is out of scope,
so the package ships explicit witnesses instead: a concrete permutation
group, its generating vector on the extended signature, and the two cyclic
subgroups involved.  Nothing is trusted: `verify_witness` re-checks every
claim (orders, trivial product, generation, torsion-free kernel via exact
period orders, kernel genus, and both subgroup quotient data) before a
witness is allowed to contribute a containment.

The genericity of each containment (that the *whole* stratum extends, not
just special points) rests on the extension being dimension-preserving,
which is also re-checked against the embedded extension table.

This module also carries the small number-theoretic facts used by the
rigidity analysis of zero-dimensional strata.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import permgroups as pg
from . import singerman
from .actions import canonical_torsion_class
from .signatures import Signature, rh_kernel_genus


class CertificateError(ValueError):
    """An embedded witness failed re-verification."""


@dataclass(frozen=True)
class ExtensionWitness:
    name: str
    genus: int
    lower_order: int
    lower_sig: str
    upper_sig: str
    index: int
    vector: tuple[pg.Perm, ...]
    lower_generator: pg.Perm
    target_order: int
    target_sig: str
    target_generator: pg.Perm
    note: str


@dataclass(frozen=True)
class VerifiedExtension:
    witness: ExtensionWitness
    lower_class: tuple[int, ...]
    target_class: tuple[int, ...]


def _restriction(group, vector, periods, genus, generator):
    sub = pg.cyclic_subgroup(generator)
    hq, cones = pg.subgroup_quotient_data(group, list(vector), list(periods), genus, sub)
    sig = Signature(hq, tuple(d for d, _ in cones))
    entries = tuple(pg.discrete_log(w, generator) for _, w in cones)
    d = len(sub)
    if sum(entries) % d != 0:
        raise CertificateError("restricted torsion images do not sum to zero")
    for (dj, _), e in zip(cones, entries):
        if d // gcd(e, d) != dj:
            raise CertificateError("restricted image order mismatch")
    return sig, entries


def verify_witness(w: ExtensionWitness, table: singerman.ExtensionTable | None = None) -> VerifiedExtension:
    """Re-verify a witness from scratch; raises :class:`CertificateError`."""
    lower = Signature.parse(w.lower_sig)
    upper = Signature.parse(w.upper_sig)
    target = Signature.parse(w.target_sig)
    tab = table if table is not None else singerman.default_table()
    if not any(
        ext.larger == upper.key() and ext.index == w.index
        for ext in tab.extensions_of(*lower.key())
    ):
        raise CertificateError(
            "%s: %s -> %s is not a dimension-preserving extension" % (w.name, lower, upper)
        )
    group = pg.closure(list(w.vector))
    if len(group) != w.lower_order * w.index:
        raise CertificateError("%s: group order %d != %d" % (w.name, len(group), w.lower_order * w.index))
    prod = pg.identity(len(w.vector[0]))
    for x in w.vector:
        prod = pg.compose(prod, x)
    if prod != pg.identity(len(prod)):
        raise CertificateError("%s: vector product is not trivial" % w.name)
    if tuple(pg.order(x) for x in w.vector) != upper.periods:
        raise CertificateError("%s: vector orders do not match the periods" % w.name)
    if rh_kernel_genus(upper, len(group)) != w.genus:
        raise CertificateError("%s: kernel genus mismatch" % w.name)
    for gen, expect_order in ((w.lower_generator, w.lower_order), (w.target_generator, w.target_order)):
        if gen not in group or pg.order(gen) != expect_order:
            raise CertificateError("%s: bad subgroup generator" % w.name)

    low_sig, low_entries = _restriction(group, w.vector, upper.periods, w.genus, w.lower_generator)
    if low_sig != lower:
        raise CertificateError("%s: lower restriction %s != %s" % (w.name, low_sig, lower))
    tgt_sig, tgt_entries = _restriction(group, w.vector, upper.periods, w.genus, w.target_generator)
    if tgt_sig != target:
        raise CertificateError("%s: target restriction %s != %s" % (w.name, tgt_sig, target))

    return VerifiedExtension(
        witness=w,
        lower_class=canonical_torsion_class(lower, w.lower_order, low_entries),
        target_class=canonical_torsion_class(target, w.target_order, tgt_entries),
    )


# Permutations: S3 acts on {0,1,2}; V4 acts on itself; the order-21
# Frobenius group acts on Z/7 by x -> ux + v.
_S3_A = (0, 2, 1)        # transposition (12)
_S3_B = (1, 0, 2)        # transposition (01)
_S3_C = (2, 1, 0)        # transposition (02)
_S3_R = (1, 2, 0)        # 3-cycle (012)
_S3_R2 = (2, 0, 1)
_V4_A = (1, 0, 3, 2)
_V4_B = (2, 3, 0, 1)
_V4_C = (3, 2, 1, 0)
_F21_T = (0, 2, 4, 6, 1, 3, 5)       # x -> 2x, order 3
_F21_Y2 = (1, 5, 2, 6, 3, 0, 4)      # second order-3 entry closing the relation
_F21_S5 = (5, 6, 0, 1, 2, 3, 4)      # x -> x + 5, order 7
_F21_S = (1, 2, 3, 4, 5, 6, 0)       # x -> x + 1


WITNESSES: tuple[ExtensionWitness, ...] = (
    ExtensionWitness(
        name="genus3_order3_torus_into_order2_torus",
        genus=3,
        lower_order=3,
        lower_sig="1;3,3",
        upper_sig="0;2,2,2,2,3",
        index=2,
        vector=(_S3_A, _S3_A, _S3_A, _S3_B, _S3_R),
        lower_generator=_S3_R,
        target_order=2,
        target_sig="1;2,2,2,2",
        target_generator=_S3_A,
        note="the two-cone torus action extends by an involution to a 6-element "
        "group whose reflections have four fixed points",
    ),
    ExtensionWitness(
        name="genus3_free_involution_into_order2_torus",
        genus=3,
        lower_order=2,
        lower_sig="2;",
        upper_sig="0;2,2,2,2,2,2",
        index=2,
        vector=(_V4_A, _V4_A, _V4_A, _V4_A, _V4_B, _V4_B),
        lower_generator=_V4_C,
        target_order=2,
        target_sig="1;2,2,2,2",
        target_generator=_V4_B,
        note="a free involution always sits inside a four-group together with "
        "a four-fixed-point involution",
    ),
    ExtensionWitness(
        name="genus3_free_involution_into_hyperelliptic",
        genus=3,
        lower_order=2,
        lower_sig="2;",
        upper_sig="0;2,2,2,2,2,2",
        index=2,
        vector=(_V4_A, _V4_A, _V4_A, _V4_A, _V4_B, _V4_B),
        lower_generator=_V4_C,
        target_order=2,
        target_sig="0;2,2,2,2,2,2,2,2",
        target_generator=_V4_A,
        note="the same four-group contains an eight-fixed-point involution, "
        "so unramified double covers of genus-2 surfaces are hyperelliptic",
    ),
    ExtensionWitness(
        name="genus3_order7_klein_into_order3_torus",
        genus=3,
        lower_order=7,
        lower_sig="0;7,7,7",
        upper_sig="0;3,3,7",
        index=3,
        vector=(_F21_T, _F21_Y2, _F21_S5),
        lower_generator=_F21_S,
        target_order=3,
        target_sig="1;3,3",
        target_generator=_F21_T,
        note="the order-7 action with rotation class (1,2,4) extends to the "
        "Frobenius group of order 21, whose order-3 elements have two fixed "
        "points; covers only that vector class",
    ),
    ExtensionWitness(
        name="genus2_order3_into_order2_extension",
        genus=2,
        lower_order=3,
        lower_sig="0;3,3,3,3",
        upper_sig="0;2,2,3,3",
        index=2,
        vector=(_S3_A, _S3_A, _S3_R, _S3_R2),
        lower_generator=_S3_R,
        target_order=2,
        target_sig="1;2,2",
        target_generator=_S3_A,
        note="genus-2 order-3 surfaces carry an extra involution with two "
        "fixed points (the swap of the two period-3 triples)",
    ),
)


_VERIFIED_CACHE: dict[int, tuple[VerifiedExtension, ...]] = {}


def verified_witnesses(genus: int) -> tuple[VerifiedExtension, ...]:
    if genus not in _VERIFIED_CACHE:
        _VERIFIED_CACHE[genus] = tuple(
            verify_witness(w) for w in WITNESSES if w.genus == genus
        )
    return _VERIFIED_CACHE[genus]


# --- number-theoretic facts for the rigidity analysis --------------------


def euler_phi(n: int) -> int:
    out, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out *= (p - 1) * p ** (e - 1)
        p += 1
    if m > 1:
        out *= m - 1
    return out


def is_cyclic_only_order(n: int) -> bool:
    """True iff every group of order ``n`` is cyclic (``gcd(n, phi(n)) = 1``)."""
    return gcd(n, euler_phi(n)) == 1


# Orders where a forced subgroup lets us reduce a non-cyclic existence
# question to a smaller one.  30: both Sylow subgroups of odd order cannot
# simultaneously be non-normal (element counting), so a subgroup of order
# 15 always exists.
FORCED_SUBGROUP_ORDER: dict[int, int] = {30: 15}
