"""The two four-dimensional equisymmetric families over five branch points.

Both families consist of cyclic covers of the sphere branched on five
points, so each has a four-dimensional moduli image (``6*0 - 6 + 2*5``).

``W(q, w)``
    degree ``q*w`` covers, ``q != w`` primes > 5, with quotient data
    ``(0; q, q, q, qw, w)`` and epimorphism sending the first three cone
    generators to ``w``, the fourth to ``q - 3w`` and the fifth to ``-q``
    (mod ``qw``).  The order of the fourth image is ``qw``: this needs
    ``gcd(q - 3w, qw) = 1``, which is checked at run time rather than
    assumed.  Its branch locus is a single point with isotropy of order 3,
    where the group deforms into the triangle group ``(0; q, 3qw, 3w)``;
    the boundary of a neighbourhood is the lens space L(3,1).

``Q(q)``
    degree ``q`` covers, ``q`` prime > 5, quotient data ``(0; q,q,q,q,q)``
    and epimorphism ``(1, 1, 1, (q-3)/2, (q-3)/2)``.  The branch locus is
    a two-dimensional subset with order-2 isotropy (groups inside
    ``(0; 2, q, q, 2q)``) plus one point with isotropy D3 of order 6
    (inside the triangle group ``(0; 2, 2q, 3q)``); boundary labels are
    the 3-sphere, around the D3 point realized as the trefoil-knot
    orbifold quotient.

All three-manifold descriptions are carried as opaque labels; nothing
topological is computed about them.  The extension data is cross-checked
arithmetically: each listed isotropy group's order must equal the exact
ratio of orbifold areas.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .actions import GeneratingVector, element_order
from .signatures import Signature, is_prime, rh_kernel_genus


class OrderViolation(ValueError):
    """An epimorphism image has the wrong order for its period."""


@dataclass(frozen=True)
class BranchPoint:
    """One piece of a family's branch locus, described but not computed."""

    locus: str
    isotropy: str
    isotropy_order: int
    extension_signature: str
    boundary: str
    area_ratio_verified: bool


@dataclass(frozen=True)
class FamilyReport:
    family_id: str
    signature: Signature
    theta: GeneratingVector
    kernel_genus: int
    family_dim: int
    branch_metadata: tuple[BranchPoint, ...]

    def to_payload(self) -> dict:
        return {
            "family_id": self.family_id,
            "signature": str(self.signature),
            "modulus": self.theta.modulus,
            "torsion_images": list(self.theta.torsion_images),
            "kernel_genus": self.kernel_genus,
            "family_dim": self.family_dim,
            "branch_metadata": [
                {
                    "locus": b.locus,
                    "isotropy": b.isotropy,
                    "isotropy_order": b.isotropy_order,
                    "extension_signature": b.extension_signature,
                    "boundary": b.boundary,
                    "area_ratio_verified": b.area_ratio_verified,
                }
                for b in self.branch_metadata
            ],
        }


def _require_prime_gt(x: int, floor: int, name: str) -> None:
    if not is_prime(x):
        raise ValueError("%s = %d is not prime" % (name, x))
    if x <= floor:
        raise ValueError("%s = %d must exceed %d" % (name, x, floor))


def _check_orders(theta: GeneratingVector, sig: Signature) -> None:
    n = theta.modulus
    for x, m in zip(theta.torsion_images, sig.periods):
        got = element_order(x, n)
        if got != m:
            raise OrderViolation(
                "image %d has order %d in Z/%d, period is %d" % (x, got, n, m)
            )
    if sum(theta.torsion_images) % n != 0:
        raise OrderViolation("torsion images do not sum to zero mod %d" % n)
    if gcd(n, *theta.torsion_images) != 1:
        raise OrderViolation("images do not generate Z/%d" % n)


def _area_ratio_is(sub: Signature, big: Signature, expected: int) -> bool:
    return sub.area_factor == expected * big.area_factor


def family_W(q: int, w: int) -> FamilyReport:
    """Validate and report the degree-``q*w`` family.

    Torsion images ``(w, w, w, q - 3w mod qw, qw - q)`` on the signature
    ``(0; q, q, q, qw, w)``; image orders, the zero sum and surjectivity
    are verified, the kernel genus is computed exactly, and the family
    dimension is 4.
    """
    _require_prime_gt(q, 5, "q")
    _require_prime_gt(w, 5, "w")
    if q == w:
        raise ValueError("q and w must be distinct")
    n = q * w
    sig = Signature(0, (q, q, q, n, w))
    raw = [w, w, w, (q - 3 * w) % n, (-q) % n]
    # signature periods are stored sorted; align images with them
    by_period = {q: [], n: [], w: []}
    by_period[q] = [raw[0], raw[1], raw[2]]
    by_period[n] = [raw[3]]
    by_period[w] = [raw[4]]
    torsion = []
    used = {q: 0, n: 0, w: 0}
    for m in sig.periods:
        torsion.append(by_period[m][used[m]])
        used[m] += 1
    theta = GeneratingVector(n, (), tuple(torsion))
    _check_orders(theta, sig)
    genus = rh_kernel_genus(sig, n)
    triangle = Signature(0, (q, 3 * n, 3 * w))
    meta = (
        BranchPoint(
            locus="one point Y",
            isotropy="C_3",
            isotropy_order=3,
            extension_signature=str(triangle),
            boundary="L(3,1)",
            area_ratio_verified=_area_ratio_is(sig, triangle, 3),
        ),
    )
    return FamilyReport(
        family_id="W(%d,%d)" % (q, w),
        signature=sig,
        theta=theta,
        kernel_genus=genus,
        family_dim=6 * 0 - 6 + 2 * 5,
        branch_metadata=meta,
    )


def family_Q(q: int) -> FamilyReport:
    """Validate and report the degree-``q`` family with signature ``(0; q^5)``.

    Torsion images ``(1, 1, 1, (q-3)/2, (q-3)/2)``; all orders are ``q``
    and the sum is ``3 + (q - 3) = q = 0`` in ``Z/q``.
    """
    _require_prime_gt(q, 5, "q")
    sig = Signature(0, (q,) * 5)
    half = (q - 3) // 2
    theta = GeneratingVector(q, (), (1, 1, 1, half, half))
    _check_orders(theta, sig)
    genus = rh_kernel_genus(sig, q)
    ext_l = Signature(0, (2, q, q, 2 * q))
    ext_y = Signature(0, (2, 2 * q, 3 * q))
    # the order-2 locus must be an exact intermediate: same kernel genus
    if rh_kernel_genus(ext_l, 2 * q) != genus:
        raise OrderViolation("order-2 extension of Q(%d) has wrong kernel genus" % q)
    meta = (
        BranchPoint(
            locus="two-dimensional locus L",
            isotropy="order 2",
            isotropy_order=2,
            extension_signature=str(ext_l),
            boundary="S^3 (trivial-knot quotient)",
            area_ratio_verified=_area_ratio_is(sig, ext_l, 2),
        ),
        BranchPoint(
            locus="one point Y",
            isotropy="D_3",
            isotropy_order=6,
            extension_signature=str(ext_y),
            boundary="S^3 (trefoil orbifold)",
            area_ratio_verified=_area_ratio_is(sig, ext_y, 6),
        ),
    )
    return FamilyReport(
        family_id="Q(%d)" % q,
        signature=sig,
        theta=theta,
        kernel_genus=genus,
        family_dim=6 * 0 - 6 + 2 * 5,
        branch_metadata=meta,
    )
