#!/usr/bin/env python3
"""Two four-dimensional families of cyclic covers branched on five points.

Both families have four-dimensional moduli; their branch loci show that in
dimension four both singular and non-singular behaviour occurs.  The
three-manifold labels (lens space, trefoil orbifold) are carried as
metadata and cross-checked arithmetically via exact orbifold-area ratios.
"""

import json

from equisym import family_Q, family_W

q7 = family_Q(7)
print("family", q7.family_id)
print("  signature     :", q7.signature)
print("  images        :", q7.theta.torsion_images, "mod", q7.theta.modulus)
print("  kernel genus  :", q7.kernel_genus)
print("  dimension     :", q7.family_dim)
for b in q7.branch_metadata:
    print(
        "  branch piece  : %s, isotropy %s (order %d), inside %s, boundary %s"
        % (b.locus, b.isotropy, b.isotropy_order, b.extension_signature, b.boundary)
    )

print()
w = family_W(7, 11)
print("family", w.family_id)
print("  signature     :", w.signature)
print("  images        :", w.theta.torsion_images, "mod", w.theta.modulus)
print("  kernel genus  :", w.kernel_genus)
for b in w.branch_metadata:
    print(
        "  branch piece  : %s, isotropy %s, inside %s, boundary %s (area ratio verified: %s)"
        % (b.locus, b.isotropy, b.extension_signature, b.boundary, b.area_ratio_verified)
    )

# Reports serialize with stable keys, same conventions as the atlases.
print()
print(json.dumps(q7.to_payload(), sort_keys=True, indent=1)[:400], "...")
