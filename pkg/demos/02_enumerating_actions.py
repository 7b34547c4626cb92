#!/usr/bin/env python3
"""Generating vectors: listing the actual cyclic actions.

A quotient datum only *might* be realized by an action; the generating
vectors say which ones are.  A vector assigns a residue mod n to every
cone point (and handle generator) so that orders match the periods, the
images sum to zero, and together they generate.  Reducing vectors modulo
units and slot permutations yields the topological types.
"""

from equisym import Signature, brute_force_count, enumerate_vectors, reduce_types

# The genus-2 surface with an order-5 symmetry.  Twelve vectors...
sig = Signature(0, (5, 5, 5))
vectors = enumerate_vectors(sig, 5, target_genus=2)
print("vectors for (0;5,5,5) over Z/5:", len(vectors))
for v in vectors[:4]:
    print("  ", v.torsion_images)
print("   ...")

# ...and the independent oracle recounts them from the raw grid:
print("brute-force recount:", brute_force_count(sig, 5, 2))

# All twelve are equivalent: a single topological type, the isolated
# genus-2 pentagonal point y^2 = x^5 - 1.
types = reduce_types(vectors, sig)
print("topological types:", [(t.orbit_representative.torsion_images, t.orbit_size) for t in types])

# Genus 3, order 7 is more interesting: two genuinely different classes
# share the signature (0;7,7,7) -- the Klein quartic class (1,2,4) and the
# hyperelliptic class (1,1,5) of y^2 = x^7 - 1.
print()
sig7 = Signature(0, (7, 7, 7))
types7 = reduce_types(enumerate_vectors(sig7, 7, 3), sig7)
for t in types7:
    print("class %s, orbit size %d" % (t.orbit_representative.torsion_images, t.orbit_size))

# A datum with no vectors at all: one cone point forces a zero image,
# which cannot have full order.
print()
print("vectors for (1;5) over Z/5:", enumerate_vectors(Signature(1, (5,)), 5, 3))
