#!/usr/bin/env python3
"""Quotient signatures, Teichmueller dimensions, Riemann-Hurwitz.

A finite cyclic symmetry of a genus-g surface is recorded by its quotient
data (h; m_1, ..., m_r): the genus of the quotient plus the branching
periods.  Everything downstream is exact integer arithmetic on this datum.
"""

from equisym import Signature, dimension_report, rh_kernel_genus, teich_dimension
from equisym import enumerate_prime_quotient_data

# The hyperelliptic involution of a genus-3 surface: quotient a sphere,
# eight branch points of period 2.
hyperelliptic = Signature(0, (2,) * 8)
print("signature      :", hyperelliptic)
print("Teich dimension:", teich_dimension(hyperelliptic))
print("inside M_3     :", dimension_report(hyperelliptic, 3))

# Riemann-Hurwitz pins the cover genus exactly.  The order-5 action with
# three branch points lives on a genus-2 surface:
print()
print("genus of the 5-fold cover over (0;5,5,5):", rh_kernel_genus(Signature(0, (5, 5, 5)), 5))
print("genus of the 7-fold cover over (0;7,7,7):", rh_kernel_genus(Signature(0, (7, 7, 7)), 7))

# All quotient data a prime-order automorphism can have on a fixed genus.
# At genus 3 the involutions come in three shapes (8, 4 or 0 fixed points),
# order three in two, and order seven only as a triangle datum.
print()
for p in (2, 3, 5, 7):
    data = enumerate_prime_quotient_data(3, p)
    print("genus 3, order %d: %s" % (p, data or "nothing"))

# The (h, r) pairs always obey the fixed-point bound r <= 2g - 4h + 2.
print()
g = 3
for p in (2, 3, 7):
    for h, r in enumerate_prime_quotient_data(g, p):
        print("  p=%d (h=%d, r=%d): bound 2g-4h+2 = %d" % (p, h, r, 2 * g - 4 * h + 2))
