#!/usr/bin/env python3
"""The branch-locus atlases of genus 2 and 3, with singularity verdicts.

Each stratum of the branch locus gets a dimension, a codimension inside
the (6g-6)-dimensional moduli space, closure containments, and a verdict:
topologically singular (no ball neighbourhood), not singular, or honestly
undetermined.
"""

from equisym import classify_genus, render_markdown

for genus in (2, 3):
    atlas = classify_genus(genus)
    print(render_markdown(atlas))

# Highlights worth noticing above:
#  * genus 3: every point with symmetry beyond the hyperelliptic
#    involution is singular; the generic hyperelliptic point is not,
#    because an order-2 rotation with a codimension-2 fixed set has a
#    ball quotient.
#  * genus 3, order 4: the codimension argument fails (the stratum sits
#    inside the hyperelliptic closure, codimension 2); the special
#    square-root-of-hyperellipticity rule settles it.
#  * genus 2: the pentagonal point is isolated, hence singular; the
#    order-3 stratum stays undetermined -- it lies inside the closure of
#    the involution stratum, where these methods say nothing.

atlas2 = classify_genus(2)
for i in atlas2.isolated:
    s = atlas2.strata[i]
    print("isolated at genus 2: order %d, %s" % (s.order, s.signature))
    for note in s.notes:
        print("   ", note)
