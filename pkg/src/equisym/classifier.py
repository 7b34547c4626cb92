"""Topological-singularity verdicts for branch-locus strata.

A branch-locus point is *topologically singular* when it has no
neighbourhood homeomorphic to a ball of the moduli-space dimension
``6g - 6``.  The decision rules implemented here, in the order they are
tried:

``Isolated``
    an isolated zero-dimensional stratum is singular (its ball boundary
    quotients to a non-simply-connected manifold).
``MaximalClosure``
    a stratum contained in the closure of a *maximal* stratum of
    codimension greater than two is singular.
``TopCrit``
    if every stratum through a point has codimension greater than two the
    point is singular; requires the closure row to be fully decided.
``Codim2Rotation``
    a codimension-two stratum of effective order two, through whose
    generic point no other stratum passes, is NOT singular: the
    neighbourhood is the quotient of a ball by a rotation with a
    codimension-two fixed set, which is again a ball.
``C4SquareRoot``
    genus-3 special case: the order-4 stratum squaring to the
    hyperelliptic involution is singular; the first covering step gives a
    sphere boundary but the second is branched in codimension > 2.

Anything undecided is reported ``Undetermined`` (rule ``NoCriterion``):
the criteria genuinely leave such strata open, and no later knowledge is
imported.  All rules are monotone in the closure relation: turning a
``YES``/``NO`` into ``UNKNOWN`` can only move verdicts toward
``Undetermined``, never flip a decided one.

For genus >= 4 the per-stratum machinery is bypassed: the prime-order
skeleton is verified to consist entirely of strata of codimension greater
than two (a Riemann-Hurwitz consequence of ``r <= 2g - 4h + 2``), after
which every point is singular by ``TopCrit``.  A codimension <= 2 stratum
there would be a hard contradiction and raises :class:`PremiseViolation`.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .actions import cyclic_restriction
from .signatures import hyperelliptic_signature
from .stratification import (
    AtlasConfig,
    ClosureRelation,
    Containment,
    InconsistentRelation,
    Stratum,
    build_branch_locus,
    build_closure_relation,
    find_isolated,
)

SINGULAR = "Singular"
NON_SINGULAR = "NonSingular"
UNDETERMINED = "Undetermined"


class PremiseViolation(RuntimeError):
    """A genus >= 4 stratum of codimension <= 2 appeared; abort, never continue."""


@dataclass(frozen=True)
class Verdict:
    outcome: str
    rule: str
    note: str


def _is_square_root_of_hyperelliptic(s: Stratum) -> bool:
    if s.genus != 3 or s.order != 4:
        return False
    target = hyperelliptic_signature(s.genus)
    return all(
        cyclic_restriction(s.signature, ty.orbit_representative, 2)[0] == target
        for ty in s.types
    )


def classify_stratum(
    s: Stratum,
    locus: list[Stratum],
    relation: ClosureRelation,
    isolated_indices: list[int] | None = None,
) -> Verdict:
    strata = list(relation.strata)
    i = strata.index(s)
    n = len(strata)
    if isolated_indices is None:
        isolated_indices = find_isolated(strata, relation)
    row = [relation.matrix[(i, j)] for j in range(n)]
    row_complete = all(v is not Containment.UNKNOWN for v in row)
    yes_set = [j for j in range(n) if row[j] is Containment.YES]

    topcrit_fires = row_complete and all(strata[j].codim > 2 for j in yes_set)
    rotation_fires = (
        s.codim == 2
        and s.order == 2
        and row_complete
        and all(row[j] is Containment.NO for j in range(n) if j != i)
        and (s.maximal or s.genus == 2)
    )
    if topcrit_fires and rotation_fires:
        raise InconsistentRelation(
            "codimension-2 stratum %s satisfies the all-codim>2 criterion" % (s.key,)
        )

    if i in isolated_indices:
        return Verdict(SINGULAR, "Isolated", "isolated zero-dimensional stratum" + _isolated_extra(s))
    for j in yes_set:
        t = strata[j]
        if relation.stratum_maximal[j] and t.codim > 2:
            return Verdict(
                SINGULAR,
                "MaximalClosure",
                "contained in the closure of the maximal stratum (%d, %s) of codimension %d"
                % (t.order, t.signature, t.codim),
            )
    if topcrit_fires:
        return Verdict(SINGULAR, "TopCrit", "every stratum through this point has codimension > 2")
    if rotation_fires:
        return Verdict(
            NON_SINGULAR,
            "Codim2Rotation",
            "generic point fixed only by an order-2 rotation with codimension-2 "
            "fixed locus; the ball quotient is again a ball",
        )
    if _is_square_root_of_hyperelliptic(s):
        return Verdict(
            SINGULAR,
            "C4SquareRoot",
            "order-4 symmetry squaring to the hyperelliptic involution; the "
            "second covering step is branched in codimension > 2",
        )
    return Verdict(
        UNDETERMINED,
        "NoCriterion",
        "no decision rule applies; the available criteria leave this stratum open",
    )


def _isolated_extra(s: Stratum) -> str:
    if s.genus == 2 and s.order == 5:
        return (
            " (the curve y^2 = x^5 - 1; distinct from y^2 = x^5 - x, with "
            "which it is easily conflated)"
        )
    return ""


@dataclass
class Atlas:
    genus: int
    strata: list[Stratum]
    relation: ClosureRelation
    verdicts: list[Verdict]
    isolated: list[int]
    premise_note: str = ""


def classify_genus(genus: int, config: AtlasConfig = AtlasConfig()) -> Atlas:
    """Full atlas for one genus: strata, closure relation, verdicts, isolation.

    For genus >= 4 the codimension premise is checked computationally over
    the whole skeleton and every stratum is ruled singular; a violation
    raises :class:`PremiseViolation` rather than continuing.
    """
    strata = build_branch_locus(genus, config)
    relation = build_closure_relation(strata, genus, config)
    isolated = find_isolated(strata, relation)
    premise_note = ""
    if genus >= 4:
        bad = [s for s in strata if s.codim <= 2]
        if bad:
            raise PremiseViolation(
                "genus %d strata of codimension <= 2: %s" % (genus, [s.key for s in bad])
            )
        min_codim = min((s.codim for s in strata), default=0)
        premise_note = (
            "premise verified: every stratum has codimension > 2 (minimum %d)" % min_codim
        )
        verdicts = [
            Verdict(SINGULAR, "TopCrit", "every stratum through any point has codimension > 2")
            for _ in strata
        ]
    else:
        verdicts = [classify_stratum(s, strata, relation, isolated) for s in strata]
    return Atlas(genus, strata, relation, verdicts, isolated, premise_note)


def verify_codimension_bounds(genus: int, config: AtlasConfig = AtlasConfig()) -> dict:
    """Report on the dimension bounds behind the genus >= 4 theorem.

    Checks ``r <= 2g - 4h + 2`` and ``dim <= 4g - 2h - 2`` for every
    prime-order stratum (the dimension bound is strict except for the
    order-2 stratum meeting it with equality), and whether a
    codimension-two prime stratum exists; it can only for genus 2 and 3.
    """
    cfg = AtlasConfig(
        primes_only=True,
        max_candidates=config.max_candidates,
        exact_types_guard=config.exact_types_guard,
        singerman_path=config.singerman_path,
    )
    strata = build_branch_locus(genus, cfg)
    rows = []
    codim2 = []
    for s in strata:
        h, r = s.signature.quotient_genus, s.signature.r
        r_bound = 2 * genus - 4 * h + 2
        dim_bound = 4 * genus - 2 * h - 2
        codim_bound = 2 * genus + 2 * h - 4
        rows.append(
            {
                "order": s.order,
                "signature": str(s.signature),
                "r": r,
                "r_bound": r_bound,
                "r_ok": r <= r_bound,
                "dim": s.dim,
                "dim_bound": dim_bound,
                "dim_ok": s.dim <= dim_bound,
                "dim_strict": s.dim < dim_bound,
                "codim": s.codim,
                "codim_bound": codim_bound,
                "codim_ok": s.codim >= codim_bound,
            }
        )
        if s.codim == 2:
            codim2.append(str(s.signature))
    return {
        "genus": genus,
        "strata": rows,
        "all_bounds_hold": all(x["r_ok"] and x["dim_ok"] and x["codim_ok"] for x in rows),
        "codim2_strata": codim2,
        "codim2_exists": bool(codim2),
        "codim2_allowed": genus in (2, 3),
    }


# --- report rendering -----------------------------------------------------


def atlas_payload(atlas: Atlas) -> dict:
    strata_out = []
    for i, s in enumerate(atlas.strata):
        v = atlas.verdicts[i]
        rep = s.type_rep.orbit_representative
        strata_out.append(
            {
                "order": s.order,
                "signature": str(s.signature),
                "dim": s.dim,
                "codim": s.codim,
                "maximal": s.maximal,
                "stratum_maximal": atlas.relation.stratum_maximal[i],
                "num_types": s.num_types,
                "type_rep": {
                    "modulus": rep.modulus,
                    "hyperbolic": list(rep.hyperbolic_images),
                    "torsion": list(rep.torsion_images),
                    "orbit_size": s.type_rep.orbit_size,
                },
                "verdict": {"outcome": v.outcome, "rule": v.rule, "note": v.note},
                "notes": list(s.notes),
            }
        )
    payload = {
        "ambient_dim": 6 * atlas.genus - 6,
        "strata": strata_out,
        "closure_pairs": [list(p) for p in atlas.relation.yes_pairs()],
        "closure_unknown_pairs": [list(p) for p in atlas.relation.unknown_pairs()],
        "closure_completeness": atlas.relation.completeness,
        "isolated": list(atlas.isolated),
        "excluded": (
            ["(2, 0;2,2,2,2,2,2): hyperelliptic involution, trivial on moduli"]
            if atlas.genus == 2
            else []
        ),
    }
    if atlas.premise_note:
        payload["premise"] = atlas.premise_note
    return payload


def render_csv(atlas: Atlas) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["genus", "order", "signature", "dim", "codim", "maximal", "verdict", "rule"])
    for s, v in zip(atlas.strata, atlas.verdicts):
        writer.writerow(
            [atlas.genus, s.order, str(s.signature), s.dim, s.codim, s.maximal, v.outcome, v.rule]
        )
    return buf.getvalue()


def render_markdown(atlas: Atlas) -> str:
    lines = [
        "# Branch locus atlas, genus %d" % atlas.genus,
        "",
        "Ambient moduli dimension: %d" % (6 * atlas.genus - 6),
        "",
        "| order | signature | dim | codim | maximal | verdict | rule |",
        "|---|---|---|---|---|---|---|",
    ]
    for s, v in zip(atlas.strata, atlas.verdicts):
        lines.append(
            "| %d | %s | %d | %d | %s | %s | %s |"
            % (s.order, s.signature, s.dim, s.codim, "yes" if s.maximal else "no", v.outcome, v.rule)
        )
    lines.append("")
    if atlas.isolated:
        lines.append(
            "Isolated strata: "
            + ", ".join("(%d, %s)" % (atlas.strata[i].order, atlas.strata[i].signature) for i in atlas.isolated)
        )
    else:
        lines.append("Isolated strata: none")
    pairs = atlas.relation.yes_pairs()
    lines.append("")
    lines.append("Closure containments (stratum -> closure of stratum):")
    if pairs:
        for i, j in pairs:
            a, b = atlas.strata[i], atlas.strata[j]
            lines.append("- (%d, %s) lies in the closure of (%d, %s)" % (a.order, a.signature, b.order, b.signature))
    else:
        lines.append("- none")
    if atlas.premise_note:
        lines.append("")
        lines.append(atlas.premise_note)
    lines.append("")
    return "\n".join(lines)


def render_json_document(atlas: Atlas, generated_by: str, schema_version: int = 1) -> str:
    doc = {
        "schema_version": schema_version,
        "generated_by": generated_by,
        "genus": atlas.genus,
        "payload": atlas_payload(atlas),
    }
    return json.dumps(doc, sort_keys=True, indent=1, separators=(",", ": ")) + "\n"
