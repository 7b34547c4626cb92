"""Cyclic equisymmetric strata of the moduli-space branch locus.

Exact enumeration of cyclic group actions on genus-g surfaces via
Riemann-Hurwitz bookkeeping and generating vectors, assembly of the branch
locus into strata with a conservative closure relation, and a rule-based
classification of topologically singular points.
"""

__version__ = "0.1.0"

from .actions import (
    GeneratingVector,
    SizeGuard,
    TopologicalType,
    brute_force_count,
    cyclic_restriction,
    enumerate_vectors,
    reduce_types,
)
from .classifier import (
    Atlas,
    PremiseViolation,
    Verdict,
    classify_genus,
    classify_stratum,
    render_csv,
    render_json_document,
    render_markdown,
    verify_codimension_bounds,
)
from .families import FamilyReport, OrderViolation, family_Q, family_W
from .signatures import (
    DimensionReport,
    GenusTooSmall,
    NonIntegral,
    Signature,
    dimension_report,
    enumerate_cyclic_quotient_data,
    enumerate_prime_quotient_data,
    hyperelliptic_signature,
    is_maximal_signature,
    rh_kernel_genus,
    teich_dimension,
)
from .stratification import (
    AtlasConfig,
    ClosureRelation,
    Containment,
    InconsistentRelation,
    Stratum,
    build_branch_locus,
    build_closure_relation,
    closure_contains,
    find_isolated,
)

__all__ = [
    "Atlas",
    "AtlasConfig",
    "ClosureRelation",
    "Containment",
    "DimensionReport",
    "FamilyReport",
    "GeneratingVector",
    "GenusTooSmall",
    "InconsistentRelation",
    "NonIntegral",
    "OrderViolation",
    "PremiseViolation",
    "Signature",
    "SizeGuard",
    "Stratum",
    "TopologicalType",
    "Verdict",
    "brute_force_count",
    "build_branch_locus",
    "build_closure_relation",
    "classify_genus",
    "classify_stratum",
    "closure_contains",
    "cyclic_restriction",
    "dimension_report",
    "enumerate_cyclic_quotient_data",
    "enumerate_prime_quotient_data",
    "enumerate_vectors",
    "family_Q",
    "family_W",
    "find_isolated",
    "hyperelliptic_signature",
    "is_maximal_signature",
    "reduce_types",
    "render_csv",
    "render_json_document",
    "render_markdown",
    "rh_kernel_genus",
    "teich_dimension",
    "verify_codimension_bounds",
]
