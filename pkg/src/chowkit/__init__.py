"""chowkit: exact intersection-theory arithmetic and sheaf-bound toolkit.

The package computes, entirely in exact rational arithmetic, the numeric
invariants attached to sheaves on P^2 and P^3: Chern characters and their
calculus (products, twists, duals, restriction, pushforward,
Riemann-Roch), splitting-type enumeration, explicit cohomology and ch_3
bounds, two-term resolution shapes of rank-two reflexive sheaves, linear
monad shapes of normalized sheaves on P^2, partition-type stratum labels,
and a deterministic catalog/CLI layer tying them together.
"""

from .bounds import (
    BoundReport,
    bound_report,
    ch3_bound,
    enumerate_admissible_c3,
    euler_bound,
    extreme_bounds,
    h0_line_bundle,
    h1_invariant_bound,
    p2_bounds,
    p3_bounds,
    step_thresholds,
    vanishing_Q,
)
from .catalog import (
    KINDS,
    SCHEMA_VERSION,
    CatalogEntry,
    bounds_catalog,
    diff_catalogs,
    monads_catalog,
    parse_catalog,
    parse_entry,
    resolutions_catalog,
    serialize_catalog,
    serialize_entry,
    strata_catalog,
)
from .chow import (
    ChernCharacter,
    ChernClasses,
    Rational,
    ToddClass,
    as_rational,
    ch_line_bundle,
    character_to_chern,
    chern_to_character,
    dual,
    euler_characteristic,
    mul,
    parse_rational,
    pushforward_from_hyperplane,
    rational_str,
    restrict_to_hyperplane,
    todd,
    twist,
)
from .errors import (
    DimensionMismatchError,
    DomainError,
    InadmissibleParameterError,
    IntegralityError,
    NotRealizableError,
    RankMismatchError,
    UnsupportedDimensionError,
)
from .monads import (
    KernelPresentation,
    MonadShape,
    PartitionType,
    StratumReport,
    charge,
    dual_complex_shape,
    is_normalized,
    kernel_presentation,
    monad_shape,
    partition_types,
    stratum_dims,
)
from .resolutions import (
    PresentationReport,
    ResolutionParams,
    ShapeDescriptor,
    admissible_s,
    c3_of,
    hom_dim,
    max_admissible_s,
    presentation_report,
    resolution_shapes,
    verify_resolution_chern,
)
from .splitting import (
    SplittingType,
    enumerate_splitting_types,
    gap_ok,
    magnitude_ok,
    splitting_radius,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CatalogEntry",
    "ChernCharacter",
    "ChernClasses",
    "DimensionMismatchError",
    "DomainError",
    "InadmissibleParameterError",
    "IntegralityError",
    "KINDS",
    "KernelPresentation",
    "MonadShape",
    "NotRealizableError",
    "PartitionType",
    "PresentationReport",
    "RankMismatchError",
    "Rational",
    "ResolutionParams",
    "SCHEMA_VERSION",
    "ShapeDescriptor",
    "SplittingType",
    "StratumReport",
    "ToddClass",
    "UnsupportedDimensionError",
    "admissible_s",
    "as_rational",
    "bound_report",
    "bounds_catalog",
    "c3_of",
    "ch3_bound",
    "ch_line_bundle",
    "character_to_chern",
    "charge",
    "chern_to_character",
    "diff_catalogs",
    "dual",
    "dual_complex_shape",
    "enumerate_admissible_c3",
    "enumerate_splitting_types",
    "euler_bound",
    "euler_characteristic",
    "extreme_bounds",
    "gap_ok",
    "h0_line_bundle",
    "h1_invariant_bound",
    "hom_dim",
    "is_normalized",
    "kernel_presentation",
    "magnitude_ok",
    "max_admissible_s",
    "monad_shape",
    "monads_catalog",
    "mul",
    "p2_bounds",
    "p3_bounds",
    "parse_catalog",
    "parse_entry",
    "parse_rational",
    "partition_types",
    "presentation_report",
    "pushforward_from_hyperplane",
    "rational_str",
    "resolution_shapes",
    "resolutions_catalog",
    "restrict_to_hyperplane",
    "serialize_catalog",
    "serialize_entry",
    "splitting_radius",
    "step_thresholds",
    "strata_catalog",
    "stratum_dims",
    "todd",
    "twist",
    "validate",
    "vanishing_Q",
    "verify_resolution_chern",
]
