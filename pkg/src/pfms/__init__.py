"""Picture fuzzy multisets on one-dimensional Euclidean domains.

The package models grade data as triples (positive, neutral, negative)
carried at several multiplicity levels over a finite coordinate grid,
interpolating linearly in between.  On top of the value types it provides
the pointwise algebra, threshold cuts, convexity checks with concrete
witnesses, channel-wise convex hulls, and seeded verification suites that
compare the exact algorithms against brute-force oracles.
"""

from .core import (
    CHANNELS,
    TOL_CMP,
    TOL_SUM,
    TOL_X,
    BadLevel,
    CutRegion,
    CutThresholds,
    DomainGrid,
    GradeSequence,
    GradeTriple,
    InvalidGrid,
    LengthMismatch,
    MalformedRegion,
    OutOfDomain,
    OutOfUnitInterval,
    PfmsError,
    PictureFuzzyMultiset,
    RaggedDepth,
    PositiveOrderViolation,
    SumExceedsOne,
    check_unit,
    make_pfms,
    make_triple,
    multiset_from_values,
    pad,
    sort_levels,
)
from .algebra import (
    ChannelWeights,
    DepthMismatch,
    GridMismatch,
    WeightSumInvalid,
    WeightVector,
    complement,
    convex_combination,
    equals,
    includes,
    intersection,
    pcc_points,
    segment_grade_blend,
    union,
)
from .convexity import (
    ConvexityReport,
    CutConvexityReport,
    CutWitness,
    GradeField,
    JensenReport,
    Witness,
    antiunimodal_minorant,
    convex_hull,
    cut,
    cuts_all_convex,
    hull_membership_test,
    is_antiunimodal,
    is_convex_exact,
    is_convex_sampled,
    is_unimodal,
    jensen_check,
    unimodal_majorant,
)
from .fileio import (
    FORMAT_VERSION,
    InstanceSyntaxError,
    SchemaError,
    emit_instance,
    instance_document,
    instance_from_document,
    parse_instance,
)
from .lab import (
    DIP_DEPTH,
    SUITE_NAMES,
    BadConfig,
    GeneratorConfig,
    SuiteResult,
    TooLarge,
    UnknownSuite,
    gen_pfms,
    hull_gap_fixture,
    oracle_convexity,
    oracle_hull,
    plant_dip,
    run_suite,
    shrink_instance,
)

__version__ = "0.1.0"

__all__ = [
    "CHANNELS",
    "TOL_CMP",
    "TOL_SUM",
    "TOL_X",
    "BadConfig",
    "BadLevel",
    "ChannelWeights",
    "ConvexityReport",
    "CutConvexityReport",
    "CutRegion",
    "CutThresholds",
    "CutWitness",
    "DIP_DEPTH",
    "DepthMismatch",
    "DomainGrid",
    "FORMAT_VERSION",
    "GeneratorConfig",
    "GradeField",
    "GradeSequence",
    "GradeTriple",
    "GridMismatch",
    "InstanceSyntaxError",
    "InvalidGrid",
    "JensenReport",
    "LengthMismatch",
    "MalformedRegion",
    "OutOfDomain",
    "OutOfUnitInterval",
    "PfmsError",
    "PictureFuzzyMultiset",
    "RaggedDepth",
    "SUITE_NAMES",
    "SchemaError",
    "PositiveOrderViolation",
    "SuiteResult",
    "SumExceedsOne",
    "TooLarge",
    "UnknownSuite",
    "WeightSumInvalid",
    "WeightVector",
    "Witness",
    "antiunimodal_minorant",
    "check_unit",
    "complement",
    "convex_combination",
    "convex_hull",
    "cut",
    "cuts_all_convex",
    "emit_instance",
    "equals",
    "gen_pfms",
    "hull_gap_fixture",
    "hull_membership_test",
    "includes",
    "instance_document",
    "instance_from_document",
    "intersection",
    "is_antiunimodal",
    "is_convex_exact",
    "is_convex_sampled",
    "is_unimodal",
    "jensen_check",
    "make_pfms",
    "make_triple",
    "multiset_from_values",
    "oracle_convexity",
    "oracle_hull",
    "pad",
    "parse_instance",
    "pcc_points",
    "plant_dip",
    "run_suite",
    "segment_grade_blend",
    "shrink_instance",
    "sort_levels",
    "union",
    "unimodal_majorant",
    "__version__",
]
