from .angles import (
    HISTORICAL_PI,
    MINUTES_PER_RADIAN,
    RSINE_RADIUS,
    Angle,
    Arcminutes,
    RsineValue,
    to_rsine,
)
from .compare import (
    PUBLISHED_RSINE_MINUTES,
    PUBLISHED_SINES,
    ComparisonReport,
    EntryComparison,
    compare_with_reference,
)
from .convergence import ConvergenceStudy, convergence_study, fitted_order, observed_order
from .errors import (
    ArdhaJyaError,
    DegenerateStepError,
    EmptyGridError,
    InstabilityError,
    InvalidConfigError,
    InvalidInputError,
    ModeMismatchError,
    SceneDomainError,
    UnsupportedGridError,
    VerificationFailure,
)
from .finite_diff import (
    Denominator,
    OscillatorRun,
    SampledPair,
    central_first_derivative,
    central_second_derivative,
    integrate_shm,
)
from .geometry import (
    GeometryScene,
    Point,
    SimilarityReport,
    SweepSummary,
    build_scene,
    measure_similarity,
    sweep_verify,
    verify_similarity,
)
from .grid import PRESETS, AngleGrid, HalfAngleConfig, RecursionConfig, RecursionMode, historical_step
from .half_angle import generate_half_angle_table, half_angle_grid
from .identities import cosine_diff_rhs, reference_cos, reference_sin, sine_diff_rhs
from .laws import Law, LawResult, LawSuite, SuiteReport, Violation, run_suite
from .laws_geometry import GEOMETRY_SUITE
from .laws_identities import IDENTITY_SUITE, IdentityDomain
from .laws_table import TABLE_SUITE, GeneratedTable
from .table import (
    DifferenceSeries,
    SineTable,
    SineTableEntry,
    cosine_first_difference_check,
    first_difference_check,
    generate_recursion_table,
    second_difference_check,
    telescoping_residual,
)

__all__ = [
    # Angles and Rsine
    "Angle",
    "Arcminutes",
    "RsineValue",
    "to_rsine",
    "RSINE_RADIUS",
    "MINUTES_PER_RADIAN",
    "HISTORICAL_PI",
    # Identities and oracle
    "sine_diff_rhs",
    "cosine_diff_rhs",
    "reference_sin",
    "reference_cos",
    # Grids and configuration
    "AngleGrid",
    "RecursionMode",
    "RecursionConfig",
    "HalfAngleConfig",
    "PRESETS",
    "historical_step",
    # Tables
    "SineTableEntry",
    "SineTable",
    "DifferenceSeries",
    "generate_recursion_table",
    "first_difference_check",
    "second_difference_check",
    "cosine_first_difference_check",
    "telescoping_residual",
    "generate_half_angle_table",
    "half_angle_grid",
    # Comparison
    "ComparisonReport",
    "EntryComparison",
    "compare_with_reference",
    "PUBLISHED_SINES",
    "PUBLISHED_RSINE_MINUTES",
    # Finite differences
    "SampledPair",
    "Denominator",
    "central_first_derivative",
    "central_second_derivative",
    "OscillatorRun",
    "integrate_shm",
    "ConvergenceStudy",
    "convergence_study",
    "observed_order",
    "fitted_order",
    # Geometry
    "Point",
    "GeometryScene",
    "SimilarityReport",
    "SweepSummary",
    "build_scene",
    "measure_similarity",
    "verify_similarity",
    "sweep_verify",
    # Laws
    "Law",
    "LawSuite",
    "LawResult",
    "Violation",
    "SuiteReport",
    "run_suite",
    "IDENTITY_SUITE",
    "IdentityDomain",
    "TABLE_SUITE",
    "GeneratedTable",
    "GEOMETRY_SUITE",
    # Errors
    "ArdhaJyaError",
    "InvalidInputError",
    "InvalidConfigError",
    "EmptyGridError",
    "ModeMismatchError",
    "UnsupportedGridError",
    "DegenerateStepError",
    "InstabilityError",
    "SceneDomainError",
    "VerificationFailure",
]
