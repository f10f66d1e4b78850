"""fsprank: pairwise-dominance decision support over fuzzy soft sets.

Grade alternatives against criteria in [0, 1], derive the full
domination/subjection structure, compute three exact-rational decision
measures and rank with explicit tie groups.  Includes CSV/JSON wire formats,
a seeded Monte Carlo bias study, a CLI and a what-if HTTP service.
"""

from .core import (
    GRADE_SCALE,
    ComparisonCell,
    CumulativeScores,
    DecisionRow,
    DecisionTable,
    ExplanationReport,
    FuzzySoftSet,
    Grade,
    Measure,
    OpponentComparison,
    compare,
    comparison_matrix,
    cumulative_scores,
    decision_measures,
    explain,
    new_fuzzy_soft_set,
    rank,
    restrict_attributes,
)
from .errors import (
    DegenerateScoresError,
    DimensionMismatchError,
    DuplicateIdError,
    EmptyAttributeSetError,
    EmptyUniverseError,
    FsprankError,
    GradeOutOfRangeError,
    GradePrecisionError,
    InvalidIdError,
    ParseError,
    UnknownAlternativeError,
    UnknownAttributeError,
)
from .io import (
    AssessmentDocument,
    document_from_fss,
    emit_assessment,
    emit_decision_table,
    explanation_payload,
    format_fraction,
    fraction_ratio,
    parse_assessment,
    parse_assessment_document,
)
from .simulate import (
    MeasureStats,
    SimulationConfig,
    SimulationReport,
    emit_report,
    random_scenario,
    run_simulation,
    scenario_stream,
)

__version__ = "0.1.0"

__all__ = [
    "GRADE_SCALE",
    "AssessmentDocument",
    "ComparisonCell",
    "CumulativeScores",
    "DecisionRow",
    "DecisionTable",
    "DegenerateScoresError",
    "DimensionMismatchError",
    "DuplicateIdError",
    "EmptyAttributeSetError",
    "EmptyUniverseError",
    "ExplanationReport",
    "FsprankError",
    "FuzzySoftSet",
    "Grade",
    "GradeOutOfRangeError",
    "GradePrecisionError",
    "InvalidIdError",
    "Measure",
    "MeasureStats",
    "OpponentComparison",
    "ParseError",
    "SimulationConfig",
    "SimulationReport",
    "UnknownAlternativeError",
    "UnknownAttributeError",
    "compare",
    "comparison_matrix",
    "cumulative_scores",
    "decision_measures",
    "document_from_fss",
    "emit_assessment",
    "emit_decision_table",
    "explain",
    "explanation_payload",
    "format_fraction",
    "fraction_ratio",
    "new_fuzzy_soft_set",
    "parse_assessment",
    "parse_assessment_document",
    "rank",
    "random_scenario",
    "restrict_attributes",
    "run_simulation",
    "scenario_stream",
    "emit_report",
    "__version__",
]
