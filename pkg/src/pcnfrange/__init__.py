"""Precise-CNF normalization, clause-count bounds, and unsatisfiability
screening for small Boolean formulas."""

from .bounds import (
    BoundsTable,
    Construction,
    RangeClass,
    bounds_for,
    classify_count,
    classify_range,
    clause_distribution,
)
from .detectors import (
    ClauseClassTable,
    DetectorVerdict,
    OccurrenceCensus,
    Reason,
    ScreenResult,
    Verdict,
    clause_class_screen,
    occurrence_census,
    occurrence_screen,
    screen_all,
)
from .dimacs import (
    DimacsError,
    DimacsWarning,
    LiteralOutOfRangeError,
    MalformedHeaderError,
    UnterminatedClauseError,
    parse_dimacs,
    write_dimacs,
)
from .formula import (
    MAX_VARS,
    Assignment,
    Clause,
    Literal,
    PcnfFormula,
    RawCnf,
    all_true,
    clause_canonical_key,
    clause_satisfied,
)
from .generate import (
    BudgetExceededError,
    Counterexample,
    EnumerationCapError,
    StratumReport,
    TightnessReport,
    VerificationReport,
    VerifyMode,
    double_sat_construction,
    enumerate_clauses,
    max_sat_construction,
    sample_pcnf,
    verify_bounds,
)
from .normalize import EmptyClauseError, NormalizationStats, normalize
from .oracle import (
    OracleResult,
    OracleVerdict,
    TooManyVariablesError,
    model_bitmap,
    naive_model_set,
    raw_model_bitmap,
    solve,
)
from .report import AnalysisReport, build_report, report_to_dict, to_json

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "Assignment",
    "BoundsTable",
    "BudgetExceededError",
    "Clause",
    "ClauseClassTable",
    "Construction",
    "Counterexample",
    "DetectorVerdict",
    "DimacsError",
    "DimacsWarning",
    "EmptyClauseError",
    "EnumerationCapError",
    "Literal",
    "LiteralOutOfRangeError",
    "MalformedHeaderError",
    "MAX_VARS",
    "NormalizationStats",
    "OccurrenceCensus",
    "OracleResult",
    "OracleVerdict",
    "PcnfFormula",
    "RangeClass",
    "RawCnf",
    "Reason",
    "ScreenResult",
    "StratumReport",
    "TightnessReport",
    "TooManyVariablesError",
    "UnterminatedClauseError",
    "Verdict",
    "VerificationReport",
    "VerifyMode",
    "all_true",
    "bounds_for",
    "build_report",
    "classify_count",
    "classify_range",
    "clause_canonical_key",
    "clause_class_screen",
    "clause_distribution",
    "clause_satisfied",
    "double_sat_construction",
    "enumerate_clauses",
    "max_sat_construction",
    "model_bitmap",
    "naive_model_set",
    "normalize",
    "occurrence_census",
    "occurrence_screen",
    "parse_dimacs",
    "raw_model_bitmap",
    "report_to_dict",
    "sample_pcnf",
    "screen_all",
    "solve",
    "to_json",
    "verify_bounds",
    "write_dimacs",
]
