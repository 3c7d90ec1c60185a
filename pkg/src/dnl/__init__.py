"""Context-aware dataset nutrition labels.

Structured, validated documentation for datasets in which the
practitioner's chosen use case and prediction determine which alerts and
FYIs are surfaced. The package covers the full path: strict parsing and
validation of label documents, CSV profiling with structural staleness
checks, scoped alert resolution, static HTML reports and cross-label
comparison, plus a file-backed store served over HTTP.
"""

from .fingerprint import StructuralFingerprint, compute_fingerprint
from .model import (
    Alert,
    Badges,
    ComputedStats,
    Fyi,
    FlagRule,
    FreeText,
    KeyFacts,
    Label,
    ParseError,
    Prediction,
    QuestionnaireAnswer,
    Scope,
    Severity,
    UseCase,
    ValidationReport,
    parse_label,
    serialize_label,
    validate_label,
)
from .profiler import DatasetProfile, StalenessReport, check_staleness, profile_csv
from .reporting import ComparisonReport, compare_labels, render_comparison_html, render_label_html
from .resolution import ResolvedView, list_use_cases, materialize_questionnaire_flags, resolve

__version__ = "0.1.0"

__all__ = [
    "Alert",
    "Badges",
    "ComparisonReport",
    "ComputedStats",
    "DatasetProfile",
    "FlagRule",
    "FreeText",
    "Fyi",
    "KeyFacts",
    "Label",
    "ParseError",
    "Prediction",
    "QuestionnaireAnswer",
    "ResolvedView",
    "Scope",
    "Severity",
    "StalenessReport",
    "StructuralFingerprint",
    "UseCase",
    "ValidationReport",
    "check_staleness",
    "compare_labels",
    "compute_fingerprint",
    "list_use_cases",
    "materialize_questionnaire_flags",
    "parse_label",
    "profile_csv",
    "render_comparison_html",
    "render_label_html",
    "resolve",
    "serialize_label",
    "validate_label",
]
