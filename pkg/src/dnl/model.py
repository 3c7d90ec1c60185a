"""Label document model: types, strict parsing, validation, canonical serialization.

A label is an audit artifact, so the parser is deliberately unforgiving:
unknown fields, duplicate keys, bad enum values, and malformed dates are
rejected outright instead of being passed through. Semantic rules (id
uniqueness, scope referential integrity, severity/mitigation consistency)
live in :func:`validate_label`, which reports violations as data rather
than raising.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from datetime import date

from . import canonical
from .fingerprint import StructuralFingerprint, compute_fingerprint

SCHEMA_VERSION = "1.0"

CATEGORIES = ("Description", "Composition", "Provenance", "Collection", "Management")

INFERRED_TYPES = ("integer", "float", "boolean", "date", "string")

_DATE_RE = re.compile(r"^\d{4}-\d{2}-\d{2}$")


def normalize_title(title: str) -> str:
    """Lowercase, trim, and collapse inner whitespace; used for cross-label matching."""
    return " ".join(title.split()).lower()


class Severity(enum.Enum):
    """Three-point mitigation scale; red means no mitigation strategy is known."""

    NO_KNOWN_MITIGATION = "red"
    PARTIAL_MITIGATION = "orange"
    MITIGATION_KNOWN = "yellow"

    @property
    def rank(self) -> int:
        """Display rank: red > orange > yellow."""
        return {"red": 3, "orange": 2, "yellow": 1}[self.value]


_SEVERITY_BY_WIRE = {s.value: s for s in Severity}

SCOPE_KINDS = ("global", "use_case", "pair")


@dataclass(frozen=True)
class Scope:
    """Where a flagged item applies: everywhere, one use case, or one (use case, prediction) pair."""

    kind: str
    use_case: str | None = None
    prediction: str | None = None

    def __post_init__(self) -> None:
        if self.kind not in SCOPE_KINDS:
            raise ValueError(f"bad scope kind: {self.kind!r}")
        if self.kind == "global" and (self.use_case is not None or self.prediction is not None):
            raise ValueError("global scope carries no ids")
        if self.kind == "use_case" and (self.use_case is None or self.prediction is not None):
            raise ValueError("use_case scope needs exactly a use case id")
        if self.kind == "pair" and (self.use_case is None or self.prediction is None):
            raise ValueError("pair scope needs both ids")

    @classmethod
    def global_scope(cls) -> Scope:
        return cls("global")

    @classmethod
    def for_use_case(cls, use_case_id: str) -> Scope:
        return cls("use_case", use_case_id)

    @classmethod
    def for_pair(cls, use_case_id: str, prediction_id: str) -> Scope:
        return cls("pair", use_case_id, prediction_id)

    def covers(self, use_case_id: str, prediction_id: str) -> bool:
        if self.kind == "global":
            return True
        if self.kind == "use_case":
            return self.use_case == use_case_id
        return self.use_case == use_case_id and self.prediction == prediction_id

    def to_tree(self) -> dict:
        if self.kind == "global":
            return {"kind": "global"}
        if self.kind == "use_case":
            return {"kind": "use_case", "use_case": self.use_case}
        return {"kind": "pair", "use_case": self.use_case, "prediction": self.prediction}


@dataclass
class Prediction:
    id: str
    title: str
    method_description: str


@dataclass
class UseCase:
    id: str
    title: str
    description: str
    predictions: list[Prediction] = field(default_factory=list)


@dataclass
class Alert:
    id: str
    title: str
    description: str
    severity: Severity
    mitigation: str | None = None
    scope: list[Scope] = field(default_factory=list)
    derived_from_question: str | None = None


@dataclass
class Fyi:
    """Informational item; always displayed green, never carries a severity."""

    id: str
    title: str
    description: str
    scope: list[Scope] = field(default_factory=list)
    derived_from_question: str | None = None


@dataclass
class FlagRule:
    """Turns an answered questionnaire question into an Alert or FYI."""

    kind: str  # "alert" | "fyi"
    scope: list[Scope]
    summary: str
    severity: Severity | None = None
    mitigation: str | None = None


@dataclass
class QuestionnaireAnswer:
    question_id: str
    category: str
    question_text: str
    answer: str = ""  # empty means unanswered
    flag: FlagRule | None = None


@dataclass
class KeyFacts:
    facts: dict[str, str]


@dataclass
class ColumnSummary:
    name: str
    inferred_type: str
    missing_fraction: float


@dataclass
class ComputedStats:
    """Quantitative overview module embedding a dataset profile summary."""

    row_count: int
    column_count: int
    columns: list[ColumnSummary] = field(default_factory=list)


@dataclass
class Badges:
    use_case_count: int
    alert_count: int
    fyi_count: int


@dataclass
class FreeText:
    title: str
    text: str


OverviewModule = KeyFacts | ComputedStats | Badges | FreeText

_MODULE_KINDS = {
    KeyFacts: "key_facts",
    ComputedStats: "computed_stats",
    Badges: "badges",
    FreeText: "free_text",
}


@dataclass
class Label:
    """A complete label document."""

    label_id: str
    dataset_name: str
    publisher: str
    date_produced: date
    schema_version: str = SCHEMA_VERSION
    source_url: str | None = None
    license: str | None = None
    fingerprint: StructuralFingerprint | None = None
    overview_modules: list[OverviewModule] = field(default_factory=list)
    use_cases: list[UseCase] = field(default_factory=list)
    alerts: list[Alert] = field(default_factory=list)
    fyis: list[Fyi] = field(default_factory=list)
    questionnaire: list[QuestionnaireAnswer] = field(default_factory=list)


# ---------------------------------------------------------------------------
# Parsing


class ParseError(ValueError):
    """A document could not be read as a structurally well-typed label."""

    code = "PARSE_ERROR"

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path or '<document>'}: {message}")


class MalformedSyntax(ParseError):
    code = "MALFORMED_SYNTAX"


class MissingField(ParseError):
    code = "MISSING_FIELD"


class UnknownField(ParseError):
    code = "UNKNOWN_FIELD"


class BadEnumValue(ParseError):
    code = "BAD_ENUM_VALUE"

    def __init__(self, path: str, got: object, allowed: tuple[str, ...]):
        self.got = got
        super().__init__(path, f"got {got!r}, expected one of {', '.join(allowed)}")


class BadDate(ParseError):
    code = "BAD_DATE"


class WrongType(ParseError):
    # Not in the narrow error vocabulary of the format contract, but a
    # required catch-all for type mismatches (e.g. a numeric label_id).
    code = "WRONG_TYPE"


def _join(path: str, key: str | int) -> str:
    return f"{path}/{key}"


def _obj(node: object, path: str) -> dict:
    if not isinstance(node, dict):
        raise WrongType(path, "expected an object")
    return node


def _check_keys(obj: dict, known: frozenset[str], path: str) -> None:
    for key in sorted(obj):
        if key not in known:
            raise UnknownField(_join(path, key), f"unknown field {key!r}")


def _req(obj: dict, key: str, path: str) -> object:
    if key not in obj:
        raise MissingField(_join(path, key), "required field missing")
    return obj[key]


def _str(value: object, path: str) -> str:
    if not isinstance(value, str):
        raise WrongType(path, "expected a string")
    return value


def _req_str(obj: dict, key: str, path: str) -> str:
    return _str(_req(obj, key, path), _join(path, key))


def _opt_str(obj: dict, key: str, path: str) -> str | None:
    if key not in obj:
        return None
    return _str(obj[key], _join(path, key))


def _req_list(obj: dict, key: str, path: str) -> list:
    value = _req(obj, key, path)
    if not isinstance(value, list):
        raise WrongType(_join(path, key), "expected an array")
    return value


def _req_int(obj: dict, key: str, path: str) -> int:
    value = _req(obj, key, path)
    if isinstance(value, bool) or not isinstance(value, int):
        raise WrongType(_join(path, key), "expected an integer")
    return value


def _req_number(obj: dict, key: str, path: str) -> float:
    value = _req(obj, key, path)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise WrongType(_join(path, key), "expected a number")
    return float(value)


def _req_date(obj: dict, key: str, path: str) -> date:
    value = _req(obj, key, path)
    full = _join(path, key)
    if not isinstance(value, str) or not _DATE_RE.match(value):
        raise BadDate(full, f"expected an ISO-8601 calendar date, got {value!r}")
    try:
        return date.fromisoformat(value)
    except ValueError:
        raise BadDate(full, f"not a valid calendar date: {value!r}") from None


def _parse_severity(value: object, path: str) -> Severity:
    if not isinstance(value, str) or value not in _SEVERITY_BY_WIRE:
        raise BadEnumValue(path, value, tuple(_SEVERITY_BY_WIRE))
    return _SEVERITY_BY_WIRE[value]


def _parse_scope(node: object, path: str) -> Scope:
    obj = _obj(node, path)
    kind = _req_str(obj, "kind", path)
    if kind == "global":
        _check_keys(obj, frozenset({"kind"}), path)
        return Scope.global_scope()
    if kind == "use_case":
        _check_keys(obj, frozenset({"kind", "use_case"}), path)
        return Scope.for_use_case(_req_str(obj, "use_case", path))
    if kind == "pair":
        _check_keys(obj, frozenset({"kind", "use_case", "prediction"}), path)
        return Scope.for_pair(_req_str(obj, "use_case", path), _req_str(obj, "prediction", path))
    raise BadEnumValue(_join(path, "kind"), kind, SCOPE_KINDS)


def _parse_scope_list(obj: dict, path: str) -> list[Scope]:
    raw = _req_list(obj, "scope", path)
    return [_parse_scope(node, _join(_join(path, "scope"), i)) for i, node in enumerate(raw)]


def _parse_prediction(node: object, path: str) -> Prediction:
    obj = _obj(node, path)
    _check_keys(obj, frozenset({"id", "title", "method_description"}), path)
    return Prediction(
        id=_req_str(obj, "id", path),
        title=_req_str(obj, "title", path),
        method_description=_req_str(obj, "method_description", path),
    )


def _parse_use_case(node: object, path: str) -> UseCase:
    obj = _obj(node, path)
    _check_keys(obj, frozenset({"id", "title", "description", "predictions"}), path)
    raw = _req_list(obj, "predictions", path)
    preds_path = _join(path, "predictions")
    return UseCase(
        id=_req_str(obj, "id", path),
        title=_req_str(obj, "title", path),
        description=_req_str(obj, "description", path),
        predictions=[_parse_prediction(p, _join(preds_path, i)) for i, p in enumerate(raw)],
    )


def _parse_alert(node: object, path: str) -> Alert:
    obj = _obj(node, path)
    _check_keys(
        obj,
        frozenset({"id", "title", "description", "severity", "mitigation", "scope",
                   "derived_from_question"}),
        path,
    )
    return Alert(
        id=_req_str(obj, "id", path),
        title=_req_str(obj, "title", path),
        description=_req_str(obj, "description", path),
        severity=_parse_severity(_req(obj, "severity", path), _join(path, "severity")),
        mitigation=_opt_str(obj, "mitigation", path),
        scope=_parse_scope_list(obj, path),
        derived_from_question=_opt_str(obj, "derived_from_question", path),
    )


def _parse_fyi(node: object, path: str) -> Fyi:
    obj = _obj(node, path)
    # No severity key here: an FYI is green by definition.
    _check_keys(obj, frozenset({"id", "title", "description", "scope", "derived_from_question"}), path)
    return Fyi(
        id=_req_str(obj, "id", path),
        title=_req_str(obj, "title", path),
        description=_req_str(obj, "description", path),
        scope=_parse_scope_list(obj, path),
        derived_from_question=_opt_str(obj, "derived_from_question", path),
    )


def _parse_flag_rule(node: object, path: str) -> FlagRule:
    obj = _obj(node, path)
    _check_keys(obj, frozenset({"kind", "severity", "mitigation", "scope", "summary"}), path)
    kind = _req_str(obj, "kind", path)
    if kind not in ("alert", "fyi"):
        raise BadEnumValue(_join(path, "kind"), kind, ("alert", "fyi"))
    severity = None
    if "severity" in obj:
        # Accepted for either kind here; a severity on an fyi rule is a
        # semantic violation reported by validate_label, not a parse error.
        severity = _parse_severity(obj["severity"], _join(path, "severity"))
    return FlagRule(
        kind=kind,
        scope=_parse_scope_list(obj, path),
        summary=_req_str(obj, "summary", path),
        severity=severity,
        mitigation=_opt_str(obj, "mitigation", path),
    )


def _parse_question(node: object, path: str) -> QuestionnaireAnswer:
    obj = _obj(node, path)
    _check_keys(obj, frozenset({"question_id", "category", "question_text", "answer", "flag"}), path)
    category = _req_str(obj, "category", path)
    if category not in CATEGORIES:
        raise BadEnumValue(_join(path, "category"), category, CATEGORIES)
    flag = None
    if "flag" in obj:
        flag = _parse_flag_rule(obj["flag"], _join(path, "flag"))
    return QuestionnaireAnswer(
        question_id=_req_str(obj, "question_id", path),
        category=category,
        question_text=_req_str(obj, "question_text", path),
        answer=_req_str(obj, "answer", path),
        flag=flag,
    )


def _parse_module(node: object, path: str) -> OverviewModule:
    obj = _obj(node, path)
    kind = _req_str(obj, "kind", path)
    if kind == "key_facts":
        _check_keys(obj, frozenset({"kind", "facts"}), path)
        raw = _req(obj, "facts", path)
        facts_path = _join(path, "facts")
        facts_obj = _obj(raw, facts_path)
        return KeyFacts(facts={k: _str(v, _join(facts_path, k)) for k, v in facts_obj.items()})
    if kind == "computed_stats":
        _check_keys(obj, frozenset({"kind", "row_count", "column_count", "columns"}), path)
        columns = []
        cols_path = _join(path, "columns")
        for i, col in enumerate(_req_list(obj, "columns", path)):
            col_path = _join(cols_path, i)
            col_obj = _obj(col, col_path)
            _check_keys(col_obj, frozenset({"name", "inferred_type", "missing_fraction"}), col_path)
            inferred = _req_str(col_obj, "inferred_type", col_path)
            if inferred not in INFERRED_TYPES:
                raise BadEnumValue(_join(col_path, "inferred_type"), inferred, INFERRED_TYPES)
            columns.append(
                ColumnSummary(
                    name=_req_str(col_obj, "name", col_path),
                    inferred_type=inferred,
                    missing_fraction=_req_number(col_obj, "missing_fraction", col_path),
                )
            )
        return ComputedStats(
            row_count=_req_int(obj, "row_count", path),
            column_count=_req_int(obj, "column_count", path),
            columns=columns,
        )
    if kind == "badges":
        _check_keys(obj, frozenset({"kind", "use_case_count", "alert_count", "fyi_count"}), path)
        return Badges(
            use_case_count=_req_int(obj, "use_case_count", path),
            alert_count=_req_int(obj, "alert_count", path),
            fyi_count=_req_int(obj, "fyi_count", path),
        )
    if kind == "free_text":
        _check_keys(obj, frozenset({"kind", "title", "text"}), path)
        return FreeText(title=_req_str(obj, "title", path), text=_req_str(obj, "text", path))
    raise BadEnumValue(_join(path, "kind"), kind, tuple(_MODULE_KINDS.values()))


def _parse_fingerprint(node: object, path: str) -> StructuralFingerprint:
    obj = _obj(node, path)
    _check_keys(obj, frozenset({"column_names", "digest"}), path)
    names_path = _join(path, "column_names")
    raw = _req(obj, "column_names", path)
    if not isinstance(raw, list):
        raise WrongType(names_path, "expected an array")
    names = tuple(_str(n, _join(names_path, i)) for i, n in enumerate(raw))
    return StructuralFingerprint(column_names=names, digest=_req_str(obj, "digest", path))


_LABEL_KEYS = frozenset(
    {"label_id", "schema_version", "dataset_name", "publisher", "source_url", "license",
     "date_produced", "fingerprint", "overview_modules", "use_cases", "alerts", "fyis",
     "questionnaire"}
)


def parse_label(data: bytes | str) -> Label:
    """Parse a label document into a structurally well-typed :class:`Label`.

    Rejects unknown fields at every level. Semantic rules are not checked
    here; run :func:`validate_label` on the result.
    """
    try:
        tree = canonical.loads(data)
    except ValueError as exc:
        raise MalformedSyntax("", str(exc)) from None
    obj = _obj(tree, "")
    _check_keys(obj, _LABEL_KEYS, "")

    schema_version = _req_str(obj, "schema_version", "")
    if schema_version != SCHEMA_VERSION:
        raise BadEnumValue("/schema_version", schema_version, (SCHEMA_VERSION,))

    fingerprint = None
    if "fingerprint" in obj:
        fingerprint = _parse_fingerprint(obj["fingerprint"], "/fingerprint")

    def items(key: str, parser) -> list:
        return [parser(node, _join(f"/{key}", i)) for i, node in enumerate(_req_list(obj, key, ""))]

    return Label(
        label_id=_req_str(obj, "label_id", ""),
        schema_version=schema_version,
        dataset_name=_req_str(obj, "dataset_name", ""),
        publisher=_req_str(obj, "publisher", ""),
        source_url=_opt_str(obj, "source_url", ""),
        license=_opt_str(obj, "license", ""),
        date_produced=_req_date(obj, "date_produced", ""),
        fingerprint=fingerprint,
        overview_modules=items("overview_modules", _parse_module),
        use_cases=items("use_cases", _parse_use_case),
        alerts=items("alerts", _parse_alert),
        fyis=items("fyis", _parse_fyi),
        questionnaire=items("questionnaire", _parse_question),
    )


# ---------------------------------------------------------------------------
# Validation


@dataclass(frozen=True)
class Violation:
    code: str
    path: str
    message: str
    level: str = "error"  # "error" | "warning"

    def to_tree(self) -> dict:
        return {"code": self.code, "path": self.path, "message": self.message, "level": self.level}


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not any(v.level == "error" for v in self.violations)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def codes(self) -> list[str]:
        return [v.code for v in self.violations]

    def to_tree(self) -> dict:
        return {"verdict": self.verdict, "violations": [v.to_tree() for v in self.violations]}


class _Recorder:
    """Collects violations with a document-order node ordinal for stable sorting."""

    def __init__(self) -> None:
        self._found: list[tuple[int, Violation]] = []
        self._ordinal = 0

    def node(self) -> int:
        self._ordinal += 1
        return self._ordinal

    def error(self, ordinal: int, code: str, path: str, message: str) -> None:
        self._found.append((ordinal, Violation(code, path, message, "error")))

    def warning(self, ordinal: int, code: str, path: str, message: str) -> None:
        self._found.append((ordinal, Violation(code, path, message, "warning")))

    def report(self) -> ValidationReport:
        ordered = sorted(self._found, key=lambda item: (item[0], item[1].code, item[1].path))
        return ValidationReport(violations=[v for _, v in ordered])


def _is_blank(text: str | None) -> bool:
    return text is None or not text.strip()


def _check_scopes(
    rec: _Recorder,
    ordinal: int,
    scope: list[Scope],
    path: str,
    predictions_by_use_case: dict[str, set[str]],
) -> None:
    if not scope:
        rec.error(ordinal, "EMPTY_SCOPE", _join(path, "scope"),
                  "scope is empty; an unscoped item must carry a global scope entry")
        return
    for i, entry in enumerate(scope):
        entry_path = _join(_join(path, "scope"), i)
        if entry.kind == "global":
            continue
        if entry.use_case not in predictions_by_use_case:
            rec.error(ordinal, "DANGLING_USE_CASE", entry_path,
                      f"scope references unknown use case {entry.use_case!r}")
            continue
        if entry.kind == "pair" and entry.prediction not in predictions_by_use_case[entry.use_case]:
            rec.error(ordinal, "DANGLING_PREDICTION", entry_path,
                      f"scope references prediction {entry.prediction!r} "
                      f"not belonging to use case {entry.use_case!r}")


def _check_mitigation(
    rec: _Recorder, ordinal: int, severity: Severity, mitigation: str | None, path: str
) -> None:
    if severity is Severity.NO_KNOWN_MITIGATION:
        if not _is_blank(mitigation):
            rec.error(ordinal, "MITIGATION_FORBIDDEN", _join(path, "mitigation"),
                      "red severity means no mitigation is known; mitigation text must be absent")
    elif _is_blank(mitigation):
        rec.error(ordinal, "MITIGATION_REQUIRED", _join(path, "mitigation"),
                  f"severity {severity.value!r} requires nonempty mitigation text")


def validate_label(label: Label) -> ValidationReport:
    """Check every semantic invariant; violations come back as data, in document order."""
    rec = _Recorder()

    root = rec.node()
    if not label.label_id:
        rec.error(root, "EMPTY_LABEL_ID", "/label_id", "label_id must be nonempty")
    if label.schema_version != SCHEMA_VERSION:
        rec.error(root, "BAD_SCHEMA_VERSION", "/schema_version",
                  f"expected {SCHEMA_VERSION!r}, got {label.schema_version!r}")

    if label.fingerprint is not None:
        ordinal = rec.node()
        if not label.fingerprint.column_names:
            rec.error(ordinal, "FINGERPRINT_EMPTY", "/fingerprint/column_names",
                      "fingerprint carries no column names")
        else:
            expected = compute_fingerprint(label.fingerprint.column_names).digest
            if label.fingerprint.digest != expected:
                rec.error(ordinal, "FINGERPRINT_MISMATCH", "/fingerprint/digest",
                          "digest does not match the recorded column names")

    # Id registries and the use-case/prediction map are needed before
    # walking alerts, fyis, and questionnaire flags.
    predictions_by_use_case: dict[str, set[str]] = {}
    for uc in label.use_cases:
        predictions_by_use_case.setdefault(uc.id, {p.id for p in uc.predictions})

    alert_count = len(label.alerts)
    fyi_count = len(label.fyis)
    use_case_count = len(label.use_cases)

    for i, module in enumerate(label.overview_modules):
        ordinal = rec.node()
        if isinstance(module, Badges):
            path = _join("/overview_modules", i)
            actual = {"use_case_count": use_case_count, "alert_count": alert_count,
                      "fyi_count": fyi_count}
            for key, want in actual.items():
                have = getattr(module, key)
                if have != want:
                    rec.warning(ordinal, "BADGE_COUNT_MISMATCH", _join(path, key),
                                f"badge says {have}, label contains {want}")

    seen_use_case_ids: dict[str, str] = {}
    seen_prediction_ids: dict[str, str] = {}
    seen_titles: dict[str, str] = {}
    for i, uc in enumerate(label.use_cases):
        ordinal = rec.node()
        path = _join("/use_cases", i)
        if uc.id in seen_use_case_ids:
            rec.error(ordinal, "DUPLICATE_ID", _join(path, "id"),
                      f"use case id {uc.id!r} already used at {seen_use_case_ids[uc.id]}")
        else:
            seen_use_case_ids[uc.id] = path
        normalized = normalize_title(uc.title)
        if normalized in seen_titles:
            rec.error(ordinal, "DUPLICATE_USE_CASE_TITLE", _join(path, "title"),
                      f"title {uc.title!r} collides with {seen_titles[normalized]} "
                      "after normalization")
        else:
            seen_titles[normalized] = path
        if not uc.predictions:
            rec.error(ordinal, "EMPTY_PREDICTIONS", _join(path, "predictions"),
                      "a use case needs at least one prediction")
        for j, pred in enumerate(uc.predictions):
            p_ordinal = rec.node()
            p_path = _join(_join(path, "predictions"), j)
            if pred.id in seen_prediction_ids:
                rec.error(p_ordinal, "DUPLICATE_ID", _join(p_path, "id"),
                          f"prediction id {pred.id!r} already used at "
                          f"{seen_prediction_ids[pred.id]}")
            else:
                seen_prediction_ids[pred.id] = p_path
            if not pred.title:
                rec.error(p_ordinal, "EMPTY_TITLE", _join(p_path, "title"),
                          "prediction title must be nonempty")

    question_ids = {q.question_id for q in label.questionnaire}

    def check_question_link(ordinal: int, path: str, question_id: str | None) -> None:
        if question_id is not None and question_id not in question_ids:
            rec.warning(ordinal, "DANGLING_QUESTION_REF", _join(path, "derived_from_question"),
                        f"no questionnaire entry with id {question_id!r}")

    seen_alert_ids: dict[str, str] = {}
    for i, alert in enumerate(label.alerts):
        ordinal = rec.node()
        path = _join("/alerts", i)
        if alert.id in seen_alert_ids:
            rec.error(ordinal, "DUPLICATE_ID", _join(path, "id"),
                      f"alert id {alert.id!r} already used at {seen_alert_ids[alert.id]}")
        else:
            seen_alert_ids[alert.id] = path
        _check_mitigation(rec, ordinal, alert.severity, alert.mitigation, path)
        _check_scopes(rec, ordinal, alert.scope, path, predictions_by_use_case)
        check_question_link(ordinal, path, alert.derived_from_question)

    seen_fyi_ids: dict[str, str] = {}
    for i, fyi in enumerate(label.fyis):
        ordinal = rec.node()
        path = _join("/fyis", i)
        if fyi.id in seen_fyi_ids:
            rec.error(ordinal, "DUPLICATE_ID", _join(path, "id"),
                      f"fyi id {fyi.id!r} already used at {seen_fyi_ids[fyi.id]}")
        else:
            seen_fyi_ids[fyi.id] = path
        _check_scopes(rec, ordinal, fyi.scope, path, predictions_by_use_case)
        check_question_link(ordinal, path, fyi.derived_from_question)

    seen_question_ids: dict[str, str] = {}
    for i, question in enumerate(label.questionnaire):
        ordinal = rec.node()
        path = _join("/questionnaire", i)
        if question.question_id in seen_question_ids:
            rec.error(ordinal, "DUPLICATE_ID", _join(path, "question_id"),
                      f"question id {question.question_id!r} already used at "
                      f"{seen_question_ids[question.question_id]}")
        else:
            seen_question_ids[question.question_id] = path
        if question.category not in CATEGORIES:
            rec.error(ordinal, "BAD_CATEGORY", _join(path, "category"),
                      f"category {question.category!r} is not one of {', '.join(CATEGORIES)}")
        rule = question.flag
        if rule is None:
            continue
        flag_path = _join(path, "flag")
        if rule.kind == "fyi":
            if rule.severity is not None:
                rec.error(ordinal, "FYI_HAS_SEVERITY", _join(flag_path, "severity"),
                          "an fyi rule is green by definition and carries no severity")
            if not _is_blank(rule.mitigation):
                rec.error(ordinal, "FYI_HAS_MITIGATION", _join(flag_path, "mitigation"),
                          "an fyi rule never requires mitigation")
        else:
            if rule.severity is None:
                rec.error(ordinal, "FLAG_SEVERITY_REQUIRED", _join(flag_path, "severity"),
                          "an alert rule needs a severity")
            else:
                _check_mitigation(rec, ordinal, rule.severity, rule.mitigation, flag_path)
        _check_scopes(rec, ordinal, rule.scope, flag_path, predictions_by_use_case)

    return rec.report()


# ---------------------------------------------------------------------------
# Serialization


class LabelValidationError(ValueError):
    """Raised when an operation requires a label that passes validation."""

    def __init__(self, report: ValidationReport):
        self.report = report
        codes = ", ".join(sorted({v.code for v in report.violations if v.level == "error"}))
        super().__init__(f"label fails validation: {codes}")


def alert_to_tree(alert: Alert) -> dict:
    tree: dict = {
        "id": alert.id,
        "title": alert.title,
        "description": alert.description,
        "severity": alert.severity.value,
        "scope": [s.to_tree() for s in alert.scope],
    }
    if alert.mitigation is not None:
        tree["mitigation"] = alert.mitigation
    if alert.derived_from_question is not None:
        tree["derived_from_question"] = alert.derived_from_question
    return tree


def fyi_to_tree(fyi: Fyi) -> dict:
    tree: dict = {
        "id": fyi.id,
        "title": fyi.title,
        "description": fyi.description,
        "scope": [s.to_tree() for s in fyi.scope],
    }
    if fyi.derived_from_question is not None:
        tree["derived_from_question"] = fyi.derived_from_question
    return tree


def use_case_to_tree(uc: UseCase) -> dict:
    return {
        "id": uc.id,
        "title": uc.title,
        "description": uc.description,
        "predictions": [
            {"id": p.id, "title": p.title, "method_description": p.method_description}
            for p in uc.predictions
        ],
    }


def _flag_rule_to_tree(rule: FlagRule) -> dict:
    tree: dict = {
        "kind": rule.kind,
        "scope": [s.to_tree() for s in rule.scope],
        "summary": rule.summary,
    }
    if rule.severity is not None:
        tree["severity"] = rule.severity.value
    if rule.mitigation is not None:
        tree["mitigation"] = rule.mitigation
    return tree


def _question_to_tree(question: QuestionnaireAnswer) -> dict:
    tree: dict = {
        "question_id": question.question_id,
        "category": question.category,
        "question_text": question.question_text,
        "answer": question.answer,
    }
    if question.flag is not None:
        tree["flag"] = _flag_rule_to_tree(question.flag)
    return tree


def _module_to_tree(module: OverviewModule) -> dict:
    if isinstance(module, KeyFacts):
        return {"kind": "key_facts", "facts": dict(module.facts)}
    if isinstance(module, ComputedStats):
        return {
            "kind": "computed_stats",
            "row_count": module.row_count,
            "column_count": module.column_count,
            "columns": [
                {"name": c.name, "inferred_type": c.inferred_type,
                 "missing_fraction": c.missing_fraction}
                for c in module.columns
            ],
        }
    if isinstance(module, Badges):
        return {
            "kind": "badges",
            "use_case_count": module.use_case_count,
            "alert_count": module.alert_count,
            "fyi_count": module.fyi_count,
        }
    if isinstance(module, FreeText):
        return {"kind": "free_text", "title": module.title, "text": module.text}
    raise TypeError(f"not an overview module: {module!r}")


def label_to_tree(label: Label) -> dict:
    tree: dict = {
        "label_id": label.label_id,
        "schema_version": label.schema_version,
        "dataset_name": label.dataset_name,
        "publisher": label.publisher,
        "date_produced": label.date_produced.isoformat(),
        "overview_modules": [_module_to_tree(m) for m in label.overview_modules],
        "use_cases": [use_case_to_tree(uc) for uc in label.use_cases],
        "alerts": [alert_to_tree(a) for a in label.alerts],
        "fyis": [fyi_to_tree(f) for f in label.fyis],
        "questionnaire": [_question_to_tree(q) for q in label.questionnaire],
    }
    if label.source_url is not None:
        tree["source_url"] = label.source_url
    if label.license is not None:
        tree["license"] = label.license
    if label.fingerprint is not None:
        tree["fingerprint"] = label.fingerprint.to_tree()
    return tree


def serialize_label(label: Label) -> bytes:
    """Canonical bytes for a label; refuses labels with validation errors."""
    report = validate_label(label)
    if not report.passed:
        raise LabelValidationError(report)
    return canonical.dumps(label_to_tree(label))
