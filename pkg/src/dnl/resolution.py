"""Scoped alert resolution: which Alerts and FYIs surface for a chosen context.

A practitioner picks a use case, then a prediction; everything scoped to
that pair, to the whole use case, or globally is surfaced, most severe
first. Flagged questionnaire answers materialize into additional items so
that questionnaire content and authored content land in one view.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import canonical
from .model import (
    Alert,
    Fyi,
    Label,
    Prediction,
    Severity,
    UseCase,
    alert_to_tree,
    fyi_to_tree,
    use_case_to_tree,
)

MATERIALIZED_ID_PREFIX = "q:"


class ResolveError(ValueError):
    pass


class UnknownUseCase(ResolveError):
    def __init__(self, use_case_id: str):
        self.use_case_id = use_case_id
        super().__init__(f"unknown use case: {use_case_id!r}")


class UnknownPrediction(ResolveError):
    def __init__(self, prediction_id: str):
        self.prediction_id = prediction_id
        super().__init__(f"unknown prediction: {prediction_id!r}")


class PredictionNotInUseCase(ResolveError):
    def __init__(self, use_case_id: str, prediction_id: str):
        self.use_case_id = use_case_id
        self.prediction_id = prediction_id
        super().__init__(
            f"prediction {prediction_id!r} does not belong to use case {use_case_id!r}"
        )


@dataclass
class ResolvedView:
    """Alerts and FYIs relevant to one (use case, prediction) pair, display-ordered."""

    use_case_id: str
    prediction_id: str
    alerts: list[Alert] = field(default_factory=list)
    fyis: list[Fyi] = field(default_factory=list)
    severity_summary: dict[str, int] = field(default_factory=dict)

    def to_tree(self) -> dict:
        return {
            "use_case_id": self.use_case_id,
            "prediction_id": self.prediction_id,
            "alerts": [alert_to_tree(a) for a in self.alerts],
            "fyis": [fyi_to_tree(f) for f in self.fyis],
            "severity_summary": dict(self.severity_summary),
        }

    def to_bytes(self) -> bytes:
        return canonical.dumps(self.to_tree())


def list_use_cases(label: Label) -> list[tuple[UseCase, list[Prediction]]]:
    """Use cases paired with their predictions, in declaration order."""
    return [(uc, list(uc.predictions)) for uc in label.use_cases]


def use_cases_to_bytes(label: Label) -> bytes:
    return canonical.dumps([use_case_to_tree(uc) for uc, _ in list_use_cases(label)])


def materialize_questionnaire_flags(label: Label) -> tuple[list[Alert], list[Fyi]]:
    """Turn answered, flagged questionnaire entries into Alerts and FYIs.

    Materialized ids are the question id behind a fixed prefix; unanswered
    questions produce nothing even when a rule is present.
    """
    alerts: list[Alert] = []
    fyis: list[Fyi] = []
    for question in label.questionnaire:
        rule = question.flag
        if rule is None or not question.answer.strip():
            continue
        item_id = MATERIALIZED_ID_PREFIX + question.question_id
        if rule.kind == "alert":
            alerts.append(
                Alert(
                    id=item_id,
                    title=rule.summary,
                    description=question.answer,
                    severity=rule.severity,
                    mitigation=rule.mitigation,
                    scope=list(rule.scope),
                    derived_from_question=question.question_id,
                )
            )
        else:
            fyis.append(
                Fyi(
                    id=item_id,
                    title=rule.summary,
                    description=question.answer,
                    scope=list(rule.scope),
                    derived_from_question=question.question_id,
                )
            )
    return alerts, fyis


def resolve(label: Label, use_case_id: str, prediction_id: str) -> ResolvedView:
    """Everything relevant to the selected pair, ordered red, orange, yellow.

    Ties break on declaration order, with materialized items after authored
    items of equal severity. When an author hand-refined a question-derived
    item (matching derived_from_question), the authored one wins and the
    materialized twin is suppressed.
    """
    use_case = next((uc for uc in label.use_cases if uc.id == use_case_id), None)
    if use_case is None:
        raise UnknownUseCase(use_case_id)
    all_prediction_ids = {p.id for uc in label.use_cases for p in uc.predictions}
    if prediction_id not in all_prediction_ids:
        raise UnknownPrediction(prediction_id)
    if prediction_id not in {p.id for p in use_case.predictions}:
        raise PredictionNotInUseCase(use_case_id, prediction_id)

    materialized_alerts, materialized_fyis = materialize_questionnaire_flags(label)
    refined_questions = {
        item.derived_from_question
        for item in (*label.alerts, *label.fyis)
        if item.derived_from_question is not None
    }

    def included(items, seen_ids: set[str], materialized: bool):
        out = []
        for index, item in enumerate(items):
            if not any(s.covers(use_case_id, prediction_id) for s in item.scope):
                continue
            if materialized and item.derived_from_question in refined_questions:
                continue  # authored refinement wins
            if item.id in seen_ids:
                continue
            seen_ids.add(item.id)
            out.append((materialized, index, item))
        return out

    seen_alert_ids: set[str] = set()
    alert_pool = included(label.alerts, seen_alert_ids, materialized=False)
    alert_pool += included(materialized_alerts, seen_alert_ids, materialized=True)
    alert_pool.sort(key=lambda entry: (-entry[2].severity.rank, entry[0], entry[1]))

    seen_fyi_ids: set[str] = set()
    fyi_pool = included(label.fyis, seen_fyi_ids, materialized=False)
    fyi_pool += included(materialized_fyis, seen_fyi_ids, materialized=True)
    # FYIs carry no severity; declaration order only.

    summary = {severity.value: 0 for severity in Severity}
    alerts = [item for _, _, item in alert_pool]
    for alert in alerts:
        summary[alert.severity.value] += 1

    return ResolvedView(
        use_case_id=use_case_id,
        prediction_id=prediction_id,
        alerts=alerts,
        fyis=[item for _, _, item in fyi_pool],
        severity_summary=summary,
    )


def resolve_all(label: Label) -> list[ResolvedView]:
    """Resolved views for every (use case, prediction) pair, in declaration order."""
    return [
        resolve(label, uc.id, pred.id)
        for uc, predictions in list_use_cases(label)
        for pred in predictions
    ]
