"""Independent brute-force oracles the implementation is checked against.

These re-derive expected results from first principles (naive loops over
in-memory data, severity buckets built by hand, hashlib called directly)
and deliberately avoid the code paths under test.
"""

from __future__ import annotations

import hashlib
import re
from datetime import date

from dnl.model import Label, Severity

MISSING = {"", "na", "n/a", "null", "nan"}

_INT = re.compile(r"^[+-]?[0-9]+$")
_FLT = re.compile(r"^[+-]?([0-9]+\.?[0-9]*|\.[0-9]+)([eE][+-]?[0-9]+)?$")
_DAT = re.compile(r"^[0-9]{4}-[0-9]{2}-[0-9]{2}$")


def oracle_fingerprint_digest(names: list[str]) -> str:
    blob = b"".join(
        str(len(n.encode("utf-8"))).encode() + b":" + n.encode("utf-8") + b"\n" for n in names
    )
    return hashlib.sha256(blob).hexdigest()


def _is_date(value: str) -> bool:
    if not _DAT.match(value):
        return False
    try:
        date.fromisoformat(value)
        return True
    except ValueError:
        return False


def oracle_column_stats(cells: list[str], row_count: int) -> dict:
    """Naive per-column statistics over a fully materialized column."""
    present = [c for c in cells if c.casefold() not in MISSING]
    missing = row_count - len(present)
    if not present:
        kind = "string"
    elif all(_INT.match(c) for c in present):
        kind = "integer"
    elif all(_FLT.match(c) for c in present):
        kind = "float"
    elif all(c.casefold() in ("true", "false") for c in present):
        kind = "boolean"
    elif all(_is_date(c) for c in present):
        kind = "date"
    else:
        kind = "string"
    low = high = None
    if present and kind == "integer":
        typed = [int(c) for c in present]
        low, high = min(typed), max(typed)
    elif present and kind == "float":
        typed = [float(c) for c in present]
        low, high = min(typed), max(typed)
    elif present and kind == "date":
        typed = [date.fromisoformat(c) for c in present]
        low, high = min(typed), max(typed)
    return {
        "missing_count": missing,
        "missing_fraction": missing / row_count if row_count else 0.0,
        "distinct_count": len(set(present)),
        "inferred_type": kind,
        "min": low,
        "max": high,
    }


def oracle_profile(header: list[str], rows: list[list[str]]) -> dict:
    """Profile an in-memory table without touching any CSV machinery."""
    columns = []
    for i, name in enumerate(header):
        stats = oracle_column_stats([row[i] for row in rows], len(rows))
        stats["name"] = name
        columns.append(stats)
    return {
        "row_count": len(rows),
        "columns": columns,
        "digest": oracle_fingerprint_digest(header),
    }


# ---------------------------------------------------------------------------
# Resolution


def _answered(question) -> bool:
    return bool(question.answer.strip())


def oracle_materialized(label: Label) -> tuple[list, list]:
    alerts = []
    fyis = []
    for q in label.questionnaire:
        if q.flag is None or not _answered(q):
            continue
        entry = {
            "id": "q:" + q.question_id,
            "title": q.flag.summary,
            "description": q.answer,
            "scope": list(q.flag.scope),
            "derived_from_question": q.question_id,
        }
        if q.flag.kind == "alert":
            entry["severity"] = q.flag.severity
            entry["mitigation"] = q.flag.mitigation
            alerts.append(entry)
        else:
            fyis.append(entry)
    return alerts, fyis


def _covers(scope, uc: str, p: str) -> bool:
    for entry in scope:
        if entry.kind == "global":
            return True
        if entry.kind == "use_case" and entry.use_case == uc:
            return True
        if entry.kind == "pair" and entry.use_case == uc and entry.prediction == p:
            return True
    return False


def oracle_resolve(label: Label, uc: str, p: str) -> dict:
    """Expected resolution as plain data: ordered alert/fyi ids plus counts.

    Pools are selected in declaration order (authored wins every id or
    question-link collision, label-wide), then laid out with explicit
    severity buckets instead of a sort call.
    """
    refined = {
        item.derived_from_question
        for item in (*label.alerts, *label.fyis)
        if item.derived_from_question is not None
    }
    mat_alerts, mat_fyis = oracle_materialized(label)

    authored: list[tuple[str, Severity]] = []
    seen: set[str] = set()
    for alert in label.alerts:
        if _covers(alert.scope, uc, p) and alert.id not in seen:
            seen.add(alert.id)
            authored.append((alert.id, alert.severity))
    materialized: list[tuple[str, Severity]] = []
    for entry in mat_alerts:
        if (_covers(entry["scope"], uc, p) and entry["derived_from_question"] not in refined
                and entry["id"] not in seen):
            seen.add(entry["id"])
            materialized.append((entry["id"], entry["severity"]))

    alerts: list[tuple[str, Severity]] = []
    counts = {s.value: 0 for s in Severity}
    for severity in (Severity.NO_KNOWN_MITIGATION, Severity.PARTIAL_MITIGATION,
                     Severity.MITIGATION_KNOWN):
        for pool in (authored, materialized):
            for item_id, item_severity in pool:
                if item_severity is severity:
                    alerts.append((item_id, severity))
                    counts[severity.value] += 1

    fyi_ids: list[str] = []
    seen_fyis: set[str] = set()
    for fyi in label.fyis:
        if _covers(fyi.scope, uc, p) and fyi.id not in seen_fyis:
            seen_fyis.add(fyi.id)
            fyi_ids.append(fyi.id)
    for entry in mat_fyis:
        if (_covers(entry["scope"], uc, p) and entry["derived_from_question"] not in refined
                and entry["id"] not in seen_fyis):
            seen_fyis.add(entry["id"])
            fyi_ids.append(entry["id"])

    return {
        "alert_ids": [item_id for item_id, _ in alerts],
        "alerts": alerts,
        "fyi_ids": fyi_ids,
        "severity_summary": counts,
    }


def oracle_use_case_union(label: Label, use_case_id: str) -> dict:
    """Expected per-use-case comparison counts: union over predictions by id."""
    uc = next(u for u in label.use_cases if u.id == use_case_id)
    severity_by_id: dict[str, Severity] = {}
    fyi_ids: set[str] = set()
    for pred in uc.predictions:
        view = oracle_resolve(label, use_case_id, pred.id)
        fyi_ids.update(view["fyi_ids"])
        for alert_id, severity in view["alerts"]:
            severity_by_id.setdefault(alert_id, severity)
    counts = {s.value: 0 for s in Severity}
    for severity in severity_by_id.values():
        counts[severity.value] += 1
    return {"severity_counts": counts, "fyi_count": len(fyi_ids)}
