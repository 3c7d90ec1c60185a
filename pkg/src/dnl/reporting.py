"""Static HTML rendering and cross-label comparison.

The rendered document set is the archival, printable form of a label:
plain HTML with zero scripts, byte-deterministic for a fixed label so the
output can be pinned and diffed. Comparison lines several labels up for
one use case and counts their alerts by severity.
"""

from __future__ import annotations

import html
from dataclasses import dataclass, field
from datetime import date
from pathlib import Path

from . import canonical
from .model import (
    Alert,
    Badges,
    ComputedStats,
    Fyi,
    FreeText,
    KeyFacts,
    Label,
    Severity,
    normalize_title,
    validate_label,
)
from .profiler import utc_now
from .resolution import ResolvedView, resolve

PANE_NAMES = ("Overview", "Use Cases & Alerts", "Dataset Info")

CATEGORY_ORDER = ("Description", "Composition", "Provenance", "Collection", "Management")


class RenderError(ValueError):
    pass


class ComparisonError(ValueError):
    pass


class FewerThanTwoLabels(ComparisonError):
    def __init__(self, got: int):
        super().__init__(f"comparison needs at least two labels, got {got}")


class NoLabelMatches(ComparisonError):
    def __init__(self, title: str):
        super().__init__(f"no label carries a use case titled {title!r}")


@dataclass
class ComparisonEntry:
    label_id: str
    dataset_name: str
    status: str  # "matched" | "not_applicable"
    severity_counts: dict[str, int]
    fyi_count: int
    date_produced: date
    matched_use_case: str | None = None
    row_count: int | None = None

    def to_tree(self) -> dict:
        tree: dict = {
            "label_id": self.label_id,
            "dataset_name": self.dataset_name,
            "status": self.status,
            "severity_counts": dict(self.severity_counts),
            "fyi_count": self.fyi_count,
            "date_produced": self.date_produced.isoformat(),
        }
        if self.matched_use_case is not None:
            tree["matched_use_case"] = self.matched_use_case
        if self.row_count is not None:
            tree["row_count"] = self.row_count
        return tree


@dataclass
class ComparisonReport:
    use_case_title: str  # normalized
    entries: list[ComparisonEntry] = field(default_factory=list)
    generated_at: str = ""

    def to_tree(self) -> dict:
        return {
            "use_case_title": self.use_case_title,
            "entries": [e.to_tree() for e in self.entries],
            "generated_at": self.generated_at,
        }

    def to_bytes(self) -> bytes:
        return canonical.dumps(self.to_tree())


def embedded_row_count(label: Label) -> int | None:
    """Row count from the first computed-stats overview module, if any."""
    for module in label.overview_modules:
        if isinstance(module, ComputedStats):
            return module.row_count
    return None


def compare_labels(
    labels: list[Label], use_case_title: str, generated_at: str | None = None
) -> ComparisonReport:
    """Line up labels for one use case, matching titles after normalization.

    A matched entry unions alerts over every prediction of the matched use
    case (deduplicated by id) and counts them by severity; labels without
    a matching title come back as not_applicable with zero counts.
    """
    if len(labels) < 2:
        raise FewerThanTwoLabels(len(labels))
    if not use_case_title.strip():
        raise ValueError("use_case_title must be nonempty")
    wanted = normalize_title(use_case_title)

    entries = []
    any_match = False
    for label in labels:
        use_case = next(
            (uc for uc in label.use_cases if normalize_title(uc.title) == wanted), None
        )
        if use_case is None:
            entries.append(
                ComparisonEntry(
                    label_id=label.label_id,
                    dataset_name=label.dataset_name,
                    status="not_applicable",
                    severity_counts={s.value: 0 for s in Severity},
                    fyi_count=0,
                    date_produced=label.date_produced,
                )
            )
            continue
        any_match = True
        alerts: dict[str, Alert] = {}
        fyis: dict[str, Fyi] = {}
        for prediction in use_case.predictions:
            view = resolve(label, use_case.id, prediction.id)
            for alert in view.alerts:
                alerts.setdefault(alert.id, alert)
            for fyi in view.fyis:
                fyis.setdefault(fyi.id, fyi)
        counts = {s.value: 0 for s in Severity}
        for alert in alerts.values():
            counts[alert.severity.value] += 1
        entries.append(
            ComparisonEntry(
                label_id=label.label_id,
                dataset_name=label.dataset_name,
                status="matched",
                severity_counts=counts,
                fyi_count=len(fyis),
                date_produced=label.date_produced,
                matched_use_case=use_case.id,
                row_count=embedded_row_count(label),
            )
        )

    if not any_match:
        raise NoLabelMatches(use_case_title)
    return ComparisonReport(
        use_case_title=wanted,
        entries=entries,
        generated_at=generated_at if generated_at is not None else utc_now(),
    )


# ---------------------------------------------------------------------------
# HTML


def _esc(text: str) -> str:
    return html.escape(text, quote=True)


_CSS = """\
:root { color-scheme: light; }
body { font-family: Georgia, 'Times New Roman', serif; margin: 0; color: #1c2833; }
header { background: #1c2833; color: #fdfefe; padding: 1.2rem 2rem; }
header h1 { margin: 0 0 0.4rem 0; font-size: 1.5rem; }
nav.panes a { color: #aed6f1; margin-right: 1.5rem; text-decoration: none; }
main { max-width: 60rem; margin: 0 auto; padding: 1rem 2rem 3rem; }
section h2 { border-bottom: 2px solid #1c2833; padding-bottom: 0.3rem; margin-top: 2.5rem; }
dl.label-meta dt { font-weight: bold; }
dl.label-meta dd { margin: 0 0 0.5rem 0; }
.module { margin: 1rem 0; padding: 0.8rem 1rem; background: #f8f9f9; border: 1px solid #d5d8dc; }
.module h3 { margin-top: 0; }
.badge { display: inline-block; margin-right: 1.2rem; font-size: 1.1rem; }
.badge b { font-size: 1.6rem; }
table { border-collapse: collapse; }
th, td { border: 1px solid #d5d8dc; padding: 0.3rem 0.7rem; text-align: left; }
.use-case { margin: 1.5rem 0; }
.prediction { margin: 0.8rem 0 0.8rem 1.2rem; padding-left: 1rem; border-left: 3px solid #d5d8dc; }
.item { margin: 0.6rem 0; padding: 0.6rem 0.8rem; border-left: 6px solid; background: #fbfcfc; }
.severity-red { border-color: #c0392b; }
.severity-orange { border-color: #e67e22; }
.severity-yellow { border-color: #d4ac0d; }
.severity-green { border-color: #229954; }
.chip { font-variant: small-caps; font-weight: bold; margin-right: 0.5rem; }
.severity-red .chip { color: #c0392b; }
.severity-orange .chip { color: #e67e22; }
.severity-yellow .chip { color: #d4ac0d; }
.severity-green .chip { color: #229954; }
.mitigation { font-style: italic; }
.category { margin: 1.5rem 0; }
.question { margin: 0.8rem 0; }
.question-text { font-weight: bold; margin-bottom: 0.2rem; }
.answer { margin: 0; }
.not-provided { color: #797d7f; font-style: italic; }
a.flag-marker { display: inline-block; margin-top: 0.2rem; padding: 0 0.4rem; border-left: 6px solid; background: #fbfcfc; text-decoration: none; color: inherit; }
td.not-applicable { color: #797d7f; font-style: italic; text-align: center; }
"""


def _item_div(item: Alert | Fyi, anchor: str | None) -> str:
    if isinstance(item, Alert):
        color = item.severity.value
        chip = color
    else:
        color = "green"
        chip = "fyi"
    anchor_attr = f' id="{_esc(anchor)}"' if anchor else ""
    lines = [
        f'<div class="item {"alert" if isinstance(item, Alert) else "fyi"} severity-{color}"{anchor_attr}>',
        f'<p><span class="chip">{chip}</span><strong>{_esc(item.title)}</strong></p>',
        f"<p>{_esc(item.description)}</p>",
    ]
    if isinstance(item, Alert) and item.mitigation:
        lines.append(f'<p class="mitigation">Mitigation: {_esc(item.mitigation)}</p>')
    lines.append("</div>")
    return "\n".join(lines)


def _overview_pane(label: Label) -> str:
    parts = ['<section id="overview">', "<h2>Overview</h2>", '<dl class="label-meta">']
    parts.append(f"<dt>Dataset</dt><dd>{_esc(label.dataset_name)}</dd>")
    parts.append(f"<dt>Publisher</dt><dd>{_esc(label.publisher)}</dd>")
    parts.append(
        f'<dt>Date produced</dt><dd class="date-produced">{label.date_produced.isoformat()}</dd>'
    )
    if label.source_url:
        url = _esc(label.source_url)
        parts.append(f'<dt>Source</dt><dd><a href="{url}">{url}</a></dd>')
    if label.license:
        parts.append(f"<dt>License</dt><dd>{_esc(label.license)}</dd>")
    parts.append("</dl>")

    for module in label.overview_modules:
        if isinstance(module, KeyFacts):
            rows = "".join(
                f"<tr><th scope=\"row\">{_esc(k)}</th><td>{_esc(v)}</td></tr>"
                for k, v in sorted(module.facts.items())
            )
            parts.append(
                f'<div class="module module-key-facts"><h3>Key facts</h3>'
                f"<table><tbody>{rows}</tbody></table></div>"
            )
        elif isinstance(module, Badges):
            parts.append(
                '<div class="module module-badges">'
                f'<span class="badge">use cases <b>{module.use_case_count}</b></span>'
                f'<span class="badge">alerts <b>{module.alert_count}</b></span>'
                f'<span class="badge">FYIs <b>{module.fyi_count}</b></span>'
                "</div>"
            )
        elif isinstance(module, ComputedStats):
            rows = "".join(
                f"<tr><td>{_esc(c.name)}</td><td>{c.inferred_type}</td>"
                f"<td>{c.missing_fraction:.4f}</td></tr>"
                for c in module.columns
            )
            parts.append(
                '<div class="module module-computed-stats"><h3>Profile</h3>'
                f"<p>{module.row_count} rows, {module.column_count} columns</p>"
                "<table><thead><tr><th>column</th><th>type</th><th>missing</th></tr></thead>"
                f"<tbody>{rows}</tbody></table></div>"
            )
        elif isinstance(module, FreeText):
            parts.append(
                f'<div class="module module-free-text"><h3>{_esc(module.title)}</h3>'
                f"<p>{_esc(module.text)}</p></div>"
            )
    parts.append("</section>")
    return "\n".join(parts)


def _use_cases_pane(label: Label, views: dict[tuple[str, str], ResolvedView]) -> str:
    parts = ['<section id="use-cases">', "<h2>Use Cases &amp; Alerts</h2>"]
    anchored: set[str] = set()
    for uc in label.use_cases:
        parts.append(f'<article class="use-case" id="uc-{_esc(uc.id)}">')
        parts.append(f"<h3>{_esc(uc.title)}</h3>")
        parts.append(f"<p>{_esc(uc.description)}</p>")
        for pred in uc.predictions:
            view = views[(uc.id, pred.id)]
            parts.append(f'<section class="prediction" id="pair-{_esc(uc.id)}-{_esc(pred.id)}">')
            parts.append(f"<h4>{_esc(pred.title)}</h4>")
            parts.append(f'<p class="method">{_esc(pred.method_description)}</p>')
            for item in (*view.alerts, *view.fyis):
                anchor = None
                question = item.derived_from_question
                if question is not None and question not in anchored:
                    # First occurrence carries the deep-link target used by
                    # the flag markers on the Dataset Info pane.
                    anchor = f"q-item-{question}"
                    anchored.add(question)
                parts.append(_item_div(item, anchor))
            parts.append("</section>")
        parts.append("</article>")
    parts.append("</section>")
    return "\n".join(parts)


def _dataset_info_pane(label: Label) -> str:
    parts = ['<section id="dataset-info">', "<h2>Dataset Info</h2>"]
    for category in CATEGORY_ORDER:
        parts.append(f'<section class="category" id="category-{category.lower()}">')
        parts.append(f"<h3>{category}</h3>")
        questions = [q for q in label.questionnaire if q.category == category]
        if not questions:
            parts.append('<p class="not-provided">No questions recorded.</p>')
        for q in questions:
            parts.append(f'<div class="question" id="q-{_esc(q.question_id)}">')
            parts.append(f'<p class="question-text">{_esc(q.question_text)}</p>')
            if q.answer.strip():
                parts.append(f'<p class="answer">{_esc(q.answer)}</p>')
            else:
                parts.append('<p class="answer not-provided">Not provided</p>')
            if q.flag is not None and q.answer.strip():
                color = "green" if q.flag.kind == "fyi" else q.flag.severity.value
                parts.append(
                    f'<a class="flag-marker severity-{color}" href="#q-item-{_esc(q.question_id)}">'
                    f"flagged: {_esc(q.flag.summary)}</a>"
                )
            parts.append("</div>")
        parts.append("</section>")
    parts.append("</section>")
    return "\n".join(parts)


def render_label_html(label: Label, resolved_views: list[ResolvedView]) -> dict[str, bytes]:
    """Render the three-pane document set for one label.

    Returns a mapping of relative output path to bytes: index.html, one
    fragment per pane, and the stylesheet. resolved_views must cover every
    (use case, prediction) pair of the label.
    """
    report = validate_label(label)
    if not report.passed:
        raise RenderError(f"label fails validation: {', '.join(sorted(set(report.codes())))}")
    views = {(v.use_case_id, v.prediction_id): v for v in resolved_views}
    for uc in label.use_cases:
        for pred in uc.predictions:
            if (uc.id, pred.id) not in views:
                raise RenderError(f"missing resolved view for pair ({uc.id}, {pred.id})")

    overview = _overview_pane(label)
    use_cases = _use_cases_pane(label, views)
    dataset_info = _dataset_info_pane(label)

    nav = "".join(
        f'<a href="#{target}">{_esc(name)}</a>'
        for target, name in zip(("overview", "use-cases", "dataset-info"), PANE_NAMES)
    )
    index = "\n".join(
        [
            "<!DOCTYPE html>",
            '<html lang="en">',
            "<head>",
            '<meta charset="utf-8">',
            f"<title>{_esc(label.dataset_name)} — dataset nutrition label</title>",
            '<link rel="stylesheet" href="assets/label.css">',
            "</head>",
            "<body>",
            "<header>",
            f"<h1>{_esc(label.dataset_name)}</h1>",
            f'<nav class="panes">{nav}</nav>',
            "</header>",
            "<main>",
            overview,
            use_cases,
            dataset_info,
            "</main>",
            "</body>",
            "</html>",
            "",
        ]
    )

    return {
        "index.html": index.encode("utf-8"),
        "overview.html": (overview + "\n").encode("utf-8"),
        "use-cases.html": (use_cases + "\n").encode("utf-8"),
        "dataset-info.html": (dataset_info + "\n").encode("utf-8"),
        "assets/label.css": _CSS.encode("utf-8"),
    }


_COMPARISON_METRICS = (
    ("red", "Red alerts (no known mitigation)"),
    ("orange", "Orange alerts (partial mitigation)"),
    ("yellow", "Yellow alerts (mitigation known)"),
    ("fyis", "FYIs"),
    ("date", "Date produced"),
    ("rows", "Rows"),
)


def render_comparison_html(report: ComparisonReport) -> bytes:
    """One table: labels as columns, severity rows color-coded, deterministic bytes."""
    head_cells = "".join(
        f'<th scope="col">{_esc(e.dataset_name)}<br><span class="label-id">{_esc(e.label_id)}</span></th>'
        for e in report.entries
    )

    body_rows = []
    for row_index, (metric, heading) in enumerate(_COMPARISON_METRICS):
        cells = []
        for entry in report.entries:
            if entry.status == "not_applicable":
                if row_index == 0:
                    cells.append(
                        f'<td class="not-applicable" rowspan="{len(_COMPARISON_METRICS)}" '
                        f'data-label-id="{_esc(entry.label_id)}">not applicable</td>'
                    )
                continue
            if metric in ("red", "orange", "yellow"):
                value = str(entry.severity_counts.get(metric, 0))
                css = f"count severity-{metric}"
            elif metric == "fyis":
                value = str(entry.fyi_count)
                css = "count severity-green"
            elif metric == "date":
                value = entry.date_produced.isoformat()
                css = "date"
            else:
                value = str(entry.row_count) if entry.row_count is not None else "—"
                css = "rows"
            cells.append(
                f'<td class="{css}" data-label-id="{_esc(entry.label_id)}" '
                f'data-metric="{metric}">{value}</td>'
            )
        body_rows.append(f'<tr><th scope="row">{heading}</th>{"".join(cells)}</tr>')

    document = "\n".join(
        [
            "<!DOCTYPE html>",
            '<html lang="en">',
            "<head>",
            '<meta charset="utf-8">',
            f"<title>Label comparison — {_esc(report.use_case_title)}</title>",
            f"<style>\n{_CSS}</style>",
            "</head>",
            "<body>",
            "<main>",
            f"<h1>Label comparison: {_esc(report.use_case_title)}</h1>",
            '<table class="comparison">',
            f'<thead><tr><th scope="col">Use case</th>{head_cells}</tr></thead>',
            f"<tbody>{''.join(body_rows)}</tbody>",
            "</table>",
            "</main>",
            "</body>",
            "</html>",
            "",
        ]
    )
    return document.encode("utf-8")


def write_document_set(documents: dict[str, bytes], out_dir: str | Path) -> None:
    """Write a rendered document set under out_dir, creating directories as needed."""
    base = Path(out_dir)
    for rel_path, data in documents.items():
        target = base / rel_path
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_bytes(data)
