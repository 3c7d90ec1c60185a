"""Render a label's three-pane HTML document set and a two-label comparison.

The rendered set is static and byte-deterministic, meant for archiving or
printing; the comparison table lines datasets up for one use case title
(matched after normalization) and counts alerts by severity.
"""

from pathlib import Path

from dnl.model import parse_label
from dnl.reporting import compare_labels, render_comparison_html, render_label_html, write_document_set
from dnl.resolution import resolve_all

FIXTURES = Path(__file__).parent.parent / "fixtures"
OUT = Path(__file__).parent / "out"

covid = parse_label((FIXTURES / "covid.label.json").read_bytes())
evictions = parse_label((FIXTURES / "evictions.label.json").read_bytes())

# --- the three-pane document set ---------------------------------------------

documents = render_label_html(covid, resolve_all(covid))
write_document_set(documents, OUT / "covid")
print("wrote", ", ".join(sorted(documents)), "under", OUT / "covid")

# --- comparison for one use case ---------------------------------------------

report = compare_labels([covid, evictions], "Forecast case counts")
for entry in report.entries:
    if entry.status == "matched":
        counts = entry.severity_counts
        print(f"{entry.dataset_name}: {counts['red']} red / {counts['orange']} orange / "
              f"{counts['yellow']} yellow, {entry.fyi_count} FYIs, "
              f"{entry.row_count} rows, produced {entry.date_produced}")
    else:
        print(f"{entry.dataset_name}: not applicable")

(OUT / "comparison.html").parent.mkdir(parents=True, exist_ok=True)
(OUT / "comparison.html").write_bytes(render_comparison_html(report))
print("wrote", OUT / "comparison.html")
