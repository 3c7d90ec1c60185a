"""Walk the context-selection flow: pick a use case, pick a prediction, read alerts.

Resolution surfaces exactly the items whose scope covers the selected
(use case, prediction) pair, ordered red, orange, yellow, with green FYIs
after. Flagged questionnaire answers materialize into extra items; note
the transcription alert below, whose id starts with "q:".
"""

from pathlib import Path

from dnl.model import parse_label
from dnl.resolution import list_use_cases, resolve

FIXTURES = Path(__file__).parent.parent / "fixtures"

label = parse_label((FIXTURES / "covid.label.json").read_bytes())

# --- step 1: what can be selected? -------------------------------------------

for use_case, predictions in list_use_cases(label):
    print(f"{use_case.id}: {use_case.title}")
    for prediction in predictions:
        print(f"    {prediction.id}: {prediction.title}")

# --- step 2: resolve one pair ----------------------------------------------

for uc_id, p_id in (("u-forecast", "p-arima"), ("u-allocate", "p-ranking")):
    view = resolve(label, uc_id, p_id)
    print(f"\nselected ({uc_id}, {p_id}) -> "
          f"{view.severity_summary['red']} red, {view.severity_summary['orange']} orange, "
          f"{view.severity_summary['yellow']} yellow, {len(view.fyis)} FYIs")
    for alert in view.alerts:
        tag = " (from questionnaire)" if alert.derived_from_question else ""
        print(f"  [{alert.severity.value}] {alert.title}{tag}")
        if alert.mitigation:
            print(f"      mitigation: {alert.mitigation}")
    for fyi in view.fyis:
        print(f"  [green] {fyi.title}")
