"""Parse a label document, validate it, and watch validation catch a defect.

A label is strict on two levels: the parser rejects documents that are not
structurally well-typed (unknown fields, bad enum values, malformed dates),
and the validator reports semantic violations (dangling references,
severity/mitigation inconsistencies) as data.
"""

from pathlib import Path

from dnl.model import Scope, parse_label, serialize_label, validate_label

FIXTURES = Path(__file__).parent.parent / "fixtures"

# --- parse + validate a good document --------------------------------------

label = parse_label((FIXTURES / "covid.label.json").read_bytes())
report = validate_label(label)
print(f"{label.dataset_name!r} by {label.publisher}")
print(f"produced {label.date_produced}, verdict: {report.verdict}")
print(f"{len(label.use_cases)} use cases, {len(label.alerts)} alerts, "
      f"{len(label.fyis)} FYIs, {len(label.questionnaire)} questionnaire entries")

# --- break an invariant and validate again ----------------------------------

# Point an alert at a prediction that does not exist.
label.alerts[0].scope = [Scope.for_pair("u-forecast", "p-nonexistent")]
report = validate_label(label)
print(f"\nafter corrupting a scope, verdict: {report.verdict}")
for violation in report.violations:
    print(f"  {violation.level}: {violation.code} at {violation.path}")

# --- canonical serialization -----------------------------------------------

# serialize_label refuses invalid labels, so restore the scope first.
label = parse_label((FIXTURES / "covid.label.json").read_bytes())
data = serialize_label(label)
print(f"\ncanonical form: {len(data)} bytes; round-trips exactly:",
      parse_label(data) == label)
