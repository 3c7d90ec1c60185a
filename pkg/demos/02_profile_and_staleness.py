"""Profile a CSV and check whether a label still matches the data's structure.

The profile is computed in one streaming pass; the structural fingerprint
is a SHA-256 over the ordered column names, which is what the staleness
check compares.
"""

from pathlib import Path

from dnl.model import parse_label
from dnl.profiler import check_staleness, profile_csv

FIXTURES = Path(__file__).parent.parent / "fixtures"

# --- profile ------------------------------------------------------------------

profile = profile_csv((FIXTURES / "covid.csv").read_bytes())
print(f"{profile.row_count} rows, fingerprint {profile.fingerprint.digest[:16]}…")
for column in profile.columns:
    span = f" range [{column.min} .. {column.max}]" if column.min is not None else ""
    print(f"  {column.name:10s} {column.inferred_type:8s} "
          f"missing {column.missing_fraction:.0%}, {column.distinct_count} distinct{span}")

# --- staleness ------------------------------------------------------------------

label = parse_label((FIXTURES / "covid.label.json").read_bytes())

for csv_name in ("covid.csv", "covid_plus_deaths.csv", "covid_reordered.csv"):
    current = profile_csv((FIXTURES / csv_name).read_bytes())
    report = check_staleness(label, current)
    print(f"\n{csv_name}: {report.verdict}")
    if report.added_columns:
        print("  added columns:", ", ".join(report.added_columns))
    if report.reordered:
        print("  columns reordered")
    print(" ", report.note)
