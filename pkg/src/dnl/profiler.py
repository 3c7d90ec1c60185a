"""Streaming CSV profiler: per-column statistics, structural fingerprints, staleness.

The profiler makes a single pass over an RFC-4180 stream. Everything is
bounded except distinct counting, which keeps the set of distinct raw
values per column (exact by design; an approximate counter would be a
drop-in extension point). Type inference and min/max run over those
distinct sets at the end of the pass, so no full table is ever retained.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass, field
from datetime import date, datetime, timezone
from typing import BinaryIO, Iterator

from . import canonical
from .fingerprint import EmptyColumnList, StructuralFingerprint, compute_fingerprint
from .model import Label

# Common wild-data conventions for "no value"; matched case-insensitively.
MISSING_TOKENS = frozenset({"", "na", "n/a", "null", "nan"})

_INT_RE = re.compile(r"^[+-]?\d+$")
_FLOAT_RE = re.compile(r"^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$")
_DATE_RE = re.compile(r"^\d{4}-\d{2}-\d{2}$")


class ProfileError(ValueError):
    pass


class EmptyInput(ProfileError):
    def __init__(self) -> None:
        super().__init__("no header row: input is empty")


class RaggedRow(ProfileError):
    def __init__(self, line_no: int, expected: int, got: int):
        self.line_no = line_no
        self.expected = expected
        self.got = got
        super().__init__(f"line {line_no}: expected {expected} fields, got {got}")


class EncodingError(ProfileError):
    def __init__(self, line_no: int):
        self.line_no = line_no
        super().__init__(f"line {line_no}: invalid UTF-8")


class StalenessError(ValueError):
    pass


class LabelHasNoFingerprint(StalenessError):
    def __init__(self) -> None:
        super().__init__("label carries no structural fingerprint")


@dataclass
class ColumnProfile:
    name: str
    inferred_type: str
    missing_count: int
    missing_fraction: float
    distinct_count: int
    min: int | float | date | None = None
    max: int | float | date | None = None

    def to_tree(self) -> dict:
        tree: dict = {
            "name": self.name,
            "inferred_type": self.inferred_type,
            "missing_count": self.missing_count,
            "missing_fraction": self.missing_fraction,
            "distinct_count": self.distinct_count,
        }
        if self.min is not None:
            tree["min"] = self.min.isoformat() if isinstance(self.min, date) else self.min
        if self.max is not None:
            tree["max"] = self.max.isoformat() if isinstance(self.max, date) else self.max
        return tree


@dataclass
class DatasetProfile:
    row_count: int
    columns: list[ColumnProfile]
    fingerprint: StructuralFingerprint
    profiled_at: str

    def to_tree(self) -> dict:
        return {
            "row_count": self.row_count,
            "columns": [c.to_tree() for c in self.columns],
            "fingerprint": self.fingerprint.to_tree(),
            "profiled_at": self.profiled_at,
        }

    def to_bytes(self) -> bytes:
        return canonical.dumps(self.to_tree())


@dataclass
class StalenessReport:
    verdict: str  # "fresh" | "stale"
    added_columns: list[str]
    removed_columns: list[str]
    reordered: bool
    label_date: date
    note: str

    def to_tree(self) -> dict:
        return {
            "verdict": self.verdict,
            "added_columns": self.added_columns,
            "removed_columns": self.removed_columns,
            "reordered": self.reordered,
            "label_date": self.label_date.isoformat(),
            "note": self.note,
        }

    def to_bytes(self) -> bytes:
        return canonical.dumps(self.to_tree())


def is_missing(value: str) -> bool:
    return value.casefold() in MISSING_TOKENS


def infer_column_type(non_missing_values: list[str]) -> str:
    """Most specific type every value satisfies: integer, float, boolean, date, string."""
    if not non_missing_values:
        return "string"
    if all(_INT_RE.match(v) for v in non_missing_values):
        return "integer"
    if all(_FLOAT_RE.match(v) for v in non_missing_values):
        return "float"
    if all(v.casefold() in ("true", "false") for v in non_missing_values):
        return "boolean"
    if all(_is_iso_date(v) for v in non_missing_values):
        return "date"
    return "string"


def _is_iso_date(value: str) -> bool:
    if not _DATE_RE.match(value):
        return False
    try:
        date.fromisoformat(value)
        return True
    except ValueError:
        return False


def _decoded_lines(stream: BinaryIO) -> Iterator[str]:
    """Decode a byte stream line by line, keeping terminators for the csv reader.

    UTF-8 never embeds 0x0A inside a multibyte sequence, so splitting on
    raw newlines before decoding is safe and gives exact error lines.
    """
    buffer = b""
    line_no = 0
    while True:
        chunk = stream.read(65536)
        if not chunk:
            break
        buffer += chunk
        while True:
            newline = buffer.find(b"\n")
            if newline < 0:
                break
            raw, buffer = buffer[: newline + 1], buffer[newline + 1:]
            line_no += 1
            try:
                yield raw.decode("utf-8")
            except UnicodeDecodeError:
                raise EncodingError(line_no) from None
    if buffer:
        line_no += 1
        try:
            yield buffer.decode("utf-8")
        except UnicodeDecodeError:
            raise EncodingError(line_no) from None


def profile_csv(source: bytes | BinaryIO) -> DatasetProfile:
    """Profile an RFC-4180 CSV (UTF-8, first record is the header) in one pass.

    Raises EmptyInput, RaggedRow, or EncodingError; ragged rows are never
    repaired, since silently imputing structure would defeat the point of
    a transparency artifact.
    """
    stream: BinaryIO = io.BytesIO(source) if isinstance(source, bytes) else source
    reader = csv.reader(_decoded_lines(stream))

    header: list[str] | None = None
    row_count = 0
    missing_counts: list[int] = []
    distinct: list[set[str]] = []

    for record in reader:
        if header is None:
            header = record
            if not header:
                # A blank first line is not a header.
                raise EmptyInput()
            missing_counts = [0] * len(header)
            distinct = [set() for _ in header]
            continue
        if record == [] and len(header) == 1:
            # A bare newline under a one-column header is a record holding
            # one empty field; the csv module reports it as no fields.
            record = [""]
        if len(record) != len(header):
            raise RaggedRow(reader.line_num, len(header), len(record))
        row_count += 1
        for i, value in enumerate(record):
            if is_missing(value):
                missing_counts[i] += 1
            else:
                distinct[i].add(value)

    if header is None:
        raise EmptyInput()

    columns = []
    for i, name in enumerate(header):
        values = sorted(distinct[i])
        inferred = infer_column_type(values)
        low, high = _min_max(values, inferred)
        missing = missing_counts[i]
        columns.append(
            ColumnProfile(
                name=name,
                inferred_type=inferred,
                missing_count=missing,
                missing_fraction=missing / row_count if row_count else 0.0,
                distinct_count=len(values),
                min=low,
                max=high,
            )
        )

    return DatasetProfile(
        row_count=row_count,
        columns=columns,
        fingerprint=compute_fingerprint(header),
        profiled_at=utc_now(),
    )


def csv_header(source: bytes | BinaryIO) -> list[str]:
    """Just the header record of a CSV; cheaper than a full profile."""
    stream: BinaryIO = io.BytesIO(source) if isinstance(source, bytes) else source
    for record in csv.reader(_decoded_lines(stream)):
        if not record:
            raise EmptyInput()
        return record
    raise EmptyInput()


def _min_max(values: list[str], inferred: str):
    if not values:
        return None, None
    if inferred == "integer":
        typed = [int(v) for v in values]
    elif inferred == "float":
        typed = [float(v) for v in values]
    elif inferred == "date":
        typed = [date.fromisoformat(v) for v in values]
    else:
        return None, None
    return min(typed), max(typed)


def utc_now() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def check_staleness(label: Label, profile: DatasetProfile) -> StalenessReport:
    """Compare a label's recorded structure against a freshly profiled dataset.

    Fresh exactly when the fingerprints' digests match. Only structural
    drift is automated; whether the use cases themselves still apply is a
    human judgment.
    """
    if label.fingerprint is None:
        raise LabelHasNoFingerprint()

    recorded = list(label.fingerprint.column_names)
    current = list(profile.fingerprint.column_names)
    recorded_set = set(recorded)
    current_set = set(current)

    added = [name for name in _unique(current) if name not in recorded_set]
    removed = [name for name in _unique(recorded) if name not in current_set]
    reordered = recorded_set == current_set and recorded != current
    fresh = label.fingerprint.digest == profile.fingerprint.digest
    label_date = label.date_produced

    if fresh:
        note = (f"Label produced {label_date.isoformat()}; dataset structure is unchanged. "
                "Content drift beyond structure is not checked.")
    else:
        reasons = []
        if added:
            reasons.append(f"added columns: {', '.join(added)}")
        if removed:
            reasons.append(f"removed columns: {', '.join(removed)}")
        if reordered:
            reasons.append("columns reordered")
        note = (f"Label produced {label_date.isoformat()}; dataset structure has drifted "
                f"({'; '.join(reasons) or 'structure differs'}). "
                "Label content may no longer apply.")

    return StalenessReport(
        verdict="fresh" if fresh else "stale",
        added_columns=added,
        removed_columns=removed,
        reordered=reordered,
        label_date=label_date,
        note=note,
    )


def _unique(names: list[str]) -> list[str]:
    seen: set[str] = set()
    out = []
    for name in names:
        if name not in seen:
            seen.add(name)
            out.append(name)
    return out
