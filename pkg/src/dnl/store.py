"""Directory-backed label store: one canonical file per label, in-memory index.

Only labels that pass validation enter the store. The index is replaced
atomically on every change, so concurrent readers always see a complete
snapshot (old or new, never partial).
"""

from __future__ import annotations

import logging
import threading
import urllib.parse
from pathlib import Path

from .model import Label, LabelValidationError, ParseError, parse_label, serialize_label, validate_label

log = logging.getLogger(__name__)

STORE_SUFFIX = ".label.json"


class DuplicateLabelId(ValueError):
    def __init__(self, label_id: str):
        self.label_id = label_id
        super().__init__(f"a label with id {label_id!r} already exists")


def _filename_for(label_id: str) -> str:
    # Percent-encode everything unsafe so opaque ids cannot escape the
    # store directory or collide across case-insensitive filesystems.
    return urllib.parse.quote(label_id, safe="") + STORE_SUFFIX


class LabelStore:
    """Validated labels keyed by label_id, persisted one file per label."""

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)
        self._lock = threading.Lock()
        self._index: dict[str, tuple[Label, bytes]] = {}

    def load(self) -> None:
        """Scan the directory; invalid files are logged and skipped."""
        index: dict[str, tuple[Label, bytes]] = {}
        for path in sorted(self.directory.glob("*" + STORE_SUFFIX)):
            try:
                label = parse_label(path.read_bytes())
                data = serialize_label(label)
            except (ParseError, LabelValidationError, OSError) as exc:
                log.warning("skipping %s: %s", path.name, exc)
                continue
            if label.label_id in index:
                log.warning("skipping %s: duplicate label_id %r", path.name, label.label_id)
                continue
            index[label.label_id] = (label, data)
        self._index = index

    def ids(self) -> list[str]:
        return sorted(self._index)

    def get(self, label_id: str) -> Label | None:
        entry = self._index.get(label_id)
        return entry[0] if entry else None

    def get_bytes(self, label_id: str) -> bytes | None:
        entry = self._index.get(label_id)
        return entry[1] if entry else None

    def summaries(self) -> list[dict]:
        """Listing payload: one summary per label, ordered by label_id."""
        out = []
        for label_id in self.ids():
            label = self._index[label_id][0]
            out.append(
                {
                    "label_id": label.label_id,
                    "dataset_name": label.dataset_name,
                    "publisher": label.publisher,
                    "date_produced": label.date_produced.isoformat(),
                }
            )
        return out

    def submit(self, raw: bytes) -> str:
        """Validate and persist a new label document; returns its label_id.

        Raises ParseError for unreadable documents, LabelValidationError
        when validation fails, DuplicateLabelId on id collision.
        """
        label = parse_label(raw)
        report = validate_label(label)
        if not report.passed:
            raise LabelValidationError(report)
        data = serialize_label(label)
        with self._lock:
            if label.label_id in self._index:
                raise DuplicateLabelId(label.label_id)
            self.directory.mkdir(parents=True, exist_ok=True)
            target = self.directory / _filename_for(label.label_id)
            tmp = target.with_suffix(".tmp")
            tmp.write_bytes(data)
            tmp.replace(target)
            self._index = {**self._index, label.label_id: (label, data)}
        return label.label_id
