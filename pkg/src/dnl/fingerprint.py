"""Structural fingerprints over ordered column names.

The digest pins the column structure a label was produced against, so a
later ingest of the same dataset can be checked for structural drift
(added, removed, or reordered columns) without re-reading the label text.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass


class EmptyColumnList(ValueError):
    """A fingerprint needs at least one column name."""


@dataclass(frozen=True)
class StructuralFingerprint:
    """Ordered column names plus the SHA-256 digest of their canonical encoding."""

    column_names: tuple[str, ...]
    digest: str

    def to_tree(self) -> dict:
        return {"column_names": list(self.column_names), "digest": self.digest}


def compute_fingerprint(column_names: list[str] | tuple[str, ...]) -> StructuralFingerprint:
    """Fingerprint an ordered list of column names.

    Encoding: for each name in order, the decimal UTF-8 byte length, ":",
    the name's UTF-8 bytes, then a newline. Length-prefixing keeps the
    encoding injective, so equal digests mean equal ordered name lists.
    """
    if not column_names:
        raise EmptyColumnList("column name list is empty")
    hasher = hashlib.sha256()
    for name in column_names:
        raw = name.encode("utf-8")
        hasher.update(str(len(raw)).encode("ascii"))
        hasher.update(b":")
        hasher.update(raw)
        hasher.update(b"\n")
    return StructuralFingerprint(column_names=tuple(column_names), digest=hasher.hexdigest())
