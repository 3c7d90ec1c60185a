"""Canonical JSON encoding shared by every document format in this package.

Canonical form: object keys sorted lexicographically, compact separators,
UTF-8 with non-ASCII characters left unescaped, no NaN/Infinity. Two equal
value trees always encode to identical bytes.
"""

from __future__ import annotations

import json
from typing import Any


def dumps(tree: Any) -> bytes:
    """Encode a plain value tree (dict/list/str/int/float/bool/None) canonically."""
    return json.dumps(
        tree, sort_keys=True, separators=(",", ":"), ensure_ascii=False, allow_nan=False
    ).encode("utf-8")


def loads(data: bytes | str) -> Any:
    """Decode JSON, rejecting duplicate object keys.

    Raises ValueError on syntax errors, bad UTF-8, or duplicated keys.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return json.loads(data, object_pairs_hook=_reject_duplicate_keys)


def _reject_duplicate_keys(pairs: list[tuple[str, Any]]) -> dict[str, Any]:
    obj: dict[str, Any] = {}
    for key, value in pairs:
        if key in obj:
            raise ValueError(f"duplicate object key: {key!r}")
        obj[key] = value
    return obj
