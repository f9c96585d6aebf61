"""Deterministic JSON report assembly.

Every report is a plain dict of JSON-safe values; floats are serialized via
repr (shortest round-trip), complex values as [re, im] pairs, and keys are
sorted, so the same inputs always produce byte-identical output.
"""
from __future__ import annotations

import json
from typing import Any

__all__ = ["sanitize", "dumps", "write_report", "SCHEMA_VERSION"]

SCHEMA_VERSION = 1


def sanitize(obj: Any) -> Any:
    """Recursively convert report values into JSON-safe structures."""
    if isinstance(obj, dict):
        return {str(k): sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [sanitize(v) for v in obj]
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, (int, float, str)):
        return obj
    if hasattr(obj, "item") and callable(obj.item):  # numpy scalars
        return sanitize(obj.item())
    if hasattr(obj, "tolist"):
        return sanitize(obj.tolist())
    return str(obj)


def dumps(report: dict) -> str:
    payload = dict(report)
    payload.setdefault("schema_version", SCHEMA_VERSION)
    return json.dumps(sanitize(payload), sort_keys=True, indent=1,
                      separators=(",", ": ")) + "\n"


def write_report(report: dict, path: str) -> str:
    text = dumps(report)
    with open(path, "w") as fh:
        fh.write(text)
    return text
