"""Lossless JSON output for arbitrary-precision integers."""

from __future__ import annotations

import json
from typing import Any

INT64_LIMIT = 2**63


def lossless(value: Any) -> Any:
    """Recursively replace integers outside the signed 64-bit range by strings."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) >= INT64_LIMIT else value
    if isinstance(value, dict):
        return {k: lossless(v) for k, v in value.items()}
    if isinstance(value, list | tuple):
        return [lossless(v) for v in value]
    return value


def dumps(payload: Any) -> str:
    """Deterministic JSON: sorted keys and big integers as decimal strings."""
    return json.dumps(lossless(payload), sort_keys=True)
