"""Utility functions for logging."""

from typing import Any


# Integers with more digits than this are abbreviated in log records
MAX_DIGITS = 24
# Sequences longer than this are abbreviated in log records
MAX_ITEMS = 12


def summarize_for_log(value: Any) -> Any:
    """Shorten huge integers and long sequences before logging them.

    Bounds grow double-exponentially with the codimension, so a raw value can
    run to thousands of digits.

    Args:
        value: Value to summarize. Integers, lists and tuples are processed.

    Returns:
        A short string for oversized values, otherwise the input unchanged.
    """
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        digits = str(abs(value))
        if len(digits) <= MAX_DIGITS:
            return value
        sign = "-" if value < 0 else ""
        return f"{sign}{digits[:8]}...{digits[-8:]} ({len(digits)} digits)"
    if isinstance(value, (list, tuple)):
        if len(value) <= MAX_ITEMS:
            return [summarize_for_log(v) for v in value]
        head = [summarize_for_log(v) for v in value[: MAX_ITEMS // 2]]
        tail = [summarize_for_log(v) for v in value[-MAX_ITEMS // 2 :]]
        return [*head, f"... {len(value) - MAX_ITEMS} more ...", *tail]
    return value
