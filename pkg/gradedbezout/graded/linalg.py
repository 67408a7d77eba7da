"""Exact rank of sparse rational matrices."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction

SparseRow = Mapping[int, Fraction | int]


def rank(rows: Iterable[SparseRow]) -> int:
    """Rank of the matrix whose rows are ``{column: value}`` maps.

    Rows are reduced one at a time against an echelon table keyed by pivot
    column; every stored row is normalized to pivot value 1.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        r = {k: Fraction(v) for k, v in row.items() if v}
        while r:
            col = min(r)
            pivot_row = pivots.get(col)
            if pivot_row is None:
                lead = r[col]
                pivots[col] = {k: v / lead for k, v in r.items()}
                break
            factor = r[col]
            for k, v in pivot_row.items():
                value = r.get(k, 0) - factor * v
                if value:
                    r[k] = value
                else:
                    r.pop(k, None)
    return len(pivots)
