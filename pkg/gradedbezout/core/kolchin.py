"""Kolchin dimension polynomials of finite subsets of N_0^m.

For ``E`` a finite set of exponent vectors, ``V_E(s)`` is the set of points
``x`` of order at most ``s`` that dominate no row of ``E``. Its cardinality is
eventually a numerical polynomial, the dimension polynomial ``omega_E``.

The primary evaluator is inclusion-exclusion over the canonical antichain::

    omega_E(s) = sum_J (-1)^|J| C(s + m - ord(join J), m)

Subsets are folded row by row into a table ``join -> signed count`` so equal
joins are merged rather than enumerated. Above the antichain guard the
counting function is interpolated instead.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from gradedbezout.core.binomial_core import NumericalPolynomial, add, from_values, shift

logger = logging.getLogger(__name__)

DEFAULT_MAX_ANTICHAIN_ROWS = 20

Vector = tuple[int, ...]


def order(v: Iterable[int]) -> int:
    """Order of an exponent vector: the sum of its entries."""
    return sum(v)


def join(u: Vector, v: Vector) -> Vector:
    """Componentwise maximum."""
    return tuple(max(a, b) for a, b in zip(u, v, strict=True))


def dominates(x: Vector, e: Vector) -> bool:
    """True when ``e <= x`` in the componentwise order."""
    return all(a >= b for a, b in zip(x, e, strict=True))


class ExponentMatrix(BaseModel):
    """Finite subset of N_0^m given by rows."""

    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=1, description="Number of columns (indeterminates)")
    rows: tuple[tuple[int, ...], ...] = Field(
        default_factory=tuple, description="Exponent vectors"
    )

    @field_validator("rows")
    def entries_non_negative(
        cls, v: tuple[tuple[int, ...], ...]
    ) -> tuple[tuple[int, ...], ...]:
        """Validate that all entries are non-negative integers."""
        if any(a < 0 for row in v for a in row):
            raise ValueError("Exponent entries must be non-negative")
        return v

    @model_validator(mode="after")
    def rows_have_width_m(self) -> ExponentMatrix:
        """Validate that every row has exactly ``m`` entries."""
        for row in self.rows:
            if len(row) != self.m:
                raise ValueError(f"Row {list(row)} does not have {self.m} entries")
        return self

    @property
    def row_join(self) -> Vector:
        """Componentwise maximum over all rows (zero vector when empty)."""
        top = (0,) * self.m
        for row in self.rows:
            top = join(top, row)
        return top

    def with_row(self, e: Iterable[int]) -> ExponentMatrix:
        return ExponentMatrix(m=self.m, rows=(*self.rows, tuple(e)))

    def to_json(self) -> dict:
        return {"m": self.m, "rows": [list(r) for r in self.rows]}


@dataclass(frozen=True)
class DimPolyResult:
    """Dimension polynomial together with the degree from which it is exact."""

    polynomial: NumericalPolynomial
    stability_bound: int


def canonicalize(E: ExponentMatrix) -> ExponentMatrix:
    """Drop duplicate and dominated rows; sort the antichain lexicographically.

    A row that dominates another excludes a subset of what the smaller row
    already excludes, so ``V_E(s)`` is unchanged.
    """
    kept: list[Vector] = []
    for row in sorted(set(E.rows), key=lambda r: (order(r), r)):
        if not any(dominates(row, k) for k in kept):
            kept.append(row)
    return ExponentMatrix(m=E.m, rows=tuple(sorted(kept)))


@lru_cache(maxsize=64)
def _points_up_to(m: int, s: int) -> np.ndarray:
    """All points of N_0^m of order at most ``s`` as a ``(N, m)`` array."""
    points: list[Vector] = [()]
    for _ in range(m):
        points = [(*p, a) for p in points for a in range(s - order(p) + 1)]
    return np.array(points, dtype=np.int64).reshape(-1, m)


def brute_count(E: ExponentMatrix, s: int) -> int:
    """Card V_E(s) by direct enumeration.

    Args:
        E: The exponent matrix.
        s: Non-negative order bound.

    Returns:
        Number of points of order at most ``s`` that dominate no row of ``E``.
    """
    if s < 0:
        raise ValueError("s must be non-negative")
    points = _points_up_to(E.m, s)
    free = np.ones(len(points), dtype=bool)
    for row in E.rows:
        free &= ~np.all(points >= np.array(row, dtype=np.int64), axis=1)
    return int(np.count_nonzero(free))


def _binomial_shifted(m: int, c: int) -> NumericalPolynomial:
    """C(s + m - c, m) as a polynomial in s."""
    return shift(NumericalPolynomial.binomial(m), -c)


def _inclusion_exclusion(E: ExponentMatrix) -> NumericalPolynomial:
    signed: dict[Vector, int] = {(0,) * E.m: 1}
    for row in E.rows:
        step = defaultdict(int, signed)
        for vec, count in signed.items():
            step[join(vec, row)] -= count
        signed = {vec: c for vec, c in step.items() if c != 0}

    by_order: dict[int, int] = defaultdict(int)
    for vec, count in signed.items():
        by_order[order(vec)] += count

    total = NumericalPolynomial()
    for c in sorted(by_order):
        if by_order[c]:
            total = add(total, _binomial_shifted(E.m, c).scale(by_order[c]))
    return total


def _interpolated(E: ExponentMatrix, s0: int) -> NumericalPolynomial:
    window = [brute_count(E, s0 + t) for t in range(E.m + 1)]
    return shift(from_values(window), -s0)


def dimension_polynomial(
    E: ExponentMatrix, max_antichain_rows: int = DEFAULT_MAX_ANTICHAIN_ROWS
) -> DimPolyResult:
    """Kolchin dimension polynomial of ``E``.

    Args:
        E: The exponent matrix; row order and dominated rows do not matter.
        max_antichain_rows: Largest antichain handled by inclusion-exclusion.
            Larger antichains fall back to counting on ``[s0, s0 + m]`` and
            interpolating.

    Returns:
        The polynomial and ``s0 = ord(join of all rows)``. For every
        ``s >= s0`` each truncated count C(s + m - ord(join J), m) agrees with
        its polynomial, so the result equals ``brute_count`` from ``s0`` on.
    """
    s0 = order(E.row_join)
    antichain = canonicalize(E)
    if len(antichain.rows) > max_antichain_rows:
        logger.info(
            "Antichain above inclusion-exclusion guard, interpolating",
            extra={"rows": len(antichain.rows), "guard": max_antichain_rows},
        )
        polynomial = _interpolated(antichain, s0)
    else:
        polynomial = _inclusion_exclusion(antichain)
    logger.debug(
        "Dimension polynomial computed",
        extra={
            "m": E.m,
            "rows": len(antichain.rows),
            "standard_coeffs": list(polynomial.standard_coeffs),
            "stability_bound": s0,
        },
    )
    return DimPolyResult(polynomial=polynomial, stability_bound=s0)


def decompose(
    E: ExponentMatrix, e: Iterable[int]
) -> tuple[ExponentMatrix, ExponentMatrix, int]:
    """Split ``omega_E`` along the vector ``e``.

    ``omega_E(s) = omega_{E + e}(s) + omega_H(s - ord e)`` where ``H`` is
    ``E`` with ``e`` subtracted from every row and negative entries replaced by
    zero.

    Returns:
        ``(E + e, H, ord e)``.
    """
    e = tuple(e)
    if len(e) != E.m or any(a < 0 for a in e):
        raise ValueError(f"Vector {list(e)} is not in N_0^{E.m}")
    h_rows = tuple(
        tuple(max(a - b, 0) for a, b in zip(row, e, strict=True)) for row in E.rows
    )
    return E.with_row(e), ExponentMatrix(m=E.m, rows=h_rows), order(e)
