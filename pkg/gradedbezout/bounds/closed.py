"""Closed-form bounds on the typical dimension in codimensions 0 to 5."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction
from itertools import combinations

from gradedbezout.bounds.report import BoundReport
from gradedbezout.errors import MultipleOrdersUnsupportedError, UnsupportedCodimError

logger = logging.getLogger(__name__)

MAX_CLOSED_CODIM = 5

# 9e^12 + 54e^11 + ... + 288, lowest degree first
_CODIM5_INNER = (288, 480, 952, 1264, 1592, 1648, 1529, 1174, 775, 420, 183, 54, 9)


def codim2_bound(orders: Sequence[int]) -> int:
    """``(sum e_i) * max e_i + sum_{i<j} e_i e_j``."""
    return sum(orders) * max(orders) + sum(a * b for a, b in combinations(orders, 2))


def codim3_bound(e: int) -> int:
    return e**2 * (e + 1) ** 2 // 2


def codim4_bound(e: int) -> int:
    return e**2 * (e + 1) ** 2 * (3 * e**4 + 6 * e**3 + 11 * e**2 + 8 * e + 8) // 24


def codim5_bound(e: int) -> Fraction:
    """Codimension-5 expression with the ``(e+1)^2`` factor taken twice."""
    inner = sum(c * e**k for k, c in enumerate(_CODIM5_INNER))
    return Fraction(e**2 * (e + 1) ** 2 * inner * (e + 1) ** 2, 1152)


def bound_closed(codim: int, orders: Sequence[int]) -> BoundReport:
    """Closed-form bound for codimension ``0..5``.

    Args:
        codim: The codimension ``tau``.
        orders: Generator orders ``e_1, ..., e_n``; one order when ``tau >= 3``.

    Returns:
        The report; a non-integral codimension-5 value is floored and flagged.

    Raises:
        UnsupportedCodimError: If ``codim`` is negative or above 5.
        MultipleOrdersUnsupportedError: If ``codim >= 3`` and several orders
            are given.
    """
    orders = list(orders)
    if not orders:
        raise ValueError("At least one generator order is required")
    if codim < 0 or codim > MAX_CLOSED_CODIM:
        raise UnsupportedCodimError(
            f"No closed form for codimension {codim}; use the general derivation"
        )
    if codim >= 3 and len(orders) > 1:
        raise MultipleOrdersUnsupportedError(
            f"Codimension {codim} bounds are stated for ideals (one order)"
        )

    flags: list[str] = []
    if codim == 0:
        bound = len(orders)
    elif codim == 1:
        bound = sum(orders)
    elif codim == 2:
        bound = codim2_bound(orders)
    elif codim == 3:
        bound = codim3_bound(orders[0])
    elif codim == 4:
        bound = codim4_bound(orders[0])
    else:
        exact = codim5_bound(orders[0])
        bound = exact.numerator // exact.denominator
        if exact.denominator != 1:
            flags.append(f"codimension-5 closed form is not integral at e={orders[0]}")
            logger.warning(
                "Non-integral closed-form bound floored",
                extra={"codim": codim, "e": orders[0]},
            )

    return BoundReport(
        codim=codim,
        orders=orders,
        bound=bound,
        method="closed",
        discrepancy_flags=flags,
    )
