"""End-to-end check of a system's typical dimension against the bounds."""

from __future__ import annotations

import logging

from pydantic import BaseModel, ConfigDict

from gradedbezout.bounds.closed import MAX_CLOSED_CODIM, bound_closed
from gradedbezout.bounds.general import bound_general
from gradedbezout.bounds.report import BoundReport
from gradedbezout.core.kolchin import DEFAULT_MAX_ANTICHAIN_ROWS
from gradedbezout.errors import InputError, MultipleOrdersUnsupportedError
from gradedbezout.graded.charpoly import characteristic, invariants_of
from gradedbezout.graded.system import GradedSystem
from gradedbezout.utils.json_utils import lossless

logger = logging.getLogger(__name__)


class BoundVerdict(BaseModel):
    """Typical dimension of a system next to the bound that applies to it.

    ``holds`` is None when no bound is asserted for the system.
    """

    model_config = ConfigDict(frozen=True)

    codim: int | None
    type_degree: int | None
    typical_dimension: int | None
    orders: list[int]
    report: BoundReport | None = None
    holds: bool | None = None
    note: str | None = None

    @property
    def bound(self) -> int | None:
        return self.report.bound if self.report is not None else None

    def to_json(self) -> dict:
        payload = {
            "codim": self.codim,
            "type_degree": self.type_degree,
            "typical_dimension": self.typical_dimension,
            "orders": self.orders,
            "bound": self.bound,
            "holds": self.holds,
        }
        if self.report is not None:
            payload["method"] = self.report.method
            payload["discrepancy_flags"] = self.report.discrepancy_flags
        if self.note:
            payload["note"] = self.note
        return lossless(payload)


def generator_orders(system: GradedSystem) -> list[int]:
    """``e_j``: the largest ``ord_{f_j} h`` over generators ``h``, 0 if none.

    Raises:
        InputError: If a leader-form system does not declare its orders.
    """
    if system.is_leader_form:
        if system.orders is None:
            raise InputError("Leader-matrix systems need generator orders")
        return list(system.orders)
    orders = []
    for j in range(1, system.n + 1):
        found = [g.order_in(j) for g in system.generators]
        orders.append(max((e for e in found if e is not None), default=0))
    return orders


def check_bound_against_system(
    system: GradedSystem, max_antichain_rows: int = DEFAULT_MAX_ANTICHAIN_ROWS
) -> BoundVerdict:
    """Compare the typical dimension of ``system`` with its applicable bound.

    Codimension 0 and the null module are reported without a verdict.
    Codimensions up to 5 use the closed forms with the largest generator order
    for ideals; larger codimensions of ideals use the general derivation.
    """
    chi = characteristic(system, max_antichain_rows).polynomial
    inv = invariants_of(chi, system.m)
    orders = generator_orders(system)
    base = {
        "codim": inv.codimension,
        "type_degree": inv.type_degree,
        "typical_dimension": inv.typical_dimension,
        "orders": orders,
    }

    if inv.null_module:
        return BoundVerdict(**base, note="null module")
    tau = inv.codimension
    if tau == 0:
        return BoundVerdict(
            **base,
            report=bound_closed(0, orders),
            note="codimension-0 bound is not asserted for arbitrary systems",
        )

    e = max(orders)
    try:
        if tau <= 2:
            report = bound_closed(tau, orders)
        elif tau <= MAX_CLOSED_CODIM:
            report = bound_closed(tau, orders if system.n > 1 else [e])
        elif system.n == 1:
            report = bound_general(tau, e)
        else:
            raise MultipleOrdersUnsupportedError(
                f"Codimension {tau} bounds are only derived for ideals"
            )
    except MultipleOrdersUnsupportedError as exc:
        return BoundVerdict(**base, note=str(exc))

    holds = inv.typical_dimension <= report.bound
    if not holds:
        logger.warning(
            "Typical dimension exceeds bound",
            extra={"codim": tau, "typical_dimension": inv.typical_dimension},
        )
    return BoundVerdict(**base, report=report, holds=holds)
