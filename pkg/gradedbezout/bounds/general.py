"""General bound on the typical dimension of a homogeneous ideal in any codimension.

For an ideal of codimension ``tau`` generated in order at most ``e``, applying
``delta1`` to the dimension identity until ``chi`` becomes the constant
``tau_d`` leaves::

    u(s) = C(s + tau + e, tau) - C(s + tau, tau) - tau_d,   u in W

A constant passes through every step of the minimizing construction, so
``b_0(u) = b_0(template) - tau_d`` and every other coefficient is forced by
the template alone. Non-negativity of ``b_0(u)`` gives
``tau_d <= b_0(template)``, attained with ``b_0 = 0``.
"""

from __future__ import annotations

import logging

from gradedbezout.bounds.closed import MAX_CLOSED_CODIM, bound_closed
from gradedbezout.bounds.report import BoundDerivation, BoundReport, DerivationStage
from gradedbezout.core.binomial_core import NumericalPolynomial, add, shift, sub
from gradedbezout.core.minimizing import (
    MinimizingTrace,
    minimizing_coefficients,
    reconstruct,
)
from gradedbezout.errors import DegreeNotDroppedError, NonForcedCoefficientError
from gradedbezout.utils.log_utils import summarize_for_log

logger = logging.getLogger(__name__)


def template(codim: int, e: int) -> NumericalPolynomial:
    """``C(s + tau + e, tau) - C(s + tau, tau)``."""
    top = NumericalPolynomial.binomial(codim)
    return sub(shift(top, e), top)


def telescoped(c: list[int]) -> NumericalPolynomial:
    """``sum_{k=1}^{tau} [C(s+k-c_k, k) - C(s+k-c_{k-1}, k)]`` with ``c_tau = 0``.

    Args:
        c: ``(c_{tau-1}, ..., c_0)``.
    """
    codim = len(c)
    by_index = {codim: 0} | {codim - 1 - idx: value for idx, value in enumerate(c)}
    total = NumericalPolynomial()
    for k in range(1, codim + 1):
        basis = NumericalPolynomial.binomial(k)
        term = sub(shift(basis, -by_index[k]), shift(basis, -by_index[k - 1]))
        total = add(total, term)
    return total


def bound_general(codim: int, e: int, compare_closed: bool = True) -> BoundReport:
    """Derive the typical-dimension bound for an ideal of codimension ``codim``.

    Args:
        codim: ``tau >= 1``.
        e: Largest generator order, ``e >= 1``.
        compare_closed: Cross-check against the closed form when ``tau <= 5``.

    Returns:
        The report with the b and c sequences, the stage polynomials and any
        discrepancy flags.

    Raises:
        NonForcedCoefficientError: If a coefficient is not forced by the
            degree-drop condition.
    """
    if codim < 1:
        raise ValueError("The general derivation needs codimension at least 1")
    if e < 1:
        raise ValueError("The generator order must be positive")

    p = template(codim, e)
    trace = MinimizingTrace()
    try:
        coeffs = minimizing_coefficients(p, trace)
    except DegreeNotDroppedError as exc:
        raise NonForcedCoefficientError(str(exc)) from exc

    bound = coeffs.b[-1]
    b = [*coeffs.b[:-1], 0]
    c: list[int] = []
    running = 0
    for value in b:
        running += value
        c.append(running)

    flags: list[str] = []
    if len(b) != codim:
        flags.append(f"template degree {p.degree} does not match codimension {codim}")
    elif codim > 1 and c[0] != e:
        flags.append(f"c_{codim - 1} = {c[0]} differs from e = {e}")
    residual = sub(p, NumericalPolynomial.constant(bound))
    if reconstruct(b) != residual:
        flags.append("minimizing sequence does not reconstruct the template")
    if len(c) == codim and telescoped(c) != residual:
        flags.append("telescoped identity fails for the c sequence")

    closed_value = None
    if compare_closed and codim <= MAX_CLOSED_CODIM:
        closed_value = bound_closed(codim, [e]).bound
        if closed_value != bound:
            flags.append(
                f"closed form gives {closed_value}, derivation gives {bound}"
                f" (codim={codim}, e={e})"
            )

    if flags:
        logger.warning(
            "Bound derivation flagged",
            extra={"codim": codim, "e": e, "flags": flags},
        )
    logger.debug(
        "General bound derived",
        extra={"codim": codim, "e": e, "bound": summarize_for_log(bound)},
    )
    return BoundReport(
        codim=codim,
        orders=[e],
        bound=bound,
        method="general",
        derivation=BoundDerivation(
            b=b,
            c=c,
            template=list(p.standard_coeffs),
            stages=[
                DerivationStage(
                    degree=stage.degree,
                    leading=stage.leading,
                    standard_coeffs=list(stage.polynomial.standard_coeffs),
                )
                for stage in trace.stages
            ],
            closed_bound=closed_value,
        ),
        discrepancy_flags=flags,
    )
