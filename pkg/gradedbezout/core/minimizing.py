"""Minimizing coefficients and membership in the class W.

For a numerical polynomial ``omega`` of degree ``d > 0`` with leading
standard coefficient ``a``, one step of the construction is::

    v(s) = omega(s + a) - C(s + 1 + d + a, d + 1) + C(s + d + 1, d + 1)

``deg v < d``; the sequence is ``(a, 0, ..., 0, b(v))`` padded to length
``d + 1``, and ``b(c) = (c)`` for a constant. A polynomial is a Kolchin
dimension polynomial exactly when all its minimizing coefficients are
non-negative; that set is W.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

from gradedbezout.core.binomial_core import NumericalPolynomial, add, shift, sub
from gradedbezout.errors import DegreeNotDroppedError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinimizingCoefficients:
    """The sequence ``(b_d, ..., b_0)``."""

    b: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "b", tuple(self.b))
        if not self.b:
            raise ValueError("A minimizing sequence has at least one entry")

    @property
    def degree(self) -> int:
        return len(self.b) - 1

    def coefficient(self, i: int) -> int:
        """``b_i``."""
        return self.b[self.degree - i]

    def to_json(self) -> list[int]:
        return list(self.b)

    def __str__(self) -> str:
        return "[" + ", ".join(str(x) for x in self.b) + "]"


@dataclass(frozen=True)
class WMembership:
    """Decision for ``omega in W`` with the first negative coefficient as witness.

    Attributes:
        in_w: Whether every minimizing coefficient is non-negative.
        coefficients: The minimizing sequence that was examined.
        witness_index: Subscript ``i`` of the first negative ``b_i``.
        witness_value: Value of that coefficient.
    """

    in_w: bool
    coefficients: MinimizingCoefficients
    witness_index: int | None = None
    witness_value: int | None = None

    def to_json(self) -> dict:
        payload: dict = {
            "minimizing": self.coefficients.to_json(),
            "in_W": self.in_w,
        }
        if not self.in_w:
            payload["witness"] = {
                "index": self.witness_index,
                "value": self.witness_value,
            }
        return payload


@dataclass
class MinimizingStage:
    """Polynomial entering one step of the construction."""

    degree: int
    polynomial: NumericalPolynomial
    leading: int


@dataclass
class MinimizingTrace:
    """Every intermediate polynomial met while computing ``b(omega)``."""

    stages: list[MinimizingStage] = field(default_factory=list)


def _step(omega: NumericalPolynomial) -> NumericalPolynomial:
    d, a = omega.degree, omega.leading
    top = NumericalPolynomial.binomial(d + 1)
    return add(sub(shift(omega, a), shift(top, a)), top)


def _unstep(v: NumericalPolynomial, a: int, d: int) -> NumericalPolynomial:
    """Inverse of ``_step``.

    ``omega(t) = v(t - a) + C(t+1+d, d+1) - C(t+d+1-a, d+1)``
    """
    top = NumericalPolynomial.binomial(d + 1)
    return add(shift(v, -a), sub(top, shift(top, -a)))


def minimizing_coefficients(
    omega: NumericalPolynomial, trace: MinimizingTrace | None = None
) -> MinimizingCoefficients:
    """Minimizing coefficients of any numerical polynomial.

    Args:
        omega: The polynomial. The zero polynomial gets ``(0)``.
        trace: Optional collector for the intermediate polynomials.

    Returns:
        ``(b_d, ..., b_0)`` with ``d = deg omega``.

    Raises:
        DegreeNotDroppedError: If a step fails to lower the degree.
    """
    if omega.degree <= 0:
        if trace is not None:
            trace.stages.append(MinimizingStage(0, omega, omega.leading))
        return MinimizingCoefficients((omega.leading,))

    d = omega.degree
    if trace is not None:
        trace.stages.append(MinimizingStage(d, omega, omega.leading))
    v = _step(omega)
    if v.degree >= d:
        raise DegreeNotDroppedError(
            f"Step on degree {d} polynomial {omega} produced degree {v.degree}"
        )
    tail = minimizing_coefficients(v, trace)
    padding = (0,) * (d - len(tail.b))
    return MinimizingCoefficients((omega.leading, *padding, *tail.b))


def reconstruct(b: MinimizingCoefficients | Sequence[int]) -> NumericalPolynomial:
    """The unique polynomial whose minimizing coefficients are ``b``.

    Leading zeros of ``b`` are read as padding, so ``(0, 0, c)`` gives the
    constant ``c``.
    """
    seq = list(b.b if isinstance(b, MinimizingCoefficients) else b)
    if not seq:
        raise ValueError("A minimizing sequence has at least one entry")
    while len(seq) > 1 and seq[0] == 0:
        seq.pop(0)

    if len(seq) == 1:
        return NumericalPolynomial.constant(seq[0])
    # the tail carries b(v) behind its padding zeros
    v = reconstruct(seq[1:])
    return _unstep(v, seq[0], len(seq) - 1)


def is_in_w(omega: NumericalPolynomial) -> WMembership:
    """Decide ``omega in W``.

    Returns:
        The decision, the sequence, and on failure the first negative
        coefficient scanning from ``b_d`` down.
    """
    coeffs = minimizing_coefficients(omega)
    logger.debug(
        "Minimizing coefficients computed",
        extra={"degree": omega.degree, "minimizing": list(coeffs.b)},
    )
    for idx, value in enumerate(coeffs.b):
        if value < 0:
            return WMembership(
                in_w=False,
                coefficients=coeffs,
                witness_index=coeffs.degree - idx,
                witness_value=value,
            )
    return WMembership(in_w=True, coefficients=coeffs)
