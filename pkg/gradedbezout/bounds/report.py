"""Bound reports and derivation traces."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

from gradedbezout.utils.json_utils import lossless


class DerivationStage(BaseModel):
    """Polynomial entering one step of the minimizing construction."""

    model_config = ConfigDict(frozen=True)

    degree: int
    leading: int
    standard_coeffs: list[int]


class BoundDerivation(BaseModel):
    """Trace of the general bound derivation.

    ``b`` and ``c`` are listed from index ``tau - 1`` down to 0.
    """

    model_config = ConfigDict(frozen=True)

    b: list[int] = Field(..., description="Minimizing coefficients b_{tau-1}..b_0")
    c: list[int] = Field(..., description="Partial sums c_i = b_i + ... + b_{tau-1}")
    template: list[int] = Field(
        ..., description="Standard coefficients of C(s+tau+e,tau) - C(s+tau,tau)"
    )
    stages: list[DerivationStage] = Field(default_factory=list)
    closed_bound: int | None = Field(
        None, description="Closed-form value the derivation was compared with"
    )


class BoundReport(BaseModel):
    """Upper bound on the typical dimension for a codimension and generator orders."""

    model_config = ConfigDict(frozen=True)

    codim: int = Field(..., ge=0)
    orders: list[int] = Field(..., min_length=1)
    bound: int = Field(..., ge=0)
    method: Literal["closed", "general"]
    derivation: BoundDerivation | None = None
    discrepancy_flags: list[str] = Field(default_factory=list)

    @field_validator("orders")
    def orders_non_negative(cls, v: list[int]) -> list[int]:
        """Validate that generator orders are non-negative."""
        if any(e < 0 for e in v):
            raise ValueError("Generator orders must be non-negative")
        return v

    def to_json(self, include_trace: bool = True) -> dict:
        payload = self.model_dump(exclude_none=True)
        if not include_trace:
            payload.pop("derivation", None)
        return lossless(payload)
