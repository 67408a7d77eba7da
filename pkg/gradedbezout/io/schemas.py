"""Schemas for the input file formats."""

from fractions import Fraction

from pydantic import BaseModel, Field, field_validator, model_validator

from gradedbezout.core.binomial_core import NumericalPolynomial
from gradedbezout.core.kolchin import ExponentMatrix
from gradedbezout.graded.elements import ModuleElement
from gradedbezout.graded.system import GradedSystem


class MatrixFile(BaseModel):
    """Schema for an exponent matrix file."""

    m: int = Field(..., ge=1, description="Number of columns")
    rows: list[list[int]] = Field(default_factory=list, description="Exponent rows")

    def to_matrix(self) -> ExponentMatrix:
        return ExponentMatrix(m=self.m, rows=tuple(tuple(r) for r in self.rows))


def parse_text_matrix(text: str) -> MatrixFile:
    """Parse the plain-text matrix format.

    The first non-blank line holds ``m``; every further line is one row of
    whitespace-separated integers. Lines starting with ``#`` are ignored.
    """
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ValueError("Empty matrix text")
    try:
        m = int(lines[0])
        rows = [[int(tok) for tok in line.split()] for line in lines[1:]]
    except ValueError as e:
        raise ValueError(f"Matrix text must contain integers only: {e}") from e
    return MatrixFile(m=m, rows=rows)


class PolynomialFile(BaseModel):
    """Schema for a numerical polynomial given by standard coefficients."""

    standard_coeffs: list[int] = Field(
        ..., description="Standard coefficients a_d..a_0, leading first"
    )

    def to_polynomial(self) -> NumericalPolynomial:
        return NumericalPolynomial(tuple(self.standard_coeffs))


class TermSchema(BaseModel):
    """One term of a generator: ``coef * x^exp * f_comp``."""

    exp: list[int]
    comp: int = Field(1, ge=1)
    coef: str | int = "1"

    @field_validator("exp")
    def exp_non_negative(cls, v: list[int]) -> list[int]:
        """Validate that exponents are non-negative."""
        if any(a < 0 for a in v):
            raise ValueError("Exponents must be non-negative")
        return v

    @field_validator("coef")
    def coef_is_rational(cls, v: str | int) -> str | int:
        """Validate that the coefficient is an exact rational."""
        try:
            Fraction(v)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Coefficient {v!r} is not an exact rational") from e
        return v


class GeneratorSchema(BaseModel):
    """Schema for one generator."""

    terms: list[TermSchema] = Field(default_factory=list)

    def to_element(self) -> ModuleElement:
        return ModuleElement.from_terms((t.exp, t.comp, t.coef) for t in self.terms)


class LeaderMatrixSchema(BaseModel):
    """Leader exponents of one component."""

    rows: list[list[int]] = Field(default_factory=list)


class SystemFile(BaseModel):
    """Schema for a graded system, by generators or by leader matrices."""

    m: int = Field(..., ge=1)
    n: int = Field(1, ge=1)
    vars: list[str] | None = None
    generators: list[GeneratorSchema] | None = None
    leader_matrices: list[LeaderMatrixSchema] | None = None
    degrees: list[int] | None = None
    orders: list[int] | None = None

    @model_validator(mode="after")
    def one_form_only(self) -> "SystemFile":
        """Validate that exactly one of the two forms is present."""
        if (self.generators is None) == (self.leader_matrices is None):
            raise ValueError("Give exactly one of 'generators' or 'leader_matrices'")
        if self.vars is not None and len(self.vars) != self.m:
            raise ValueError(f"Expected {self.m} variable names")
        return self

    def to_system(self) -> GradedSystem:
        generators = None
        matrices = None
        if self.generators is not None:
            generators = tuple(g.to_element() for g in self.generators)
        else:
            matrices = tuple(
                ExponentMatrix(m=self.m, rows=tuple(tuple(r) for r in E.rows))
                for E in self.leader_matrices
            )
        return GradedSystem(
            m=self.m,
            n=self.n,
            generators=generators,
            leader_matrices=matrices,
            degrees=tuple(self.degrees) if self.degrees is not None else None,
            orders=tuple(self.orders) if self.orders is not None else None,
        )


class JacobiFile(BaseModel):
    """Schema for a square order matrix; null marks an undefined entry."""

    matrix: list[list[int | None]]

    @field_validator("matrix")
    def matrix_is_square(cls, v: list[list[int | None]]) -> list[list[int | None]]:
        """Validate that the matrix is square."""
        if any(len(row) != len(v) for row in v):
            raise ValueError("The order matrix must be square")
        return v
