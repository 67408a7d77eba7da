"""Input systems for characteristic polynomials."""

from __future__ import annotations

from dataclasses import dataclass

from gradedbezout.core.kolchin import ExponentMatrix
from gradedbezout.errors import NonHomogeneousInputError
from gradedbezout.graded.elements import ModuleElement


@dataclass(frozen=True)
class GradedSystem:
    """A graded submodule given either by generators or by leader data.

    Form (a) lists homogeneous generators of a submodule of ``R^n`` in degree 0
    components. Form (b) gives, for each component ``j``, the exponent matrix
    ``E_j`` of its leaders and the component degree ``alpha_j``.

    Attributes:
        m: Number of indeterminates.
        n: Rank of the free module.
        generators: Form (a) generators.
        leader_matrices: Form (b) matrices ``E_1, ..., E_n``.
        degrees: Form (b) component degrees; zeros when omitted.
        orders: Declared generator orders ``e_j`` used when checking bounds on
            a form (b) system.
    """

    m: int
    n: int = 1
    generators: tuple[ModuleElement, ...] | None = None
    leader_matrices: tuple[ExponentMatrix, ...] | None = None
    degrees: tuple[int, ...] | None = None
    orders: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be positive")
        if (self.generators is None) == (self.leader_matrices is None):
            raise ValueError("Give exactly one of generators or leader_matrices")

        if self.generators is not None:
            object.__setattr__(self, "generators", tuple(self.generators))
            if self.degrees is not None and any(self.degrees):
                raise ValueError("Generator systems use zero component degrees")
            for g in self.generators:
                if not g.is_homogeneous:
                    raise NonHomogeneousInputError(
                        f"Generator {g!r} is not homogeneous"
                    )
                for term in g.terms:
                    if len(term.exponent) != self.m:
                        raise ValueError(f"Term {term} needs {self.m} variables")
                    if not 1 <= term.component <= self.n:
                        raise ValueError(f"Term {term} lies outside R^{self.n}")
        else:
            matrices = tuple(self.leader_matrices)
            object.__setattr__(self, "leader_matrices", matrices)
            if len(matrices) != self.n:
                raise ValueError(f"Expected {self.n} leader matrices")
            if any(E.m != self.m for E in matrices):
                raise ValueError(f"Every leader matrix needs {self.m} columns")

        if self.degrees is not None:
            object.__setattr__(self, "degrees", tuple(self.degrees))
            if len(self.degrees) != self.n:
                raise ValueError(f"Expected {self.n} component degrees")
        if self.orders is not None:
            object.__setattr__(self, "orders", tuple(self.orders))
            if len(self.orders) != self.n:
                raise ValueError(f"Expected {self.n} generator orders")
            if any(e < 0 for e in self.orders):
                raise ValueError("Generator orders must be non-negative")

    @property
    def is_leader_form(self) -> bool:
        return self.leader_matrices is not None

    @property
    def component_degrees(self) -> tuple[int, ...]:
        return self.degrees if self.degrees is not None else (0,) * self.n
