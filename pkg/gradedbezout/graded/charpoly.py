"""Characteristic polynomials of graded modules and their invariants.

For a graded module ``M = R^n / N`` with reduced Groebner basis ``G`` of ``N``
under the standard ranking, the terms of degree ``s`` in component ``j`` that
are not multiples of a leader form a basis of ``M_s`` in that component.
Counting them with Kolchin polynomials gives::

    chi_M(s) = sum_j delta1(omega_{E_j})(s - alpha_j)

A direct rank computation per degree serves as an oracle.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

from gradedbezout.core.binomial_core import NumericalPolynomial, add, delta1, shift
from gradedbezout.core.kolchin import (
    DEFAULT_MAX_ANTICHAIN_ROWS,
    ExponentMatrix,
    brute_count,
    canonicalize,
    dimension_polynomial,
)
from gradedbezout.graded.groebner import GroebnerBasis, basis_of, leader_matrices
from gradedbezout.graded.linalg import rank
from gradedbezout.graded.ranking import Exponent, ModuleTerm
from gradedbezout.graded.system import GradedSystem

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CharacteristicPolynomial:
    """Characteristic polynomial with the data it was computed from.

    Attributes:
        polynomial: ``chi_M``.
        leader_matrices: ``E_1, ..., E_n``.
        degrees: Component degrees ``alpha_j``.
        stability_bound: ``chi_M(s) = dim M_s`` for every ``s`` at or above it.
        basis: The Groebner basis, for generator systems.
    """

    polynomial: NumericalPolynomial
    leader_matrices: tuple[ExponentMatrix, ...]
    degrees: tuple[int, ...]
    stability_bound: int
    basis: GroebnerBasis | None = None

    def to_json(self) -> dict:
        payload = {
            "charpoly": self.polynomial.to_json(),
            "leader_matrices": [E.to_json() for E in self.leader_matrices],
            "degrees": list(self.degrees),
            "stability_bound": self.stability_bound,
        }
        if self.basis is not None:
            payload["groebner_basis"] = self.basis.to_json()
        return payload


def characteristic(
    system: GradedSystem, max_antichain_rows: int = DEFAULT_MAX_ANTICHAIN_ROWS
) -> CharacteristicPolynomial:
    """Compute ``chi_M`` for a system in either form.

    Leader matrices are reported canonicalized, so the result does not depend
    on the order in which rows were given.
    """
    basis = None
    raw: Sequence[ExponentMatrix]
    if system.is_leader_form:
        raw = system.leader_matrices or ()
    else:
        basis = basis_of(system)
        raw = leader_matrices(basis)
    matrices = tuple(canonicalize(E) for E in raw)
    degrees = system.component_degrees

    total = NumericalPolynomial()
    window = 0
    for E, alpha in zip(matrices, degrees, strict=True):
        result = dimension_polynomial(E, max_antichain_rows)
        total = add(total, shift(delta1(result.polynomial), -alpha))
        window = max(window, result.stability_bound + alpha)

    logger.info(
        "Characteristic polynomial computed",
        extra={
            "m": system.m,
            "n": system.n,
            "standard_coeffs": list(total.standard_coeffs),
            "stability_bound": window,
        },
    )
    return CharacteristicPolynomial(
        polynomial=total,
        leader_matrices=matrices,
        degrees=degrees,
        stability_bound=window,
        basis=basis,
    )


def charpoly(
    system: GradedSystem, max_antichain_rows: int = DEFAULT_MAX_ANTICHAIN_ROWS
) -> NumericalPolynomial:
    """``chi_M`` as a numerical polynomial."""
    return characteristic(system, max_antichain_rows).polynomial


@lru_cache(maxsize=256)
def monomials_of_degree(m: int, s: int) -> tuple[Exponent, ...]:
    """All exponent vectors in N_0^m of order exactly ``s``."""
    if s < 0:
        return ()
    if m == 1:
        return ((s,),)
    return tuple(
        (a, *rest)
        for a in range(s, -1, -1)
        for rest in monomials_of_degree(m - 1, s - a)
    )


def _graded_dimension(system: GradedSystem, s: int) -> int:
    terms = [
        ModuleTerm(theta, j)
        for j in range(1, system.n + 1)
        for theta in monomials_of_degree(system.m, s)
    ]
    columns = {t: idx for idx, t in enumerate(terms)}
    rows = []
    for g in system.generators:
        if g.is_zero or g.degree > s:
            continue
        for theta in monomials_of_degree(system.m, s - g.degree):
            rows.append({columns[t.mul(theta)]: c for t, c in g.terms.items()})
    return len(columns) - rank(rows)


def _leader_form_dimension(system: GradedSystem, s: int) -> int:
    total = 0
    for E, alpha in zip(system.leader_matrices, system.component_degrees, strict=True):
        t = s - alpha
        if t >= 0:
            total += brute_count(E, t) - (brute_count(E, t - 1) if t > 0 else 0)
    return total


def hilbert_oracle(system: GradedSystem, s_max: int) -> list[int]:
    """``dim M_s`` for ``s = 0..s_max`` computed without Groebner bases.

    Generator systems are handled by exact rank computation of the degree-``s``
    part of the submodule; leader systems by counting standard terms.
    """
    if system.is_leader_form:
        return [_leader_form_dimension(system, s) for s in range(s_max + 1)]
    return [_graded_dimension(system, s) for s in range(s_max + 1)]


@dataclass(frozen=True)
class OracleRow:
    """Comparison at one degree."""

    s: int
    oracle: int
    charpoly: int
    in_window: bool

    @property
    def match(self) -> bool:
        return self.oracle == self.charpoly


@dataclass(frozen=True)
class OracleComparison:
    """``chi_M`` against ``dim M_s`` for ``s = 0..s_max``."""

    rows: tuple[OracleRow, ...]

    @property
    def holds(self) -> bool:
        """True when every degree inside the stability window matches."""
        return all(r.match for r in self.rows if r.in_window)

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "rows": [
                {
                    "s": r.s,
                    "oracle": r.oracle,
                    "charpoly": r.charpoly,
                    "in_window": r.in_window,
                    "match": r.match,
                }
                for r in self.rows
            ],
        }


def compare_with_oracle(
    result: CharacteristicPolynomial, system: GradedSystem, s_max: int
) -> OracleComparison:
    dims = hilbert_oracle(system, s_max)
    rows = tuple(
        OracleRow(
            s=s,
            oracle=dim,
            charpoly=result.polynomial(s),
            in_window=s >= result.stability_bound,
        )
        for s, dim in enumerate(dims)
    )
    comparison = OracleComparison(rows)
    if not comparison.holds:
        logger.warning(
            "Characteristic polynomial disagrees with the rank oracle",
            extra={"mismatches": [r.s for r in rows if r.in_window and not r.match]},
        )
    return comparison


@dataclass(frozen=True)
class ModuleInvariants:
    """Invariants read off ``chi_M``.

    Attributes:
        type_degree: ``d = deg chi_M``.
        codimension: ``tau = m - 1 - d``.
        typical_dimension: Leading standard coefficient ``tau_d``.
        null_module: True when ``chi_M`` is zero; the other fields are None.
    """

    type_degree: int | None
    codimension: int | None
    typical_dimension: int | None
    null_module: bool = False

    def to_json(self) -> dict:
        return {
            "type_degree": self.type_degree,
            "codimension": self.codimension,
            "typical_dimension": self.typical_dimension,
            "null_module": self.null_module,
        }


def invariants_of(chi: NumericalPolynomial, m: int) -> ModuleInvariants:
    """Type degree, codimension and typical dimension of ``chi`` over ``m`` variables.

    Raises:
        ValueError: If ``deg chi >= m``, which no graded module over ``m``
            variables can have.
    """
    if chi.is_zero:
        return ModuleInvariants(None, None, None, null_module=True)
    d = chi.degree
    if d > m - 1:
        raise ValueError(f"Degree {d} is too large for {m} variables")
    return ModuleInvariants(
        type_degree=d, codimension=m - 1 - d, typical_dimension=chi.leading
    )
