"""Tests for characteristic polynomials and the rank oracle."""

import pytest

from gradedbezout.core.binomial_core import NumericalPolynomial, binom
from gradedbezout.core.kolchin import ExponentMatrix
from gradedbezout.errors import NonHomogeneousInputError
from gradedbezout.graded.charpoly import (
    characteristic,
    charpoly,
    compare_with_oracle,
    hilbert_oracle,
    invariants_of,
    monomials_of_degree,
)
from gradedbezout.graded.elements import ModuleElement
from gradedbezout.graded.system import GradedSystem
from gradedbezout.witness import example_system


def ideal(m, *monomials):
    gens = tuple(ModuleElement.from_terms([(exp, 1, 1)]) for exp in monomials)
    return GradedSystem(m=m, n=1, generators=gens)


def random_system(rng):
    m, n = rng.randint(1, 3), rng.randint(1, 2)
    gens = []
    for _ in range(rng.randint(0, 4)):
        degree = rng.randint(1, 3)
        items = []
        for _ in range(rng.randint(1, 3)):
            cut = sorted(rng.randint(0, degree) for _ in range(m - 1))
            exponent = tuple(b - a for a, b in zip([0, *cut], [*cut, degree]))
            items.append((exponent, rng.randint(1, n), rng.randint(-3, 3)))
        gens.append(ModuleElement.from_terms(items))
    return GradedSystem(m=m, n=n, generators=tuple(gens))


def test_single_corner_charpoly():
    """Test {x1*x2} has constant characteristic polynomial 2."""
    system = ideal(2, (1, 1))
    result = characteristic(system)
    assert result.polynomial == NumericalPolynomial.constant(2)
    assert result.stability_bound == 2
    assert hilbert_oracle(system, 5) == [1, 2, 2, 2, 2, 2]


def test_finite_quotient():
    """Test {x1^2, x2^2} has zero characteristic polynomial."""
    system = ideal(2, (2, 0), (0, 2))
    assert charpoly(system).is_zero
    assert hilbert_oracle(system, 4) == [1, 2, 1, 0, 0]


def test_single_square():
    """Test {x1^2} has dimensions 1, 2, 2, 2, ..."""
    system = ideal(2, (2, 0))
    assert hilbert_oracle(system, 4) == [1, 2, 2, 2, 2]
    assert charpoly(system) == NumericalPolynomial.constant(2)


@pytest.mark.parametrize("m, n", [(1, 1), (2, 1), (3, 1), (2, 2), (3, 2)])
def test_free_module(m, n):
    """Test the empty system: dimensions n*C(s+m-1, m-1), leading coefficient n."""
    system = GradedSystem(m=m, n=n, generators=())
    chi = charpoly(system)
    assert chi.degree == m - 1
    assert chi.leading == n
    assert hilbert_oracle(system, 4) == [n * binom(s + m - 1, m - 1) for s in range(5)]
    inv = invariants_of(chi, m)
    assert inv.codimension == 0
    assert inv.typical_dimension == n


def test_module_example():
    """Test R^2 / (x1*f1 + x2*f2) has dimension s + 2."""
    g = ModuleElement.from_terms([((1, 0), 1, 1), ((0, 1), 2, 1)])
    system = GradedSystem(m=2, n=2, generators=(g,))
    assert charpoly(system) == NumericalPolynomial((1, 1))
    assert hilbert_oracle(system, 4) == [2, 3, 4, 5, 6]


@pytest.mark.parametrize("k, expected", [(1, 2), (2, 18), (3, 72)])
def test_witness_leader_form(k, expected):
    """Test the codimension-3 witness in leader form."""
    system = example_system(k)
    chi = charpoly(system)
    assert chi == NumericalPolynomial.constant(expected)
    inv = invariants_of(chi, 4)
    assert (inv.type_degree, inv.codimension, inv.typical_dimension) == (0, 3, expected)


def test_witness_leader_form_oracle():
    """Test standard-term counting agrees inside the window."""
    system = example_system(1)
    result = characteristic(system)
    comparison = compare_with_oracle(result, system, result.stability_bound + 2)
    assert comparison.holds
    assert all(row.oracle == 2 for row in comparison.rows if row.in_window)


def test_component_degrees_shift():
    """Test a generator of degree 1 shifts the count: chi(s) = s."""
    system = GradedSystem(
        m=2, n=1, leader_matrices=(ExponentMatrix(m=2, rows=()),), degrees=(1,)
    )
    chi = charpoly(system)
    assert chi == NumericalPolynomial((1, -1))
    assert hilbert_oracle(system, 4) == [0, 1, 2, 3, 4]


def test_random_systems_match_oracle(rng):
    """Test 50 random homogeneous systems against the rank oracle up to s = 10."""
    for _ in range(50):
        system = random_system(rng)
        result = characteristic(system)
        comparison = compare_with_oracle(result, system, 10)
        assert comparison.holds, system
        for row in comparison.rows:
            if row.s >= result.stability_bound:
                assert row.oracle == result.polynomial(row.s)


def test_degree_bound(rng):
    """Test chi has degree at most m - 1."""
    for _ in range(20):
        system = random_system(rng)
        assert charpoly(system).degree <= system.m - 1


def test_invariants_examples():
    """Test type, codimension and typical dimension."""
    inv = invariants_of(NumericalPolynomial.constant(18), 4)
    assert (inv.type_degree, inv.codimension, inv.typical_dimension) == (0, 3, 18)
    inv = invariants_of(NumericalPolynomial((2, -1)), 2)
    assert (inv.type_degree, inv.codimension, inv.typical_dimension) == (1, 0, 2)
    inv = invariants_of(NumericalPolynomial.binomial(3), 4)
    assert (inv.codimension, inv.typical_dimension) == (0, 1)


def test_null_module():
    """Test the zero polynomial is reported as the null module."""
    inv = invariants_of(NumericalPolynomial(), 3)
    assert inv.null_module
    assert inv.to_json() == {
        "type_degree": None,
        "codimension": None,
        "typical_dimension": None,
        "null_module": True,
    }


def test_invariants_reject_large_degree():
    """Test a degree of m or more cannot come from a graded module."""
    with pytest.raises(ValueError):
        invariants_of(NumericalPolynomial.binomial(2), 2)


def test_monomials_of_degree():
    """Test enumeration order and count."""
    assert monomials_of_degree(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert len(monomials_of_degree(3, 4)) == binom(6, 2)
    assert monomials_of_degree(2, -1) == ()


def test_system_validation():
    """Test malformed systems are refused."""
    with pytest.raises(ValueError):
        GradedSystem(m=2, n=1)
    with pytest.raises(ValueError):
        GradedSystem(m=2, n=2, leader_matrices=(ExponentMatrix(m=2, rows=()),))
    with pytest.raises(ValueError):
        GradedSystem(
            m=2, n=1, generators=(ModuleElement.from_terms([((1, 0, 0), 1, 1)]),)
        )
    with pytest.raises(ValueError):
        GradedSystem(
            m=2, n=1, generators=(ModuleElement.from_terms([((1, 0), 2, 1)]),)
        )


def test_non_homogeneous_system_rejected():
    """Test a generator mixing term orders is refused before any oracle lookup."""
    g = ModuleElement.from_terms([((2, 0), 1, 1), ((1, 0), 1, 1)])
    with pytest.raises(NonHomogeneousInputError):
        GradedSystem(m=2, n=1, generators=(g,))
