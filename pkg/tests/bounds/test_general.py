"""Tests for the general bound derivation."""

import math

import pytest

from gradedbezout.bounds.closed import bound_closed
from gradedbezout.bounds.general import bound_general, telescoped, template
from gradedbezout.core.binomial_core import NumericalPolynomial, binom
from gradedbezout.core.minimizing import reconstruct
from gradedbezout.witness import expected_typical_dimension


def closed_mismatch(report):
    flags = report.discrepancy_flags
    return any(flag.startswith("closed form gives") for flag in flags)


@pytest.mark.parametrize("e", range(1, 11))
def test_codim1_and_codim2(e):
    """Test tau=1 gives e and tau=2 gives e^2 without flags."""
    one = bound_general(1, e)
    assert one.bound == e
    assert one.discrepancy_flags == []
    two = bound_general(2, e)
    assert two.bound == e**2
    assert two.discrepancy_flags == []
    assert two.derivation.b == [e, 0]
    assert two.derivation.c == [e, e]


def test_codim3_example():
    """Test tau=3, e=1 gives b = (1, 1, 0) and bound 2."""
    report = bound_general(3, 1)
    assert report.bound == 2
    assert report.method == "general"
    assert report.orders == [1]
    assert report.derivation.b == [1, 1, 0]
    assert report.derivation.c == [1, 2, 2]
    assert report.derivation.closed_bound == 2
    assert [stage.degree for stage in report.derivation.stages] == [2, 1, 0]


def test_template_values():
    """Test the template polynomial at a few points."""
    for codim in range(1, 5):
        for e in range(1, 4):
            p = template(codim, e)
            assert p.degree == codim - 1
            for s in range(5):
                assert p(s) == binom(s + codim + e, codim) - binom(s + codim, codim)


@pytest.mark.parametrize("k", range(1, 6))
def test_not_below_witness(k):
    """Test the codimension-3 bound is at least the witness dimension."""
    assert bound_general(3, k).bound >= expected_typical_dimension(k)


def test_doubly_exponential_growth():
    """Test log-bounds roughly double with each codimension at e=3."""
    bounds = {tau: bound_general(tau, 3).bound for tau in range(3, 7)}
    for tau in range(4, 7):
        ratio = math.log(bounds[tau]) / math.log(bounds[tau - 1])
        assert 1.8 <= ratio <= 2.2, (tau, ratio)


@pytest.mark.parametrize("tau", [3, 4, 5])
def test_closed_comparison_is_flagged(tau):
    """Test a disagreement with the closed form is flagged, agreement is not."""
    for e in range(1, 6):
        report = bound_general(tau, e)
        closed = bound_closed(tau, [e]).bound
        assert report.derivation.closed_bound == closed
        assert closed_mismatch(report) == (report.bound != closed)


def test_closed_comparison_can_be_skipped():
    """Test compare_closed=False leaves no closed value."""
    report = bound_general(4, 2, compare_closed=False)
    assert report.derivation.closed_bound is None
    assert not closed_mismatch(report)


def test_monotone_in_order():
    """Test the bound grows with e."""
    for tau in range(1, 6):
        values = [bound_general(tau, e).bound for e in range(1, 7)]
        assert values == sorted(values)
        assert len(set(values)) == len(values)


@pytest.mark.parametrize("tau", range(2, 8))
def test_derivation_is_consistent(tau):
    """Test b, c, reconstruction and the telescoped identity."""
    for e in range(1, 4):
        report = bound_general(tau, e, compare_closed=False)
        derivation = report.derivation
        assert report.discrepancy_flags == []
        assert len(derivation.b) == tau
        assert derivation.b[-1] == 0
        assert all(value >= 0 for value in derivation.b)
        assert derivation.c[0] == derivation.b[0] == e
        assert derivation.c[-1] == sum(derivation.b)
        residual = template(tau, e) - NumericalPolynomial.constant(report.bound)
        assert reconstruct(derivation.b) == residual
        assert telescoped(derivation.c) == residual


def test_telescoped_codim2():
    """Test the telescoped sum for c = (e, e) and for tau = 1."""
    e = 3
    p = telescoped([e, e])
    assert p == template(2, e) - NumericalPolynomial.constant(e**2)
    for s in range(e, e + 5):
        assert p(s) == binom(s + 2, 2) - binom(s + 2 - e, 2)
    assert telescoped([0]).is_zero


def test_invalid_arguments():
    """Test tau < 1 and e < 1 are refused."""
    with pytest.raises(ValueError):
        bound_general(0, 2)
    with pytest.raises(ValueError):
        bound_general(2, 0)

