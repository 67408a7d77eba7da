"""Tests for the closed-form bounds."""

from fractions import Fraction

import pytest

from gradedbezout.bounds.closed import (
    bound_closed,
    codim2_bound,
    codim3_bound,
    codim4_bound,
    codim5_bound,
)
from gradedbezout.errors import MultipleOrdersUnsupportedError, UnsupportedCodimError
from gradedbezout.witness import expected_typical_dimension


@pytest.mark.parametrize(
    "codim, orders, expected",
    [
        (0, [3, 1], 2),
        (1, [2, 3], 5),
        (2, [2], 4),
        (2, [1, 2], 2 * 3 + 2),
        (3, [2], 18),
        (3, [3], 72),
        (4, [1], 6),
        (4, [3], 3216),
        (5, [1], 144),
    ],
)
def test_known_values(codim, orders, expected):
    """Test the closed forms on small orders."""
    report = bound_closed(codim, orders)
    assert report.bound == expected
    assert report.method == "closed"
    assert report.orders == orders


@pytest.mark.parametrize("e", range(1, 11))
def test_formulas(e):
    """Test each closed form against its polynomial expression."""
    assert bound_closed(2, [e]).bound == e**2
    assert bound_closed(3, [e]).bound == Fraction(e**2 * (e + 1) ** 2, 2)
    assert codim3_bound(e) == e**2 * (e + 1) ** 2 // 2
    assert Fraction(codim4_bound(e)) == Fraction(
        e**2 * (e + 1) ** 2 * (3 * e**4 + 6 * e**3 + 11 * e**2 + 8 * e + 8), 24
    )
    exact = codim5_bound(e)
    report = bound_closed(5, [e])
    assert report.bound == exact.numerator // exact.denominator
    assert bool(report.discrepancy_flags) == (exact.denominator != 1)


def test_codim2_below_square_of_sum(rng):
    """Test the codimension-2 form never exceeds (sum e_i)^2."""
    for _ in range(500):
        orders = [rng.randint(0, 9) for _ in range(rng.randint(1, 5))]
        assert codim2_bound(orders) <= sum(orders) ** 2


@pytest.mark.parametrize("k", range(1, 6))
def test_codim3_attained_by_witness(k):
    """Test the codimension-3 bound equals the witness dimension."""
    assert bound_closed(3, [k]).bound == expected_typical_dimension(k)


def test_unsupported_codimension():
    """Test codimensions outside 0..5 are refused."""
    with pytest.raises(UnsupportedCodimError):
        bound_closed(6, [1])
    with pytest.raises(UnsupportedCodimError):
        bound_closed(-1, [1])


def test_multiple_orders_need_codim_below_three():
    """Test ideals-only forms refuse several orders."""
    with pytest.raises(MultipleOrdersUnsupportedError):
        bound_closed(3, [1, 2])
    assert bound_closed(2, [1, 2]).bound == 8


def test_missing_orders():
    """Test an empty order list is refused."""
    with pytest.raises(ValueError):
        bound_closed(1, [])


def test_report_json():
    """Test the serialized report."""
    assert bound_closed(3, [2]).to_json() == {
        "codim": 3,
        "orders": [2],
        "bound": 18,
        "method": "closed",
        "discrepancy_flags": [],
    }
