"""Tests for exact sparse rank."""

from fractions import Fraction

from gradedbezout.graded.linalg import rank


def test_identity():
    """Test the identity has full rank."""
    assert rank([{0: 1}, {1: 1}, {2: 1}]) == 3


def test_dependent_rows():
    """Test a combination of earlier rows adds nothing."""
    rows = [{0: 1, 1: 2}, {1: 1, 2: 1}, {0: 2, 1: 5, 2: 1}]
    assert rank(rows) == 2


def test_zero_rows_and_empty_matrix():
    """Test zero rows do not count."""
    assert rank([]) == 0
    assert rank([{}, {3: 0}]) == 0


def test_rational_entries():
    """Test elimination stays exact with fractions."""
    rows = [
        {0: Fraction(1, 3), 1: Fraction(1, 7)},
        {0: Fraction(7, 3), 1: 1},
        {0: 1, 1: Fraction(3, 7) + Fraction(1, 10**30)},
    ]
    assert rank(rows) == 2
