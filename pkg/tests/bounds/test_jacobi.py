"""Tests for the Jacobi number."""

import pytest

from gradedbezout.bounds.jacobi import jacobi_number, jacobi_number_by_permutations


@pytest.mark.parametrize(
    "matrix, expected",
    [
        ([], 0),
        ([[7]], 7),
        ([[None]], None),
        ([[1, 2], [3, 4]], 5),
        ([[1, None], [None, None]], None),
        ([[None, 2], [3, None]], 5),
        ([[5, 0, 0], [0, 5, 0], [0, 0, 5]], 15),
        ([[1, 9, None], [None, 1, 9], [9, None, 1]], 27),
    ],
)
def test_examples(matrix, expected):
    """Test small matrices with known Jacobi numbers."""
    assert jacobi_number(matrix) == expected
    assert jacobi_number_by_permutations(matrix) == expected


def test_non_square_rejected():
    """Test a ragged matrix is refused."""
    with pytest.raises(ValueError):
        jacobi_number([[1, 2], [3]])
    with pytest.raises(ValueError):
        jacobi_number_by_permutations([[1, 2]])


def test_matches_permutation_search(rng):
    """Test the assignment solver against brute force on random matrices."""
    for _ in range(10_000):
        n = rng.randint(1, 4)
        matrix = [
            [None if rng.random() < 0.3 else rng.randint(-3, 6) for _ in range(n)]
            for _ in range(n)
        ]
        assert jacobi_number(matrix) == jacobi_number_by_permutations(matrix), matrix
