"""Jacobi number of a square matrix with undefined entries.

The Jacobi number is the largest diagonal sum ``sum_i a[i][sigma(i)]`` over
permutations ``sigma`` whose transversal avoids undefined entries.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from itertools import permutations

logger = logging.getLogger(__name__)

Entry = int | None
Matrix = Sequence[Sequence[Entry]]


def _check_square(matrix: Matrix) -> int:
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("The order matrix must be square")
    return n


def jacobi_number(matrix: Matrix) -> int | None:
    """Jacobi number via the Hungarian method on integer costs.

    Undefined cells get a cost larger than any fully defined assignment can
    reach, so an optimum touching one means no defined transversal exists.

    Args:
        matrix: ``n x n`` grid of integers or None.

    Returns:
        The Jacobi number, 0 for the empty matrix, or None when undefined.
    """
    n = _check_square(matrix)
    if n == 0:
        return 0
    defined = [a for row in matrix for a in row if a is not None]
    if not defined:
        return None

    top, bottom = max(defined), min(defined)
    forbidden = n * (top - bottom) + 1
    cost = [[0] * (n + 1)] + [
        [0] + [forbidden if a is None else top - a for a in row] for row in matrix
    ]
    infinity = forbidden * (n + 1) + 1

    # potentials and matching are 1-indexed; index 0 is the virtual column
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    match = [0] * (n + 1)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        match[0] = i
        j0 = 0
        min_v = [infinity] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0, delta, j1 = match[j0], infinity, 0
            for j in range(1, n + 1):
                if not used[j]:
                    cur = cost[i0][j] - u[i0] - v[j]
                    if cur < min_v[j]:
                        min_v[j], way[j] = cur, j0
                    if min_v[j] < delta:
                        delta, j1 = min_v[j], j
            for j in range(n + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                else:
                    min_v[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1

    entries = [matrix[match[j] - 1][j - 1] for j in range(1, n + 1)]
    if any(a is None for a in entries):
        return None
    return sum(entries)


def jacobi_number_by_permutations(matrix: Matrix) -> int | None:
    """Jacobi number by enumerating every permutation."""
    n = _check_square(matrix)
    best: int | None = None
    for sigma in permutations(range(n)):
        entries = [matrix[i][sigma[i]] for i in range(n)]
        if any(a is None for a in entries):
            continue
        total = sum(entries)
        if best is None or total > best:
            best = total
    return best
