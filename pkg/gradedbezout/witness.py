"""A codimension-3 ideal whose typical dimension reaches ``e^2 (e+1)^2 / 2``.

In a ring of differential operators in four indeterminates the ideal has a
Groebner basis with leaders ``x1^k``, ``x2^k`` and ``x1^(k-i) x3^(ik) x4^i``
for ``i = 1..k``. No completion is run for that ring; the leaders enter the
characteristic polynomial computation directly.
"""

from gradedbezout.core.kolchin import ExponentMatrix
from gradedbezout.graded.system import GradedSystem


def example_leader_matrix(k: int) -> ExponentMatrix:
    """Leader exponents for parameter ``k >= 1``."""
    if k < 1:
        raise ValueError("k must be positive")
    rows = [(k, 0, 0, 0), (0, k, 0, 0)]
    rows += [(k - i, 0, i * k, i) for i in range(1, k + 1)]
    return ExponentMatrix(m=4, rows=tuple(rows))


def example_system(k: int) -> GradedSystem:
    """The ideal as a leader-form system with generator order ``k``."""
    return GradedSystem(
        m=4, n=1, leader_matrices=(example_leader_matrix(k),), orders=(k,)
    )


def expected_typical_dimension(k: int) -> int:
    return k**2 * (k + 1) ** 2 // 2
