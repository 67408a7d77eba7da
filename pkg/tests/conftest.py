"""Configure pytest for all tests."""

import random
import sys
from pathlib import Path

import pytest
from hypothesis import settings

# Add the project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

settings.register_profile("default", deadline=None, max_examples=50)
settings.load_profile("default")


@pytest.fixture
def rng():
    """Seeded generator so randomized suites have exact, repeatable counts."""
    return random.Random(20240607)


@pytest.fixture
def random_matrix(rng):
    """Draw a random exponent matrix with ``m <= 4``, up to 5 rows, entries <= 4."""
    from gradedbezout.core.kolchin import ExponentMatrix

    def _draw(max_m: int = 4, max_rows: int = 5, max_entry: int = 4):
        m = rng.randint(1, max_m)
        rows = tuple(
            tuple(rng.randint(0, max_entry) for _ in range(m))
            for _ in range(rng.randint(0, max_rows))
        )
        return ExponentMatrix(m=m, rows=rows)

    return _draw
