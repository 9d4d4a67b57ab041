"""Shared test data and suite builders.

ALL_5_OF_8 is every 5-element combination of {1..8} in dictionary
order, written out as an independent ground-truth list (56 rows); the
combinatorics module must reproduce it exactly, entry for entry.
"""

import random

import pytest

from radicdet import EXACT, Matrix

ALL_5_OF_8 = [
    (1, 2, 3, 4, 5), (1, 2, 3, 4, 6), (1, 2, 3, 4, 7), (1, 2, 3, 4, 8),
    (1, 2, 3, 5, 6), (1, 2, 3, 5, 7), (1, 2, 3, 5, 8), (1, 2, 3, 6, 7),
    (1, 2, 3, 6, 8), (1, 2, 3, 7, 8), (1, 2, 4, 5, 6), (1, 2, 4, 5, 7),
    (1, 2, 4, 5, 8), (1, 2, 4, 6, 7), (1, 2, 4, 6, 8), (1, 2, 4, 7, 8),
    (1, 2, 5, 6, 7), (1, 2, 5, 6, 8), (1, 2, 5, 7, 8), (1, 2, 6, 7, 8),
    (1, 3, 4, 5, 6), (1, 3, 4, 5, 7), (1, 3, 4, 5, 8), (1, 3, 4, 6, 7),
    (1, 3, 4, 6, 8), (1, 3, 4, 7, 8), (1, 3, 5, 6, 7), (1, 3, 5, 6, 8),
    (1, 3, 5, 7, 8), (1, 3, 6, 7, 8), (1, 4, 5, 6, 7), (1, 4, 5, 6, 8),
    (1, 4, 5, 7, 8), (1, 4, 6, 7, 8), (1, 5, 6, 7, 8), (2, 3, 4, 5, 6),
    (2, 3, 4, 5, 7), (2, 3, 4, 5, 8), (2, 3, 4, 6, 7), (2, 3, 4, 6, 8),
    (2, 3, 4, 7, 8), (2, 3, 5, 6, 7), (2, 3, 5, 6, 8), (2, 3, 5, 7, 8),
    (2, 3, 6, 7, 8), (2, 4, 5, 6, 7), (2, 4, 5, 6, 8), (2, 4, 5, 7, 8),
    (2, 4, 6, 7, 8), (2, 5, 6, 7, 8), (3, 4, 5, 6, 7), (3, 4, 5, 6, 8),
    (3, 4, 5, 7, 8), (3, 4, 6, 7, 8), (3, 5, 6, 7, 8), (4, 5, 6, 7, 8),
]

# The seed of the shared random exact-matrix suite: chosen once, fixed.
SUITE_SEED = 12345


def random_exact_suite(count=210, n_max=9, m_max=7, seed=SUITE_SEED):
    """Fixed-seed random exact matrices, 1 <= m <= min(n, m_max), n <= n_max,
    entries uniform in [-9, 9].  m_max defaults to 7 because the brute-force
    oracle caps cofactor expansion there."""
    rng = random.Random(seed)
    cases = []
    while len(cases) < count:
        n = rng.randint(1, n_max)
        m = rng.randint(1, min(n, m_max))
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        cases.append(Matrix(rows, kind=EXACT))
    return cases


@pytest.fixture(scope="session")
def exact_suite():
    return random_exact_suite()


@pytest.fixture
def combos_5_of_8():
    return list(ALL_5_OF_8)
