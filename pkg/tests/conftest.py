from math import factorial

import pytest


def factorial_binom(n, r):
    """Binomial by factorial ratio with the zero convention; oracle for closed forms."""
    if n < 0 or r < 0 or r > n:
        return 0
    return factorial(n) // (factorial(r) * factorial(n - r))


@pytest.fixture(scope="session")
def fbinom():
    return factorial_binom
