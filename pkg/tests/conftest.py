import numpy as np
import pytest

from equivar import from_probabilities

# Observed 8-direction vectors of the two bundled ocean areas (N..NW order).
A64_PROBS = (0.0042, 0.0098, 0.1151, 0.6081, 0.2110, 0.0234, 0.0049, 0.0033)
A86_PROBS = (0.1192, 0.0941, 0.1157, 0.1125, 0.1299, 0.1370, 0.1489, 0.1152)


@pytest.fixture
def a64():
    return from_probabilities(A64_PROBS)


@pytest.fixture
def a86():
    return from_probabilities(A86_PROBS)


def random_distribution(rng: np.random.Generator, n: int, p_total: float = 1.0):
    """Uniform draw from the simplex scaled to p_total, as a Distribution."""
    e = rng.standard_exponential(n)
    x = e / e.sum() * p_total
    return from_probabilities(float(v) for v in x)
