import numpy as np
import pytest

from stereoquad import ellipsoid, paraboloid

SEED = 20260811


def log_uniform(rng, lo, hi, size=None):
    return np.exp(rng.uniform(np.log(lo), np.log(hi), size))


def random_quadrics(n, lo, hi, seed=SEED):
    """n random quadrics of alternating kind, coefficients log-uniform in [lo, hi]."""
    rng = np.random.default_rng(seed)
    quads = []
    for i in range(n):
        a, b, c = log_uniform(rng, lo, hi, 3)
        quads.append(ellipsoid(a, b, c) if i % 2 == 0 else paraboloid(a, b, c))
    return quads


def valid_heights(q, count, seed=SEED):
    """count section heights inside the quadric's valid range, pole-adjacent included.

    Heights are c(1 - g) with g log-uniform; the paraboloid side also reaches
    well below z = 0.
    """
    rng = np.random.default_rng(seed + 1)
    hi = 1.9 if q.kind == "ellipsoid" else 10.0
    gaps = log_uniform(rng, 1e-3, hi, count)
    return [q.c * (1.0 - g) for g in gaps]


@pytest.fixture
def canonical_quadrics():
    return [
        ellipsoid(2.0, 1.0, 2.0),
        ellipsoid(1.0, 1.0, 1.0),
        ellipsoid(1.5, 0.7, 1.2),
        paraboloid(1.0, 1.0, 1.0),
        paraboloid(3.0, 2.0, 2.0),
        paraboloid(1.0, 2.0, 4.0),
    ]
