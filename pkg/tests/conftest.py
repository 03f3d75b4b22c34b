import numpy as np
import pytest

from grassdist.numerics import Field, Tolerance


@pytest.fixture
def tol():
    return Tolerance()


@pytest.fixture(params=[Field.REAL, Field.COMPLEX], ids=["real", "complex"])
def field(request):
    return request.param


def random_matrix(rng, n, k, field):
    g = rng.standard_normal((n, k))
    if field is Field.COMPLEX:
        g = g + 1j * rng.standard_normal((n, k))
    return g


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
