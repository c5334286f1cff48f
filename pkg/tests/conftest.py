import numpy as np
import pytest

from parzon.geom import Vector3
from parzon.isotropy import beta_from_isotropy, regular_tetrahedron
from parzon.parallelohedron import BetaWeights, CenteredTetrahedron


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def cube_tetra():
    # crosses of the support pairs are +/- the coordinate axes
    return CenteredTetrahedron(
        Vector3(1.0, 0.0, 0.0),
        Vector3(0.0, 1.0, 0.0),
        Vector3(0.0, 0.0, 1.0),
        Vector3(-1.0, -1.0, -1.0),
    )


@pytest.fixture(scope="session")
def cube_betas():
    return BetaWeights.from_sequence([1.0, 1.0, 0.0, 1.0, 0.0, 0.0])


@pytest.fixture(scope="session")
def regular_tetra():
    return regular_tetrahedron()


@pytest.fixture(scope="session")
def tocta_unit_volume(regular_tetra):
    """Regular-tetrahedron body with equal weights at unit volume."""
    width = 3.0 / 2.0 ** (7.0 / 6.0)
    return regular_tetra, beta_from_isotropy(regular_tetra, width)
