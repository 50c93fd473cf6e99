import numpy as np
import pytest

from curves.sampling import interval_grid, rib_grid
from visualization.template import CardSpec


@pytest.fixture
def s_grid():
    """Rib parameters over the whole disk, both ends included."""
    return rib_grid(1001, "uniform-s")


@pytest.fixture
def inner_s_grid():
    """Rib parameters bounded away from the zero-length ribs."""
    return interval_grid(-0.999, 0.999, 201)


@pytest.fixture
def alpha_grid():
    return np.linspace(0.0, np.pi, 37)


@pytest.fixture
def default_card():
    return CardSpec()


@pytest.fixture
def tmp_out(tmp_path):
    out = tmp_path / "out"
    out.mkdir()
    return out
