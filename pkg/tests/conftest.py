import pytest

from lieschur.catalog import heisenberg
from lieschur.free_lie import free_nilpotent
from lieschur.lie_core import LieAlgebra
from lieschur.log_manager import LogManager


@pytest.fixture(autouse=True)
def default_log_manager():
    """Every test starts from the default console configuration."""
    manager = LogManager()
    manager.setup()
    yield manager
    manager.reset()


@pytest.fixture
def heis():
    return heisenberg(1)


@pytest.fixture
def free_2_3():
    return free_nilpotent(2, 3)


@pytest.fixture
def broken_heis():
    """Heisenberg with an extra [e1, e3] = e1, which breaks the Jacobi identity."""
    return LieAlgebra(3, {(0, 1): {2: 1}, (0, 2): {0: 1}})
