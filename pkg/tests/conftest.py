import pytest

from gtutte import Arrangement, FGAbelianGroup


@pytest.fixture
def example():
    """The running example: Z^2 with (-1,1), (0,2), (0,4); period 4."""
    return Arrangement(FGAbelianGroup(2), [[-1, 1], [0, 2], [0, 4]],
                       name="example")


@pytest.fixture
def mixed_torsion():
    """Z + Z/2 with one free and one torsion element."""
    return Arrangement(FGAbelianGroup(1, (2,)), [[1, 0], [0, 1]])


@pytest.fixture
def torsion_only():
    """Z/6 with two elements; everything is zero-dimensional."""
    return Arrangement(FGAbelianGroup(0, (6,)), [[2], [3]])
