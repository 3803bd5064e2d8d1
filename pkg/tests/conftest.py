import pytest

from latpoly.polytope import LatticePolytope, cube, product_polytope, simplex


@pytest.fixture
def square():
    return cube(2)


@pytest.fixture
def triangle():
    return simplex(2)


@pytest.fixture
def prism():
    """Segment times triangle."""
    return product_polytope(simplex(1), simplex(2))


@pytest.fixture
def hirzebruch():
    return LatticePolytope([(0, 1), (1, 1), (1, 2), (0, 3)])


@pytest.fixture
def pentagon():
    return LatticePolytope([(0, 0), (4, 0), (4, 1), (2, 3), (0, 3)])
