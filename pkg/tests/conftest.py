import pytest

from roughtol import Covering, Equivalence, Tolerance, Universe, induced_tolerance, kernel


@pytest.fixture
def u4():
    return Universe("1234")


@pytest.fixture
def omit_one_t(u4):
    """Tolerance on four elements where each neighbourhood omits one element;
    its kernel is the identity and it is induced by no irredundant covering."""
    return Tolerance.from_neighborhoods(u4, {"1": "123", "2": "124", "3": "134", "4": "234"})


@pytest.fixture
def coarse_e(u4):
    return Equivalence.from_partition(u4, [["1", "2"], ["3"], ["4"]])


@pytest.fixture
def overlap_cov(u4):
    """Two overlapping triangles; irredundant, induces a compatible tolerance
    for its kernel (which equals coarse_e)."""
    return Covering.from_labels(u4, [["1", "2", "3"], ["1", "2", "4"]])


@pytest.fixture
def overlap_t(overlap_cov):
    return induced_tolerance(overlap_cov)


@pytest.fixture
def u6():
    return Universe("123456")


@pytest.fixture
def chain_cov(u6):
    """Two overlapping four-element blocks covering six elements."""
    return Covering.from_labels(u6, [["1", "2", "3", "4"], ["3", "4", "5", "6"]])


@pytest.fixture
def chain_t(chain_cov):
    return induced_tolerance(chain_cov)


@pytest.fixture
def kernel_e6(chain_t):
    return kernel(chain_t)


@pytest.fixture
def split_e6(u6):
    """Refines kernel_e6 by splitting its middle class into singletons."""
    return Equivalence.from_partition(u6, [["1", "2"], ["3"], ["4"], ["5", "6"]])
