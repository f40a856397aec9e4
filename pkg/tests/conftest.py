import pytest

from finpart.counting import PartitionCounter
from finpart.multiset import canonicalize
from finpart.verification.oracles import OracleBudget


@pytest.fixture
def counter():
    return PartitionCounter()


@pytest.fixture
def example():
    # {1,2,2,3}
    return canonicalize([1, 2, 2, 3])


@pytest.fixture
def small_budget():
    return OracleBudget(max_sigma=6, max_n=20, max_forest_nodes=6)
