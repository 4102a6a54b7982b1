import pytest
from mutualvis.graph import VertexSet, build_petersen


@pytest.fixture
def petersen():
    return build_petersen()


@pytest.fixture
def petersen_matching(petersen):
    """A largest mutually visible set of the Petersen graph: the edge
    {0, 7} plus the two edges left outside its closed neighbourhood."""
    outside = petersen.full_mask & ~(petersen.adj[0] | petersen.adj[7])
    return VertexSet(outside | 1 << 0 | 1 << 7)
