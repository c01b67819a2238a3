from pathlib import Path

import pytest

from primeclique.encoding import Graph

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def p3() -> Graph:
    """Path a-b-c on vertices 1, 2, 3."""
    return Graph.from_edges(3, [(1, 2), (2, 3)])


@pytest.fixture
def k3() -> Graph:
    return Graph.from_edges(3, [(1, 2), (1, 3), (2, 3)])


@pytest.fixture
def g5() -> Graph:
    """Five vertices p,a,b,c,d = 1..5 with edges pa, pb, pc, ab, ad."""
    return Graph.from_edges(5, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 5)])


@pytest.fixture
def paw() -> Graph:
    """Four vertices p,a,b,c = 1..4 with edges pa, pb, ab, ac."""
    return Graph.from_edges(4, [(1, 2), (1, 3), (2, 3), (2, 4)])
