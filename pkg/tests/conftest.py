from itertools import combinations

import pytest
from hypothesis import strategies as st

from berge import Hypergraph


def hg(r, n, *edges):
    return Hypergraph(r, n, tuple(tuple(e) for e in edges))


K43 = hg(3, 4, (1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4))
# two copies of K_4^3 glued at vertex 4
TWO_K43 = hg(3, 7, (1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (4, 5, 6), (4, 5, 7), (4, 6, 7), (5, 6, 7))


@st.composite
def hypergraphs(draw, r=3, min_n=3, max_n=7, max_edges=None):
    n = draw(st.integers(min_value=max(min_n, r), max_value=max_n))
    pool = list(combinations(range(1, n + 1), r))
    cap = len(pool) if max_edges is None else min(max_edges, len(pool))
    chosen = draw(st.lists(st.sampled_from(pool), max_size=cap, unique=True))
    return Hypergraph(r, n, tuple(chosen))


@pytest.fixture
def k43():
    return K43


@pytest.fixture
def two_k43():
    return TWO_K43
