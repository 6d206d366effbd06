import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from berge import bound_value, extract_long_cycle, validate_berge_cycle
from berge.extract import _escape_cycle
from conftest import K43, hg, hypergraphs


def test_violator_needs_no_fallback():
    h = hg(3, 5, *K43.edges, (1, 4, 5))
    ex = extract_long_cycle(h, 4)
    assert not ex.fallback and ex.cycle.length >= 4 and validate_berge_cycle(h, ex.cycle)


def test_within_bound_falls_back():
    ex = extract_long_cycle(K43, 5)
    assert ex.fallback and ex.cycle is None and ex.trace[-1] == "exhaustive search"


def test_bad_k():
    with pytest.raises(ValueError):
        extract_long_cycle(K43, 6)


def test_escape_through_straddling_edge():
    # {1,2,3,4} carries three edges and 3 4 5 straddles it
    h = hg(3, 6, (1, 2, 3), (1, 2, 4), (1, 3, 4), (3, 4, 5), (5, 6, 1))
    c = _escape_cycle(h, (1, 2, 3, 4))
    assert c is not None and c.length >= 5 and validate_berge_cycle(h, c)


@settings(max_examples=300, deadline=None)
@given(hypergraphs(r=3, min_n=4, max_n=8))
def test_violators_yield_long_cycles(h):
    for k in (4, 5):
        if h.e > bound_value(h.n, 3, k):
            ex = extract_long_cycle(h, k)
            assert ex.cycle is not None and ex.cycle.length >= k
            assert validate_berge_cycle(h, ex.cycle)


def test_constructive_rate_r4():
    rng = random.Random(11)
    pool = list(combinations(range(1, 9), 4))
    runs = fallbacks = 0
    while runs < 60:
        h = hg(4, 8, *rng.sample(pool, rng.randint(9, 20)))
        for k in (5, 6):
            if h.e > bound_value(8, 4, k):
                ex = extract_long_cycle(h, k)
                assert ex.cycle is not None and ex.cycle.length >= k
                runs += 1
                fallbacks += ex.fallback
    assert fallbacks == 0
