import json
import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from berge import Hypergraph
from berge.oracle import (CapExceeded, TheoremViolation, brute_force_longest_cycle, brute_force_longest_path,
                          canonical_key, check_maximality, max_edges_no_long_cycle, verify_theorem)
from conftest import K43, TWO_K43, hg, hypergraphs


def test_brute_force_examples():
    assert brute_force_longest_cycle(K43) == 4
    assert brute_force_longest_cycle(hg(3, 4, (1, 2, 3), (1, 2, 4), (1, 3, 4))) == 3
    assert brute_force_longest_cycle(hg(3, 3, (1, 2, 3))) is None
    assert brute_force_longest_path(hg(3, 3, (1, 2, 3))) == 1
    assert brute_force_longest_path(hg(3, 3)) == 0


def test_cap():
    with pytest.raises(CapExceeded):
        brute_force_longest_cycle(hg(3, 9, (1, 2, 3)))
    with pytest.raises(CapExceeded):
        max_edges_no_long_cycle(9, 3, 4)


def test_census_small():
    assert max_edges_no_long_cycle(4, 3, 4).max_edges == 3
    row = max_edges_no_long_cycle(5, 3, 4)
    assert row.max_edges == 3 and row.agreement and row.certified == 0


def test_census_report_shape():
    row = max_edges_no_long_cycle(4, 3, 4)
    body = json.loads(row.to_json())
    assert body["params"] == {"n": 4, "r": 3, "k": 4, "mode": "cycle"}
    assert body["max_edges"] == 3 and body["extremal_count"] == 4 and body["iso_classes"] == 1
    assert body["bound"] == "3" and body["agreement"] is True and len(body["hash"]) == 64
    assert body == json.loads(max_edges_no_long_cycle(4, 3, 4).to_json())


def test_census_independent_of_jobs():
    a = max_edges_no_long_cycle(6, 3, 5, jobs=1)
    b = max_edges_no_long_cycle(6, 3, 5, jobs=3)
    assert a.to_dict() == b.to_dict()


def test_census_pure_matches_compiled():
    a = max_edges_no_long_cycle(6, 3, 4, backend="pure")
    b = max_edges_no_long_cycle(6, 3, 4)
    assert a.to_dict() == b.to_dict()


def test_census_without_bound():
    row = max_edges_no_long_cycle(5, 3, 3)
    assert row.bound is None and row.agreement is None


def test_census_by_brute_force_n5():
    # every labeled 3-graph on 5 vertices, classified by the brute-force oracle
    pool = list(combinations(range(1, 6), 3))
    best, count = 0, 0
    for mask in range(1 << len(pool)):
        edges = tuple(pool[i] for i in range(len(pool)) if mask >> i & 1)
        if len(edges) < best:
            continue
        longest = brute_force_longest_cycle(Hypergraph(3, 5, edges))
        if longest is None or longest < 5:
            if len(edges) > best:
                best, count = len(edges), 0
            count += 1
    row = max_edges_no_long_cycle(5, 3, 5)
    assert (row.max_edges, row.extremal_count) == (best, count)


def test_maximality():
    assert check_maximality(max_edges_no_long_cycle(5, 3, 4))
    assert check_maximality(max_edges_no_long_cycle(6, 3, 4, mode="path"))


def test_canonical_key_relabel():
    rng = random.Random(3)
    for _ in range(50):
        h = hg(3, 6, *rng.sample(list(combinations(range(1, 7), 3)), 6))
        perm = list(range(1, 7))
        rng.shuffle(perm)
        g = hg(3, 6, *(tuple(perm[v - 1] for v in e) for e in h.edges))
        assert canonical_key(g) == canonical_key(h)
    assert canonical_key(K43) != canonical_key(K43.without((1, 2, 3)))


def test_verify_reports_rows():
    rep = verify_theorem(6, 3, 4, 5)
    assert rep.max_edges == (4, 4)
    assert rep.lines()[0] == "theorem 6: r=3 k=4 mode=path"
    with pytest.raises(ValueError):
        verify_theorem(3, 3, 4, 5)


def test_violation_is_raised(monkeypatch):
    import berge.oracle as oracle
    monkeypatch.setattr(oracle, "bound_value", lambda *a, **k: 1)
    with pytest.raises(TheoremViolation):
        verify_theorem(5, 3, 4, 4)
