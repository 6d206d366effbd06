import os
import subprocess
import sys
from itertools import combinations

import pytest
from hypothesis import given, settings

from berge import kernels
from berge.search import edge_masks
from conftest import hypergraphs

needs_compiled = pytest.mark.skipif(kernels.compiled is None, reason="compiled kernels not built")


@needs_compiled
@settings(max_examples=200, deadline=None)
@given(hypergraphs(max_n=8, max_edges=14))
def test_search_parity(h):
    masks = edge_masks(h)
    for k in range(2, h.n + 2):
        assert kernels.cycle_at_least(h.n, masks, k, 0, "pure") == kernels.cycle_at_least(h.n, masks, k, 0, "compiled")
        assert kernels.path_at_least(h.n, masks, k, 0, "pure") == kernels.path_at_least(h.n, masks, k, 0, "compiled")


@needs_compiled
@pytest.mark.parametrize("n, k, mode", [(5, 4, kernels.CYCLE), (5, 5, kernels.CYCLE), (6, 4, kernels.CYCLE),
                                        (5, 4, kernels.PATH), (6, 4, kernels.PATH)])
def test_census_parity(n, k, mode):
    masks = [sum(1 << (v - 1) for v in e) for e in combinations(range(1, n + 1), 3)]
    firsts = list(range(len(masks)))
    assert kernels.census(n, masks, k, mode, firsts, "pure") == kernels.census(n, masks, k, mode, firsts, "compiled")


@needs_compiled
def test_budget_parity():
    masks = [sum(1 << (v - 1) for v in e) for e in combinations(range(1, 9), 3)]
    for budget in (1, 7, 50):
        assert kernels.cycle_at_least(8, masks, 9, budget, "pure") == kernels.cycle_at_least(8, masks, 9, budget, "compiled")


def test_wide_instances_use_pure():
    n = 70
    masks = [(1 << i) | (1 << (i + 1)) for i in range(n - 1)]
    status, verts, _, _ = kernels.path_at_least(n, masks, n - 1)
    assert status == kernels.FOUND and len(verts) == n
    if kernels.compiled is not None:
        with pytest.raises(ValueError):
            kernels.path_at_least(n, masks, 3, 0, "compiled")


def test_env_forces_pure():
    env = dict(os.environ, BERGE_PURE="1")
    out = subprocess.run([sys.executable, "-c", "import berge; print(berge.BACKEND)"],
                         capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "pure"
