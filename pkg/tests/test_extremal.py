import json
from fractions import Fraction
from itertools import combinations

import pytest

from berge import (BlockTreePlan, Flavor, HypergraphError, bound_value, certify_extremal, find_berge_cycle_at_least,
                   generate_block_tree, theorem6_component_certify, two_shadow)
from berge.extremal import all_plans, chain_plan, equality_possible, plan_blocks, star_plan
from berge.hypergraph import hypergraph_blocks
from berge.oracle import brute_force_longest_cycle
from conftest import K43, TWO_K43, hg


class TestGenerate:
    def test_single_full_block(self):
        h = generate_block_tree(BlockTreePlan(3, Flavor.FULL))
        assert h == K43

    def test_two_minus_blocks(self):
        h = generate_block_tree(chain_plan(3, 2, Flavor.MINUS))
        assert (h.n, h.e) == (7, 6) and h.e == bound_value(7, 3, 4)

    def test_full_chain_r4(self):
        h = generate_block_tree(chain_plan(4, 3, Flavor.FULL))
        assert (h.n, h.e) == (13, 15) and h.e == Fraction(5, 4) * 12

    def test_minus_default_omits_subset_avoiding_smallest(self):
        h = generate_block_tree(BlockTreePlan(3, Flavor.MINUS))
        assert h.edges == ((1, 2, 3), (1, 2, 4), (1, 3, 4))

    def test_minus_override(self):
        h = generate_block_tree(BlockTreePlan(3, Flavor.MINUS, (), (3,)))
        assert (1, 2, 3) not in h.edges and h.e == 3

    def test_star(self):
        assert plan_blocks(star_plan(3, 3, Flavor.FULL)) == [(1, 2, 3, 4), (1, 5, 6, 7), (1, 8, 9, 10)]

    @pytest.mark.parametrize("plan", [
        BlockTreePlan(3, Flavor.FULL, ((1, 0),)),         # attaches to itself
        BlockTreePlan(3, Flavor.FULL, ((0, 4),)),         # no fifth vertex
        BlockTreePlan(3, Flavor.FULL, (), (0,)),          # omission on a full block
        BlockTreePlan(3, Flavor.MINUS, ((0, 0),), (0,)),  # one omission for two blocks
    ])
    def test_invalid_plans(self, plan):
        with pytest.raises(HypergraphError):
            generate_block_tree(plan)

    def test_plan_json(self):
        plan = BlockTreePlan(3, Flavor.MINUS, ((0, 1), (1, 3)), (0, 2, 1))
        assert BlockTreePlan.from_json(json.dumps(plan.to_dict())) == plan
        with pytest.raises(HypergraphError):
            BlockTreePlan.from_json('{"r": 3}')

    @pytest.mark.parametrize("r", [3, 4])
    @pytest.mark.parametrize("flavor", list(Flavor))
    def test_blocks_recovered(self, r, flavor):
        for plan in all_plans(r, 3, flavor):
            h = generate_block_tree(plan)
            assert h.n == plan.b * r + 1
            assert h.e == plan.b * (r + 1 if flavor is Flavor.FULL else r)
            got = sorted(tuple(sorted(b)) for b in hypergraph_blocks(h).blocks)
            assert got == sorted(plan_blocks(plan))


class TestBounds:
    def test_values(self):
        assert bound_value(7, 3, 4) == 6
        assert bound_value(7, 3, 5) == 8
        assert bound_value(4, 3, 4, path=True) == 4
        assert bound_value(6, 3, 5) == Fraction(20, 3)

    @pytest.mark.parametrize("args", [(7, 3, 6), (7, 3, 3), (0, 3, 4), (7, 1, 2)])
    def test_unsupported(self, args):
        with pytest.raises(ValueError):
            bound_value(*args)

    def test_path_bound_needs_r_plus_one(self):
        with pytest.raises(ValueError):
            bound_value(8, 3, 5, path=True)

    def test_equality_possible(self):
        assert [n for n in range(2, 12) if equality_possible(n, 3, 4)] == [4, 7, 10]
        assert [n for n in range(2, 12) if equality_possible(n, 3, 4, path=True)] == [4, 8]


class TestCertify:
    def test_minus_tree(self):
        cert = certify_extremal(generate_block_tree(chain_plan(3, 2, Flavor.MINUS)), 4)
        assert cert.valid and cert.e == cert.bound == 6 and len(cert.verdicts) == 2

    def test_k43_fails_for_k4(self):
        cert = certify_extremal(K43, 4)
        assert not cert.valid and "needs exactly 3" in cert.reason
        assert cert.offending_block == (1, 2, 3, 4)
        assert find_berge_cycle_at_least(K43, 4) is not None

    def test_bridges_fail(self):
        cert = certify_extremal(hg(3, 5, (1, 2, 3), (3, 4, 5)), 5)
        assert not cert.valid and cert.reason == "block is not K_4" and cert.offending_block == (1, 2, 3)

    def test_disconnected(self):
        cert = certify_extremal(hg(3, 5, (1, 2, 3), (1, 2, 4), (1, 3, 4)), 4)
        assert not cert.valid and not cert.connected

    def test_summary(self):
        text = certify_extremal(TWO_K43, 5).summary()
        assert text.splitlines()[0] == "certificate k=5: valid"

    def test_theorem6(self):
        assert theorem6_component_certify(K43).valid
        double = hg(3, 8, *K43.edges, *((a + 4, b + 4, c + 4) for a, b, c in K43.edges))
        cert = theorem6_component_certify(double)
        assert cert.valid and double.e == double.n == 8 and len(cert.components) == 2
        bad = theorem6_component_certify(K43.without((2, 3, 4)))
        assert not bad.valid and "3 edges" in bad.components[0].reason


@pytest.mark.parametrize("r", [3, 4])
def test_minus_block_longest_cycle_is_r(r):
    s = tuple(range(1, r + 2))
    for omit in combinations(s, r):
        h = hg(r, r + 1, *(e for e in combinations(s, r) if e != omit))
        assert brute_force_longest_cycle(h) == r


def test_shadow_of_generated_tree_is_connected_cliques():
    h = generate_block_tree(star_plan(3, 2, Flavor.MINUS))
    assert len(two_shadow(h).pairs) == 12
