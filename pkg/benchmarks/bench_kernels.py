"""Time the compiled search kernels against the pure-Python twin.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Both backends answer every query; the script checks the answers agree
before reporting timings.
"""
import argparse
import random
import sys
import time
from itertools import combinations

from berge import kernels
from berge.extremal import Flavor, chain_plan, generate_block_tree
from berge.search import edge_masks


def _random_graphs(count, n, r, m, seed):
    rng = random.Random(seed)
    pool = list(combinations(range(1, n + 1), r))
    return [[sum(1 << (v - 1) for v in e) for e in rng.sample(pool, m)] for _ in range(count)]


def workloads(quick):
    out = []
    graphs = _random_graphs(40 if quick else 200, 8, 3, 12, 1)
    out.append(("cycle>=6, 8 vertices, 12 edges", lambda be: [
        kernels.cycle_at_least(8, g, 6, 0, be)[:3] for g in graphs]))
    tree = generate_block_tree(chain_plan(3, 3, Flavor.FULL))
    masks = edge_masks(tree)
    out.append(("no cycle>=5 in a 3-block tree", lambda be: [
        kernels.cycle_at_least(tree.n, masks, 5, 0, be)[:3] for _ in range(20 if quick else 100)]))
    paths = _random_graphs(20 if quick else 100, 10, 3, 14, 2)
    out.append(("path>=9, 10 vertices, 14 edges", lambda be: [
        kernels.path_at_least(10, g, 9, 0, be)[:3] for g in paths]))
    n = 6 if quick else 7
    allmasks = [sum(1 << (v - 1) for v in e) for e in combinations(range(1, n + 1), 3)]
    out.append((f"census n={n} r=3 k=4", lambda be: kernels.census(
        n, allmasks, 4, kernels.CYCLE, range(len(allmasks)), be)))
    return out


def bench(fn, backend, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(backend)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    args = ap.parse_args(argv)
    if kernels.compiled is None:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    print(f"{'workload':<34} {'pure s':>9} {'compiled s':>11} {'speedup':>8}")
    for name, fn in workloads(args.quick):
        tp, rp = bench(fn, "pure", args.repeat)
        tc, rc = bench(fn, "compiled", args.repeat)
        if rp != rc:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        print(f"{name:<34} {tp:>9.4f} {tc:>11.4f} {tp / tc:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
