"""Brute-force ground truth and extremal censuses.

:func:`brute_force_longest_cycle` and :func:`brute_force_longest_path` read
the definitions literally (vertex subsets, every ordering, backtracking
assignment of distinct edges) and share no code with the searcher.
The census enumerates labeled edge sets with the compiled kernels.
"""
from __future__ import annotations

import hashlib
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations

from . import kernels
from .extremal import bound_value, certify_extremal, equality_possible, theorem6_component_certify
from .hypergraph import Hypergraph

DEFAULT_CAP = 8


class CapExceeded(ValueError):
    pass


class TheoremViolation(AssertionError):
    """The oracle contradicts a theorem clause: an implementation bug."""


def _distinct_edges(pairs, edges) -> bool:
    """Backtracking check that each pair gets its own containing edge."""
    used = set()

    def place(i):
        if i == len(pairs):
            return True
        a, b = pairs[i]
        for e in edges:
            if e not in used and a in e and b in e:
                used.add(e)
                if place(i + 1):
                    return True
                used.discard(e)
        return False

    return place(0)


def _orderings(subset, adjacent, first=None):
    """Orderings of ``subset`` whose consecutive vertices share an edge."""
    order: list[int] = []
    left = set(subset)

    def extend():
        if not left:
            yield tuple(order)
            return
        for v in sorted(left):
            if order and (order[-1], v) not in adjacent:
                continue
            order.append(v)
            left.discard(v)
            yield from extend()
            left.add(v)
            order.pop()

    if first is None:
        yield from extend()
    else:
        order.append(first)
        left.discard(first)
        yield from extend()


def _adjacent(edges) -> set[tuple[int, int]]:
    return {(a, b) for e in edges for a in e for b in e if a != b}


def brute_force_longest_cycle(h: Hypergraph, cap: int = DEFAULT_CAP) -> int | None:
    if h.n > cap:
        raise CapExceeded(f"brute force is capped at n={cap}, got n={h.n}")
    edges = [frozenset(e) for e in h.edges]
    adjacent = _adjacent(edges)
    for length in range(min(h.n, len(edges)), 1, -1):
        for subset in combinations(range(1, h.n + 1), length):
            # fix the first vertex (rotation) and the direction (reflection)
            for order in _orderings(subset, adjacent, first=subset[0]):
                if length > 2 and order[1] > order[-1]:
                    continue
                if (order[-1], order[0]) not in adjacent:
                    continue
                pairs = [(order[i], order[(i + 1) % length]) for i in range(length)]
                if _distinct_edges(pairs, edges):
                    return length
    return None


def brute_force_longest_path(h: Hypergraph, cap: int = DEFAULT_CAP) -> int | None:
    if h.n > cap:
        raise CapExceeded(f"brute force is capped at n={cap}, got n={h.n}")
    if h.n == 0:
        return None
    edges = [frozenset(e) for e in h.edges]
    adjacent = _adjacent(edges)
    for length in range(min(h.n - 1, len(edges)), 0, -1):
        for subset in combinations(range(1, h.n + 1), length + 1):
            for order in _orderings(subset, adjacent):
                if order[0] > order[-1]:
                    continue
                if _distinct_edges(list(zip(order, order[1:])), edges):
                    return length
    return 0


# -- census ----------------------------------------------------------------------


def canonical_key(h: Hypergraph) -> tuple:
    """Isomorphism-invariant key: least edge list over degree-respecting relabelings."""
    by_degree: dict[int, list[int]] = {}
    for v in h.vertices:
        by_degree.setdefault(h.degree(v), []).append(v)
    classes = [by_degree[d] for d in sorted(by_degree)]
    best = None

    def assign(ci, mapping, next_label):
        nonlocal best
        if ci == len(classes):
            key = tuple(sorted(tuple(sorted(mapping[v] for v in e)) for e in h.edges))
            if best is None or key < best:
                best = key
            return
        for perm in permutations(classes[ci]):
            m = dict(mapping)
            for offset, v in enumerate(perm):
                m[v] = next_label + offset
            assign(ci + 1, m, next_label + len(perm))

    assign(0, {}, 1)
    return (h.n, tuple(sorted(h.degree(v) for v in h.vertices)), best)


@dataclass
class CensusReport:
    n: int
    r: int
    k: int
    mode: str
    max_edges: int
    extremal_count: int
    iso_classes: int
    witnesses: list[list[list[int]]]
    bound: Fraction | None
    agreement: bool | None
    visited: int
    certified: int | None = None
    extremal: list[Hypergraph] = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        body = {
            "params": {"n": self.n, "r": self.r, "k": self.k, "mode": self.mode},
            "max_edges": self.max_edges,
            "extremal_count": self.extremal_count,
            "iso_classes": self.iso_classes,
            "witnesses": self.witnesses,
            "bound": None if self.bound is None else str(self.bound),
            "agreement": self.agreement,
            "certified": self.certified,
            "visited": self.visited,
        }
        body["hash"] = hashlib.sha256(json.dumps(body, sort_keys=True).encode()).hexdigest()
        return body

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _census_chunk(args):
    n, masks, k, mode, firsts, backend = args
    return kernels.census(n, masks, k, mode, firsts, backend)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("BERGE_JOBS", "1")))
    except ValueError:
        return 1


def max_edges_no_long_cycle(n: int, r: int, k: int, mode: str = "cycle", jobs: int | None = None,
                            cap: int = DEFAULT_CAP, witnesses: int = 5, backend: str | None = None) -> CensusReport:
    """Exact maximum edge count of an n-vertex r-graph with no Berge cycle
    (or, in path mode, no Berge path) of length >= k, with the extremal census.

    The edge-set space is split by smallest edge; chunks are independent and
    merged in a fixed order, so the report does not depend on ``jobs``.
    """
    if n > cap:
        raise CapExceeded(f"census is capped at n={cap}, got n={n}")
    if mode not in ("cycle", "path"):
        raise ValueError(f"mode must be 'cycle' or 'path', got {mode!r}")
    if r < 2 or n < 1:
        raise ValueError("need r >= 2 and n >= 1")
    all_edges = list(combinations(range(1, n + 1), r))
    masks = [sum(1 << (v - 1) for v in e) for e in all_edges]
    kmode = kernels.CYCLE if mode == "cycle" else kernels.PATH
    jobs = jobs or default_jobs()
    firsts = list(range(len(masks)))
    chunks = [firsts[i::jobs] for i in range(jobs)] if jobs > 1 else [firsts]
    tasks = [(n, masks, k, kmode, c, backend) for c in chunks if c]
    if len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=len(tasks)) as pool:
            results = list(pool.map(_census_chunk, tasks))
    else:
        results = [_census_chunk(t) for t in tasks]
    best, extremal_idx, visited = 0, [()], 1  # the empty edge set is always good
    for b, ext, vis in results:
        visited += vis
        if b > best:
            best, extremal_idx = b, list(ext)
        elif b == best and b > 0:
            extremal_idx.extend(ext)
    extremal_idx.sort()
    graphs = [Hypergraph(r, n, tuple(all_edges[i] for i in idx)) for idx in extremal_idx]
    iso = len({canonical_key(g) for g in graphs})

    bound = None
    agreement = None
    certified = None
    try:
        bound = bound_value(n, r, k, path=(mode == "path"))
    except ValueError:
        pass
    if bound is not None:
        at_bound = best == bound
        agreement = best <= bound and at_bound == equality_possible(n, r, k, mode == "path")
        if mode == "cycle":
            certified = sum(1 for g in graphs if certify_extremal(g, k).valid)
        else:
            certified = sum(1 for g in graphs if theorem6_component_certify(g).valid)
        # a certificate must hold exactly when the bound is attained
        agreement = agreement and certified == (len(graphs) if at_bound else 0)
    return CensusReport(n, r, k, mode, best, len(graphs), iso,
                        [[list(e) for e in g.edges] for g in graphs[:witnesses]],
                        bound, agreement, visited, certified, graphs)


THEOREMS = {4: ("cycle", 2), 5: ("cycle", 1), 6: ("path", 1)}


@dataclass
class TheoremReport:
    theorem: int
    r: int
    k: int
    rows: list[CensusReport]

    @property
    def max_edges(self) -> tuple[int, ...]:
        return tuple(row.max_edges for row in self.rows)

    def to_dict(self) -> dict:
        return {"theorem": self.theorem, "r": self.r, "k": self.k,
                "rows": [row.to_dict() for row in self.rows]}

    def lines(self) -> list[str]:
        out = [f"theorem {self.theorem}: r={self.r} k={self.k} mode={THEOREMS[self.theorem][0]}"]
        for row in self.rows:
            out.append(f"n={row.n} max_edges={row.max_edges} bound={row.bound} extremal={row.extremal_count} "
                       f"iso={row.iso_classes} certified={row.certified} agreement={row.agreement}")
        return out


def check_maximality(report: CensusReport) -> bool:
    """Adding any edge to an extremal member creates the forbidden structure."""
    from .search import find_berge_cycle_at_least, find_berge_path_at_least

    all_edges = list(combinations(range(1, report.n + 1), report.r))
    for g in report.extremal:
        present = set(g.edges)
        for e in all_edges:
            if e in present:
                continue
            bigger = g.with_edges([*g.edges, e])
            if report.mode == "cycle":
                if find_berge_cycle_at_least(bigger, report.k) is None:
                    return False
            elif find_berge_path_at_least(bigger, report.k) is None:
                return False
    return True


def verify_theorem(theorem: int, r: int, n_min: int, n_max: int, jobs: int | None = None,
                   cap: int = DEFAULT_CAP, backend: str | None = None) -> TheoremReport:
    """Census every n in range and check the bound and its equality clause.

    Raises :class:`TheoremViolation` with the offending row on any mismatch.
    """
    if theorem not in THEOREMS:
        raise ValueError(f"theorem must be one of {sorted(THEOREMS)}")
    mode, offset = THEOREMS[theorem]
    k = r + offset
    rows = []
    for n in range(n_min, n_max + 1):
        row = max_edges_no_long_cycle(n, r, k, mode, jobs, cap, backend=backend)
        rows.append(row)
        if not row.agreement:
            raise TheoremViolation(f"theorem {theorem} fails at n={n}: {row.to_json()}")
    return TheoremReport(theorem, r, k, rows)
