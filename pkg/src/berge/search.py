"""Exact Berge path and cycle search.

Depth-first walks along the 2-shadow in ascending label order; each new
consecutive pair must be matched to a distinct hyperedge containing it,
with the matching extended by an augmenting path and pruned as soon as
Hall's condition fails. The hot loop lives in :mod:`berge.kernels`.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from .hypergraph import Edge, Hypergraph
from .witness import BergeCycle, BergePath


class SearchBudgetExceeded(RuntimeError):
    """The node-expansion budget ran out before the search was decided."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} node expansions")
        self.nodes = nodes


@dataclass(frozen=True)
class PairAssignment:
    pairs: tuple[tuple[int, int], ...]
    assigned: dict[tuple[int, int], Edge] = field(hash=False)

    def __iter__(self):
        return ((p, self.assigned[p]) for p in self.pairs)


def edge_masks(h: Hypergraph) -> list[int]:
    return [sum(1 << (v - 1) for v in e) for e in h.edges]


def sdr_assign(pairs, candidates) -> PairAssignment | None:
    """Distinct representatives: each pair gets its own edge containing it.

    Pairs are matched in the given order by augmenting paths, trying edges
    in lexicographic order, so the result is deterministic. Returns ``None``
    when Hall's condition fails. Repeated pairs are matched separately, but
    the returned mapping can only hold one entry per distinct pair.
    """
    pairs = tuple(tuple(p) for p in pairs)
    edges = sorted({tuple(sorted(e)) for e in candidates})
    owner: dict[int, int] = {}
    match: dict[int, int] = {}

    def augment(p, seen):
        a, b = pairs[p]
        fits = [i for i, e in enumerate(edges) if a in e and b in e]
        # a free edge first, so earlier pairs keep their choice when possible
        for i in fits:
            if i not in owner:
                owner[i] = p
                match[p] = i
                return True
        for i in fits:
            if i in seen:
                continue
            seen.add(i)
            if augment(owner[i], seen):
                owner[i] = p
                match[p] = i
                return True
        return False

    for p in range(len(pairs)):
        if not augment(p, set()):
            return None
    return PairAssignment(pairs, {pairs[p]: edges[i] for p, i in match.items()})


def _budget(node_cap: int | None) -> int:
    return 0 if not node_cap else int(node_cap)


def _canonical(h: Hypergraph, verts: list[int], closed: bool):
    """Re-pick the witness edges: lexicographically first SDR along the walk."""
    steps = list(zip(verts, verts[1:]))
    if closed:
        steps.append((verts[-1], verts[0]))
    res = sdr_assign(steps, h.edges)
    if res is None:
        raise AssertionError(f"kernel returned an unmatchable walk {verts}")
    return tuple(verts), tuple(res.assigned[p] for p in steps)


def find_berge_cycle_at_least(h: Hypergraph, k: int, node_cap: int | None = None,
                              backend: str | None = None) -> BergeCycle | None:
    """A Berge cycle with at least ``k`` vertices, or None if there is none.

    Raises :class:`SearchBudgetExceeded` if ``node_cap`` expansions are not
    enough to decide.
    """
    if k < 2:
        raise ValueError("cycle length bound must be >= 2")
    status, verts, _, nodes = kernels.cycle_at_least(h.n, edge_masks(h), k, _budget(node_cap), backend)
    if status == kernels.BUDGET:
        raise SearchBudgetExceeded(nodes)
    if status == kernels.NONE:
        return None
    return BergeCycle(*_canonical(h, [v + 1 for v in verts], True))


def find_berge_path_at_least(h: Hypergraph, k: int, node_cap: int | None = None,
                             backend: str | None = None) -> BergePath | None:
    status, verts, _, nodes = kernels.path_at_least(h.n, edge_masks(h), k, _budget(node_cap), backend)
    if status == kernels.BUDGET:
        raise SearchBudgetExceeded(nodes)
    if status == kernels.NONE:
        return None
    return BergePath(*_canonical(h, [v + 1 for v in verts], False))


def longest_berge_cycle(h: Hypergraph, node_cap: int | None = None,
                        backend: str | None = None) -> tuple[int, BergeCycle] | None:
    best = None
    k = 2
    while True:
        c = find_berge_cycle_at_least(h, k, node_cap, backend)
        if c is None:
            return None if best is None else (best.length, best)
        best = c
        k = c.length + 1


def longest_berge_path(h: Hypergraph, node_cap: int | None = None,
                       backend: str | None = None) -> tuple[int, BergePath] | None:
    """Longest Berge path; a lone vertex (length 0) when there are no edges."""
    best = None
    k = 0
    while True:
        p = find_berge_path_at_least(h, k, node_cap, backend)
        if p is None:
            return None if best is None else (best.length, best)
        best = p
        k = p.length + 1
