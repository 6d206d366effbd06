"""Berge paths through a saturated (r+1)-set.

If an (r+1)-set holds r of its r-subsets as hyperedges, any two of its
vertices are joined by a Berge path of length r using only those edges;
with r-1 edges (and r >= 4) a path of length r-1 exists. Both are built
the same way: fix a vertex order from ``u`` to ``v`` (the shadow of the
set is complete), then match consecutive pairs to distinct edges.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .hypergraph import Edge
from .search import sdr_assign
from .witness import BergeCycle, BergePath


class Mode(Enum):
    FULL = "full"
    NEAR = "near"


@dataclass(frozen=True)
class SaturatedSet:
    s: tuple[int, ...]
    inside_edges: tuple[Edge, ...]
    mode: Mode

    def __post_init__(self):
        s = tuple(sorted(self.s))
        edges = tuple(sorted(tuple(sorted(e)) for e in self.inside_edges))
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "inside_edges", edges)
        r = len(s) - 1
        if r < 2 or len(set(s)) != len(s):
            raise ValueError("saturated set needs r+1 >= 3 distinct vertices")
        if len(set(edges)) != len(edges):
            raise ValueError("duplicate inside edge")
        for e in edges:
            if len(e) != r or not set(e) <= set(s):
                raise ValueError(f"edge {list(e)} is not an r-subset of {list(s)}")
        if self.mode is Mode.FULL:
            if r < 3:
                raise ValueError("FULL requires r >= 3")
            if len(edges) != r:
                raise ValueError(f"FULL needs exactly r={r} inside edges, got {len(edges)}")
        else:
            if r < 4:
                raise ValueError("NEAR requires r >= 4")
            if len(edges) != r - 1:
                raise ValueError(f"NEAR needs exactly r-1={r - 1} inside edges, got {len(edges)}")

    @property
    def r(self) -> int:
        return len(self.s) - 1


def saturated_shadow_is_complete(ss: SaturatedSet) -> bool:
    return all(any(a in e and b in e for e in ss.inside_edges) for a, b in combinations(ss.s, 2))


def saturated_path(ss: SaturatedSet, u: int, v: int) -> BergePath:
    """Berge path from ``u`` to ``v`` of length r (FULL) or r-1 (NEAR).

    The vertex order is the lexicographically smallest sequence starting at
    ``u`` and ending at ``v`` of the right length.
    """
    if u == v or u not in ss.s or v not in ss.s:
        raise ValueError(f"need two distinct vertices of {list(ss.s)}, got {u}, {v}")
    middle = [w for w in ss.s if w not in (u, v)]
    if ss.mode is Mode.NEAR:
        middle = middle[: ss.r - 2]
    order = [u, *middle, v]
    pairs = list(zip(order, order[1:]))
    assignment = sdr_assign(pairs, ss.inside_edges)
    if assignment is None:
        raise AssertionError(f"Hall's condition failed inside {ss}; this contradicts the lemma")
    return BergePath(tuple(order), tuple(assignment.assigned[p] for p in pairs))


def complete_block_cycle(s) -> BergeCycle:
    """Hamiltonian Berge cycle of the complete r-graph on the (r+1)-set ``s``."""
    s = tuple(sorted(s))
    u, v, w = s[0], s[1], s[-1]
    closing = tuple(x for x in s if x != w)
    rest = [tuple(x for x in s if x != y) for y in s if y != w]
    path = saturated_path(SaturatedSet(s, tuple(rest), Mode.FULL), u, v)
    # the closing edge misses only w, so it holds both ends of the path
    return BergeCycle(path.vertices, (*path.edges, closing))
