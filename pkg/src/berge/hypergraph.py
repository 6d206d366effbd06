"""Uniform hypergraphs and their structural primitives.

A :class:`Hypergraph` is an r-uniform edge set over the labels ``1..n``.
Isolated vertices are allowed, since the extremal bounds count every vertex.
Everything here is immutable; operations return new objects.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable

import networkx as nx

Edge = tuple[int, ...]


class HypergraphError(ValueError):
    """Malformed hypergraph input or a violated structural precondition."""


@dataclass(frozen=True)
class Hypergraph:
    r: int
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.r < 2:
            raise HypergraphError(f"uniformity must be >= 2, got {self.r}")
        if self.n < 0:
            raise HypergraphError(f"vertex count must be >= 0, got {self.n}")
        canon = []
        for e in self.edges:
            t = tuple(sorted(int(v) for v in e))
            if len(t) != self.r or len(set(t)) != self.r:
                raise HypergraphError(f"edge {list(e)} does not have {self.r} distinct vertices")
            if t[0] < 1 or t[-1] > self.n:
                raise HypergraphError(f"edge {list(e)} has a label outside 1..{self.n}")
            canon.append(t)
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise HypergraphError(f"duplicate edge {list(a)}")
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def e(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def incidence(self) -> dict[int, tuple[Edge, ...]]:
        """Vertex -> edges containing it, in canonical edge order."""
        inc: dict[int, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            for v in e:
                inc[v].append(e)
        return {v: tuple(es) for v, es in inc.items()}

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def with_edges(self, edges: Iterable[Iterable[int]]) -> Hypergraph:
        return Hypergraph(self.r, self.n, tuple(tuple(e) for e in edges))

    def without(self, edge: Edge) -> Hypergraph:
        return Hypergraph(self.r, self.n, tuple(e for e in self.edges if e != edge))

    def __str__(self) -> str:
        return f"Hypergraph(r={self.r}, n={self.n}, e={self.e})"


@dataclass(frozen=True)
class ShadowGraph:
    n: int
    pairs: frozenset[tuple[int, int]]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(1, self.n + 1))
        g.add_edges_from(self.pairs)
        return g


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    # cut vertex -> indices of the blocks that contain it
    block_tree_adjacency: dict[int, tuple[int, ...]] = field(hash=False, compare=False)


# -- documents ---------------------------------------------------------------


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the plain-text format: header ``r n`` then one edge per line."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append((lineno, [int(tok) for tok in line.split()]))
        except ValueError:
            raise HypergraphError(f"line {lineno}: non-integer token in {line!r}") from None
    if not rows:
        raise HypergraphError("missing header line 'r n'")
    lineno, header = rows[0]
    if len(header) != 2:
        raise HypergraphError(f"line {lineno}: header must be 'r n', got {header}")
    r, n = header
    seen = set()
    edges = []
    for lineno, row in rows[1:]:
        if len(row) != r or len(set(row)) != r:
            raise HypergraphError(f"line {lineno}: expected {r} distinct vertices, got {row}")
        if min(row) < 1 or max(row) > n:
            raise HypergraphError(f"line {lineno}: vertex label outside 1..{n}: {row}")
        key = tuple(sorted(row))
        if key in seen:
            raise HypergraphError(f"line {lineno}: duplicate edge {list(key)}")
        seen.add(key)
        edges.append(key)
    return Hypergraph(r, n, tuple(edges))


def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"{h.r} {h.n}"]
    lines.extend(" ".join(map(str, e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def hypergraph_to_dict(h: Hypergraph) -> dict:
    return {"r": h.r, "n": h.n, "edges": [list(e) for e in h.edges]}


def hypergraph_from_dict(obj: dict) -> Hypergraph:
    try:
        r, n, edges = obj["r"], obj["n"], obj["edges"]
    except (KeyError, TypeError):
        raise HypergraphError("structured hypergraph needs fields 'r', 'n', 'edges'") from None
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in (r, n)):
        raise HypergraphError("'r' and 'n' must be integers")
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise HypergraphError("'edges' must be a list of integer lists")
    keys = [tuple(sorted(e)) for e in edges]
    if len(set(keys)) != len(keys):
        raise HypergraphError("duplicate edge")
    return Hypergraph(r, n, tuple(keys))


def format_hypergraph_json(h: Hypergraph) -> str:
    return json.dumps(hypergraph_to_dict(h)) + "\n"


def load_hypergraph(text: str, fmt: str = "auto") -> Hypergraph:
    """Parse either encoding; ``auto`` picks JSON when the text starts with '{'."""
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "text"
    if fmt == "json":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise HypergraphError(f"invalid JSON: {exc}") from None
        return hypergraph_from_dict(obj)
    if fmt == "text":
        return parse_hypergraph(text)
    raise HypergraphError(f"unknown format {fmt!r}")


def dump_hypergraph(h: Hypergraph, fmt: str = "text") -> str:
    return format_hypergraph_json(h) if fmt == "json" else format_hypergraph(h)


# -- structure ---------------------------------------------------------------


def two_shadow(h: Hypergraph) -> ShadowGraph:
    pairs = {p for e in h.edges for p in combinations(e, 2)}
    return ShadowGraph(h.n, frozenset(pairs))


def _relabel(vertices: Iterable[int]) -> dict[int, int]:
    return {v: i for i, v in enumerate(sorted(vertices), 1)}


def induced_sub(h: Hypergraph, s: Iterable[int], relabel: bool = False):
    """Edges of ``h`` contained in ``s``.

    With ``relabel=False`` the result keeps all ``n`` labels (vertices outside
    ``s`` become isolated). With ``relabel=True`` it returns ``(sub, mapping)``
    where ``sub`` lives on ``1..|s|`` and ``mapping`` sends old labels to new.
    """
    s = set(s)
    inside = [e for e in h.edges if s.issuperset(e)]
    if not relabel:
        return Hypergraph(h.r, h.n, tuple(inside))
    mapping = _relabel(s)
    sub = Hypergraph(h.r, len(s), tuple(tuple(mapping[v] for v in e) for e in inside))
    return sub, mapping


def delete_vertices(h: Hypergraph, s: Iterable[int]) -> tuple[Hypergraph, dict[int, int]]:
    """Remove ``s`` and every edge meeting it; survivors are relabeled in order."""
    s = set(s)
    mapping = _relabel(v for v in h.vertices if v not in s)
    kept = [tuple(mapping[v] for v in e) for e in h.edges if s.isdisjoint(e)]
    return Hypergraph(h.r, len(mapping), tuple(kept)), mapping


def contract_set(h: Hypergraph, s: Iterable[int]) -> tuple[Hypergraph, dict[int, int]]:
    """Merge ``s`` into one vertex (labelled by ``min(s)`` before compaction).

    Edges inside ``s`` disappear; an edge meeting ``s`` in one vertex has it
    replaced by the merged vertex. Returns ``(contracted, mapping)`` with
    ``mapping`` sending every old label to its new label.
    """
    s = set(s)
    if not s:
        raise HypergraphError("cannot contract an empty set")
    if not s.issubset(h.vertices):
        raise HypergraphError(f"contraction set {sorted(s)} not within 1..{h.n}")
    merged = min(s)
    for e in h.edges:
        k = len(s.intersection(e))
        if 2 <= k < h.r:
            raise HypergraphError(f"edge {list(e)} meets the contraction set in {k} vertices")
    survivors = [v for v in h.vertices if v not in s or v == merged]
    compact = _relabel(survivors)
    mapping = {v: compact[merged] if v in s else compact[v] for v in h.vertices}
    new_edges = []
    for e in h.edges:
        if s.issuperset(e):
            continue
        new_edges.append(tuple(sorted(mapping[v] for v in e)))
    if len(set(new_edges)) != len(new_edges):
        raise HypergraphError("contraction would create parallel edges")
    return Hypergraph(h.r, len(survivors), tuple(new_edges)), mapping


def block_decomposition(g: ShadowGraph) -> BlockDecomposition:
    """Biconnected blocks of the shadow; bridges are 2-vertex blocks."""
    graph = g.to_networkx()
    blocks = sorted((frozenset(b) for b in nx.biconnected_components(graph)), key=lambda b: min(b))
    cuts = frozenset(nx.articulation_points(graph))
    adjacency = {c: tuple(i for i, b in enumerate(blocks) if c in b) for c in sorted(cuts)}
    return BlockDecomposition(tuple(blocks), cuts, adjacency)


def hypergraph_blocks(h: Hypergraph) -> BlockDecomposition:
    return block_decomposition(two_shadow(h))


def components(h: Hypergraph) -> list[frozenset[int]]:
    """Connected components of the shadow, isolated vertices included, by min label."""
    comps = nx.connected_components(two_shadow(h).to_networkx())
    return sorted((frozenset(c) for c in comps), key=min)


def is_connected(h: Hypergraph, ignore_isolated: bool = False) -> bool:
    if ignore_isolated:
        comps = [c for c in components(h) if len(c) > 1 or h.degree(next(iter(c)))]
        return len(comps) <= 1
    return h.n == 0 or len(components(h)) == 1


def cut_hyperedges(h: Hypergraph) -> list[Edge]:
    """Edges whose removal disconnects the shadow on all ``n`` vertices."""
    if not is_connected(h):
        raise HypergraphError("cut_hyperedges requires a connected hypergraph")
    return [e for e in h.edges if not is_connected(h.without(e))]
