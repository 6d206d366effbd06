"""Find a long Berge cycle in a hypergraph that exceeds the extremal bound.

The constructive route mirrors the induction: strip deficient vertex sets,
split along disconnections and cut hyperedges, run the rotation procedure,
and contract a saturated terminal block (lifting the smaller instance's
cycle back with a lemma path). Whenever that route cannot finish, the
exhaustive search answers instead and the result is flagged as a fallback.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .extremal import bound_value
from .hypergraph import (Hypergraph, HypergraphError, components, contract_set, cut_hyperedges,
                         delete_vertices, induced_sub)
from .injections import DeficientSet, DenseTerminalSet, PreconditionError, find_dense_terminal_set, hall_injection
from .lemmas import Mode, SaturatedSet, complete_block_cycle, saturated_path
from .search import find_berge_cycle_at_least, sdr_assign
from .witness import BergeCycle, validate_berge_cycle


@dataclass
class Extraction:
    cycle: BergeCycle | None
    fallback: bool
    trace: list[str] = field(default_factory=list)
    dense: DenseTerminalSet | None = None


def _violates(h: Hypergraph, k: int) -> bool:
    return h.n >= 1 and h.e > bound_value(h.n, h.r, k)


def _pull_back(cycle: BergeCycle | None, mapping: dict[int, int]) -> BergeCycle | None:
    """Translate a cycle on a relabeled sub-hypergraph back to host labels."""
    if cycle is None:
        return None
    back = {new: old for old, new in mapping.items()}
    return BergeCycle(tuple(back[v] for v in cycle.vertices),
                      tuple(tuple(sorted(back[v] for v in e)) for e in cycle.edges))


def _lift_contraction(cycle: BergeCycle, h: Hypergraph, s: tuple[int, ...], mapping: dict[int, int]) -> BergeCycle:
    """Undo contracting ``s``: route through ``s`` with a lemma path if needed."""
    merged = mapping[s[0]]
    preimage = {}
    for e in h.edges:
        if not set(e) <= set(s):
            preimage[tuple(sorted(mapping[v] for v in e))] = e
    edges = [preimage[e] for e in cycle.edges]
    verts = list(cycle.vertices)
    back = {mapping[v]: v for v in h.vertices if v not in s}
    if merged not in verts:
        return BergeCycle(tuple(back[v] for v in verts), tuple(edges))
    i = verts.index(merged)
    # rotate so the merged vertex comes first: it enters via edges[-1], leaves via edges[0]
    verts = verts[i:] + verts[:i]
    edges = edges[i:] + edges[:i]
    u = next(v for v in edges[-1] if v in s)
    w = next(v for v in edges[0] if v in s)
    rest = [back[v] for v in verts[1:]]
    if u == w:
        return BergeCycle((u, *rest), tuple(edges))
    inside = [e for e in h.edges if set(e) <= set(s)][: h.r]
    detour = saturated_path(SaturatedSet(s, tuple(inside), Mode.FULL), u, w)
    return BergeCycle((*detour.vertices, *rest), (*detour.edges, *edges))


def _outside_route(h: Hypergraph, s: set[int], start: int, banned, targets) -> list[int] | None:
    """Shortest shadow walk from ``start`` (outside ``s``) to one of
    ``targets`` with its interior outside ``s``, over edges not inside ``s``
    and not ``banned``."""
    adj: dict[int, set[int]] = {}
    for e in h.edges:
        if e in banned or s.issuperset(e):
            continue
        for a in e:
            adj.setdefault(a, set()).update(w for w in e if w != a)
    parent = {start: None}
    frontier = [start]
    while frontier:
        nxt = []
        for y in frontier:
            for z in sorted(adj.get(y, ())):
                if z in parent:
                    continue
                if z in s and z not in targets:
                    continue
                parent[z] = y
                if z in targets:
                    route = [z]
                    while parent[route[-1]] is not None:
                        route.append(parent[route[-1]])
                    return route[::-1]
                nxt.append(z)
        frontier = nxt
    return None


def _close_through(h: Hypergraph, s: tuple[int, ...], walk: list[int], first_edges) -> BergeCycle | None:
    """Cycle: ``walk`` (ends in ``s``, other vertices outside) then a lemma
    path through ``s`` back to ``walk[0]``."""
    inside = tuple(e for e in h.edges if set(e) <= set(s))[: h.r]
    outside = [e for e in h.edges if not set(e) <= set(s) and e not in first_edges]
    pairs = list(zip(walk, walk[1:]))
    tail = sdr_assign(pairs[len(first_edges):], outside)
    if tail is None:
        return None
    edges = [*first_edges, *(tail.assigned[p] for p in pairs[len(first_edges):])]
    back = saturated_path(SaturatedSet(s, inside, Mode.FULL), walk[-1], walk[0])
    return BergeCycle((*walk, *back.vertices[1:-1]), (*edges, *back.edges))


def _escape_cycle(h: Hypergraph, s: tuple[int, ...]) -> BergeCycle | None:
    """A saturated (r+1)-set that is not a block lies on a cycle of length >= r+2."""
    sset = set(s)
    for e in h.edges:
        hits = [v for v in e if v in sset]
        if len(hits) < 2 or len(hits) == len(e):
            continue
        for x in (v for v in e if v not in sset):
            route = _outside_route(h, sset, x, {e}, sset)
            if route is None:
                continue
            w = next(v for v in hits if v != route[-1])
            cycle = _close_through(h, s, [w, *route], [e])
            if cycle is not None:
                return cycle
    for u in s:
        for e in h.incidence[u]:
            if sset.issuperset(e):
                continue
            for x in (v for v in e if v not in sset):
                route = _outside_route(h, sset, x, {e}, sset - {u})
                if route is None:
                    continue
                cycle = _close_through(h, s, [u, *route], [e])
                if cycle is not None:
                    return cycle
    return None


def _solve(h: Hypergraph, k: int, trace: list[str], depth: int = 0):
    """Constructive route; returns (cycle or None, dense set or None)."""
    pad = "  " * depth
    r = h.r
    if not _violates(h, k):
        trace.append(f"{pad}n={h.n} e={h.e}: within the bound, no reduction applies")
        return None, None
    for comp in components(h):
        if len(comp) < h.n:
            sub, mapping = induced_sub(h, comp, relabel=True)
            if _violates(sub, k):
                trace.append(f"{pad}restrict to component {sorted(comp)}")
                c, d = _solve(sub, k, trace, depth + 1)
                return _pull_back(c, mapping), d
    res = hall_injection(h, 1 if k == r + 1 else 0)
    if isinstance(res, DeficientSet) and len(res.s) < h.n:
        sub, mapping = delete_vertices(h, res.s)
        if _violates(sub, k):
            trace.append(f"{pad}delete deficient set {sorted(res.s)} ({res.incident_count} incident edges)")
            c, d = _solve(sub, k, trace, depth + 1)
            return _pull_back(c, mapping), d
    for cut in cut_hyperedges(h):
        for comp in components(h.without(cut)):
            sub, mapping = induced_sub(h, comp, relabel=True)
            if _violates(sub, k):
                trace.append(f"{pad}split at cut hyperedge {list(cut)}, keep {sorted(comp)}")
                c, d = _solve(sub, k, trace, depth + 1)
                return _pull_back(c, mapping), d
    try:
        out = find_dense_terminal_set(h, k)
    except PreconditionError as exc:
        trace.append(f"{pad}rotation precondition failed: {exc}")
        return None, None
    if isinstance(out, BergeCycle):
        trace.append(f"{pad}rotation produced a cycle of length {out.length}")
        return out, None
    s = out.s
    trace.append(f"{pad}dense terminal set {list(s)} with {len(out.inside_edges)} inside edges")
    if k == r + 1 and len(out.inside_edges) == r + 1:
        return complete_block_cycle(s), out
    if len(out.inside_edges) < r:
        return None, out
    try:
        sub, mapping = contract_set(h, s)
    except HypergraphError as exc:
        trace.append(f"{pad}terminal set is not a block ({exc}); route around it")
        return _escape_cycle(h, s), out
    if not _violates(sub, k):
        return None, out
    trace.append(f"{pad}contract {list(s)}")
    c, d = _solve(sub, k, trace, depth + 1)
    if c is None:
        return None, d or out
    return _lift_contraction(c, h, s, mapping), d


def extract_long_cycle(h: Hypergraph, k: int, node_cap: int | None = None) -> Extraction:
    """A Berge cycle with at least ``k`` vertices, constructively if possible."""
    if k not in (h.r + 1, h.r + 2):
        raise ValueError(f"k must be r+1 or r+2, got {k}")
    trace: list[str] = []
    cycle, dense = _solve(h, k, trace)
    if cycle is not None and cycle.length >= k:
        if not validate_berge_cycle(h, cycle):
            raise AssertionError(f"constructed cycle {cycle} is invalid: {validate_berge_cycle(h, cycle).reason}")
        return Extraction(cycle, False, trace, dense)
    trace.append("exhaustive search")
    return Extraction(find_berge_cycle_at_least(h, k, node_cap), True, trace, dense)
