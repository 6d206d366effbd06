"""Vertex-to-edge injections and the path-rotation procedure.

An injection sends each vertex to a distinct hyperedge containing it. Given
one, walk ``v1 f(v1) v2 f(v2) ...`` with each next vertex taken from the
current vertex's image. Rotating the tail of that walk (reassigning images
along it) either exposes a long Berge cycle, extends the walk, or pins all
the images near the end inside a single (r+1)-set.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .hypergraph import Edge, Hypergraph, HypergraphError, delete_vertices, is_connected
from .lemmas import complete_block_cycle
from .witness import BergeCycle, BergePath, validate_berge_cycle

log = logging.getLogger(__name__)


class PreconditionError(HypergraphError):
    pass


@dataclass(frozen=True)
class Injection:
    mapping: dict[int, Edge] = field(hash=False)
    missed: frozenset[int] = frozenset()

    def is_valid(self) -> bool:
        images = list(self.mapping.values())
        return (len(set(images)) == len(images)
                and all(v in e for v, e in self.mapping.items())
                and not (self.missed & self.mapping.keys()))


@dataclass(frozen=True)
class DeficientSet:
    s: frozenset[int]
    incident_count: int


@dataclass(frozen=True)
class DenseTerminalSet:
    s: tuple[int, ...]
    inside_edges: tuple[Edge, ...]
    anchor_path: BergePath
    # images of the walk's terminal vertices that the rotation forced inside s
    forced_edges: tuple[Edge, ...] = ()


def _max_matching(h: Hypergraph, vertices) -> dict[int, Edge]:
    """Kuhn matching of ``vertices`` into edges; lowest labels and edges first."""
    owner: dict[Edge, int] = {}
    match: dict[int, Edge] = {}

    def augment(v, seen):
        for e in h.incidence[v]:
            if e in seen:
                continue
            seen.add(e)
            if e not in owner or augment(owner[e], seen):
                owner[e] = v
                match[v] = e
                return True
        return False

    for v in vertices:
        augment(v, set())
    return match


def _alternating_reach(h: Hypergraph, match: dict[int, Edge], roots) -> set[int]:
    owner = {e: v for v, e in match.items()}
    reach = set(roots)
    stack = list(roots)
    while stack:
        v = stack.pop()
        for e in h.incidence[v]:
            w = owner.get(e)
            if w is not None and w not in reach:
                reach.add(w)
                stack.append(w)
    return reach


def incident_count(h: Hypergraph, s) -> int:
    s = set(s)
    return sum(1 for e in h.edges if not s.isdisjoint(e))


def hall_injection(h: Hypergraph, allowed_misses: int = 0) -> Injection | DeficientSet:
    """Maximum injection, or a vertex set meeting fewer edges than its size.

    With ``allowed_misses=1`` one unmatched vertex is tolerated, and a
    returned deficient set is always a proper subset of the vertices.
    """
    if allowed_misses not in (0, 1):
        raise ValueError("allowed_misses must be 0 or 1")
    match = _max_matching(h, h.vertices)
    missed = [v for v in h.vertices if v not in match]
    if len(missed) <= allowed_misses:
        return Injection(match, frozenset(missed))
    s = _alternating_reach(h, match, missed)
    if allowed_misses == 1:
        # deficiency is at least 2 here, so one unmatched vertex can go
        s.discard(max(missed))
    return DeficientSet(frozenset(s), incident_count(h, s))


@dataclass
class DeletionStep:
    s: frozenset[int]
    incident_edges: tuple[Edge, ...]


def deficiency_delete(h: Hypergraph, allowed_misses: int = 0) -> tuple[Hypergraph, list[DeletionStep]]:
    """Delete deficient vertex sets until Hall's condition holds.

    Isolated vertices go first, as one set. Deletion stops when the only
    deficient set left is the whole vertex set. The log uses the original
    labels; the returned hypergraph is relabeled to ``1..n'``.
    """
    current = h
    back = {v: v for v in h.vertices}  # current label -> original label
    steps: list[DeletionStep] = []
    while current.n:
        isolated = {v for v in current.vertices if not current.degree(v)}
        if isolated and len(isolated) < current.n:
            s = isolated
        else:
            res = hall_injection(current, allowed_misses)
            if isinstance(res, Injection) or len(res.s) == current.n:
                break
            s = set(res.s)
        incident = tuple(tuple(back[v] for v in e) for e in current.edges if not s.isdisjoint(e))
        steps.append(DeletionStep(frozenset(back[v] for v in s), incident))
        current, mapping = delete_vertices(current, s)
        back = {new: back[old] for old, new in mapping.items()}
    return current, steps


# -- rotation procedure --------------------------------------------------------


class _Restart(Exception):
    """The walk was improved; carries the new injection and walk."""

    def __init__(self, phi, path):
        self.phi, self.path = phi, path


class _Done(Exception):
    def __init__(self, result):
        self.result = result


def _cycle_from(order, phi, t) -> BergeCycle:
    """Close the walk ``order`` from position ``t`` back via the last image."""
    verts = tuple(order[t:])
    return BergeCycle(verts, tuple(phi[v] for v in verts))


def _extend(phi, path):
    """Greedily extend the walk along images, smallest new vertex first."""
    on = set(path)
    while path[-1] in phi:
        fresh = [w for w in phi[path[-1]] if w not in on]
        if not fresh:
            break
        path.append(min(fresh))
        on.add(path[-1])
    return path


def _rotate(phi, path, i):
    """Tail rotation at 0-based position ``i``; returns (psi, new order)."""
    psi = dict(phi)
    last = len(path) - 1
    psi[path[i]] = phi[path[last]]
    for t in range(i + 1, last + 1):
        psi[path[t]] = phi[path[t - 1]]
    return psi, path[: i + 1] + path[last:i:-1]


def _rotate_before_last(phi, path, i):
    """Rotation that leaves the final (unmatched) vertex out of the walk."""
    psi = dict(phi)
    end = len(path) - 2
    psi[path[i]] = phi[path[end]]
    for t in range(i + 1, end + 1):
        psi[path[t]] = phi[path[t - 1]]
    return psi, path[: i + 1] + path[end:i:-1]


def _probe(image, order, window, cycle_order_phi, on_path):
    """Classify where ``image`` reaches relative to ``order``.

    Returns ('out', vertex) for a vertex off the walk, ('back', position)
    for a walk vertex before the window, else None.
    """
    outside = sorted(w for w in image if w not in on_path)
    if outside:
        return "out", outside[0]
    pos = {v: t for t, v in enumerate(order)}
    early = sorted(pos[w] for w in image if w not in window)
    if early:
        return "back", early[0]
    return None


def _case_matched_end(h, phi, path, k, x):
    """Walk ends at a matched vertex. Checks that the last image, and each
    rotated image, stays inside the terminal window (r+1 vertices for
    k=r+2, r for k=r+1). Raises _Restart / _Done, or returns the window."""
    r = h.r
    l = len(path)
    span = r + 1 if k == h.r + 2 else r
    window = set(path[max(0, l - span):])
    on_path = set(path)
    last = path[-1]
    hit = _probe(phi[last], path, window, None, on_path)
    if hit and hit[0] == "out":
        raise _Restart(phi, _extend(phi, path + [hit[1]]))
    if hit:
        raise _Done(_cycle_from(path, phi, hit[1]))
    missing = window - set(phi[last])
    first = max(0, l - span)
    for i in range(first, l - 1):
        if path[i] in missing:
            continue
        psi, order = _rotate(phi, path, i)
        image = psi[order[-1]]  # equals phi[path[i]]
        hit = _probe(image, order, window, None, on_path)
        if hit and hit[0] == "out":
            raise _Restart(psi, _extend(psi, order + [hit[1]]))
        if hit:
            raise _Done(_cycle_from(order, psi, hit[1]))
        if k == r + 1:
            # image fits in the r-window, so it equals phi[last]: impossible
            raise AssertionError("two images coincide under an injection")
    return window


def _case_unmatched_end(h, phi, path, k):
    """Walk ends at the unmatched vertex x (k = r+1 only)."""
    r = h.r
    l = len(path)
    window = set(path[max(0, l - r - 1):])
    on_path = set(path)
    prev = path[-2]
    hit = _probe(phi[prev], path[:-1], window, None, on_path)
    if hit and hit[0] == "out":
        return "switch", phi, path[:-1] + [hit[1]]
    if hit:
        raise _Done(_cycle_from(path[:-1], phi, hit[1]))
    missing = window - set(phi[prev])
    first = max(0, l - r - 1)
    for i in range(first, l - 2):
        if path[i] in missing:
            continue
        psi, order = _rotate_before_last(phi, path, i)
        image = psi[order[-1]]  # equals phi[path[i]]
        hit = _probe(image, order, window, None, on_path)
        if hit and hit[0] == "out":
            return "switch", psi, order + [hit[1]]
        if hit:
            raise _Done(_cycle_from(order, psi, hit[1]))
    return "window", window, None


def _anchor(phi, path) -> BergePath:
    return BergePath(tuple(path), tuple(phi[v] for v in path[:-1]))


def find_dense_terminal_set(h: Hypergraph, k: int, max_steps: int | None = None
                            ) -> BergeCycle | DenseTerminalSet:
    """Run the injection-walk rotation procedure.

    Returns a Berge cycle with at least ``k`` vertices, or an (r+1)-set
    holding at least r (k = r+2) or r-1 (k = r+1) hyperedges, reached as the
    terminal window of a maximal injection walk.
    """
    r = h.r
    if k not in (r + 1, r + 2):
        raise ValueError(f"k must be r+1 or r+2, got {k}")
    if not is_connected(h):
        raise PreconditionError("hypergraph is not connected")
    inj = hall_injection(h, 1 if k == r + 1 else 0)
    if isinstance(inj, DeficientSet):
        raise PreconditionError(f"no injection: {sorted(inj.s)} meets only {inj.incident_count} edges")
    phi = dict(inj.mapping)
    x = next(iter(inj.missed), None)
    if not phi:
        raise PreconditionError("no vertex is matched")
    path = _extend(phi, [min(phi)])
    steps = 0
    limit = max_steps if max_steps is not None else h.n * max(h.e, 1) + 1
    while True:
        steps += 1
        if steps > limit:
            raise RuntimeError("rotation procedure exceeded its step bound")
        try:
            if path[-1] == x:
                outcome, a, b = _case_unmatched_end(h, phi, path, k)
                if outcome == "switch":
                    # same length, ends at a matched vertex: settle it there
                    _case_matched_end(h, a, b, k, x)
                    raise AssertionError("matched-end case cannot pass for k = r+1")
                window = a
            else:
                window = _case_matched_end(h, phi, path, k, x)
                if k == r + 1:
                    raise AssertionError("matched-end case cannot pass for k = r+1")
        except _Restart as imp:
            if len(imp.path) <= len(path):
                raise AssertionError("rotation did not lengthen the walk")
            phi, path = imp.phi, imp.path
            continue
        except _Done as done:
            cycle = done.result
            assert validate_berge_cycle(h, cycle) and cycle.length >= k
            return cycle
        break

    s = tuple(sorted(window))
    if len(s) != r + 1:
        raise AssertionError(f"terminal window has {len(s)} vertices")
    inside = tuple(e for e in h.edges if set(e) <= set(s))
    if k == r + 2:
        forced = tuple(phi[v] for v in path[-(r + 1):] if set(phi[v]) <= set(s))
    else:
        forced = tuple(phi[v] for v in path[-(r + 1):-1] if set(phi[v]) <= set(s))
    if k == r + 1 and len(inside) == r + 1:
        # the complete r-graph on s already has a Hamiltonian Berge cycle
        return complete_block_cycle(s)
    need = r if k == r + 2 else r - 1
    if len(inside) < need:
        raise AssertionError(f"terminal window holds {len(inside)} edges, expected >= {need}")
    log.debug("dense terminal set %s with %d inside edges after %d steps", s, len(inside), steps)
    return DenseTerminalSet(s, inside, _anchor(phi, path), forced)
