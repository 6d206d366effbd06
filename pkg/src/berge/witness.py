"""Berge path and cycle witnesses, their validation and text form.

Text form: ``v1 [e1] v2 [e2] ... v_{l+1}`` for a path, and
``v1 [e1] v2 [e2] ... v_l [e_l]`` for a cycle (the trailing edge closes
back to ``v1``). Edges are written with ascending vertices.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .hypergraph import Edge, Hypergraph


@dataclass(frozen=True)
class BergePath:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(sorted(e)) for e in self.edges))

    @property
    def length(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        return format_witness(self)


@dataclass(frozen=True)
class BergeCycle:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(sorted(e)) for e in self.edges))

    @property
    def length(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        return format_witness(self)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = "ok"

    def __bool__(self) -> bool:
        return self.ok


def _check(h: Hypergraph, vertices, edges, steps) -> Verdict:
    if len(set(vertices)) != len(vertices):
        return Verdict(False, "duplicate vertex")
    if len(set(edges)) != len(edges):
        return Verdict(False, "duplicate edge")
    known = h.edge_index
    for e in edges:
        if e not in known:
            return Verdict(False, "edge not in hypergraph")
    for (a, b), e in zip(steps, edges):
        if a not in e or b not in e:
            return Verdict(False, "pair not in edge")
    return Verdict(True)


def validate_berge_path(h: Hypergraph, p: BergePath) -> Verdict:
    if len(p.vertices) != len(p.edges) + 1:
        return Verdict(False, "length mismatch")
    steps = list(zip(p.vertices, p.vertices[1:]))
    return _check(h, p.vertices, p.edges, steps)


def validate_berge_cycle(h: Hypergraph, c: BergeCycle) -> Verdict:
    if len(c.vertices) != len(c.edges):
        return Verdict(False, "length mismatch")
    if len(c.vertices) < 2:
        return Verdict(False, "too short")
    vs = c.vertices
    steps = [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]
    return _check(h, vs, c.edges, steps)


def validate(h: Hypergraph, w: BergePath | BergeCycle) -> Verdict:
    if isinstance(w, BergeCycle):
        return validate_berge_cycle(h, w)
    return validate_berge_path(h, w)


def format_witness(w: BergePath | BergeCycle) -> str:
    parts = []
    for i, v in enumerate(w.vertices):
        parts.append(str(v))
        if i < len(w.edges):
            parts.append("[" + " ".join(map(str, w.edges[i])) + "]")
    return " ".join(parts)


_TOKEN = re.compile(r"\[([^\]]*)\]|(-?\d+)")


def parse_witness(text: str) -> BergePath | BergeCycle:
    vertices: list[int] = []
    edges: list[Edge] = []
    expect_vertex = True
    last_was_edge = False
    pos = 0
    for m in _TOKEN.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError(f"unexpected text {text[pos:m.start()]!r}")
        pos = m.end()
        if m.group(2) is not None:
            if not expect_vertex:
                raise ValueError("two vertices without an edge between them")
            vertices.append(int(m.group(2)))
            expect_vertex, last_was_edge = False, False
        else:
            if expect_vertex:
                raise ValueError("edge must follow a vertex")
            edges.append(tuple(sorted(int(t) for t in m.group(1).split())))
            expect_vertex, last_was_edge = True, True
    if text[pos:].strip():
        raise ValueError(f"unexpected text {text[pos:]!r}")
    if not vertices:
        raise ValueError("empty witness")
    if last_was_edge:
        return BergeCycle(tuple(vertices), tuple(edges))
    return BergePath(tuple(vertices), tuple(edges))
