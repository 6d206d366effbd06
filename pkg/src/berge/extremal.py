"""Extremal block trees, the edge-count bounds they attain, and certificates.

The extremal r-graphs without long Berge cycles are block trees: the shadow
is connected and every block is a K_{r+1} carrying either all r+1 of its
r-subsets (no cycle of length r+2 or more) or exactly r of them (no cycle
of length r+1 or more). Bounds are exact :class:`~fractions.Fraction` values.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, product

from .hypergraph import BlockDecomposition, Hypergraph, HypergraphError, components, hypergraph_blocks, is_connected, two_shadow


class Flavor(Enum):
    FULL = "full"    # every block is the complete r-graph on r+1 vertices
    MINUS = "minus"  # every block carries r of the r+1 possible edges


@dataclass(frozen=True)
class BlockTreePlan:
    """Recipe for a block tree.

    ``attachments[i]`` places block ``i+1``: ``(target, local)`` glues it to
    the ``local``-th smallest vertex of block ``target`` (which must come
    earlier). ``omitted[i]`` (MINUS only) drops from block ``i`` the r-subset
    avoiding its ``omitted[i]``-th smallest vertex.
    """

    r: int
    flavor: Flavor
    attachments: tuple[tuple[int, int], ...] = ()
    omitted: tuple[int, ...] | None = None

    @property
    def b(self) -> int:
        return len(self.attachments) + 1

    def validate(self):
        if self.r < 2:
            raise HypergraphError("uniformity must be >= 2")
        for i, (target, local) in enumerate(self.attachments, 1):
            if not 0 <= target < i:
                raise HypergraphError(f"block {i} attaches to block {target}, which is not an earlier block")
            if not 0 <= local <= self.r:
                raise HypergraphError(f"block {i}: cut vertex index {local} outside 0..{self.r}")
        if self.omitted is not None:
            if self.flavor is not Flavor.MINUS:
                raise HypergraphError("omitted edges only apply to the minus flavor")
            if len(self.omitted) != self.b or not all(0 <= j <= self.r for j in self.omitted):
                raise HypergraphError(f"omitted needs {self.b} indices in 0..{self.r}")

    def to_dict(self) -> dict:
        out = {"r": self.r, "flavor": self.flavor.value, "attachments": [list(a) for a in self.attachments]}
        if self.omitted is not None:
            out["omitted"] = list(self.omitted)
        return out

    @classmethod
    def from_dict(cls, obj: dict) -> BlockTreePlan:
        try:
            plan = cls(int(obj["r"]), Flavor(obj["flavor"]),
                       tuple((int(t), int(c)) for t, c in obj.get("attachments", [])),
                       None if obj.get("omitted") is None else tuple(int(j) for j in obj["omitted"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise HypergraphError(f"bad plan: {exc}") from None
        plan.validate()
        return plan

    @classmethod
    def from_json(cls, text: str) -> BlockTreePlan:
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise HypergraphError(f"bad plan JSON: {exc}") from None


def chain_plan(r: int, b: int, flavor: Flavor) -> BlockTreePlan:
    """Each block hangs off the largest vertex of the one before it."""
    return BlockTreePlan(r, flavor, tuple((i - 1, r) for i in range(1, b)))


def star_plan(r: int, b: int, flavor: Flavor) -> BlockTreePlan:
    """Every block shares vertex 1."""
    return BlockTreePlan(r, flavor, tuple((0, 0) for _ in range(1, b)))


def all_plans(r: int, b: int, flavor: Flavor):
    """Every attachment pattern with b blocks, and for MINUS every omission."""
    choices = [[(t, c) for t in range(i) for c in range(r + 1)] for i in range(1, b)]
    for attachments in product(*choices):
        if flavor is Flavor.FULL:
            yield BlockTreePlan(r, flavor, attachments)
        else:
            for omitted in product(range(r + 1), repeat=b):
                yield BlockTreePlan(r, flavor, attachments, omitted)


def plan_blocks(plan: BlockTreePlan) -> list[tuple[int, ...]]:
    plan.validate()
    r = plan.r
    blocks = [tuple(range(1, r + 2))]
    next_label = r + 2
    for target, local in plan.attachments:
        cut = blocks[target][local]
        fresh = tuple(range(next_label, next_label + r))
        next_label += r
        blocks.append(tuple(sorted((cut, *fresh))))
    return blocks


def generate_block_tree(plan: BlockTreePlan) -> Hypergraph:
    blocks = plan_blocks(plan)
    r = plan.r
    edges = []
    for i, block in enumerate(blocks):
        subsets = list(combinations(block, r))
        if plan.flavor is Flavor.MINUS:
            skip = block[plan.omitted[i] if plan.omitted is not None else 0]
            subsets = [e for e in subsets if skip in e]
        edges.extend(subsets)
    return Hypergraph(r, plan.b * r + 1, tuple(edges))


# -- bounds ----------------------------------------------------------------------


def bound_value(n: int, r: int, k: int, path: bool = False) -> Fraction:
    """Largest edge count of an n-vertex r-graph avoiding the given structure.

    Cycle mode covers k = r+2 (``(r+1)(n-1)/r``) and k = r+1 (``n-1``);
    path mode covers paths of length k = r+1 (``n``).
    """
    if n < 1 or r < 2:
        raise ValueError(f"unsupported parameters n={n}, r={r}")
    if path:
        if k != r + 1:
            raise ValueError(f"path bound is known here only for k = r+1, got k={k}")
        return Fraction(n)
    if k == r + 2:
        return Fraction((r + 1) * (n - 1), r)
    if k == r + 1:
        return Fraction(n - 1)
    raise ValueError(f"cycle bound is known here only for k in (r+1, r+2), got k={k}")


def equality_possible(n: int, r: int, k: int, path: bool = False) -> bool:
    """Whether some n-vertex configuration of the equality case exists."""
    if path:
        return n % (r + 1) == 0
    return (n - 1) % r == 0


# -- certificates --------------------------------------------------------------


@dataclass(frozen=True)
class BlockVerdict:
    block: tuple[int, ...]
    complete: bool
    inside_edges: int


@dataclass(frozen=True)
class ExtremalCertificate:
    k: int
    valid: bool
    reason: str
    n: int
    e: int
    bound: Fraction
    connected: bool
    blocks: BlockDecomposition | None = None
    verdicts: tuple[BlockVerdict, ...] = ()
    offending_block: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.valid

    def summary(self) -> str:
        head = "valid" if self.valid else f"invalid: {self.reason}"
        lines = [f"certificate k={self.k}: {head}", f"n={self.n} e={self.e} bound={self.bound}"]
        for v in self.verdicts:
            lines.append(f"  block {' '.join(map(str, v.block))}: complete={v.complete} inside_edges={v.inside_edges}")
        return "\n".join(lines)


def _inside(h: Hypergraph, vertices) -> int:
    s = set(vertices)
    return sum(1 for e in h.edges if s.issuperset(e))


def _complete_in_shadow(pairs, vertices) -> bool:
    return all(p in pairs for p in combinations(sorted(vertices), 2))


def certify_extremal(h: Hypergraph, k: int) -> ExtremalCertificate:
    """Check the equality characterization for k = r+1 or r+2.

    The certificate is valid iff the shadow is connected on all n vertices
    and every block is a K_{r+1} holding exactly r+1 (k=r+2) or r (k=r+1)
    hyperedges. A valid certificate always has e(H) equal to the bound.
    """
    r = h.r
    bound = bound_value(max(h.n, 1), r, k)
    need = r + 1 if k == r + 2 else r
    base = dict(k=k, n=h.n, e=h.e, bound=bound)
    if not is_connected(h):
        return ExtremalCertificate(valid=False, reason="shadow is not connected", connected=False, **base)
    decomposition = hypergraph_blocks(h)
    pairs = two_shadow(h).pairs
    verdicts = []
    failure = None
    for block in decomposition.blocks:
        key = tuple(sorted(block))
        verdict = BlockVerdict(key, len(key) == r + 1 and _complete_in_shadow(pairs, key), _inside(h, key))
        verdicts.append(verdict)
        if failure is None:
            if not verdict.complete:
                failure = (f"block is not K_{r + 1}", key)
            elif verdict.inside_edges != need:
                failure = (f"block holds {verdict.inside_edges} edges, needs exactly {need}", key)
    if failure:
        return ExtremalCertificate(valid=False, reason=failure[0], connected=True, blocks=decomposition,
                                   verdicts=tuple(verdicts), offending_block=failure[1], **base)
    if h.e != bound:
        raise AssertionError(f"certified hypergraph has {h.e} edges but the bound is {bound}")
    return ExtremalCertificate(valid=True, reason="ok", connected=True, blocks=decomposition,
                               verdicts=tuple(verdicts), **base)


@dataclass(frozen=True)
class ComponentVerdict:
    component: tuple[int, ...]
    valid: bool
    reason: str


@dataclass(frozen=True)
class ComponentCertificate:
    valid: bool
    components: tuple[ComponentVerdict, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.valid


def theorem6_component_certify(h: Hypergraph) -> ComponentCertificate:
    """Path variant: every shadow component is a complete r-graph on r+1 vertices."""
    r = h.r
    verdicts = []
    for comp in components(h):
        key = tuple(sorted(comp))
        inside = _inside(h, key)
        if len(key) != r + 1:
            verdicts.append(ComponentVerdict(key, False, f"component has {len(key)} vertices, needs {r + 1}"))
        elif inside != r + 1:
            verdicts.append(ComponentVerdict(key, False, f"component holds {inside} edges, needs {r + 1}"))
        else:
            verdicts.append(ComponentVerdict(key, True, "ok"))
    valid = bool(verdicts) and all(v.valid for v in verdicts)
    if valid and h.e != h.n:
        raise AssertionError(f"certified hypergraph has {h.e} edges on {h.n} vertices")
    return ComponentCertificate(valid, tuple(verdicts))
