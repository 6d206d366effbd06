"""Pure-Python search kernels; reference twin of ``_ckernels.pyx``.

Vertices are ``0..n-1`` and each hyperedge is a bitmask over them. Edge
``i`` is the i-th mask, so lower indices win ties. A partial vertex
sequence is kept only while its consecutive pairs have a system of distinct
representatives among the edges; that matching is grown by one augmenting
path per step and shrunk by unmatching the last pair on backtrack.

Every search returns ``(status, vertices, edge_indices, nodes)`` where
status is FOUND, NONE or BUDGET.
"""
from __future__ import annotations

FOUND, NONE, BUDGET = 1, 0, -1
CYCLE, PATH = 0, 1


class _Budget(Exception):
    pass


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class _Matcher:
    """Pairs of a vertex sequence matched injectively to edges."""

    def __init__(self, m: int, size: int):
        self.owner = [-1] * m
        self.match = [-1] * size
        self.cand = [0] * size
        self.seen = 0

    def augment(self, p: int, cand: int) -> bool:
        self.cand[p] = cand
        self.seen = 0
        return self._go(p)

    def _go(self, p: int) -> bool:
        while True:
            c = self.cand[p] & ~self.seen
            if not c:
                return False
            low = c & -c
            self.seen |= low
            e = low.bit_length() - 1
            q = self.owner[e]
            if q == -1 or self._go(q):
                self.owner[e] = p
                self.match[p] = e
                return True

    def drop(self, p: int):
        self.owner[self.match[p]] = -1
        self.match[p] = -1


def _incidence(n: int, masks):
    vedges = [0] * n
    for i, em in enumerate(masks):
        for v in _bits(em):
            vedges[v] |= 1 << i
    adj = [0] * n
    for v in range(n):
        a = 0
        for i in _bits(vedges[v]):
            a |= masks[i]
        adj[v] = a & ~(1 << v)
    return vedges, adj


def cycle_at_least(n: int, masks, k: int, budget: int = 0):
    """Find a Berge cycle with at least ``k`` vertices (k >= 2)."""
    k = max(k, 2)
    m = len(masks)
    if m < k or n < k:
        return NONE, (), (), 0
    vedges, adj = _incidence(n, masks)
    mt = _Matcher(m, n + 1)
    path = [0] * (n + 1)
    nodes = 0
    full = (1 << n) - 1

    def dfs(depth, last, inpath, allowed, s):
        nonlocal nodes
        if depth + 1 >= k and depth >= 1 and (depth == 1 or path[1] < last):
            c = vedges[last] & vedges[s]
            if c and mt.augment(depth, c):
                return depth + 1
        avail = allowed & ~inpath
        if depth + 1 + bin(avail).count("1") < k:
            return 0
        for w in _bits(adj[last] & avail):
            nodes += 1
            if budget > 0 and nodes > budget:
                raise _Budget
            if mt.augment(depth, vedges[last] & vedges[w]):
                path[depth + 1] = w
                got = dfs(depth + 1, w, inpath | (1 << w), allowed, s)
                if got:
                    return got
                mt.drop(depth)
        return 0

    try:
        for s in range(n):
            allowed = full & ~((1 << (s + 1)) - 1)
            if 1 + bin(allowed).count("1") < k:
                break
            path[0] = s
            got = dfs(0, s, 1 << s, allowed, s)
            if got:
                return FOUND, tuple(path[:got]), tuple(mt.match[:got]), nodes
    except _Budget:
        return BUDGET, (), (), nodes
    return NONE, (), (), nodes


def path_at_least(n: int, masks, k: int, budget: int = 0):
    """Find a Berge path with at least ``k`` edges (k = 0 gives one vertex)."""
    m = len(masks)
    if n == 0 or k > m or k > n - 1:
        return NONE, (), (), 0
    if k <= 0:
        return FOUND, (0,), (), 0
    vedges, adj = _incidence(n, masks)
    mt = _Matcher(m, n + 1)
    path = [0] * (n + 1)
    nodes = 0
    full = (1 << n) - 1

    def dfs(depth, last, inpath):
        nonlocal nodes
        if depth >= k:
            return depth + 1
        avail = full & ~inpath
        if depth + bin(avail).count("1") < k:
            return 0
        for w in _bits(adj[last] & avail):
            nodes += 1
            if budget > 0 and nodes > budget:
                raise _Budget
            if mt.augment(depth, vedges[last] & vedges[w]):
                path[depth + 1] = w
                got = dfs(depth + 1, w, inpath | (1 << w))
                if got:
                    return got
                mt.drop(depth)
        return 0

    try:
        for s in range(n):
            path[0] = s
            got = dfs(0, s, 1 << s)
            if got:
                return FOUND, tuple(path[:got]), tuple(mt.match[:got - 1]), nodes
    except _Budget:
        return BUDGET, (), (), nodes
    return NONE, (), (), nodes


def _closes_through_last(n: int, masks, k: int) -> bool:
    """True if some Berge cycle with >= k vertices uses the last edge.

    The cycle is cut at the last edge ``h``: it becomes a Berge path of
    length >= k-1 between two vertices ``a < b`` of ``h`` avoiding ``h``.
    """
    m = len(masks)
    if m < k:
        return False
    others = masks[:-1]
    vedges, adj = _incidence(n, others)
    mt = _Matcher(m, n + 1)
    full = (1 << n) - 1
    target_len = k - 1
    hverts = list(_bits(masks[-1]))

    def dfs(depth, last, inpath, a):
        if depth + 1 >= target_len:
            c = vedges[last] & vedges[a]
            if c and mt.augment(depth, c):
                return True
        avail = full & ~inpath & ~(1 << a)
        if depth + 1 + bin(avail).count("1") < target_len:
            return False
        for w in _bits(adj[last] & avail):
            if mt.augment(depth, vedges[last] & vedges[w]):
                if dfs(depth + 1, w, inpath | (1 << w), a):
                    return True
                mt.drop(depth)
        return False

    for i, a in enumerate(hverts):
        for b in hverts[i + 1:]:
            if dfs(0, b, 1 << b, a):
                return True
    return False


def census(n: int, masks, k: int, mode: int, first_edges):
    """Enumerate edge subsets with no Berge cycle (or path) of length >= k.

    Only subsets whose smallest edge index lies in ``first_edges`` are
    visited; the family is closed under taking subsets, so a subset is
    expanded only when it is itself good. Returns ``(best, extremal, visited)``
    with ``extremal`` the sorted index tuples of size ``best``.
    """
    m = len(masks)
    best = 0
    extremal: list[tuple[int, ...]] = []
    visited = 0
    chosen: list[int] = []

    def good() -> bool:
        sub = [masks[i] for i in chosen]
        if mode == CYCLE:
            return not _closes_through_last(n, sub, k)
        return path_at_least(n, sub, k)[0] != FOUND

    def record():
        nonlocal best, visited
        visited += 1
        size = len(chosen)
        if size > best:
            best = size
            extremal.clear()
        if size == best:
            extremal.append(tuple(chosen))

    def rec(start):
        for j in range(start, m):
            chosen.append(j)
            if good():
                record()
                rec(j + 1)
            chosen.pop()

    for f in first_edges:
        chosen[:] = [f]
        if good():
            record()
            rec(f + 1)
    return best, extremal, visited
