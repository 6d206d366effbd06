# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same algorithms and outputs as ``_pykernels``.

Limited to at most 64 vertices and 64 edges (one machine word per mask).
"""
from libc.stdint cimport int64_t, uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXW = 64

FOUND = 1
NONE = 0
BUDGET = -1
CYCLE = 0
PATH = 1
LIMIT = MAXW


cdef struct State:
    int n
    int m
    int k
    uint64_t vedges[MAXW]
    uint64_t adj[MAXW]
    int owner[MAXW]
    int match[MAXW + 1]
    uint64_t cand[MAXW + 1]
    int path[MAXW + 1]
    uint64_t seen
    int64_t nodes
    int64_t budget


cdef inline int popc(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef inline uint64_t bit(int i) nogil:
    return (<uint64_t>1) << i


cdef inline uint64_t low_mask(int n) nogil:
    if n >= 64:
        return ~(<uint64_t>0)
    return bit(n) - 1


cdef void setup(State* S, int n, uint64_t* masks, int m) nogil:
    cdef int i, v
    cdef uint64_t em, a, es
    S.n = n
    S.m = m
    S.nodes = 0
    for v in range(n):
        S.vedges[v] = 0
    for i in range(m):
        S.owner[i] = -1
        em = masks[i]
        while em:
            v = ctz(em)
            em &= em - 1
            S.vedges[v] |= bit(i)
    for v in range(n):
        a = 0
        es = S.vedges[v]
        while es:
            i = ctz(es)
            es &= es - 1
            a |= masks[i]
        S.adj[v] = a & ~bit(v)
    for i in range(MAXW + 1):
        S.match[i] = -1


cdef bint go(State* S, int p) nogil:
    cdef uint64_t c, low
    cdef int e, q
    while True:
        c = S.cand[p] & ~S.seen
        if c == 0:
            return False
        low = c & (~c + 1)
        S.seen |= low
        e = ctz(c)
        q = S.owner[e]
        if q == -1 or go(S, q):
            S.owner[e] = p
            S.match[p] = e
            return True


cdef inline bint augment(State* S, int p, uint64_t cand) nogil:
    S.cand[p] = cand
    S.seen = 0
    return go(S, p)


cdef inline void drop(State* S, int p) nogil:
    S.owner[S.match[p]] = -1
    S.match[p] = -1


cdef int cycle_dfs(State* S, int depth, int last, uint64_t inpath, uint64_t allowed, int s) nogil:
    cdef uint64_t c, avail, nxt
    cdef int w, got
    if depth + 1 >= S.k and depth >= 1 and (depth == 1 or S.path[1] < last):
        c = S.vedges[last] & S.vedges[s]
        if c and augment(S, depth, c):
            return depth + 1
    avail = allowed & ~inpath
    if depth + 1 + popc(avail) < S.k:
        return 0
    nxt = S.adj[last] & avail
    while nxt:
        w = ctz(nxt)
        nxt &= nxt - 1
        S.nodes += 1
        if S.budget > 0 and S.nodes > S.budget:
            return -1
        if augment(S, depth, S.vedges[last] & S.vedges[w]):
            S.path[depth + 1] = w
            got = cycle_dfs(S, depth + 1, w, inpath | bit(w), allowed, s)
            if got != 0:
                return got
            drop(S, depth)
    return 0


cdef int path_dfs(State* S, int depth, int last, uint64_t inpath, uint64_t full) nogil:
    cdef uint64_t avail, nxt
    cdef int w, got
    if depth >= S.k:
        return depth + 1
    avail = full & ~inpath
    if depth + popc(avail) < S.k:
        return 0
    nxt = S.adj[last] & avail
    while nxt:
        w = ctz(nxt)
        nxt &= nxt - 1
        S.nodes += 1
        if S.budget > 0 and S.nodes > S.budget:
            return -1
        if augment(S, depth, S.vedges[last] & S.vedges[w]):
            S.path[depth + 1] = w
            got = path_dfs(S, depth + 1, w, inpath | bit(w), full)
            if got != 0:
                return got
            drop(S, depth)
    return 0


cdef int run_cycle(State* S, int n, uint64_t* masks, int m, int k) nogil:
    cdef int s, got
    cdef uint64_t full, allowed
    if k < 2:
        k = 2
    S.k = k
    if m < k or n < k:
        return 0
    setup(S, n, masks, m)
    full = low_mask(n)
    for s in range(n):
        allowed = full & ~low_mask(s + 1)
        if 1 + popc(allowed) < k:
            break
        S.path[0] = s
        got = cycle_dfs(S, 0, s, bit(s), allowed, s)
        if got != 0:
            return got
    return 0


cdef int run_path(State* S, int n, uint64_t* masks, int m, int k) nogil:
    cdef int s, got
    cdef uint64_t full
    S.k = k
    setup(S, n, masks, m)
    full = low_mask(n)
    for s in range(n):
        S.path[0] = s
        got = path_dfs(S, 0, s, bit(s), full)
        if got != 0:
            return got
    return 0


cdef int through_dfs(State* S, int depth, int last, uint64_t inpath, int a, uint64_t full) nogil:
    cdef uint64_t c, avail, nxt
    cdef int w
    if depth + 1 >= S.k:
        c = S.vedges[last] & S.vedges[a]
        if c and augment(S, depth, c):
            return 1
    avail = full & ~inpath & ~bit(a)
    if depth + 1 + popc(avail) < S.k:
        return 0
    nxt = S.adj[last] & avail
    while nxt:
        w = ctz(nxt)
        nxt &= nxt - 1
        if augment(S, depth, S.vedges[last] & S.vedges[w]):
            if through_dfs(S, depth + 1, w, inpath | bit(w), a, full):
                return 1
            drop(S, depth)
    return 0


cdef bint closes_through_last(State* S, int n, uint64_t* masks, int m, int k) nogil:
    cdef uint64_t h, rest, full
    cdef int a, b
    if m < k:
        return False
    setup(S, n, masks, m - 1)
    S.k = k - 1
    full = low_mask(n)
    h = masks[m - 1]
    while h:
        a = ctz(h)
        h &= h - 1
        rest = h
        while rest:
            b = ctz(rest)
            rest &= rest - 1
            if through_dfs(S, 0, b, bit(b), a, full):
                return True
    return False


cdef int load(list masks, uint64_t* out) except -1:
    cdef int i
    if len(masks) > MAXW:
        raise ValueError("compiled kernels support at most 64 edges")
    for i in range(len(masks)):
        out[i] = <uint64_t>masks[i]
    return len(masks)


def cycle_at_least(int n, masks, int k, long long budget=0):
    cdef State S
    cdef uint64_t arr[MAXW]
    cdef int m, got
    if n > MAXW:
        raise ValueError("compiled kernels support at most 64 vertices")
    m = load(list(masks), arr)
    S.budget = budget
    S.nodes = 0
    with nogil:
        got = run_cycle(&S, n, arr, m, k)
    if got < 0:
        return BUDGET, (), (), S.nodes
    if got == 0:
        return NONE, (), (), S.nodes
    return FOUND, tuple([S.path[i] for i in range(got)]), tuple([S.match[i] for i in range(got)]), S.nodes


def path_at_least(int n, masks, int k, long long budget=0):
    cdef State S
    cdef uint64_t arr[MAXW]
    cdef int m, got
    if n > MAXW:
        raise ValueError("compiled kernels support at most 64 vertices")
    m = load(list(masks), arr)
    if n == 0 or k > m or k > n - 1:
        return NONE, (), (), 0
    if k <= 0:
        return FOUND, (0,), (), 0
    S.budget = budget
    S.nodes = 0
    with nogil:
        got = run_path(&S, n, arr, m, k)
    if got < 0:
        return BUDGET, (), (), S.nodes
    if got == 0:
        return NONE, (), (), S.nodes
    return FOUND, tuple([S.path[i] for i in range(got)]), tuple([S.match[i] for i in range(got - 1)]), S.nodes


cdef class _Census:
    cdef State S
    cdef uint64_t masks[MAXW]
    cdef uint64_t sub[MAXW]
    cdef int chosen[MAXW]
    cdef int n, m, k, mode, size
    cdef public int best
    cdef public long long visited
    cdef public list extremal

    def __init__(self, int n, masks, int k, int mode):
        self.n = n
        self.m = load(list(masks), self.masks)
        self.k = k
        self.mode = mode
        self.best = 0
        self.visited = 0
        self.extremal = []
        self.size = 0

    cdef bint good(self):
        cdef int got
        if self.mode == CYCLE:
            return not closes_through_last(&self.S, self.n, self.sub, self.size, self.k)
        if self.k > self.size or self.k > self.n - 1:
            return True
        self.S.budget = 0
        got = run_path(&self.S, self.n, self.sub, self.size, self.k)
        return got == 0

    cdef void record(self):
        self.visited += 1
        if self.size > self.best:
            self.best = self.size
            self.extremal = []
        if self.size == self.best:
            self.extremal.append(tuple([self.chosen[i] for i in range(self.size)]))

    cdef void rec(self, int start):
        cdef int j
        for j in range(start, self.m):
            self.chosen[self.size] = j
            self.sub[self.size] = self.masks[j]
            self.size += 1
            if self.good():
                self.record()
                self.rec(j + 1)
            self.size -= 1

    def run(self, first_edges):
        for f in first_edges:
            self.chosen[0] = f
            self.sub[0] = self.masks[f]
            self.size = 1
            if self.good():
                self.record()
                self.rec(f + 1)
            self.size = 0
        return self.best, self.extremal, self.visited


def census(int n, masks, int k, int mode, first_edges):
    if n > MAXW:
        raise ValueError("compiled kernels support at most 64 vertices")
    return _Census(n, masks, k, mode).run(list(first_edges))
