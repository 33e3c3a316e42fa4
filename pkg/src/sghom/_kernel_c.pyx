# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled homomorphism search kernel.

Same contract as sghom._kernel_py.search: bitmask backtracking over <=63
target vertices with AC-3 propagation after every assignment.  Keep the two
implementations behaviourally identical.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

import time

BACKEND = "cython"

ctypedef unsigned long long u64

cdef extern from *:
    """
    static inline int sg_popcount(unsigned long long x) {
        return __builtin_popcountll(x);
    }
    static inline int sg_ctz(unsigned long long x) {
        return __builtin_ctzll(x);
    }
    """
    int sg_popcount(u64 x) nogil
    int sg_ctz(u64 x) nogil


cdef struct Ctx:
    int n_vars
    int n_vals
    int qcap           # queue capacity
    int *inc_other     # flattened incidence lists
    int *inc_table
    int *inc_start     # n_vars + 1 offsets
    u64 *tables        # n_tables * n_vals
    u64 *dom           # current domains
    u64 *stack         # (n_vars + 1) * n_vars saved domains
    int *queue         # propagation worklist (ring)
    unsigned char *inq
    int lex_order
    int max_solutions
    double deadline    # negative: none
    long long steps
    int timed_out


cdef int _propagate(Ctx *c, int seed) nogil:
    """AC-3 from a touched variable (or -1 for all); 0 on wipeout."""
    cdef int qhead = 0, qtail = 0
    cdef int v, k, other, t, nv
    cdef u64 dv, rest, support, nd
    if seed < 0:
        for v in range(c.n_vars):
            c.queue[qtail] = v
            qtail += 1
            c.inq[v] = 1
    else:
        c.queue[qtail] = seed
        qtail += 1
        c.inq[seed] = 1
    while qhead != qtail:
        v = c.queue[qhead]
        qhead += 1
        if qhead == c.qcap:
            qhead = 0
        c.inq[v] = 0
        dv = c.dom[v]
        for k in range(c.inc_start[v], c.inc_start[v + 1]):
            other = c.inc_other[k]
            t = c.inc_table[k]
            support = 0
            rest = dv
            while rest:
                nv = sg_ctz(rest)
                rest &= rest - 1
                support |= c.tables[t * c.n_vals + nv]
            nd = c.dom[other] & support
            if nd != c.dom[other]:
                if nd == 0:
                    while qhead != qtail:  # clear queued flags
                        c.inq[c.queue[qhead]] = 0
                        qhead += 1
                        if qhead == c.qcap:
                            qhead = 0
                    return 0
                c.dom[other] = nd
                if not c.inq[other]:
                    c.inq[other] = 1
                    c.queue[qtail] = other
                    qtail += 1
                    if qtail == c.qcap:
                        qtail = 0
    return 1


cdef int _record(Ctx *c, list solutions):
    cdef int v
    sol = []
    for v in range(c.n_vars):
        sol.append(sg_ctz(c.dom[v]))
    solutions.append(tuple(sol))
    if c.max_solutions >= 0 and len(solutions) >= c.max_solutions:
        return 1
    return 0


cdef int _descend(Ctx *c, int depth, list solutions):
    """1 = stop the whole search."""
    cdef int var = -1, v, best, size
    cdef u64 d, rest, bit
    cdef u64 *saved
    c.steps += 1
    if c.deadline >= 0 and (c.steps & 0x3FF) == 0:
        if time.monotonic() > c.deadline:
            c.timed_out = 1
            return 1
    if c.lex_order:
        for v in range(c.n_vars):
            d = c.dom[v]
            if d & (d - 1):
                var = v
                break
    else:
        best = c.n_vals + 1
        for v in range(c.n_vars):
            d = c.dom[v]
            if d & (d - 1):
                size = sg_popcount(d)
                if size < best:
                    best = size
                    var = v
                    if size == 2:
                        break
    if var < 0:
        return _record(c, solutions)
    saved = c.stack + depth * c.n_vars
    memcpy(saved, c.dom, c.n_vars * sizeof(u64))
    rest = saved[var]
    while rest:
        bit = rest & (~rest + 1)
        rest ^= bit
        memcpy(c.dom, saved, c.n_vars * sizeof(u64))
        c.dom[var] = bit
        if _propagate(c, var):
            if _descend(c, depth + 1, solutions):
                return 1
    memcpy(c.dom, saved, c.n_vars * sizeof(u64))
    return 0


def search(
    int n_vars,
    int n_vals,
    edge_a,
    edge_b,
    edge_t,
    tables,
    domains,
    bint lex_order,
    int max_solutions,
    deadline=None,
):
    """See sghom._kernel_py.search for the contract."""
    cdef int i, k, a, b
    for d in domains:
        if d == 0:
            return [], False
    if n_vars == 0:
        return [()], False

    cdef int n_edges = len(edge_a)
    cdef int n_tables = len(tables)
    cdef list solutions = []
    cdef Ctx c
    c.n_vars = n_vars
    c.n_vals = n_vals
    c.qcap = 2 * n_edges + n_vars + 1
    c.lex_order = 1 if lex_order else 0
    c.max_solutions = max_solutions
    c.deadline = deadline if deadline is not None else -1.0
    c.steps = 0
    c.timed_out = 0

    cdef int *deg = <int *> malloc(n_vars * sizeof(int))
    c.inc_start = <int *> malloc((n_vars + 1) * sizeof(int))
    c.inc_other = <int *> malloc(max(1, 2 * n_edges) * sizeof(int))
    c.inc_table = <int *> malloc(max(1, 2 * n_edges) * sizeof(int))
    c.tables = <u64 *> malloc(max(1, n_tables * n_vals) * sizeof(u64))
    c.dom = <u64 *> malloc(n_vars * sizeof(u64))
    c.stack = <u64 *> malloc((<size_t> (n_vars + 1)) * n_vars * sizeof(u64))
    c.queue = <int *> malloc(c.qcap * sizeof(int))
    c.inq = <unsigned char *> malloc(n_vars * sizeof(unsigned char))
    if (
        deg == NULL or c.inc_start == NULL or c.inc_other == NULL
        or c.inc_table == NULL or c.tables == NULL or c.dom == NULL
        or c.stack == NULL or c.queue == NULL or c.inq == NULL
    ):
        free(deg); free(c.inc_start); free(c.inc_other); free(c.inc_table)
        free(c.tables); free(c.dom); free(c.stack); free(c.queue); free(c.inq)
        raise MemoryError()

    try:
        for i in range(n_vars):
            deg[i] = 0
            c.inq[i] = 0
        for k in range(n_edges):
            deg[<int> edge_a[k]] += 1
            deg[<int> edge_b[k]] += 1
        c.inc_start[0] = 0
        for i in range(n_vars):
            c.inc_start[i + 1] = c.inc_start[i] + deg[i]
            deg[i] = 0
        for k in range(n_edges):
            a = edge_a[k]
            b = edge_b[k]
            c.inc_other[c.inc_start[a] + deg[a]] = b
            c.inc_table[c.inc_start[a] + deg[a]] = <int> edge_t[k]
            deg[a] += 1
            c.inc_other[c.inc_start[b] + deg[b]] = a
            c.inc_table[c.inc_start[b] + deg[b]] = <int> edge_t[k]
            deg[b] += 1
        for i in range(n_tables):
            row = tables[i]
            for k in range(n_vals):
                c.tables[i * n_vals + k] = <u64> row[k]
        for i in range(n_vars):
            c.dom[i] = <u64> domains[i]

        if _propagate(&c, -1):
            _descend(&c, 0, solutions)
        return solutions, bool(c.timed_out)
    finally:
        free(deg)
        free(c.inc_start)
        free(c.inc_other)
        free(c.inc_table)
        free(c.tables)
        free(c.dom)
        free(c.stack)
        free(c.queue)
        free(c.inq)
