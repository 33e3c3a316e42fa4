"""Pure-Python homomorphism search kernel.

Bitmask backtracking over the target vertex set with AC-3 style propagation
after every assignment.  Domains are ints (bit i = target vertex i allowed).
This module mirrors the compiled kernel in ``_kernel_c``; the two must stay
behaviourally identical (see tests/test_backends.py).
"""

from __future__ import annotations

import time

BACKEND = "python"

_TIME_CHECK_MASK = 0x3FF


def search(
    n_vars: int,
    n_vals: int,
    edge_a: list[int],
    edge_b: list[int],
    edge_t: list[int],
    tables: list[list[int]],
    domains: list[int],
    lex_order: bool,
    max_solutions: int,
    deadline: float | None = None,
):
    """Enumerate homomorphisms as value tuples.

    Returns (solutions, timed_out).  Stops after ``max_solutions`` solutions
    when that is >= 0.  Constraint k of edge (a, b): value x at a supports
    value y at b iff bit y is set in tables[k][x] (symmetric adjacency).
    """
    if any(d == 0 for d in domains):
        return [], False
    if n_vars == 0:
        return [()], False

    import sys

    if sys.getrecursionlimit() < 2 * n_vars + 200:
        sys.setrecursionlimit(2 * n_vars + 200)

    inc: list[list[tuple[int, int]]] = [[] for _ in range(n_vars)]
    for a, b, t in zip(edge_a, edge_b, edge_t):
        inc[a].append((b, t))
        inc[b].append((a, t))

    dom = list(domains)
    # Initial propagation to a fixed point.
    if not _propagate(list(range(n_vars)), dom, inc, tables):
        return [], False

    solutions: list[tuple[int, ...]] = []
    steps = 0
    timed_out = False

    def tick() -> bool:
        nonlocal steps, timed_out
        steps += 1
        if deadline is not None and (steps & _TIME_CHECK_MASK) == 0:
            if time.monotonic() > deadline:
                timed_out = True
        return timed_out

    def descend(dom: list[int]) -> bool:
        """Returns True when the search should stop entirely."""
        if tick():
            return True
        var = -1
        if lex_order:
            for v in range(n_vars):
                if dom[v] & (dom[v] - 1):
                    var = v
                    break
        else:
            best = n_vals + 1
            for v in range(n_vars):
                d = dom[v]
                if d & (d - 1):
                    size = d.bit_count()
                    if size < best:
                        best = size
                        var = v
                        if size == 2:
                            break
        if var < 0:
            solutions.append(tuple(d.bit_length() - 1 for d in dom))
            return 0 <= max_solutions <= len(solutions)
        rest = dom[var]
        while rest:
            bit = rest & (-rest)
            rest ^= bit
            child = list(dom)
            child[var] = bit
            if _propagate([var], child, inc, tables):
                if descend(child):
                    return True
        return False

    descend(dom)
    return solutions, timed_out


def _propagate(queue, dom, inc, tables) -> bool:
    """AC-3 over the touched-variable worklist; False on a domain wipeout."""
    pending = list(queue)
    in_queue = set(pending)
    while pending:
        v = pending.pop()
        in_queue.discard(v)
        dv = dom[v]
        for other, t in inc[v]:
            table = tables[t]
            support = 0
            rest = dv
            while rest:
                bit = rest & (-rest)
                rest ^= bit
                support |= table[bit.bit_length() - 1]
            nd = dom[other] & support
            if nd != dom[other]:
                if not nd:
                    return False
                dom[other] = nd
                if other not in in_queue:
                    in_queue.add(other)
                    pending.append(other)
    return True
