"""Exact homomorphism machinery: decision, enumeration, s-homomorphisms,
isomorphism, cores and s-cores.

`find_hom` / `enumerate_homs` run a complete backtracking search with
AC-3 propagation over bitmask domains (see kernel backends).  Variable order
is minimum-remaining-values with lexicographic tie-break, or pure
lexicographic under SearchConfig.deterministic, in which case the first
witness is the lexicographically least assignment.  s-homomorphisms are
solved through the switching graph: G has an s-hom to H iff G maps to
rho(H); the witness is folded back to a (switch set, homomorphism) pair.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .core import EdgeColouredGraph, require_signed, switch
from .errors import (
    BoundExceeded,
    LimitExceeded,
    PartialAssignment,
    SearchTimeout,
)
from . import kernel

Assignment = dict[str, str]


@dataclass(frozen=True)
class SearchConfig:
    variable_order: str = "mrv"  # "mrv" | "lexicographic"
    limit: Optional[int] = None
    deterministic: bool = False
    time_limit: Optional[float] = None  # seconds, wall clock

    def lex(self) -> bool:
        return self.deterministic or self.variable_order == "lexicographic"


@dataclass(frozen=True)
class SHomWitness:
    switch_set: frozenset[str]
    hom: Assignment


def check_hom(g: EdgeColouredGraph, h: EdgeColouredGraph, f: Assignment) -> bool:
    """True iff f maps every coloured edge of g onto a coloured edge of h."""
    missing = [v for v in g.vertices if v not in f]
    if missing:
        raise PartialAssignment(f"assignment misses {missing}")
    target_edges = h.edge_key_set()
    for u, v, c in g.edges:
        a, b = f[u], f[v]
        if a == b:
            return False
        key = (a, b, c) if a <= b else (b, a, c)
        if key not in target_edges:
            return False
    return True


class _Instance:
    """Compiled form of a (source, target) pair for the kernel."""

    def __init__(self, g: EdgeColouredGraph, h: EdgeColouredGraph):
        self.g = g
        self.h = h
        self.src = list(g.vertices)
        self.tgt = list(h.vertices)
        self.tpos = {v: i for i, v in enumerate(self.tgt)}
        spos = {v: i for i, v in enumerate(self.src)}
        m = len(self.tgt)
        # one adjacency table per colour appearing in g
        colours = sorted({c for _, _, c in g.edges})
        cindex = {c: i for i, c in enumerate(colours)}
        tables = [[0] * m for _ in colours]
        for u, v, c in h.edges:
            if c in cindex:
                t = tables[cindex[c]]
                ui, vi = self.tpos[u], self.tpos[v]
                t[ui] |= 1 << vi
                t[vi] |= 1 << ui
        self.tables = tables
        self.edge_a = [spos[u] for u, _, _ in g.edges]
        self.edge_b = [spos[v] for _, v, _ in g.edges]
        self.edge_t = [cindex[c] for _, _, c in g.edges]
        self.full = (1 << m) - 1

    def domains(self, pins: Optional[Assignment] = None) -> list[int]:
        dom = [self.full] * len(self.src)
        if pins:
            for v, w in pins.items():
                dom[self.src.index(v)] &= 1 << self.tpos[w]
        return dom

    def run(
        self,
        cfg: SearchConfig,
        pins: Optional[Assignment] = None,
        max_solutions: int = 1,
    ) -> list[Assignment]:
        deadline = (
            time.monotonic() + cfg.time_limit if cfg.time_limit is not None else None
        )
        sols, timed_out = kernel.search(
            len(self.src),
            len(self.tgt),
            self.edge_a,
            self.edge_b,
            self.edge_t,
            self.tables,
            self.domains(pins),
            cfg.lex(),
            max_solutions,
            deadline,
        )
        if timed_out:
            raise SearchTimeout(f"search exceeded {cfg.time_limit}s")
        return [
            {v: self.tgt[val] for v, val in zip(self.src, sol)} for sol in sols
        ]


def find_hom(
    g: EdgeColouredGraph,
    h: EdgeColouredGraph,
    cfg: SearchConfig = SearchConfig(),
    pins: Optional[Assignment] = None,
) -> Optional[Assignment]:
    """A homomorphism g -> h, or None; complete backtracking search.

    ``pins`` optionally fixes the images of some source vertices.
    """
    sols = _Instance(g, h).run(cfg, pins, max_solutions=1)
    return sols[0] if sols else None


def enumerate_homs(
    g: EdgeColouredGraph,
    h: EdgeColouredGraph,
    cfg: SearchConfig = SearchConfig(),
    pins: Optional[Assignment] = None,
) -> list[Assignment]:
    """All homomorphisms g -> h, duplicate-free.

    With cfg.limit set, raises LimitExceeded once more than ``limit``
    homomorphisms exist (the exception carries the partial count).  Order is
    the search order, which is deterministic; under cfg.deterministic it is
    lexicographic in the assignment tuple.
    """
    cap = -1 if cfg.limit is None else cfg.limit + 1
    sols = _Instance(g, h).run(cfg, pins, max_solutions=cap)
    if cfg.limit is not None and len(sols) > cfg.limit:
        raise LimitExceeded(
            f"more than {cfg.limit} homomorphisms", partial_count=len(sols)
        )
    return sols


def find_shom(
    g: EdgeColouredGraph,
    h: EdgeColouredGraph,
    cfg: SearchConfig = SearchConfig(),
) -> Optional[SHomWitness]:
    """An s-homomorphism witness (switch set on g, then a homomorphism), or
    None.  Computed as find_hom(g, rho(h)) and folded back."""
    from .constructions import rho, rho_vertex

    require_signed(g, h)
    raw = find_hom(g, rho(h), cfg)
    if raw is None:
        return None
    switch_set = frozenset(v for v, w in raw.items() if rho_vertex(w)[1] == 1)
    hom = {v: rho_vertex(w)[0] for v, w in raw.items()}
    witness = SHomWitness(switch_set=switch_set, hom=hom)
    assert check_hom(switch(g, switch_set), h, hom), "rho folding broke the witness"
    return witness


# ---------------------------------------------------------------------------
# Isomorphism
# ---------------------------------------------------------------------------


def _colour_degree_profile(g: EdgeColouredGraph) -> dict[str, tuple]:
    prof: dict[str, dict[int, int]] = {v: {} for v in g.vertices}
    for u, v, c in g.edges:
        prof[u][c] = prof[u].get(c, 0) + 1
        prof[v][c] = prof[v].get(c, 0) + 1
    return {v: tuple(sorted(d.items())) for v, d in prof.items()}


def find_iso(
    g: EdgeColouredGraph,
    h: EdgeColouredGraph,
    pins: Optional[Assignment] = None,
) -> Optional[Assignment]:
    """A colour-preserving isomorphism g -> h, or None.

    Brute-force backtracking with colour-degree pruning; meant for graphs of
    up to ~20 vertices.  ``pins`` pre-assigns images (used to demand an
    automorphism exchanging two distinguished vertices).
    """
    if len(g.vertices) != len(h.vertices) or len(g.edges) != len(h.edges):
        return None
    gp = _colour_degree_profile(g)
    hp = _colour_degree_profile(h)
    if sorted(gp.values()) != sorted(hp.values()):
        return None

    adj_g: dict[str, dict[str, set[int]]] = {v: {} for v in g.vertices}
    for u, v, c in g.edges:
        adj_g[u].setdefault(v, set()).add(c)
        adj_g[v].setdefault(u, set()).add(c)
    adj_h: dict[str, dict[str, set[int]]] = {v: {} for v in h.vertices}
    for u, v, c in h.edges:
        adj_h[u].setdefault(v, set()).add(c)
        adj_h[v].setdefault(u, set()).add(c)

    # order source vertices so each (after the first in its component) has a
    # previously-placed neighbour; candidates then come from image adjacency.
    order: list[str] = []
    placed: set[str] = set()
    for root in g.vertices:
        if root in placed:
            continue
        stack = [root]
        placed.add(root)
        while stack:
            x = stack.pop()
            order.append(x)
            for y in sorted(adj_g[x], key=g.vertices.index):
                if y not in placed:
                    placed.add(y)
                    stack.append(y)

    assign: Assignment = dict(pins or {})
    used: set[str] = set(assign.values())
    if len(used) != len(assign):
        return None

    def feasible(x: str, y: str) -> bool:
        if gp[x] != hp[y]:
            return False
        for nbr, cols in adj_g[x].items():
            if nbr in assign and adj_h[y].get(assign[nbr], set()) != cols:
                return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        if x in assign:
            return extend(i + 1)
        cands: Iterable[str]
        anchored = [
            assign[nbr] for nbr in adj_g[x] if nbr in assign
        ]
        if anchored:
            cands = sorted(set(adj_h[anchored[0]]) - used)
        else:
            cands = [y for y in h.vertices if y not in used]
        for y in cands:
            if y in used or not feasible(x, y):
                continue
            assign[x] = y
            used.add(y)
            if extend(i + 1):
                return True
            del assign[x]
            used.discard(y)
        return False

    for x, y in list(assign.items()):
        if not feasible(x, y):
            return None
    if not extend(0):
        return None
    # bijective vertex map + injective edge map + equal edge counts => iso;
    # re-check edges for the pinned/composite case all the same.
    if not check_hom(g, h, assign):
        return None
    return dict(assign)


# ---------------------------------------------------------------------------
# Cores
# ---------------------------------------------------------------------------

CORE_BOUND = 24


def _retract_once(g, finder, cfg) -> Optional[EdgeColouredGraph]:
    for w in g.vertices:
        candidate = g.induced([v for v in g.vertices if v != w])
        witness = finder(g, candidate, cfg)
        if witness is not None:
            hom = witness.hom if isinstance(witness, SHomWitness) else witness
            image = sorted(set(hom.values()), key=g.vertices.index)
            return g.induced(image)
    return None


def core_of(
    g: EdgeColouredGraph,
    cfg: SearchConfig = SearchConfig(),
    bound: int = CORE_BOUND,
) -> EdgeColouredGraph:
    """The core: an induced-subgraph-minimal retract, unique up to iso.

    Repeatedly finds an endomorphism avoiding some vertex, restricts to the
    induced image, and stops at the fixed point.
    """
    if len(g.vertices) > bound:
        raise BoundExceeded(f"{len(g.vertices)} vertices exceeds bound {bound}")
    current = g
    while True:
        nxt = _retract_once(current, find_hom, cfg)
        if nxt is None:
            return EdgeColouredGraph(
                current.vertices,
                current.edges,
                name=f"core({g.name})" if g.name else None,
            )
        current = nxt


def score_of(
    g: EdgeColouredGraph,
    cfg: SearchConfig = SearchConfig(),
    bound: int = CORE_BOUND,
) -> EdgeColouredGraph:
    """The s-core: the same retraction loop with s-homomorphisms.

    Candidate subgraphs keep their inherited signs; switching of the source
    is already absorbed by the s-hom search.
    """
    require_signed(g)
    if len(g.vertices) > bound:
        raise BoundExceeded(f"{len(g.vertices)} vertices exceeds bound {bound}")
    current = g
    while True:
        nxt = _retract_once(current, find_shom, cfg)
        if nxt is None:
            return EdgeColouredGraph(
                current.vertices,
                current.edges,
                name=f"score({g.name})" if g.name else None,
            )
        current = nxt


def compose(f: Assignment, g_map: Assignment) -> Assignment:
    """Composite assignment x -> g_map[f[x]]."""
    return {x: g_map[y] for x, y in f.items()}
