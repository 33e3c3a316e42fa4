"""Edge-coloured graphs and the switching calculus.

The data model: an edge-coloured graph is an ordered vertex list plus a list
of coloured undirected edges (u, v, colour).  Signed graphs are the special
case with colours in {+1, -1} (+1 positive/blue, -1 negative/red); plain
graphs use colour +1 only.  Loops are rejected, and parallel edges are
permitted only with distinct colours, so (pair, colour) identifies an edge.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import (
    DuplicateColouredEdge,
    LoopEdge,
    NotSigned,
    UnknownEndpoint,
)

Edge = tuple[str, str, int]

POSITIVE = 1
NEGATIVE = -1
SIGNS = (POSITIVE, NEGATIVE)


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic order of incident edge indices around each vertex.

    ``rotation`` holds one ``(vertex, edge-index tuple)`` entry per vertex
    that carries incidences; indices point into the owning graph's edge list.
    """

    rotation: tuple[tuple[str, tuple[int, ...]], ...]

    @classmethod
    def from_dict(cls, d: dict[str, Iterable[int]]) -> "RotationSystem":
        return cls(tuple((v, tuple(ix)) for v, ix in d.items()))

    def as_dict(self) -> dict[str, tuple[int, ...]]:
        return {v: ix for v, ix in self.rotation}


@dataclass(frozen=True)
class EdgeColouredGraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    name: Optional[str] = None
    rotation: Optional[RotationSystem] = None

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))

    # -- cheap views -------------------------------------------------------

    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    def colours(self) -> frozenset[int]:
        return frozenset(c for _, _, c in self.edges)

    def edge_key_set(self) -> frozenset[tuple[str, str, int]]:
        """Edges with endpoints in a canonical (sorted) order."""
        return frozenset(
            (u, v, c) if u <= v else (v, u, c) for u, v, c in self.edges
        )

    def has_edge(self, u: str, v: str, colour: int) -> bool:
        key = (u, v, colour) if u <= v else (v, u, colour)
        return key in self.edge_key_set()

    def neighbours(self, v: str) -> set[str]:
        """Colour-blind neighbour set."""
        out = set()
        for a, b, _ in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def incident_edge_indices(self, v: str) -> list[int]:
        return [i for i, (a, b, _) in enumerate(self.edges) if v in (a, b)]

    def is_signed(self) -> bool:
        return all(c in SIGNS for _, _, c in self.edges)

    def induced(self, keep: Iterable[str], name: Optional[str] = None) -> "EdgeColouredGraph":
        """Induced subgraph on ``keep``; vertex order inherited, no rotation."""
        ks = set(keep)
        return EdgeColouredGraph(
            vertices=tuple(v for v in self.vertices if v in ks),
            edges=tuple(e for e in self.edges if e[0] in ks and e[1] in ks),
            name=name,
        )


@dataclass(frozen=True)
class StructuralStats:
    girth: float  # positive integer, or math.inf for forests
    bipartite: bool
    max_degree: int
    connected_components: int


def validate_graph(g: EdgeColouredGraph) -> None:
    """Check the EdgeColouredGraph invariants, raising on the first failure."""
    declared = set()
    for v in g.vertices:
        if v in declared:
            raise DuplicateColouredEdge(f"vertex {v!r} declared twice")
        declared.add(v)
    seen = set()
    for u, v, c in g.edges:
        if u == v:
            raise LoopEdge(f"loop at {u!r} (colour {c})")
        if u not in declared:
            raise UnknownEndpoint(f"edge ({u!r},{v!r},{c}) names unknown vertex {u!r}")
        if v not in declared:
            raise UnknownEndpoint(f"edge ({u!r},{v!r},{c}) names unknown vertex {v!r}")
        key = (u, v, c) if u <= v else (v, u, c)
        if key in seen:
            raise DuplicateColouredEdge(f"edge ({u!r},{v!r},{c}) appears twice")
        seen.add(key)


def require_signed(*graphs: EdgeColouredGraph) -> None:
    for g in graphs:
        if not g.is_signed():
            bad = sorted(c for c in g.colours() if c not in SIGNS)
            raise NotSigned(f"colours outside {{+1,-1}}: {bad}")


def switch(g: EdgeColouredGraph, s: Iterable[str]) -> EdgeColouredGraph:
    """Flip the sign of every edge with exactly one endpoint in ``s``.

    The vertex set, edge order and rotation are preserved, so switching is an
    involution on equal values.
    """
    require_signed(g)
    members = set(s)
    unknown = members - g.vertex_set()
    if unknown:
        raise UnknownEndpoint(f"switch set names unknown vertices {sorted(unknown)}")
    new_edges = tuple(
        (u, v, -c if (u in members) != (v in members) else c) for u, v, c in g.edges
    )
    return EdgeColouredGraph(g.vertices, new_edges, name=g.name, rotation=g.rotation)


def _component_potentials(g: EdgeColouredGraph) -> tuple[dict[str, int], list[str]]:
    """Spanning-forest sign propagation.

    Returns (potential in {+1,-1} per vertex, component roots in vertex
    order).  Only one edge per unordered pair is used for propagation; the
    caller re-checks every edge against the potentials.
    """
    adj: dict[str, list[tuple[str, int]]] = {v: [] for v in g.vertices}
    for u, v, c in g.edges:
        adj[u].append((v, c))
        adj[v].append((u, c))
    pot: dict[str, int] = {}
    roots = []
    for root in g.vertices:
        if root in pot:
            continue
        roots.append(root)
        pot[root] = POSITIVE
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, c in adj[x]:
                if y not in pot:
                    pot[y] = pot[x] * c
                    queue.append(y)
    return pot, roots


def is_balanced(g: EdgeColouredGraph) -> bool:
    """True iff every cycle carries an even number of negative edges.

    Computed by spanning-forest sign propagation: assign each vertex a
    potential, then demand pot(u) * pot(v) == sign for every edge.  A +/-
    digon fails one of its two checks, as it should (it is an unbalanced
    2-cycle).
    """
    require_signed(g)
    pot, _ = _component_potentials(g)
    return all(pot[u] * pot[v] == c for u, v, c in g.edges)


def switching_equivalent(
    g1: EdgeColouredGraph, g2: EdgeColouredGraph
) -> Optional[frozenset[str]]:
    """A switch set s with switch(g1, s) == g2 up to edge order, else None.

    Requires the same labelled vertex set (VertexSetMismatch otherwise) and
    identical underlying graphs.  Roots each component, propagates forced
    switch values along a spanning forest, then verifies every co-forest
    constraint.
    """
    from .errors import VertexSetMismatch

    require_signed(g1, g2)
    if g1.vertex_set() != g2.vertex_set():
        raise VertexSetMismatch("graphs do not share a labelled vertex set")

    def pair_map(g: EdgeColouredGraph) -> dict[tuple[str, str], frozenset[int]]:
        out: dict[tuple[str, str], set[int]] = {}
        for u, v, c in g.edges:
            key = (u, v) if u <= v else (v, u)
            out.setdefault(key, set()).add(c)
        return {k: frozenset(cs) for k, cs in out.items()}

    p1, p2 = pair_map(g1), pair_map(g2)
    if set(p1) != set(p2):
        return None
    # Digons {+,-} are switching-invariant and impose no constraint; a pair
    # with one colour on one side and two on the other can never match.
    constraints: dict[tuple[str, str], int] = {}
    for key in p1:
        c1, c2 = p1[key], p2[key]
        if len(c1) != len(c2):
            return None
        if len(c1) == 2:
            continue
        (a,) = c1
        (b,) = c2
        constraints[key] = 0 if a == b else 1  # x_u XOR x_v

    adj: dict[str, list[tuple[str, int]]] = {v: [] for v in g1.vertices}
    for (u, v), parity in constraints.items():
        adj[u].append((v, parity))
        adj[v].append((u, parity))
    value: dict[str, int] = {}
    for root in g1.vertices:
        if root in value:
            continue
        value[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, parity in adj[x]:
                if y not in value:
                    value[y] = value[x] ^ parity
                    queue.append(y)
    for (u, v), parity in constraints.items():
        if value[u] ^ value[v] != parity:
            return None
    return frozenset(v for v in g1.vertices if value[v])


def _colour_blind_adj(g: EdgeColouredGraph) -> dict[str, set[str]]:
    adj: dict[str, set[str]] = {v: set() for v in g.vertices}
    for u, v, _ in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def stats(g: EdgeColouredGraph) -> StructuralStats:
    """Girth, bipartiteness, max degree and component count of the underlying
    colour-blind simple graph."""
    adj = _colour_blind_adj(g)
    order = {v: i for i, v in enumerate(g.vertices)}

    components = 0
    colour: dict[str, int] = {}
    bipartite = True
    for root in g.vertices:
        if root in colour:
            continue
        components += 1
        colour[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in colour:
                    colour[y] = colour[x] ^ 1
                    queue.append(y)
                elif colour[y] == colour[x]:
                    bipartite = False

    girth: float = math.inf
    for root in g.vertices:
        # BFS from root; an edge between two visited vertices on distinct
        # BFS branches closes a cycle of length dist[x] + dist[y] + 1.
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if dist[x] * 2 >= girth:
                break
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y and order[y] >= order[root]:
                    girth = min(girth, dist[x] + dist[y] + 1)

    max_degree = max((len(adj[v]) for v in g.vertices), default=0)
    return StructuralStats(
        girth=girth,
        bipartite=bipartite,
        max_degree=max_degree,
        connected_components=components,
    )


def components(g: EdgeColouredGraph) -> list[tuple[str, ...]]:
    """Connected components as vertex tuples, in vertex order."""
    adj = _colour_blind_adj(g)
    seen: set[str] = set()
    out = []
    for root in g.vertices:
        if root in seen:
            continue
        comp = []
        queue = deque([root])
        seen.add(root)
        while queue:
            x = queue.popleft()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        out.append(tuple(sorted(comp, key=lambda v: g.vertices.index(v))))
    return out
