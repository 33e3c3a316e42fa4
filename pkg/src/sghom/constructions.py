"""Graph transformers: the switching graph rho, indicator application and
edge replacement, path replacement, doubling, and the forcing checker.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import (
    EdgeColouredGraph,
    POSITIVE,
    RotationSystem,
    require_signed,
    validate_graph,
)
from .embedding import PlaneBuilder, certify_embedding
from .errors import (
    BadParameter,
    BadVertices,
    GraphError,
    InvalidIndicator,
    NoSuchEdge,
)
from .hom import (
    Assignment,
    SearchConfig,
    _Instance,
    enumerate_homs,
    find_iso,
)


class LoopDiscardedWarning(UserWarning):
    """An indicator application admitted a pinned hom with i and j on one
    vertex; the loop it would induce is discarded."""


def rho(h: EdgeColouredGraph) -> EdgeColouredGraph:
    """The switching graph: vertices u.0/u.1; same-index copies of an edge
    keep its sign, cross-index copies get the opposite sign."""
    require_signed(h)
    vertices = []
    for u in h.vertices:
        vertices += [f"{u}.0", f"{u}.1"]
    edges = []
    for u, v, c in h.edges:
        edges += [
            (f"{u}.0", f"{v}.0", c),
            (f"{u}.1", f"{v}.1", c),
            (f"{u}.0", f"{v}.1", -c),
            (f"{u}.1", f"{v}.0", -c),
        ]
    g = EdgeColouredGraph(
        vertices=tuple(vertices),
        edges=tuple(edges),
        name=f"rho({h.name})" if h.name else None,
    )
    validate_graph(g)
    return g


def rho_vertex(name: str) -> tuple[str, int]:
    """Split a rho-vertex name into (underlying vertex, parity)."""
    base, _, parity = name.rpartition(".")
    return base, int(parity)


def antitwin(name: str) -> str:
    base, parity = rho_vertex(name)
    return f"{base}.{1 - parity}"


def canonical_rho_uc(two_k: int) -> EdgeColouredGraph:
    """rho(UC_{2k}) in its canonical circulant labelling u_0..u_{4k-1}:
    positive edges u_i u_{i+1}, negative edges u_i u_{i+2k-1} (mod 4k)."""
    if two_k < 4 or two_k % 2:
        raise BadParameter(f"UC length must be even and >= 4, got {two_k}")
    n = 2 * two_k
    labels = [f"u{i}" for i in range(n)]
    edges = []
    for i in range(n):
        edges.append((labels[i], labels[(i + 1) % n], POSITIVE))
    seen = set()
    for i in range(n):
        j = (i + two_k - 1) % n
        key = (min(i, j), max(i, j))
        if key not in seen:
            seen.add(key)
            edges.append((labels[key[0]], labels[key[1]], -1))
    return EdgeColouredGraph(
        vertices=tuple(labels), edges=tuple(edges), name=f"rho(UC{two_k})"
    )


def rho_uc_relabelling(two_k: int) -> dict[str, str]:
    """The canonical relabelling of rho(gen_uc(2k)) onto canonical_rho_uc.

    Walks the positive cycle of rho(UC_{2k}) from x0.0, starting toward the
    neighbour with the smaller original index: u_j = xj.0, u_{2k+j} = xj.1.
    """
    out = {}
    for j in range(two_k):
        out[f"x{j}.0"] = f"u{j}"
        out[f"x{j}.1"] = f"u{two_k + j}"
    return out


def rho_uc_index(name: str) -> int:
    """Index a of a canonical rho(UC_2k) vertex u_a."""
    return int(name[1:])


# ---------------------------------------------------------------------------
# Indicators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Indicator:
    """A signed graph with two pins exchanged by an automorphism."""

    graph: EdgeColouredGraph
    i: str
    j: str

    def __post_init__(self):
        if self.i == self.j:
            raise InvalidIndicator("pins must be distinct")
        vs = self.graph.vertex_set()
        if self.i not in vs or self.j not in vs:
            raise InvalidIndicator("pins must be vertices of the indicator graph")
        swap = find_iso(self.graph, self.graph, pins={self.i: self.j, self.j: self.i})
        if swap is None:
            raise InvalidIndicator(
                "indicator graph admits no automorphism exchanging the pins"
            )


def indicator_planar_data(ind: Indicator):
    """(builder, shared face, i-gap, j-gap) when the indicator carries a
    certified planar rotation with both pins on a common face; else None."""
    g = ind.graph
    if g.rotation is None:
        return None
    try:
        certify_embedding(g, g.rotation)
    except GraphError:
        return None
    b = PlaneBuilder.from_graph(g)
    for f in map(frozenset, b.faces()):
        gi = b.gaps_on_face(ind.i, f)
        gj = b.gaps_on_face(ind.j, f)
        if gi and gj:
            return b, f, gi[0], gj[0]
    return None


def preserves_planarity(ind: Indicator) -> bool:
    return indicator_planar_data(ind) is not None


def indicator_apply(
    h: EdgeColouredGraph, ind: Indicator, cfg: SearchConfig = SearchConfig()
) -> EdgeColouredGraph:
    """The plain graph H* on V(h): uv is an edge iff some homomorphism of the
    indicator graph into h pins i to u and j to v.

    Symmetric by the indicator's pin-swapping automorphism.  Pinned homs with
    i and j on one vertex would induce loops; they are discarded with a
    LoopDiscardedWarning.
    """
    inst = _Instance(ind.graph, h)
    edges = []
    for a_idx, u in enumerate(h.vertices):
        if inst.run(cfg, pins={ind.i: u, ind.j: u}, max_solutions=1):
            warnings.warn(
                f"indicator pins both map to {u!r}; loop discarded",
                LoopDiscardedWarning,
                stacklevel=2,
            )
        for v in h.vertices[a_idx + 1 :]:
            if inst.run(cfg, pins={ind.i: u, ind.j: v}, max_solutions=1):
                edges.append((u, v, POSITIVE))
    return EdgeColouredGraph(
        vertices=h.vertices,
        edges=tuple(edges),
        name=f"{h.name}*" if h.name else None,
    )


def edge_replace(
    g: EdgeColouredGraph,
    ind: Indicator,
    rot: Optional[RotationSystem] = None,
) -> EdgeColouredGraph:
    """f(G): each edge uv of g replaced by a fresh copy of the indicator
    graph, identifying u with pin i and v with pin j.

    When ``rot`` is given and the indicator preserves planarity, the result
    carries a composed (and certified) rotation.
    """
    for u, v, _ in g.edges:
        if u == v:
            raise BadParameter("source graph must be loop-free")
    planar = indicator_planar_data(ind) if rot is not None else None

    if planar is None:
        vertices = list(g.vertices)
        edges = []
        for k, (u, v, _) in enumerate(g.edges):
            names = {
                w: (u if w == ind.i else v if w == ind.j else f"e{k}.{w}")
                for w in ind.graph.vertices
            }
            for w in ind.graph.vertices:
                if names[w] not in vertices:
                    vertices.append(names[w])
            for a, b, c in ind.graph.edges:
                edges.append((names[a], names[b], c))
        out = EdgeColouredGraph(
            vertices=tuple(vertices),
            edges=tuple(edges),
            name=f"f({g.name})" if g.name else None,
        )
        validate_graph(out)
        return out

    ind_builder, _face, gap_i, gap_j = planar
    host = PlaneBuilder.from_graph(
        EdgeColouredGraph(g.vertices, g.edges, rotation=rot)
    )
    order = list(g.vertices)
    for k, (u, v, c) in enumerate(g.edges):
        gap_u, gap_v = host.delete_edge(u, v, c)
        names = host.add_piece(ind_builder.rot, prefix=f"e{k}.")
        order += [names[w] for w in ind.graph.vertices if w not in (ind.i, ind.j)]
        host.merge(u, names[ind.i], gap_a=gap_u, gap_b=gap_i)
        host.merge(v, names[ind.j], gap_a=gap_v, gap_b=gap_j)
    out = host.to_graph(
        name=f"f({g.name})" if g.name else None, vertex_order=order
    )
    validate_graph(out)
    certify_embedding(out, out.rotation)
    return out


def path_replace(
    h: EdgeColouredGraph, x: str, y: str, i: int
) -> EdgeColouredGraph:
    """J: drop the positive edge xy, add an all-positive path of i edges
    x = q_0, q_1, ..., q_{i-1}, q_i = y with fresh internal labels."""
    if i < 3 or i % 2 == 0:
        raise BadParameter(f"path length must be odd and >= 3, got {i}")
    if not h.has_edge(x, y, POSITIVE):
        raise NoSuchEdge(f"no positive edge {x!r}-{y!r}")
    inner = [f"q{j}" for j in range(1, i)]
    chain = [x] + inner + [y]

    if h.rotation is not None:
        b = PlaneBuilder.from_graph(h)
        gap_x, gap_y = b.delete_edge(x, y, POSITIVE)
        for w in inner:
            b.add_vertex(w)
        for a, bv in zip(chain, chain[1:]):
            at_u = gap_x if a == x else 0
            at_v = gap_y if bv == y else 0
            b.add_edge(a, bv, POSITIVE, at_u=at_u, at_v=at_v)
        return b.to_graph(
            name=f"J({h.name})" if h.name else None,
            vertex_order=list(h.vertices) + inner,
        )

    edges = tuple(
        e for e in h.edges if {e[0], e[1]} != {x, y} or e[2] != POSITIVE
    ) + tuple((a, bv, POSITIVE) for a, bv in zip(chain, chain[1:]))
    return EdgeColouredGraph(
        vertices=h.vertices + tuple(inner),
        edges=edges,
        name=f"J({h.name})" if h.name else None,
    )


def double_identify(j: EdgeColouredGraph, a: str, b: str) -> EdgeColouredGraph:
    """J': two copies of j with the two copies of a (and of b) identified.

    Copy labels are c1.<v> / c2.<v>; the junction vertices keep their names.
    Edges between a and b would be doubled and are collapsed to one per
    colour.  A rotation is produced when j carries one and the copies can be
    glued on a common face.
    """
    vs = j.vertex_set()
    if a == b or a not in vs or b not in vs:
        raise BadVertices(f"need two distinct vertices of the graph, got {a!r},{b!r}")

    def names(k: int) -> dict[str, str]:
        return {
            w: (w if w in (a, b) else f"c{k}.{w}") for w in j.vertices
        }

    n1, n2 = names(1), names(2)
    ab_colours = [c for u, v, c in j.edges if {u, v} == {a, b}]

    if j.rotation is not None:
        for mirrored in (False, True):
            b1 = PlaneBuilder.from_graph(j)
            piece = PlaneBuilder.from_graph(j)
            if mirrored:
                piece.mirror()
            try:
                b1.add_piece({v: piece.rot[v] for v in piece.rot}, prefix="c2.")
                for c in ab_colours:
                    b1.delete_edge("c2." + a, "c2." + b, c)
                b1.merge(a, "c2." + a)
                b1.merge(b, "c2." + b)
            except GraphError:
                continue
            for w in list(b1.rot):
                if w not in (a, b) and not w.startswith("c2."):
                    b1.rename(w, f"c1.{w}")
            order = [n1[w] for w in j.vertices] + [
                n2[w] for w in j.vertices if w not in (a, b)
            ]
            out = b1.to_graph(
                name=f"double({j.name})" if j.name else None, vertex_order=order
            )
            validate_graph(out)
            certify_embedding(out, out.rotation)
            return out

    edges = []
    seen = set()
    for k, nm in ((1, n1), (2, n2)):
        for u, v, c in j.edges:
            uu, vv = nm[u], nm[v]
            key = (min(uu, vv), max(uu, vv), c)
            if key in seen:
                continue
            seen.add(key)
            edges.append((uu, vv, c))
    vertices = [n1[w] for w in j.vertices] + [
        n2[w] for w in j.vertices if w not in (a, b)
    ]
    out = EdgeColouredGraph(
        vertices=tuple(vertices),
        edges=tuple(edges),
        name=f"double({j.name})" if j.name else None,
    )
    validate_graph(out)
    return out


@dataclass(frozen=True)
class ForcingReport:
    forced: bool
    image_tuples: tuple[tuple[str, ...], ...]
    hom_count: int


def check_forcing(
    g: EdgeColouredGraph,
    vs: Sequence[str],
    h: EdgeColouredGraph,
    cfg: SearchConfig = SearchConfig(),
) -> ForcingReport:
    """Enumerate all homomorphisms g -> h; report whether every one maps all
    of ``vs`` to a single vertex, plus the realized image tuples."""
    missing = [v for v in vs if v not in g.vertex_set()]
    if missing:
        raise BadVertices(f"forcing vertices not in graph: {missing}")
    homs = enumerate_homs(g, h, cfg)
    tuples = sorted({tuple(f[v] for v in vs) for f in homs})
    forced = all(len(set(t)) <= 1 for t in tuples)
    return ForcingReport(
        forced=forced, image_tuples=tuple(tuples), hom_count=len(homs)
    )
