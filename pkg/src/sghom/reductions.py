"""Gadget library and reduction compilers.

The copy, split, crossing and vertex gadgets are transcribed from their
figures as frozen vertex/edge/rotation tables; composite gadgets are spliced
together on their boundary faces, so every assembly step re-checks
co-faciality and the results certify as planar.  The reduction compilers
(planar 3-colouring -> rho(UC_4) instances, and the three cycle-square
cases) consume an input rotation system and emit the transformed instance
together with a certificate (port map + output rotation).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import (
    EdgeColouredGraph,
    POSITIVE,
    RotationSystem,
    validate_graph,
)
from .embedding import PlaneBuilder, certify_embedding, rotation_from_positions
from .errors import (
    BadParameter,
    GraphError,
    LoopEdge,
    MissingEmbedding,
    UncertifiedEmbedding,
)
from .families import gen_cycle, gen_cycle_square
from .constructions import Indicator

NEG = -1

# ---------------------------------------------------------------------------
# Frozen gadget tables (grid coordinates of the figures)
# ---------------------------------------------------------------------------

# Copy gadget: two port pairs; every homomorphism to rho(UC_4) copies the
# x-image across x1,x2 and the y-image across y1,y2 with y - x = +-2.
_COPY_EDGES = [
    ("x1", "a", 1), ("a", "y1", 1), ("y1", "b", 1), ("b", "x2", 1),
    ("x2", "c", 1), ("c", "y2", 1), ("y2", "m", 1), ("m", "y1", 1),
    ("x1", "m", -1), ("m", "x2", -1),
]
_COPY_POS = {
    "x1": (0, 1), "a": (0, 2), "y1": (1, 2), "b": (2, 2),
    "x2": (2, 1), "c": (2, 0), "y2": (1, 0), "m": (1, 1),
}

# Split gadget: three grounds g1..g3; with equal grounds it splits an image
# differing by 4 into two images differing by +-2 (and conversely).
_SPLIT_EDGES = [
    ("g1", "ig1", -1), ("ig1", "i", 1), ("i", "io1", 1), ("i", "io2", 1),
    ("io1", "o1", 1), ("io1", "ii", 1), ("io2", "ii", -1), ("io2", "o2", 1),
    ("o1", "o1g2", 1), ("o1", "o1g2b", 1), ("o1g2", "g2", 1), ("o1g2b", "g2", -1),
    ("o2", "o2g3", 1), ("o2", "o2g3b", 1), ("o2g3", "g3", 1), ("o2g3b", "g3", -1),
]
_SPLIT_POS = {
    "g1": (-2, 0), "ig1": (-1, 0), "i": (0, 0), "io2": (1, 0), "o2": (2, 0),
    "o2g3b": (3, 0), "o2g3": (2, -1), "g3": (3, -1), "ii": (1, -1),
    "io1": (0, -1), "o1": (0, -2), "o1g2b": (1, -2), "g2": (1, -3), "o1g2": (0, -3),
}

_SPLIT_PORTS = {"x1": "i", "x2": "o1", "y2": "o2", "g1": "g1", "g2": "g2", "g3": "g3"}


def _copy_rotations():
    return rotation_from_positions(_COPY_EDGES, _COPY_POS)


def _split_rotations():
    return rotation_from_positions(_SPLIT_EDGES, _SPLIT_POS)


def _mirrored(rot):
    return {v: list(reversed(seq)) for v, seq in rot.items()}


@dataclass(frozen=True)
class GadgetGraph:
    """A gadget: its signed graph (with rotation) plus the named ports."""

    graph: EdgeColouredGraph
    ports: dict[str, str]

    @property
    def rotation(self) -> Optional[RotationSystem]:
        return self.graph.rotation


@dataclass(frozen=True)
class ReductionCertificate:
    """Where every piece of the output came from, plus its embedding."""

    port_map: dict[str, object]
    rotation: Optional[RotationSystem]


def _face_with(b: PlaneBuilder, verts: Sequence[str]) -> frozenset:
    hits = [
        f for f in map(frozenset, b.faces()) if set(verts) <= {v for v, _ in f}
    ]
    if len(hits) != 1:
        raise GraphError(
            f"expected one face containing {list(verts)}, found {len(hits)}"
        )
    return hits[0]


def _unique_gap(b: PlaneBuilder, v: str, face: frozenset) -> int:
    gaps = b.gaps_on_face(v, face)
    if len(gaps) != 1:
        raise GraphError(f"vertex {v!r} meets the gluing face {len(gaps)} times")
    return gaps[0]


def _crossing_builder() -> tuple[PlaneBuilder, dict[str, int]]:
    """The crossing gadget builder plus each port's boundary-face gap.

    Two split gadgets and two copy gadgets; the six centre vertices (the
    grounds g2, g3 of both splits, the right vertex of the left copy, the
    left vertex of the right copy) are identified into one vertex C.  The
    lower split enters mirrored, matching its flipped drawing.
    """
    copy_rot = _copy_rotations()
    split_rot = _split_rotations()
    b = PlaneBuilder()
    b.add_piece(split_rot, prefix="u.")
    b.merge("u.g2", "u.g3")
    b.rename("u.g2", "C")
    b.add_piece(copy_rot, prefix="a.")
    b.add_piece(_mirrored(split_rot), prefix="l.")
    b.add_piece(copy_rot, prefix="b.")
    b.merge("C", "a.x2", gap_a=2, gap_b=0)
    b.merge("C", "l.g2", gap_a=0, gap_b=0)
    b.merge("C", "l.g3", gap_a=0, gap_b=0)
    b.merge("C", "b.x1", gap_a=0, gap_b=0)
    b.merge("u.o1", "a.y1")
    b.merge("l.o1", "a.y2")
    b.merge("u.o2", "b.y1")
    b.merge("l.o2", "b.y2")
    b.merge("u.g1", "a.x1")
    b.rename("u.g1", "y1")
    b.merge("l.g1", "b.x2")
    b.rename("l.g1", "y2")
    b.rename("u.i", "x1")
    b.rename("l.i", "x2")
    b.mirror()
    boundary = _face_with(b, ["x1", "y2", "x2", "y1"])
    gaps = {p: _unique_gap(b, p, boundary) for p in ("x1", "y2", "x2", "y1")}
    return b, gaps


def _single_gadget(rotations, ports, name) -> GadgetGraph:
    b = PlaneBuilder()
    b.add_piece(rotations)
    g = b.to_graph(name=name, vertex_order=list(rotations))
    validate_graph(g)
    certify_embedding(g, g.rotation)
    return GadgetGraph(graph=g, ports=dict(ports))


def _chain_builder(n_boxes: int) -> tuple[PlaneBuilder, list[str], dict[str, int]]:
    """Chain of crossing gadgets: box k's y2 is box k+1's x1, box k's x2 is
    box k+1's y1.  Returns (builder, port names in facial-trail order,
    boundary gap per port)."""
    cb, cgaps = _crossing_builder()
    b = PlaneBuilder()
    b.add_piece(cb.rot, prefix="cr0.")
    gaps: dict[str, int] = {f"cr0.{p}": g for p, g in cgaps.items()}
    for k in range(1, n_boxes):
        b.add_piece(cb.rot, prefix=f"cr{k}.")
        prev, cur = f"cr{k-1}.", f"cr{k}."
        b.merge(prev + "y2", cur + "x1", gap_a=gaps[prev + "y2"], gap_b=cgaps["x1"])
        b.merge(prev + "x2", cur + "y1")
        gaps[cur + "y2"] = cgaps["y2"]
        gaps[cur + "x2"] = cgaps["x2"]
    last = f"cr{n_boxes - 1}."
    ports = (
        ["cr0.x1"]
        + [f"cr{k}.y2" for k in range(n_boxes)]
        + [f"cr{k}.x2" for k in range(n_boxes - 1, -1, -1)]
        + ["cr0.y1"]
    )
    del last
    boundary = _face_with(b, ports)
    port_gaps = {p: _unique_gap(b, p, boundary) for p in ports}
    return b, ports, port_gaps


def gadget(kind: str, d: int = 0, k: int = 0, m: int = 0) -> GadgetGraph:
    """Constructors for the named gadgets.

    kind = "copy" | "split" | "crossing" | "vertex" (takes d >= 1) |
    "degree" (takes k >= 2, m >= 1).
    """
    if kind == "copy":
        return _single_gadget(
            _copy_rotations(),
            {"x1": "x1", "x2": "x2", "y1": "y1", "y2": "y2"},
            "copy-gadget",
        )
    if kind == "split":
        return _single_gadget(_split_rotations(), _SPLIT_PORTS, "split-gadget")
    if kind == "crossing":
        b, _ = _crossing_builder()
        g = b.to_graph(name="crossing-gadget", vertex_order=sorted(b.rot))
        validate_graph(g)
        certify_embedding(g, g.rotation)
        return GadgetGraph(
            graph=g, ports={"x1": "x1", "x2": "x2", "y1": "y1", "y2": "y2"}
        )
    if kind == "vertex":
        if d < 1:
            raise BadParameter(f"vertex gadget needs d >= 1, got {d}")
        if d == 1:
            b, _ = _crossing_builder()
            ports = ["x1", "y1"]
        else:
            b, chain_ports, _ = _chain_builder(d - 1)
            ports = chain_ports
        g = b.to_graph(name=f"vertex-gadget-{d}", vertex_order=sorted(b.rot))
        validate_graph(g)
        certify_embedding(g, g.rotation)
        return GadgetGraph(
            graph=g, ports={f"v{i}": p for i, p in enumerate(ports)}
        )
    if kind == "degree":
        return _degree_gadget(k, m)
    raise BadParameter(f"unknown gadget kind {kind!r}")


# ---------------------------------------------------------------------------
# Degree gadgets (bounded-degree reductions)
# ---------------------------------------------------------------------------


def _degree_gadget(k: int, m: int) -> GadgetGraph:
    """Colour-duplicating gadgets for bounded-degree reductions.

    k = 2: a ladder of 2(m+1) glued unbalanced 4-cycles (negative rail at
    the bottom); the m interior bottom rail vertices at even columns are the
    forced ports.  k >= 3: a strip of 2m glued unbalanced 2k-cycles whose 2m
    valley vertices are the forced ports.  Every port carries a pendant
    attachment edge, so the gadget exhibits the degree bound it induces:
    maximum degree 4 for k = 2 and 3 for k >= 3, girth 2k.
    """
    if k < 2 or m < 1:
        raise BadParameter(f"degree gadget needs k >= 2, m >= 1, got k={k}, m={m}")
    edges: list[tuple[str, str, int]] = []
    pos: dict[str, tuple[float, float]] = {}
    ports: dict[str, str] = {}
    if k == 2:
        squares = 2 * (m + 1)
        for i in range(squares + 1):
            pos[f"b{i}"] = (float(i), 0.0)
            pos[f"t{i}"] = (float(i), 1.0)
            edges.append((f"b{i}", f"t{i}", 1))
            if i:
                edges.append((f"b{i-1}", f"b{i}", -1))
                edges.append((f"t{i-1}", f"t{i}", 1))
        for n, i in enumerate(range(2, squares - 1, 2)):
            stub = f"s{n}"
            pos[stub] = (float(i), -1.0)
            edges.append((f"b{i}", stub, 1))
            ports[f"z{n}"] = f"b{i}"
    else:
        cycles = 2 * m
        span = 2 * k - 4  # edges per dotted top link
        for i in range(cycles + 1):
            pos[f"r{i}"] = (float(i), 0.0)  # rail: "1" at even, "2k-1" at odd
            pos[f"t{i}"] = (float(i), 1.0)  # tops: "2" at even, "2k-2" at odd
            edges.append((f"r{i}", f"t{i}", 1))
            if i:
                prev = f"t{i-1}"
                for s in range(1, span):
                    w = f"t{i-1}.{s}"
                    pos[w] = (i - 1 + s / span, 1.0)
                    edges.append((prev, w, 1))
                    prev = w
                edges.append((prev, f"t{i}", 1))
        for j in range(cycles):
            z = f"z{j}"
            pos[z] = (j + 0.5, -0.5)
            odd = j if j % 2 else j + 1  # the adjacent odd column
            even = j + 1 if j % 2 else j  # the adjacent even column
            edges.append((z, f"r{odd}", -1))
            edges.append((z, f"r{even}", 1))
            stub = f"s{j}"
            pos[stub] = (j + 0.5, -1.25)
            edges.append((z, stub, 1))
            ports[f"z{j}"] = z
    rot = rotation_from_positions(edges, pos)
    b = PlaneBuilder()
    b.add_piece(rot)
    g = b.to_graph(name=f"degree-gadget-{k}-{m}", vertex_order=sorted(pos))
    validate_graph(g)
    certify_embedding(g, g.rotation)
    return GadgetGraph(graph=g, ports=ports)


# ---------------------------------------------------------------------------
# Indicators used by the reductions
# ---------------------------------------------------------------------------


def uc_indicator() -> Indicator:
    """The 4-cycle indicator with alternating signs and pins at distance 2."""
    edges = [("i", "x", 1), ("x", "j", -1), ("j", "y", 1), ("y", "i", -1)]
    pos = {"i": (0.0, -1.0), "x": (-1.0, 0.0), "j": (0.0, 1.0), "y": (1.0, 0.0)}
    rot = rotation_from_positions(edges, pos)
    b = PlaneBuilder()
    b.add_piece(rot)
    g = b.to_graph(name="uc-indicator", vertex_order=["i", "x", "j", "y"])
    return Indicator(graph=g, i="i", j="j")


def cc_indicator(t: int) -> Indicator:
    """The odd-cycle indicator (C_{2t+1}, i, j) with pins at distance 2."""
    if t < 2:
        raise BadParameter(f"cc indicator needs t >= 2, got {t}")
    g = gen_cycle(2 * t + 1)
    return Indicator(graph=g, i="x0", j="x2")


# ---------------------------------------------------------------------------
# The 3-colouring -> rho(UC_4) reduction
# ---------------------------------------------------------------------------


def _require_plain(g: EdgeColouredGraph) -> None:
    if not g.colours() <= {POSITIVE}:
        raise BadParameter("input must be 1-edge-coloured (colour +1)")
    for u, v, _ in g.edges:
        if u == v:
            raise LoopEdge(f"loop at {u!r}")


def _certified(g: EdgeColouredGraph, rot: RotationSystem):
    try:
        return certify_embedding(g, rot)
    except GraphError as exc:
        raise UncertifiedEmbedding(f"input rotation failed certification: {exc}")


def reduce_3col_to_uc4(
    g: EdgeColouredGraph, rot: RotationSystem
) -> tuple[EdgeColouredGraph, ReductionCertificate]:
    """Compile a planar 3-colouring instance into a rho(UC_4) instance.

    Every vertex of degree d becomes a vertex gadget with 2d ports on its
    boundary in rotation order; every edge vw links a crossing gadget to the
    next free port pairs, identifying v_{2i}, v_{2i+1}, w_{2j} with x1, y1,
    x2 and attaching a 2-edge alternating path from y2 to w_{2j+1}.  The
    output is bipartite and certified planar.
    """
    _require_plain(g)
    validate_graph(g)
    _certified(g, rot)
    rotmap = rot.as_dict()
    order = {v: i for i, v in enumerate(g.vertices)}

    cb, cgaps = _crossing_builder()
    host = PlaneBuilder()
    ports: dict[str, list[str]] = {}
    gaps: dict[str, int] = {}
    port_map: dict[str, object] = {}
    vertex_order: list[str] = []

    for v in g.vertices:
        d = len(rotmap.get(v, ()))
        if d == 0:
            continue  # an isolated vertex constrains nothing
        prefix = f"{v}."
        if d == 1:
            names = host.add_piece(cb.rot, prefix=prefix + "cr0.")
            plist = [prefix + "cr0.x1", prefix + "cr0.y1"]
            boundary = _face_with(
                host, [prefix + "cr0." + p for p in ("x1", "x2", "y1", "y2")]
            )
        else:
            chain, chain_ports, _cg = _chain_builder(d - 1)
            host.add_piece(chain.rot, prefix=prefix)
            plist = [prefix + p for p in chain_ports]
            boundary = _face_with(host, plist)
        ports[v] = plist
        for p in plist:
            gaps[p] = _unique_gap(host, p, boundary)
        vertex_order += sorted(n for n in host.rot if n.startswith(prefix))
        port_map[f"vertex:{v}"] = {"gadget": prefix, "ports": list(plist)}

    for idx, (a, bv, _c) in enumerate(g.edges):
        u, w = (a, bv) if order[a] <= order[bv] else (bv, a)
        iu = rotmap[u].index(idx)
        iw = rotmap[w].index(idx)
        pu = (ports[u][2 * iu], ports[u][2 * iu + 1])
        pw = (ports[w][2 * iw], ports[w][2 * iw + 1])
        prefix = f"e{idx}."
        host.add_piece(cb.rot, prefix=prefix)
        host.merge(pu[0], prefix + "x1", gap_a=gaps[pu[0]], gap_b=cgaps["x1"])
        host.merge(pu[1], prefix + "y1", gap_a=gaps[pu[1]], gap_b=cgaps["y1"])
        host.merge(pw[0], prefix + "x2", gap_a=gaps[pw[0]], gap_b=cgaps["x2"])
        mid = prefix + "path"
        host.add_vertex(mid)
        host.add_edge(prefix + "y2", mid, NEG, at_u=cgaps["y2"])
        host.add_edge(mid, pw[1], POSITIVE, at_u=0, at_v=gaps[pw[1]])
        vertex_order += sorted(
            n for n in host.rot if n.startswith(prefix)
        )
        port_map[f"edge:{u}-{w}"] = {
            "gadget": prefix,
            "pairs": {u: list(pu), w: list(pw)},
        }

    out = host.to_graph(name=f"reduce3col({g.name})" if g.name else None,
                        vertex_order=vertex_order)
    validate_graph(out)
    certify_embedding(out, out.rotation)
    return out, ReductionCertificate(port_map=port_map, rotation=out.rotation)


# ---------------------------------------------------------------------------
# Cycle-square reductions (three cases by t mod 4 / parity)
# ---------------------------------------------------------------------------


def _cycle_square_piece(t: int, omit_chord: bool, omit_for_face: bool):
    """Planar drawing of C_t^2 (optionally minus v0v2, or minus the two
    edges of the face construction): circle edges straight, even-start
    distance-2 chords inside, odd-start chords routed outside."""
    labels = [f"v{i}" for i in range(t)]
    pos = {
        labels[i]: (math.cos(2 * math.pi * i / t), math.sin(2 * math.pi * i / t))
        for i in range(t)
    }
    skip_cycle: set[tuple[int, int]] = set()
    skip_chord: set[tuple[int, int]] = set()
    if omit_chord:
        skip_chord.add((0, 2))
    if omit_for_face:
        kk = t // 2
        skip_cycle.add(tuple(sorted((kk - 1, kk))))
        skip_chord.add(tuple(sorted(((kk) % t, (kk + 2) % t))))
    edges = []
    for i in range(t):
        j = (i + 1) % t
        if tuple(sorted((i, j))) not in skip_cycle:
            edges.append((labels[i], labels[j], 1))
    bends = {}
    seen = set()
    for i in range(t):
        j = (i + 2) % t
        key = tuple(sorted((i, j)))
        if key in skip_chord or key in seen:
            continue
        seen.add(key)
        u, v = labels[i], labels[j]
        edges.append((u, v, 1))
        if i % 2 == 1:  # odd-start chords ride outside over i+1
            mx, my = pos[labels[(i + 1) % t]]
            ek = (u, v, 1) if u <= v else (v, u, 1)
            bends[ek] = (1.35 * mx, 1.35 * my)
    rot = rotation_from_positions(edges, pos, bends)
    b = PlaneBuilder()
    b.add_piece(rot)
    return b, labels


def reduce_to_cycle_square(
    g: EdgeColouredGraph,
    t: int,
    rot: Optional[RotationSystem] = None,
) -> tuple[EdgeColouredGraph, ReductionCertificate]:
    """The three cycle-square reductions.

    t = 2 mod 4: glue a copy of C_t^2 onto every edge along v0 v2.
    t odd:       glue a copy of C_t^2 minus v0v2 onto every edge along v0 v1.
    t = 0 mod 4: the face construction (requires a certified rotation).
    t = 0 mod 3 is rejected: there C_t^2 retracts to the triangle and the
    instance transformation is void.
    """
    _require_plain(g)
    validate_graph(g)
    if t < 6:
        raise BadParameter(f"needs t >= 6, got {t} (C_4^2, C_5^2 are complete)")
    if t % 3 == 0:
        raise BadParameter(
            f"t={t} is 0 mod 3: the core of C_t^2 is K_3, use plain 3-colouring"
        )
    if t % 4 == 0:
        if rot is None:
            raise MissingEmbedding("the t = 0 mod 4 case needs a rotation system")
        return _reduce_cs_faces(g, t, rot)
    if t % 2 == 0:
        return _reduce_cs_edge_glue(g, t, rot, glue=("v0", "v2"), omit_chord=False)
    return _reduce_cs_edge_glue(g, t, rot, glue=("v0", "v1"), omit_chord=True)


def _reduce_cs_edge_glue(g, t, rot, glue, omit_chord):
    ga, gb = glue
    port_map: dict[str, object] = {}
    if rot is not None:
        _certified(g, rot)
        host = PlaneBuilder.from_graph(
            EdgeColouredGraph(g.vertices, g.edges, rotation=rot)
        )
        vertex_order = list(g.vertices)
        piece, labels = _cycle_square_piece(t, omit_chord=omit_chord, omit_for_face=False)
        for idx, (a, bv, c) in enumerate(g.edges):
            prefix = f"e{idx}."
            names = host.add_piece(piece.rot, prefix=prefix)
            gpa, gpb = host.delete_edge(names[ga], names[gb], POSITIVE)
            ha = (host.rot[a].index((bv, c)) + 1) % len(host.rot[a])
            host.merge(a, names[ga], gap_a=ha, gap_b=gpa)
            host.merge(bv, names[gb], gap_b=gpb)
            vertex_order += sorted(
                n for n in host.rot if n.startswith(prefix)
            )
            port_map[f"edge:{a}-{bv}"] = {"copy": prefix, ga: a, gb: bv}
        out = host.to_graph(
            name=f"reduce-cs{t}({g.name})" if g.name else None,
            vertex_order=vertex_order,
        )
        validate_graph(out)
        certify_embedding(out, out.rotation)
        return out, ReductionCertificate(port_map=port_map, rotation=out.rotation)

    # no embedding supplied: combinatorial output only
    base = gen_cycle_square(t)
    vertices = list(g.vertices)
    edges = list(g.edges)
    seen = {tuple(sorted((u, v))) + (c,) for u, v, c in g.edges}
    for idx, (a, bv, _c) in enumerate(g.edges):
        prefix = f"e{idx}."
        names = {
            w: (a if w == ga else bv if w == gb else prefix + w)
            for w in base.vertices
        }
        for w in base.vertices:
            if names[w] not in vertices:
                vertices.append(names[w])
        for u, v, c in base.edges:
            if omit_chord and {u, v} == {"v0", "v2"}:
                continue
            uu, vv = names[u], names[v]
            key = tuple(sorted((uu, vv))) + (c,)
            if key in seen:
                continue
            seen.add(key)
            edges.append((uu, vv, c))
        port_map[f"edge:{a}-{bv}"] = {"copy": prefix, ga: a, gb: bv}
    out = EdgeColouredGraph(
        vertices=tuple(vertices),
        edges=tuple(edges),
        name=f"reduce-cs{t}({g.name})" if g.name else None,
    )
    validate_graph(out)
    return out, ReductionCertificate(port_map=port_map, rotation=None)


def _reduce_cs_faces(g, t, rot):
    report = _certified(g, rot)
    kk = t // 2  # v_{2k} with t = 4k, i.e. the antipodal vertex
    piece, labels = _cycle_square_piece(t, omit_chord=False, omit_for_face=True)
    pface = _face_with(piece, ["v0", f"v{kk}"])
    gap_v0 = _unique_gap(piece, "v0", pface)
    gap_vk = _unique_gap(piece, f"v{kk}", pface)

    del report
    host = PlaneBuilder.from_graph(
        EdgeColouredGraph(g.vertices, g.edges, rotation=rot)
    )
    vertex_order = list(g.vertices)
    port_map: dict[str, object] = {}
    # anchor each face corner by its preceding rotation entry so the gap can
    # be re-resolved after earlier petals edit the vertex
    bf = PlaneBuilder.from_graph(EdgeColouredGraph(g.vertices, g.edges, rotation=rot))
    face_darts = bf.faces()
    for fi, dart_walk in enumerate(face_darts):
        uf = f"f{fi}"
        host.add_vertex(uf)
        vertex_order.append(uf)
        petal_vertices = []
        anchors = []
        seen_v = set()
        for (v, gpos) in dart_walk:
            if v in seen_v:
                continue
            seen_v.add(v)
            prev_entry = bf.rot[v][gpos - 1] if bf.rot[v] else None
            petal_vertices.append(v)
            anchors.append(prev_entry)
        port_map[f"face:{fi}"] = {"vertex": uf, "incident": list(petal_vertices)}
        for w, anchor in zip(petal_vertices, anchors):
            prefix = f"f{fi}.{w}."
            names = host.add_piece(piece.rot, prefix=prefix)
            host.merge(uf, names["v0"], gap_a=0, gap_b=gap_v0)
            if anchor is None:
                host.merge(w, names[f"v{kk}"], gap_b=gap_vk)
            else:
                ga = (host.rot[w].index(anchor) + 1) % len(host.rot[w])
                host.merge(w, names[f"v{kk}"], gap_a=ga, gap_b=gap_vk)
            vertex_order += sorted(
                n for n in host.rot if n.startswith(prefix)
            )
    out = host.to_graph(
        name=f"reduce-cs{t}({g.name})" if g.name else None,
        vertex_order=vertex_order,
    )
    validate_graph(out)
    certify_embedding(out, out.rotation)
    return out, ReductionCertificate(port_map=port_map, rotation=out.rotation)
