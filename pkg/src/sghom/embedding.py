"""Rotation systems: face tracing, Euler certification, planar composition.

A rotation system lists, per vertex, the cyclic (counter-clockwise) order of
incident edge indices.  Faces are traced by the dart rule: after arriving at
v along an edge, leave by the rotation successor of the reversed dart.  A
rotation certifies a planar (sphere) embedding iff every connected component
satisfies V - E + F = 2.

`PlaneBuilder` is the internal composition tool used by generators and
reductions: rotations are kept as (neighbour, colour) lists, vertices on a
common face may be merged by splicing their rotations at face gaps, and the
co-faciality of every splice is checked at merge time so that planarity is
preserved by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .core import Edge, EdgeColouredGraph, RotationSystem
from .errors import (
    BadVertices,
    EulerViolation,
    GraphError,
    IncompleteRotation,
    NoSuchEdge,
)


@dataclass(frozen=True)
class FaceReport:
    """Face walks plus the per-component Euler bookkeeping."""

    faces: tuple[tuple[str, ...], ...]  # one closed vertex walk per face
    component_summary: tuple[tuple[tuple[str, ...], int, int, int], ...]
    # (sorted component vertices, V, E, F) per component

    @property
    def face_count(self) -> int:
        return len(self.faces)


def certify_embedding(g: EdgeColouredGraph, r: RotationSystem) -> FaceReport:
    """Trace faces of ``r`` and verify V - E + F = 2 on every component.

    Raises IncompleteRotation if ``r`` does not cover g's incidences exactly,
    EulerViolation (with the offending component and its characteristic) if
    any component fails the sphere formula.
    """
    rot = r.as_dict()
    unknown = set(rot) - g.vertex_set()
    if unknown:
        raise IncompleteRotation(f"rotation names unknown vertices {sorted(unknown)}")
    for v in g.vertices:
        expect = sorted(g.incident_edge_indices(v))
        got = sorted(rot.get(v, ()))
        if expect != got:
            raise IncompleteRotation(
                f"rotation at {v!r} lists edges {got}, incidences are {expect}"
            )

    # Darts: (edge index, tail end).  tail = edges[e][end].
    def head(e: int, end: int) -> str:
        return g.edges[e][1 - end]

    pos_in_rot: dict[tuple[int, str], int] = {}
    for v, seq in rot.items():
        for i, e in enumerate(seq):
            pos_in_rot[(e, v)] = i

    darts = [(e, end) for e in range(len(g.edges)) for end in (0, 1)]
    unused = set(darts)
    faces_darts: list[list[tuple[int, int]]] = []
    while unused:
        d = min(unused)
        walk = []
        while d in unused:
            unused.discard(d)
            walk.append(d)
            e, end = d
            v = head(e, end)
            seq = rot[v]
            nxt_e = seq[(pos_in_rot[(e, v)] + 1) % len(seq)]
            nxt_end = 0 if g.edges[nxt_e][0] == v else 1
            d = (nxt_e, nxt_end)
        faces_darts.append(walk)

    face_walks = tuple(
        tuple(g.edges[e][end] for e, end in walk) for walk in faces_darts
    )

    from .core import components

    comps = components(g)
    comp_of: dict[str, int] = {}
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    f_count = [0] * len(comps)
    for walk in face_walks:
        f_count[comp_of[walk[0]]] += 1
    e_count = [0] * len(comps)
    for u, _v, _c in g.edges:
        e_count[comp_of[u]] += 1

    summary = []
    for i, comp in enumerate(comps):
        V, E = len(comp), e_count[i]
        F = f_count[i] if e_count[i] else 1  # an edgeless component bounds one face
        summary.append((tuple(sorted(comp)), V, E, F))
        if V - E + F != 2:
            raise EulerViolation(
                f"component {sorted(comp)} has V-E+F = {V}-{E}+{F} = {V - E + F}",
                component=sorted(comp),
                characteristic=V - E + F,
            )
    return FaceReport(faces=face_walks, component_summary=tuple(summary))


# ---------------------------------------------------------------------------
# Planar composition toolkit
# ---------------------------------------------------------------------------

RotEntry = tuple[str, int]  # (neighbour, colour)


class PlaneBuilder:
    """A planar graph under construction.

    Rotations are (neighbour, colour) lists in counter-clockwise order; since
    parallel edges must differ in colour, an entry identifies an edge.  A
    *gap* g at vertex v is the angular sector between rotation entries g-1
    and g (mod degree); ``gap_face`` returns the face passing through it.
    Merging two vertices splices their rotations open at chosen gaps, which
    preserves planarity exactly when the gaps lie on a common face (or the
    vertices lie in different components); ``merge`` enforces this.
    """

    def __init__(self):
        self.rot: dict[str, list[RotEntry]] = {}

    # -- construction ------------------------------------------------------

    def add_vertex(self, name: str) -> str:
        if name in self.rot:
            raise BadVertices(f"vertex {name!r} already present")
        self.rot[name] = []
        return name

    def has_edge(self, u: str, v: str, colour: int) -> bool:
        return (v, colour) in self.rot.get(u, ())

    def add_edge(
        self,
        u: str,
        v: str,
        colour: int,
        at_u: Optional[int] = None,
        at_v: Optional[int] = None,
        check_face: bool = True,
    ) -> None:
        """Insert edge u-v at gap ``at_u`` of u and ``at_v`` of v.

        Gaps default to 0.  When both endpoints already lie in the same
        component the two gaps must be on a common face.
        """
        if u == v:
            raise BadVertices("loops are not supported")
        if self.has_edge(u, v, colour):
            raise BadVertices(f"edge ({u!r},{v!r},{colour}) already present")
        gu = 0 if at_u is None else at_u % max(1, len(self.rot[u]))
        gv = 0 if at_v is None else at_v % max(1, len(self.rot[v]))
        if (
            check_face
            and self.rot[u]
            and self.rot[v]
            and self._same_component(u, v)
            and self.gap_face(u, gu) != self.gap_face(v, gv)
        ):
            raise GraphError(f"add_edge {u!r}-{v!r}: gaps lie on different faces")
        self.rot[u].insert(gu, (v, colour))
        self.rot[v].insert(gv, (u, colour))

    def add_piece(
        self,
        rotations: dict[str, Sequence[RotEntry]],
        prefix: str = "",
    ) -> dict[str, str]:
        """Add a disjoint copy of a piece described by its rotation dict.

        Returns the name map (original -> prefixed).
        """
        names = {v: prefix + v for v in rotations}
        for v in rotations:
            self.add_vertex(names[v])
        for v, seq in rotations.items():
            self.rot[names[v]] = [(names[w], c) for w, c in seq]
        return names

    def delete_edge(self, u: str, v: str, colour: int) -> tuple[int, int]:
        """Remove edge u-v, returning the gap indices where it sat."""
        try:
            gu = self.rot[u].index((v, colour))
            gv = self.rot[v].index((u, colour))
        except (ValueError, KeyError):
            raise NoSuchEdge(f"no edge ({u!r},{v!r},{colour})")
        del self.rot[u][gu]
        del self.rot[v][gv]
        return gu, gv

    # -- faces -------------------------------------------------------------

    def _reverse_pos(self, v: str, entry_idx: int) -> tuple[str, int]:
        w, c = self.rot[v][entry_idx]
        return w, self.rot[w].index((v, c))

    def faces(self) -> list[list[tuple[str, int]]]:
        """All face walks, as lists of darts (vertex, rotation index).

        Dart (v, i) is the directed edge leaving v along rotation entry i.
        """
        unused = {
            (v, i) for v, seq in self.rot.items() for i in range(len(seq))
        }
        out = []
        while unused:
            d = min(unused)
            walk = []
            while d in unused:
                unused.discard(d)
                walk.append(d)
                v, i = d
                w, j = self._reverse_pos(v, i)
                d = (w, (j + 1) % len(self.rot[w]))
            out.append(walk)
        return out

    def gap_face(self, v: str, gap: int) -> Optional[frozenset]:
        """The face whose boundary passes through gap ``gap`` of ``v``.

        Returned as a frozenset of darts; None for an isolated vertex.
        """
        if not self.rot[v]:
            return None
        start = (v, gap % len(self.rot[v]))
        face = set()
        d = start
        while d not in face:
            face.add(d)
            x, i = d
            w, j = self._reverse_pos(x, i)
            d = (w, (j + 1) % len(self.rot[w]))
        return frozenset(face)

    def face_corners(self, face: frozenset) -> list[tuple[str, int]]:
        """The face's (vertex, gap) corners in walk order."""
        start = min(face)
        corners = []
        d = start
        while True:
            corners.append(d)
            x, i = d
            w, j = self._reverse_pos(x, i)
            d = (w, (j + 1) % len(self.rot[w]))
            if d == start:
                return corners

    def gaps_on_face(self, v: str, face: frozenset) -> list[int]:
        return [g for (x, g) in face if x == v]

    def _same_component(self, u: str, v: str) -> bool:
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            if x == v:
                return True
            for y, _ in self.rot[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    # -- merging -----------------------------------------------------------

    def merge(
        self,
        a: str,
        b: str,
        gap_a: Optional[int] = None,
        gap_b: Optional[int] = None,
    ) -> str:
        """Identify ``b`` into ``a``, splicing rotations at the given gaps.

        If the two vertices lie in a common component, the gaps must lie on a
        common face (checked); across components any gaps are planar-safe.
        Unspecified gaps are resolved automatically when a unique common face
        exists.  Returns the surviving name (``a``).
        """
        if a == b:
            raise BadVertices("cannot merge a vertex with itself")
        ra, rb = self.rot[a], self.rot[b]
        same = self._same_component(a, b)
        if gap_a is None or gap_b is None:
            gap_a, gap_b = self._resolve_gaps(a, b, gap_a, gap_b, same)
        ga = gap_a % max(1, len(ra))
        gb = gap_b % max(1, len(rb))
        if same and ra and rb:
            fa = self.gap_face(a, ga)
            fb = self.gap_face(b, gb)
            if fa != fb:
                raise GraphError(
                    f"merge {a!r},{b!r}: gaps on different faces of one component"
                )
        for w, c in rb:
            if w == a:
                raise BadVertices(f"merge {a!r},{b!r} would create a loop")
            if self.has_edge(a, w, c):
                raise BadVertices(
                    f"merge {a!r},{b!r} would duplicate edge to {w!r} colour {c}"
                )
        merged = ra[ga:] + ra[:ga] + rb[gb:] + rb[:gb]
        self.rot[a] = merged
        for w, c in list(rb):
            i = self.rot[w].index((b, c))
            self.rot[w][i] = (a, c)
        del self.rot[b]
        return a

    def _resolve_gaps(self, a, b, gap_a, gap_b, same) -> tuple[int, int]:
        if not same:
            return (gap_a or 0, gap_b or 0)
        common = None
        for f in map(frozenset, self.faces()):
            ga = self.gaps_on_face(a, f)
            gb = self.gaps_on_face(b, f)
            if ga and gb:
                if common is not None:
                    raise GraphError(
                        f"merge {a!r},{b!r}: several common faces, pass explicit gaps"
                    )
                common = (ga, gb)
        if common is None:
            raise GraphError(f"merge {a!r},{b!r}: no common face")
        ga, gb = common
        if (gap_a is None and len(ga) > 1) or (gap_b is None and len(gb) > 1):
            raise GraphError(
                f"merge {a!r},{b!r}: vertex meets the common face several times, "
                "pass explicit gaps"
            )
        return (ga[0] if gap_a is None else gap_a, gb[0] if gap_b is None else gap_b)

    def rename(self, old: str, new: str) -> None:
        if new in self.rot:
            raise BadVertices(f"vertex {new!r} already present")
        self.rot[new] = self.rot.pop(old)
        for v, seq in self.rot.items():
            self.rot[v] = [((new, c) if w == old else (w, c)) for w, c in seq]

    def mirror(self) -> None:
        """Reverse every rotation (reflect the embedding)."""
        for v in self.rot:
            self.rot[v].reverse()

    # -- finalize ----------------------------------------------------------

    def to_graph(
        self,
        name: Optional[str] = None,
        vertex_order: Optional[Sequence[str]] = None,
    ) -> EdgeColouredGraph:
        """Freeze into an EdgeColouredGraph carrying the rotation system.

        Edge order is lexicographic in (vertex position of the lesser end,
        of the greater end, colour), so output bytes are deterministic for a
        deterministic construction.
        """
        verts = tuple(vertex_order) if vertex_order is not None else tuple(self.rot)
        pos = {v: i for i, v in enumerate(verts)}
        if set(pos) != set(self.rot):
            raise BadVertices("vertex_order does not match builder contents")
        edges: list[Edge] = []
        for v, seq in self.rot.items():
            for w, c in seq:
                if pos[v] < pos[w]:
                    edges.append((v, w, c))
        edges.sort(key=lambda e: (pos[e[0]], pos[e[1]], e[2]))
        index = {(u, v, c): i for i, (u, v, c) in enumerate(edges)}
        rot_entries = []
        for v in verts:
            ix = []
            for w, c in self.rot[v]:
                key = (v, w, c) if pos[v] < pos[w] else (w, v, c)
                ix.append(index[key])
            rot_entries.append((v, tuple(ix)))
        return EdgeColouredGraph(
            vertices=verts,
            edges=tuple(edges),
            name=name,
            rotation=RotationSystem(tuple(rot_entries)),
        )

    @classmethod
    def from_graph(cls, g: EdgeColouredGraph) -> "PlaneBuilder":
        """Import a graph that carries a rotation system."""
        if g.rotation is None:
            raise GraphError("graph carries no rotation system")
        b = cls()
        rot = g.rotation.as_dict()
        for v in g.vertices:
            b.add_vertex(v)
        for v in g.vertices:
            seq = []
            for e in rot.get(v, ()):
                x, y, c = g.edges[e]
                seq.append((y if x == v else x, c))
            b.rot[v] = seq
        return b


def rotation_from_positions(
    edges: Iterable[Edge],
    positions: dict[str, tuple[float, float]],
    bends: Optional[dict[tuple[str, str, int], tuple[float, float]]] = None,
) -> dict[str, list[RotEntry]]:
    """Counter-clockwise rotations of a straight-line (or lightly bent)
    plane drawing.

    ``bends`` may give, per canonical edge key (u, v, colour) with u <= v, a
    control point; the departure direction at each endpoint then aims at the
    control point instead of the far endpoint.
    """
    bends = bends or {}
    rot: dict[str, list[tuple[float, RotEntry]]] = {v: [] for v in positions}
    for u, v, c in edges:
        key = (u, v, c) if u <= v else (v, u, c)
        ctrl = bends.get(key)
        for a, b in ((u, v), (v, u)):
            ax, ay = positions[a]
            tx, ty = ctrl if ctrl is not None else positions[b]
            ang = math.atan2(ty - ay, tx - ax) % (2 * math.pi)
            rot[a].append((ang, (b, c)))
    return {v: [entry for _, entry in sorted(pairs)] for v, pairs in rot.items()}
