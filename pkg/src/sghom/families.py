"""Deterministic generators for the named graph families.

All generators produce canonical vertex labels; the planar families (cycles,
unbalanced cycles, paths, complete graphs up to K_4, and squares of cycles
C_t^2 with t = 2 mod 4) also carry a canonical rotation system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import EdgeColouredGraph, POSITIVE
from .embedding import PlaneBuilder, rotation_from_positions
from .errors import BadParameter


def _circle_positions(labels: Sequence[str], radius: float = 1.0):
    t = len(labels)
    return {
        v: (radius * math.cos(2 * math.pi * i / t), radius * math.sin(2 * math.pi * i / t))
        for i, v in enumerate(labels)
    }


def _builder_from_drawing(edges, positions, bends=None) -> PlaneBuilder:
    rot = rotation_from_positions(edges, positions, bends)
    b = PlaneBuilder()
    for v in positions:
        b.add_vertex(v)
    for v, seq in rot.items():
        b.rot[v] = list(seq)
    return b


def gen_cycle(t: int, signs: Optional[Sequence[int]] = None) -> EdgeColouredGraph:
    """Cycle x_0..x_{t-1}; edge x_i x_{i+1 mod t} carries signs[i] (default +1)."""
    if t < 3:
        raise BadParameter(f"cycle length must be >= 3, got {t}")
    if signs is None:
        signs = [POSITIVE] * t
    signs = list(signs)
    if len(signs) != t:
        raise BadParameter(f"need {t} signs, got {len(signs)}")
    if any(s not in (1, -1) for s in signs):
        raise BadParameter("signs must be +1 or -1")
    labels = [f"x{i}" for i in range(t)]
    edges = [(labels[i], labels[(i + 1) % t], signs[i]) for i in range(t)]
    b = _builder_from_drawing(edges, _circle_positions(labels))
    return b.to_graph(name=f"C{t}", vertex_order=labels)


def gen_uc(two_k: int) -> EdgeColouredGraph:
    """The unbalanced even cycle UC_{2k}: exactly edge x_0 x_{2k-1} negative."""
    if two_k < 4 or two_k % 2:
        raise BadParameter(f"UC length must be even and >= 4, got {two_k}")
    signs = [POSITIVE] * two_k
    signs[two_k - 1] = -1
    g = gen_cycle(two_k, signs)
    return EdgeColouredGraph(g.vertices, g.edges, name=f"UC{two_k}", rotation=g.rotation)


def gen_path(n: int) -> EdgeColouredGraph:
    """Path p_0..p_{n-1} of n-1 positive edges."""
    if n < 1:
        raise BadParameter(f"path needs >= 1 vertex, got {n}")
    labels = [f"p{i}" for i in range(n)]
    edges = [(labels[i], labels[i + 1], POSITIVE) for i in range(n - 1)]
    positions = {v: (float(i), 0.0) for i, v in enumerate(labels)}
    b = _builder_from_drawing(edges, positions)
    return b.to_graph(name=f"P{n}", vertex_order=labels)


def cycle_square_chords(t: int) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Distance-2 chords of C_t split into an inside and an outside family.

    For t = 2 mod 4 the even-start chords close up inside and the odd-start
    chords outside; both families are crossing-free.
    """
    inside = [(i, (i + 2) % t) for i in range(0, t, 2)]
    outside = [(i, (i + 2) % t) for i in range(1, t, 2)]
    return inside, outside


def gen_cycle_square(t: int) -> EdgeColouredGraph:
    """The square of the t-cycle: edges v_i v_{i+1} and v_i v_{i+2} (mod t).

    Carries a canonical rotation exactly when t = 2 mod 4 (the planar case).
    """
    if t < 5:
        raise BadParameter(f"cycle square needs t >= 5, got {t}")
    labels = [f"v{i}" for i in range(t)]
    edges = [(labels[i], labels[(i + 1) % t], POSITIVE) for i in range(t)]
    chord_edges = []
    seen = set()
    for i in range(t):
        key = tuple(sorted((i, (i + 2) % t)))
        if key in seen:  # t=5: v_i v_{i+2} and v_{i+2} v_{i+4} meet as pairs
            continue
        seen.add(key)
        chord_edges.append((labels[key[0]], labels[key[1]], POSITIVE))
    all_edges = edges + chord_edges

    if t % 4 == 2:
        positions = _circle_positions(labels)
        inside, outside = cycle_square_chords(t)
        bends = {}
        for i, j in outside:
            mid = labels[(i + 1) % t]
            mx, my = positions[mid]
            u, v = labels[i], labels[j]
            key = (u, v, POSITIVE) if u <= v else (v, u, POSITIVE)
            bends[key] = (1.35 * mx, 1.35 * my)
        b = _builder_from_drawing(all_edges, positions, bends)
        return b.to_graph(name=f"C{t}^2", vertex_order=labels)
    return EdgeColouredGraph(
        vertices=tuple(labels), edges=tuple(all_edges), name=f"C{t}^2"
    )


def gen_circular_clique(p: int, q: int) -> EdgeColouredGraph:
    """The circular clique K_{p/q}: k_i ~ k_j iff q <= (i-j mod p) <= p-q."""
    if q < 1 or p < 2 * q:
        raise BadParameter(f"need p >= 2q >= 2, got p={p}, q={q}")
    if math.gcd(p, q) != 1:
        raise BadParameter(f"need gcd(p,q)=1, got gcd({p},{q})={math.gcd(p, q)}")
    labels = [f"k{i}" for i in range(p)]
    edges = []
    for i in range(p):
        for j in range(i + 1, p):
            if q <= (j - i) % p <= p - q:
                edges.append((labels[i], labels[j], POSITIVE))
    return EdgeColouredGraph(
        vertices=tuple(labels), edges=tuple(edges), name=f"K{p}/{q}"
    )


def gen_complete(n: int) -> EdgeColouredGraph:
    """The complete graph K_n; planar rotation included for n <= 4."""
    if n < 1:
        raise BadParameter(f"complete graph needs n >= 1, got {n}")
    labels = [f"k{i}" for i in range(n)]
    edges = [
        (labels[i], labels[j], POSITIVE) for i in range(n) for j in range(i + 1, n)
    ]
    if n <= 4:
        positions = {
            "k0": (0.0, 0.0),
            "k1": (4.0, 0.0),
            "k2": (2.0, 3.0),
            "k3": (2.0, 1.0),
        }
        b = _builder_from_drawing(edges, {v: positions[v] for v in labels})
        return b.to_graph(name=f"K{n}", vertex_order=labels)
    return EdgeColouredGraph(vertices=tuple(labels), edges=tuple(edges), name=f"K{n}")


@dataclass(frozen=True)
class FamilySpec:
    """A named family plus its parameters, as accepted by the CLI."""

    family: str
    t: Optional[int] = None
    k: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None
    n: Optional[int] = None
    signs: Optional[tuple[int, ...]] = None


def make(spec: FamilySpec) -> EdgeColouredGraph:
    fam = spec.family
    if fam == "cycle":
        if spec.t is None:
            raise BadParameter("cycle needs --t")
        return gen_cycle(spec.t, spec.signs)
    if fam in ("uc", "unbalanced_cycle"):
        if spec.k is not None:
            return gen_uc(2 * spec.k)
        if spec.t is not None:
            return gen_uc(spec.t)
        raise BadParameter("unbalanced cycle needs --k (half-length) or --t (length)")
    if fam in ("cycle_square", "cycle-square"):
        if spec.t is None:
            raise BadParameter("cycle square needs --t")
        return gen_cycle_square(spec.t)
    if fam in ("circular_clique", "circular-clique"):
        if spec.p is None or spec.q is None:
            raise BadParameter("circular clique needs --p and --q")
        return gen_circular_clique(spec.p, spec.q)
    if fam == "complete":
        if spec.n is None:
            raise BadParameter("complete needs --n")
        return gen_complete(spec.n)
    if fam == "path":
        if spec.n is None:
            raise BadParameter("path needs --n")
        return gen_path(spec.n)
    raise BadParameter(f"unknown family {fam!r}")


def parse_signs(text: str) -> tuple[int, ...]:
    """Parse a sign pattern: '+++-' or '1,1,1,-1'."""
    text = text.strip()
    if set(text) <= {"+", "-"} and text:
        return tuple(1 if ch == "+" else -1 for ch in text)
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise BadParameter(f"cannot parse sign pattern {text!r}")
