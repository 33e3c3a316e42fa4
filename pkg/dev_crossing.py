"""Dev scratch: find mirror/gap choices for the crossing gadget embedding."""
import itertools
from sghom.embedding import PlaneBuilder, rotation_from_positions
from sghom.errors import GraphError

COPY_EDGES = [
    ("x1", "a", 1), ("a", "y1", 1), ("y1", "b", 1), ("b", "x2", 1),
    ("x2", "c", 1), ("c", "y2", 1), ("y2", "m", 1), ("m", "y1", 1),
    ("x1", "m", -1), ("m", "x2", -1),
]
COPY_POS = {
    "x1": (0, 1), "a": (0, 2), "y1": (1, 2), "b": (2, 2),
    "x2": (2, 1), "c": (2, 0), "y2": (1, 0), "m": (1, 1),
}
SPLIT_EDGES = [
    ("g1", "ig1", -1), ("ig1", "i", 1), ("i", "io1", 1), ("i", "io2", 1),
    ("io1", "o1", 1), ("io1", "ii", 1), ("io2", "ii", -1), ("io2", "o2", 1),
    ("o1", "o1g2", 1), ("o1", "o1g2b", 1), ("o1g2", "g2", 1), ("o1g2b", "g2", -1),
    ("o2", "o2g3", 1), ("o2", "o2g3b", 1), ("o2g3", "g3", 1), ("o2g3b", "g3", -1),
]
SPLIT_POS = {
    "g1": (-2, 0), "ig1": (-1, 0), "i": (0, 0), "io2": (1, 0), "o2": (2, 0),
    "o2g3b": (3, 0), "o2g3": (2, -1), "g3": (3, -1), "ii": (1, -1),
    "io1": (0, -1), "o1": (0, -2), "o1g2b": (1, -2), "g2": (1, -3), "o1g2": (0, -3),
}

copy_rot = rotation_from_positions(COPY_EDGES, COPY_POS)
split_rot = rotation_from_positions(SPLIT_EDGES, SPLIT_POS)

def mirrored(rot):
    return {v: list(reversed(seq)) for v, seq in rot.items()}

PORTS = dict(x1="u.i", x2="l.i", y1="Y1", y2="Y2")

def attempt(mir_l, mir_a, mir_b, g_a, g_l2, g_l3, g_b, verbose=False):
    b = PlaneBuilder()
    b.add_piece(split_rot, prefix="u.")
    b.merge("u.g2", "u.g3")
    b.rename("u.g2", "C")
    b.add_piece(mirrored(copy_rot) if mir_a else copy_rot, prefix="a.")
    b.add_piece(mirrored(split_rot) if mir_l else split_rot, prefix="l.")
    b.add_piece(mirrored(copy_rot) if mir_b else copy_rot, prefix="b.")
    b.merge("C", "a.x2", gap_a=2, gap_b=g_a)
    b.merge("C", "l.g2", gap_a=0, gap_b=g_l2)
    b.merge("C", "l.g3", gap_a=0, gap_b=g_l3)
    b.merge("C", "b.x1", gap_a=0, gap_b=g_b)
    b.merge("u.o1", "a.y1")
    b.merge("l.o1", "a.y2")
    b.merge("u.o2", "b.y1")
    b.merge("l.o2", "b.y2")
    b.merge("u.g1", "a.x1")
    b.rename("u.g1", "Y1")
    b.merge("l.g1", "b.x2")
    b.rename("l.g1", "Y2")
    # require one face holding all four ports in cyclic order (x1 y2 x2 y1)
    want = [PORTS["x1"], PORTS["y2"], PORTS["x2"], PORTS["y1"]]
    for f in b.faces():
        walk = [v for v, _ in f]
        hits = [v for v in walk if v in want]
        if set(hits) == set(want):
            if verbose:
                print("port face len", len(walk), "port order:", hits)
            seq = hits
            # reduce to first occurrences preserving order
            seen, order = set(), []
            for v in seq:
                if v not in seen:
                    seen.add(v)
                    order.append(v)
            k = order.index(PORTS["x1"])
            cyc = order[k:] + order[:k]
            return b, cyc
    return b, None

found = []
for mir_l, mir_a, mir_b in itertools.product((False, True), repeat=3):
    for g_a, g_l2, g_l3, g_b in itertools.product(range(3), range(2), range(2), range(2)):
        try:
            b, cyc = attempt(mir_l, mir_a, mir_b, g_a, g_l2, g_l3, g_b)
        except GraphError:
            continue
        if cyc:
            found.append(((mir_l, mir_a, mir_b, g_a, g_l2, g_l3, g_b), cyc))

for cfg, cyc in found:
    print(cfg, "->", cyc)
print(len(found), "configurations give a common port face")

print("\n=== chain test ===")
def crossing_builder():
    b = PlaneBuilder()
    b.add_piece(split_rot, prefix="u.")
    b.merge("u.g2", "u.g3"); b.rename("u.g2", "C")
    b.add_piece(copy_rot, prefix="a.")
    b.add_piece(mirrored(split_rot), prefix="l.")
    b.add_piece(copy_rot, prefix="b.")
    b.merge("C", "a.x2", gap_a=2, gap_b=0)
    b.merge("C", "l.g2", gap_a=0, gap_b=0)
    b.merge("C", "l.g3", gap_a=0, gap_b=0)
    b.merge("C", "b.x1", gap_a=0, gap_b=0)
    b.merge("u.o1", "a.y1"); b.merge("l.o1", "a.y2")
    b.merge("u.o2", "b.y1"); b.merge("l.o2", "b.y2")
    b.merge("u.g1", "a.x1"); b.rename("u.g1", "y1")
    b.merge("l.g1", "b.x2"); b.rename("l.g1", "y2")
    b.rename("u.i", "x1"); b.rename("l.i", "x2")
    b.mirror()
    return b

def face_with(b, verts):
    hits = [f for f in map(frozenset, b.faces())
            if set(verts) <= {v for v, _ in f}]
    assert len(hits) == 1, f"{len(hits)} faces contain {verts}"
    return hits[0]

cb = crossing_builder()
bf = face_with(cb, ["x1", "y2", "x2", "y1"])
corners = cb.face_corners(bf)
portseq = [v for v, _ in corners if v in ("x1","x2","y1","y2")]
print("boundary walk ports:", portseq)
for p in ("x1","x2","y1","y2"):
    print(p, "gaps on boundary:", cb.gaps_on_face(p, bf), "deg", len(cb.rot[p]))

# chain two crossings: y2_0 = x1_1, x2_0 = y1_1
big = PlaneBuilder()
big.add_piece(cb.rot, prefix="cr0.")
big.add_piece(cb.rot, prefix="cr1.")
f0 = face_with(big, ["cr0.x1", "cr0.y2", "cr0.x2", "cr0.y1"])
f1 = face_with(big, ["cr1.x1", "cr1.y2", "cr1.x2", "cr1.y1"])
g_a = big.gaps_on_face("cr0.y2", f0); g_b = big.gaps_on_face("cr1.x1", f1)
print("gaps:", g_a, g_b)
big.merge("cr0.y2", "cr1.x1", gap_a=g_a[0], gap_b=g_b[0])
try:
    big.merge("cr0.x2", "cr1.y1")
    print("chain second merge OK (auto)")
except GraphError as e:
    print("chain second merge FAILED:", e)
    # retry with explicit gaps on the fused face
    ff = face_with(big, ["cr0.x1", "cr0.x2", "cr1.y1"])
    ga = big.gaps_on_face("cr0.x2", ff); gb2 = big.gaps_on_face("cr1.y1", ff)
    print("  explicit gaps:", ga, gb2)
    big.merge("cr0.x2", "cr1.y1", gap_a=ga[0], gap_b=gb2[0])
    print("  explicit OK")
ports = ["cr0.x1", "cr0.y2", "cr1.y2", "cr1.x2", "cr0.x2", "cr0.y1"]
ff = face_with(big, ports)
walk = [v for v, _ in big.face_corners(ff) if v in ports]
print("chain trail:", walk)
g = big.to_graph()
from sghom.embedding import certify_embedding
certify_embedding(g, g.rotation)
print("chain certified:", len(g.vertices), "v", len(g.edges), "e")
