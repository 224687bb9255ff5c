"""Compile a normal surface into a pairing system on [1, 24u + 24v].

The intersection points of the surface with the ten edge classes are laid
out in the fixed edge order e1, e8, e6, e9, e0, e2, e3, e4, e5, e7 (the
order that makes the later reduction work), each edge's points numbered
along its canonical orientation.  Every nonempty arc type of a face class
then pairs two contiguous blocks of points, one on each of the face's two
edges through the cut-off vertex.
"""

from .intervals import Pairing, PairingSystem
from .normal_surface import (MatchingError, QUAD_CUT_VERTEX, arc_count,
                             check_matching, edge_weights)
from .triangulation import face_classes

# Edge classes in carrier order.
EDGE_ORDER = (1, 8, 6, 9, 0, 2, 3, 4, 5, 7)

# Carrier pairings used by the reduction, identified by the face side and
# cut-off vertex they come from, with their widths as (u, v) coefficients.
CARRIER_SIGNATURES = {
    "t0": (5, 3, 2), "t2": (0, 3, 2), "t3": (0, 1, 0), "t4": (5, 1, 2),
    "t5": (0, 1, 2), "t6": (9, 2, 3), "t7": (5, 1, 0), "t9": (4, 2, 3),
    "t8a": (3, 3, 0), "t8b": (3, 3, 2),
}
CARRIER_WIDTHS = {
    "t0": (2, 2), "t2": (2, 2), "t3": (4, 2), "t4": (2, 0), "t5": (0, 2),
    "t6": (2, 2), "t7": (2, 4), "t9": (2, 2), "t8a": (3, 1), "t8b": (1, 3),
}


class CompileError(ValueError):
    """The compiled pairings violate an internal convention."""


class PointIndexing:
    """Global integer labels for the surface's edge intersection points."""

    def __init__(self, nc, tri):
        self.tri = tri
        self.weights = edge_weights(nc, tri)
        self.offsets = {}
        pos = 0
        for cls in EDGE_ORDER:
            self.offsets[cls] = pos
            pos += self.weights[cls]
        self.total = pos

    def block(self, cls):
        """The subinterval [lo, hi] occupied by an edge class (hi < lo if empty)."""
        off = self.offsets[cls]
        return (off + 1, off + self.weights[cls])

    def point(self, tet, i, j, k):
        """Global index of the k-th intersection point along Eij of ``tet``."""
        cls, (p, _q) = self.tri.edge_class_of(tet, i, j)
        if i == p:
            pos = k
        else:
            pos = self.weights[cls] - k + 1
        return self.offsets[cls] + pos


def _arc_pairing(nc, indexing, tet, face, w, tag):
    """The pairing of an arc type: t-th arc endpoints on the two edges at w."""
    count = arc_count(nc, tet, face, w)
    if count == 0:
        return None
    x, y = sorted(set(range(4)) - {face, w})
    first = [indexing.point(tet, w, x, t) for t in (1, count)]
    second = [indexing.point(tet, w, y, t) for t in (1, count)]
    lo1, hi1 = min(first), max(first)
    lo2, hi2 = min(second), max(second)
    reversing = (first[0] < first[1]) != (second[0] < second[1])
    return Pairing(lo1, hi1, lo2, hi2, reversing=reversing, tag=tag)


def face_side_tag(tet, face, w):
    return "tet%d.F%d.v%d" % (tet, face, w)


def canonical_arc_tag(tri, tet, face, w):
    """Tag of an arc type, using the lexicographically first side of its face."""
    g = tri.gluings[(tet, face)]
    other = (g.target, g.target_face)
    if (tet, face) <= other:
        return face_side_tag(tet, face, w)
    return face_side_tag(g.target, g.target_face, g.perm(w))


def compile_surface(nc, tri):
    """Pairing system of the surface on [1, 24u + 24v].

    One pairing per nonempty (face class, arc type); both sides of each
    face gluing are compiled and must agree, which checks that the point
    ordering convention is transported consistently by the gluings.
    """
    bad = check_matching(nc, tri)
    if bad:
        raise MatchingError("; ".join(bad))
    indexing = PointIndexing(nc, tri)
    pairings = []
    for g in face_classes(tri):
        for w in range(4):
            if w == g.face:
                continue
            tag = face_side_tag(g.tet, g.face, w)
            ours = _arc_pairing(nc, indexing, g.tet, g.face, w, tag)
            theirs = _arc_pairing(nc, indexing, g.target, g.target_face,
                                  g.perm(w), tag)
            if (ours is None) != (theirs is None) or (
                    ours is not None and not ours.same_map(theirs)):
                raise CompileError(
                    "sides of %s disagree: %r vs %r" % (tag, ours, theirs))
            if ours is not None:
                pairings.append(ours)
    return PairingSystem(1, indexing.total, tuple(pairings))


def locate_carriers(sys, tri, u, v):
    """Map carrier names t0..t9, t8a, t8b to their pairings in ``sys``.

    Widths are checked against the expected linear forms in (u, v); a
    carrier whose expected width is zero must be absent and maps to None.
    """
    out = {}
    for name, (tet, face, w) in CARRIER_SIGNATURES.items():
        cu, cv = CARRIER_WIDTHS[name]
        expected = cu * u + cv * v
        tag = canonical_arc_tag(tri, tet, face, w)
        try:
            p = sys.by_tag(tag)
        except KeyError:
            p = None
        if expected == 0:
            if p is not None:
                raise CompileError("carrier %s should be empty but is %r" % (name, p))
            out[name] = None
            continue
        if p is None:
            raise CompileError("carrier %s (tag %s) missing" % (name, tag))
        if p.width != expected:
            raise CompileError("carrier %s has width %d, expected %d"
                               % (name, p.width, expected))
        out[name] = p
    return out
