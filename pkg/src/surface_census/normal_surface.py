"""Normal coordinates for the surfaces uF + vG and the disk-gluing oracle.

Each tetrahedron carries four triangle coordinates (tri0..tri3, indexed
by the vertex the triangle cuts off) and one quadrilateral coordinate
(the type separating E01 from E23).  Component counts are obtained here
by instantiating every elementary disk and gluing their boundary arcs
across the face identifications with union-find; this brute-force count
is the oracle the interval machinery is checked against.
"""

from dataclasses import dataclass

from .triangulation import NUM_TETS, face_classes
from .unionfind import UnionFind

# Triangle/quad counts of the two generating genus-2 surfaces.
F_COORDS = (
    ((2, 0, 0, 0), 2), ((3, 1, 0, 0), 1), ((1, 1, 0, 0), 1), ((3, 1, 1, 1), 0),
    ((2, 0, 0, 2), 0), ((2, 0, 2, 0), 0), ((1, 1, 0, 2), 1), ((2, 0, 0, 2), 0),
    ((1, 1, 2, 0), 1), ((2, 0, 1, 1), 1),
)
G_COORDS = (
    ((2, 0, 2, 0), 0), ((1, 1, 0, 2), 1), ((2, 0, 0, 2), 0), ((1, 1, 2, 0), 1),
    ((2, 0, 1, 1), 1), ((2, 0, 0, 0), 2), ((3, 1, 0, 0), 1), ((1, 1, 0, 0), 1),
    ((3, 1, 1, 1), 0), ((2, 0, 0, 2), 0),
)

# On face Fk the quad's arc cuts off the vertex paired with k across the
# quad type (the quad separates E01 from E23).
QUAD_CUT_VERTEX = {0: 1, 1: 0, 2: 3, 3: 2}


def quad_meets_edge(i, j):
    """The quad type meets every edge except E01 and E23."""
    return {i, j} not in ({0, 1}, {2, 3})


class MatchingError(ValueError):
    """Arc counts disagree across a face gluing."""


@dataclass(frozen=True)
class SurfaceCoefficients:
    u: int
    v: int

    def __post_init__(self):
        if self.u < 0 or self.v < 0 or (self.u, self.v) == (0, 0):
            raise ValueError("coefficients must be nonnegative and not both zero")


@dataclass(frozen=True)
class NormalCoordinates:
    """Per-tetrahedron disk counts: 10 tuples of 4 triangle counts, 10 quads."""

    tri: tuple
    quad: tuple

    def total_disks(self):
        return sum(sum(t) for t in self.tri) + sum(self.quad)


def coordinates(coeff):
    """Normal coordinates of uF + vG."""
    u, v = coeff.u, coeff.v
    tri = tuple(tuple(u * F_COORDS[t][0][w] + v * G_COORDS[t][0][w] for w in range(4))
                for t in range(NUM_TETS))
    quad = tuple(u * F_COORDS[t][1] + v * G_COORDS[t][1] for t in range(NUM_TETS))
    return NormalCoordinates(tri, quad)


def arc_count(nc, tet, face, cut_vertex):
    """Arcs on face ``face`` of ``tet`` cutting off ``cut_vertex``."""
    n = nc.tri[tet][cut_vertex]
    if cut_vertex == QUAD_CUT_VERTEX[face]:
        n += nc.quad[tet]
    return n


def check_matching(nc, tri):
    """Check the per-face arc-count matching conditions.

    Returns a list of violations, each naming the face class, the arc
    type (by cut-off vertex) and the two disagreeing counts.
    """
    violations = []
    for g in face_classes(tri):
        for w in range(4):
            if w == g.face:
                continue
            a = arc_count(nc, g.tet, g.face, w)
            b = arc_count(nc, g.target, g.target_face, g.perm(w))
            if a != b:
                violations.append(
                    "face (tet%d, F%d)~(tet%d, F%d), arc cutting v%d: %d != %d"
                    % (g.tet, g.face, g.target, g.target_face, w, a, b))
    return violations


def edge_weights(nc, tri):
    """Intersection count of the surface with each edge class e0..e9.

    The weight is tri_i + tri_j (+ quad when the quad meets Eij) in any
    representative tetrahedron; disagreement between representatives means
    a coordinate or triangulation defect and raises.
    """
    weights = []
    for cls, reps in enumerate(tri.edge_classes):
        per_rep = []
        for (i, j, tet) in reps:
            w = nc.tri[tet][i] + nc.tri[tet][j]
            if quad_meets_edge(i, j):
                w += nc.quad[tet]
            per_rep.append(w)
        if len(set(per_rep)) != 1:
            raise MatchingError(
                "edge class e%d weight disagrees across representatives: %r"
                % (cls, per_rep))
        weights.append(per_rep[0])
    return tuple(weights)


def _edge_point_disk(nc, tet, i, j, k):
    """Disk owning the k-th intersection point along Eij of ``tet`` (from i).

    Along an oriented edge the points appear as: triangles at vertex i
    (layers ascending outward from i), then quads (ascending layer when i
    is an endpoint of E01, else descending), then triangles at vertex j
    (layers descending, i.e. outermost from j first).
    """
    ti, tj = nc.tri[tet][i], nc.tri[tet][j]
    q = nc.quad[tet] if quad_meets_edge(i, j) else 0
    if k <= ti:
        return ("tri", tet, i, k)
    if k <= ti + q:
        layer = k - ti if i in (0, 1) else q - (k - ti) + 1
        return ("quad", tet, layer)
    if k <= ti + q + tj:
        return ("tri", tet, j, ti + q + tj - k + 1)
    raise IndexError("point %d beyond edge weight %d" % (k, ti + q + tj))


def _arc_disks(nc, tet, face, w):
    """Disks providing the arcs cutting off vertex w on (tet, face).

    Ordered by nesting distance from w: the tri_w triangle layers first,
    then (when this face's quad arc cuts off w) the quads, nearest to w
    first.
    """
    out = [("tri", tet, w, layer) for layer in range(1, nc.tri[tet][w] + 1)]
    if w == QUAD_CUT_VERTEX[face]:
        q = nc.quad[tet]
        layers = range(1, q + 1) if w in (0, 1) else range(q, 0, -1)
        out.extend(("quad", tet, layer) for layer in layers)
    return out


def _all_disks(nc):
    disks = []
    for tet in range(NUM_TETS):
        for w in range(4):
            disks.extend(("tri", tet, w, layer)
                         for layer in range(1, nc.tri[tet][w] + 1))
        disks.extend(("quad", tet, layer) for layer in range(1, nc.quad[tet] + 1))
    return disks


def _glue(nc, tri):
    """Union-find over all disks, glued across every face class."""
    disks = _all_disks(nc)
    index = {d: n for n, d in enumerate(disks)}
    uf = UnionFind(len(disks))
    for g in face_classes(tri):
        for w in range(4):
            if w == g.face:
                continue
            ours = _arc_disks(nc, g.tet, g.face, w)
            theirs = _arc_disks(nc, g.target, g.target_face, g.perm(w))
            if len(ours) != len(theirs):
                raise MatchingError(
                    "arc counts disagree on (tet%d, F%d) cutting v%d: %d vs %d"
                    % (g.tet, g.face, w, len(ours), len(theirs)))
            for a, b in zip(ours, theirs):
                uf.union(index[a], index[b])
    return disks, index, uf


def glue_components(nc, tri):
    """Number of connected components, with per-component disk counts."""
    disks, _, uf = _glue(nc, tri)
    sizes = sorted(len(g) for g in uf.groups().values())
    return uf.count, sizes


def euler_characteristic(nc, tri):
    """chi = (edge intersection points) - (face arcs) + (disks)."""
    v = sum(edge_weights(nc, tri))
    e = 0
    for g in face_classes(tri):
        for w in range(4):
            if w != g.face:
                e += arc_count(nc, g.tet, g.face, w)
    f = nc.total_disks()
    return v - e + f


def genus_census_entry(coeff, tri):
    """(component count, total chi, sorted genus per component).

    Assigns every vertex, arc and disk of the surface's cell structure to
    its component and reads the genus off chi = 2 - 2g.
    """
    nc = coordinates(coeff)
    disks, index, uf = _glue(nc, tri)
    comp = {root: n for n, root in enumerate(uf.groups())}
    nc_of = lambda d: comp[uf.find(index[d])]
    v_cnt = [0] * uf.count
    e_cnt = [0] * uf.count
    f_cnt = [0] * uf.count
    for d in disks:
        f_cnt[nc_of(d)] += 1
    for cls, reps in enumerate(tri.edge_classes):
        (i, j, tet) = reps[0]
        weight = edge_weights(nc, tri)[cls]
        for k in range(1, weight + 1):
            v_cnt[nc_of(_edge_point_disk(nc, tet, i, j, k))] += 1
    for g in face_classes(tri):
        for w in range(4):
            if w == g.face:
                continue
            for d in _arc_disks(nc, g.tet, g.face, w):
                e_cnt[nc_of(d)] += 1
    genera = []
    for c in range(uf.count):
        chi = v_cnt[c] - e_cnt[c] + f_cnt[c]
        if chi % 2:
            raise AssertionError("component with odd Euler characteristic %d" % chi)
        genera.append(1 - chi // 2)
    total_chi = euler_characteristic(nc, tri)
    return uf.count, total_chi, sorted(genera)
