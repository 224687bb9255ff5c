from math import gcd

import pytest

from surface_census.compiler import (CARRIER_WIDTHS, EDGE_ORDER,
                                     PointIndexing, canonical_arc_tag,
                                     compile_surface, locate_carriers)
from surface_census.intervals import count_orbits
from surface_census.normal_surface import SurfaceCoefficients, coordinates
from surface_census.triangulation import build_paper_triangulation


@pytest.fixture(scope="module")
def tri():
    return build_paper_triangulation()


def test_blocks_partition_carrier(tri):
    nc = coordinates(SurfaceCoefficients(2, 3))
    indexing = PointIndexing(nc, tri)
    assert indexing.total == 24 * 5
    pos = 0
    for cls in EDGE_ORDER:
        lo, hi = indexing.block(cls)
        assert lo == pos + 1
        pos = hi
    assert pos == indexing.total


def test_point_labels_cover_block(tri):
    nc = coordinates(SurfaceCoefficients(1, 1))
    indexing = PointIndexing(nc, tri)
    for cls, reps in enumerate(tri.edge_classes):
        lo, hi = indexing.block(cls)
        for (i, j, tet) in reps:
            labels = {indexing.point(tet, i, j, k)
                      for k in range(1, indexing.weights[cls] + 1)}
            assert labels == set(range(lo, hi + 1))


def test_compile_carrier_and_size(tri):
    for (u, v) in ((1, 0), (0, 1), (1, 1), (3, 2)):
        sys = compile_surface(coordinates(SurfaceCoefficients(u, v)), tri)
        assert (sys.lo, sys.hi) == (1, 24 * (u + v))
        assert len(sys.pairings) <= 60
        # every carrier point is met by some pairing
        touched = set()
        for p in sys.pairings:
            touched.update(range(p.dom_lo, p.dom_hi + 1))
            touched.update(range(p.ran_lo, p.ran_hi + 1))
        assert touched == set(range(1, sys.hi + 1))


def test_compiled_orbits_equal_gcd(tri):
    for u in range(0, 6):
        for v in range(0, 6):
            if (u, v) == (0, 0):
                continue
            sys = compile_surface(coordinates(SurfaceCoefficients(u, v)), tri)
            assert count_orbits(sys) == gcd(u, v)


def test_locate_carriers_widths(tri):
    for (u, v) in ((1, 1), (2, 3), (1, 0), (0, 2)):
        sys = compile_surface(coordinates(SurfaceCoefficients(u, v)), tri)
        carriers = locate_carriers(sys, tri, u, v)
        assert set(carriers) == set(CARRIER_WIDTHS)
        for name, (cu, cv) in CARRIER_WIDTHS.items():
            expected = cu * u + cv * v
            if expected == 0:
                assert carriers[name] is None
            else:
                assert carriers[name].width == expected


def test_canonical_tag_is_side_independent(tri):
    for (tet, face), g in tri.gluings.items():
        for w in range(4):
            if w == face:
                continue
            ours = canonical_arc_tag(tri, tet, face, w)
            theirs = canonical_arc_tag(tri, g.target, g.target_face, g.perm(w))
            assert ours == theirs
