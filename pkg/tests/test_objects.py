import numpy as np
import pytest

from pgcones import (PointSet, baer_cone, baer_subgeometry, cone,
                     denniston_arc, field_new, geometry_new, hermitian_unital,
                     hyperoval, hyperoval_cone, maxarc_cone,
                     pointset_from_indices, spectrum, unital_cone)
from pgcones.errors import (DegreeNotDividingOrder, OddDegree, OddOrder,
                            VertexBaseNotDisjoint)
from pgcones.objects import axis_vertex, embed_in_first_coords


def line_spectrum(ps):
    return spectrum(ps, 1).by_size


def test_baer_subgeometry_sizes(plane4):
    assert baer_subgeometry(plane4, 0).k == 1
    assert baer_subgeometry(plane4, 2).k == 7  # PG(2,2) inside PG(2,4)
    g39 = geometry_new(field_new(3, 2), 3)
    assert baer_subgeometry(g39, 1).k == 4  # Baer subline


def test_baer_subplane_line_intersections(plane4):
    bp = baer_subgeometry(plane4, 2)
    assert set(line_spectrum(bp)) <= {0, 1, 3}


def test_baer_subgeometry_odd_degree(plane8):
    with pytest.raises(OddDegree):
        baer_subgeometry(plane8, 1)


def test_hermitian_unital(plane4):
    u = hermitian_unital(plane4)
    assert u.k == 9
    assert line_spectrum(u) == {1: 9, 3: 12}


def test_hermitian_unital_sizes_larger():
    assert hermitian_unital(geometry_new(field_new(3, 2), 2)).k == 28
    assert hermitian_unital(geometry_new(field_new(2, 4), 2)).k == 65


def test_hyperoval(plane4):
    h = hyperoval(plane4)
    assert h.k == 6
    assert line_spectrum(h) == {0: 6, 2: 15}


def test_hyperoval_small_and_odd():
    g2 = geometry_new(field_new(2, 1), 2)
    assert hyperoval(g2).k == 4
    assert hyperoval(geometry_new(field_new(2, 3), 2)).k == 10
    with pytest.raises(OddOrder):
        hyperoval(geometry_new(field_new(3, 1), 2))


def test_denniston_arc(plane4, plane8):
    d2 = denniston_arc(plane4, 2)
    assert d2.k == 6
    assert line_spectrum(d2) == {0: 6, 2: 15}
    d4 = denniston_arc(plane8, 4)
    assert d4.k == 28
    assert line_spectrum(d4) == {0: 10, 4: 63}


def test_denniston_arc_degree_q_is_line_complement(plane4):
    d = denniston_arc(plane4, 4)
    assert d.k == 16
    assert line_spectrum(d) == {0: 1, 4: 20}


def test_denniston_arc_errors(plane4, plane8):
    with pytest.raises(DegreeNotDividingOrder):
        denniston_arc(plane8, 3)
    with pytest.raises(OddOrder):
        denniston_arc(geometry_new(field_new(3, 1), 2), 3)


def test_cone_empty_vertex_is_identity(pg34):
    base = pointset_from_indices(pg34, [0, 1, 5])
    assert cone(pg34, pg34.span([]), base) == base


def test_cone_sizes(pg34, pg44):
    assert hyperoval_cone(pg34).k == 6 * 4 + 1 == 25
    assert unital_cone(pg44).k == 9 * 16 + 5 == 149


def test_cone_size_law(pg44):
    # |cone| = |base| * q^(r+1) + theta_r, any base off the vertex
    from pgcones import theta
    plane = geometry_new(pg44.field, 2)
    base = embed_in_first_coords(pg44, hermitian_unital(plane))
    for r in (0, 1):
        v = axis_vertex(pg44, r)
        got = cone(pg44, v, base).k
        assert got == base.k * 4 ** (r + 1) + theta(r, 4)


def test_cone_closure(pg34):
    K = hyperoval_cone(pg34)
    v = axis_vertex(pg34, 0)
    g, fld = pg34, pg34.field
    for p in v.point_indices:
        for q_idx in K.indices:
            if q_idx == p:
                continue
            for t in range(1, fld.q):
                vec = fld.add[g.points[p], fld.mul[t, g.points[q_idx]]]
                assert K.mask[g.point_index(vec)]


def test_cone_vertex_base_not_disjoint(pg34):
    v = axis_vertex(pg34, 0)
    bad_base = pointset_from_indices(pg34, list(v.point_indices))
    with pytest.raises(VertexBaseNotDisjoint):
        cone(pg34, v, bad_base)


def test_baer_cone_sizes(pg34, pg44):
    assert baer_cone(pg44, -1, 2).k == 7
    assert baer_cone(pg44, 1, 2).k == 7 * 16 + 5 == 117
    assert baer_cone(pg34, 0, 1).k == 3 * 4 + 1 == 13


def test_maxarc_cone_size(pg54):
    assert maxarc_cone(pg54, 2).k == 405
