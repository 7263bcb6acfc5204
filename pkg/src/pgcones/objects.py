"""Constructions of the point sets under study.

Canonical coordinate models throughout: the Hermitian curve for the
embedded unital, conic-plus-nucleus for the hyperoval, a pencil-of-conics
(Denniston) arc for maximal arcs, and subfield coordinates for Baer
subgeometries.  Cones place the vertex on the last coordinate axes and the
base inside the span of the first coordinates, so constructions are
deterministic and directly comparable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import (DegreeNotDividingOrder, OddDegree, OddOrder,
                     VertexBaseNotDisjoint, WrongDimension)
from .gf import Field, subfield
from .pg import Geometry, Subspace, theta


@dataclass(frozen=True)
class PointSet:
    """A set of points of a geometry, stored as a boolean membership mask."""

    geometry: Geometry = dc_field(repr=False)
    mask: np.ndarray = dc_field(repr=False)

    @property
    def k(self) -> int:
        return int(self.mask.sum())

    @property
    def indices(self) -> np.ndarray:
        return np.nonzero(self.mask)[0]

    def __eq__(self, other):
        return (isinstance(other, PointSet)
                and self.geometry is other.geometry
                and bool(np.array_equal(self.mask, other.mask)))

    def __repr__(self):
        return f"PointSet(k={self.k})"


def pointset_from_indices(geometry: Geometry, indices) -> PointSet:
    mask = np.zeros(geometry.num_points, dtype=bool)
    mask[np.asarray(list(indices), dtype=np.int64)] = True
    return PointSet(geometry, mask)


# ---------------------------------------------------------------------------
# cones
# ---------------------------------------------------------------------------

def cone(geometry: Geometry, vertex: Subspace, base: PointSet) -> PointSet:
    """Union of the vertex with all lines joining vertex points to base points.

    The base must lie in a subspace disjoint from the vertex; an empty
    vertex (dim -1) returns the base unchanged.
    """
    if vertex.dim == -1:
        return PointSet(geometry, base.mask.copy())
    base_idx = base.indices
    if base_idx.size:
        stacked = np.vstack([vertex.basis, geometry.rref(geometry.points[base_idx])])
        if geometry.rref(stacked).shape[0] != stacked.shape[0]:
            raise VertexBaseNotDisjoint("vertex and base span share a point")

    mask = np.zeros(geometry.num_points, dtype=bool)
    mask[vertex.point_indices] = True
    if base_idx.size == 0:
        return PointSet(geometry, mask)
    mask[base_idx] = True

    fld = geometry.field
    vpts = geometry.points[vertex.point_indices]
    bpts = geometry.points[base_idx]
    ts = np.arange(1, geometry.q, dtype=np.int16)
    # interior[v, b, t] = V_v + t * B_b, covering each joining line
    interior = fld.add[vpts[:, None, None, :], fld.mul[ts[None, None, :, None], bpts[None, :, None, :]]]
    flat = interior.reshape(-1, geometry.n + 1)
    lead_col = np.argmax(flat != 0, axis=1)
    lead = flat[np.arange(flat.shape[0]), lead_col]
    flat = fld.mul[fld.inv[lead][:, None], flat]
    idx = geometry.code_to_index[flat.astype(np.int64) @ geometry.pows]
    mask[idx] = True
    return PointSet(geometry, mask)


def axis_vertex(geometry: Geometry, r: int) -> Subspace:
    """Span of the last r+1 coordinate axes (the canonical cone vertex)."""
    if r == -1:
        return geometry.span([])
    basis = np.zeros((r + 1, geometry.n + 1), dtype=np.int16)
    for i in range(r + 1):
        basis[i, geometry.n - r + i] = 1
    return geometry.subspace_from_basis(basis)


def embed_in_first_coords(geometry: Geometry, plane_set: PointSet) -> PointSet:
    """Copy a point set of a lower-dimensional PG(m,q) into the subspace
    spanned by the first m+1 coordinates of `geometry`."""
    small = plane_set.geometry
    if small.q != geometry.q:
        raise WrongDimension("field orders differ between geometries")
    vecs = small.points[plane_set.indices]
    padded = np.zeros((vecs.shape[0], geometry.n + 1), dtype=np.int16)
    padded[:, : small.n + 1] = vecs
    idx = geometry.code_to_index[padded.astype(np.int64) @ geometry.pows]
    return pointset_from_indices(geometry, idx)


# ---------------------------------------------------------------------------
# Baer subgeometries and Baer cones
# ---------------------------------------------------------------------------

def baer_subgeometry(geometry: Geometry, s: int) -> PointSet:
    """The canonical s-dimensional Baer subgeometry: points with all
    coordinates in the sqrt(q)-subfield and the last n-s coordinates zero."""
    if not 0 <= s <= geometry.n:
        raise WrongDimension(f"need 0 <= s <= n, got s={s}")
    sub = np.array(subfield(geometry.field), dtype=np.int16)  # raises OddDegree
    sub_set = np.zeros(geometry.q, dtype=bool)
    sub_set[sub] = True
    pts = geometry.points
    in_sub = sub_set[pts].all(axis=1)
    tail_zero = (pts[:, s + 1:] == 0).all(axis=1) if s < geometry.n else np.ones(len(pts), dtype=bool)
    return PointSet(geometry, in_sub & tail_zero)


def baer_cone(geometry: Geometry, r: int, s: int) -> PointSet:
    """Cone with an r-dim vertex over an s-dim Baer subgeometry base."""
    if r + s >= geometry.n:
        raise WrongDimension(f"need r+s < n, got r={r}, s={s}, n={geometry.n}")
    base = baer_subgeometry(geometry, s) if s >= 0 else PointSet(
        geometry, np.zeros(geometry.num_points, dtype=bool))
    return cone(geometry, axis_vertex(geometry, r), base)


# ---------------------------------------------------------------------------
# planar bases: unital, hyperoval, Denniston maximal arc
# ---------------------------------------------------------------------------

def _require_plane(geometry: Geometry):
    if geometry.n != 2:
        raise WrongDimension(f"expected a plane (n=2), got n={geometry.n}")


def hermitian_unital(geometry: Geometry) -> PointSet:
    """The Hermitian curve x^(s+1) + y^(s+1) + z^(s+1) = 0, s = sqrt(q)."""
    _require_plane(geometry)
    if geometry.field.h % 2 != 0:
        raise OddDegree(f"q = {geometry.q} is not a square")
    s = geometry.field.p ** (geometry.field.h // 2)
    fld = geometry.field
    powed = np.array([fld.pow(x, s + 1) for x in range(geometry.q)], dtype=np.int16)
    terms = powed[geometry.points]
    total = fld.add[fld.add[terms[:, 0], terms[:, 1]], terms[:, 2]]
    return PointSet(geometry, total == 0)


def hyperoval(geometry: Geometry) -> PointSet:
    """Conic y*z = x^2 together with its nucleus (1,0,0); q+2 points."""
    _require_plane(geometry)
    if geometry.q % 2 != 0:
        raise OddOrder(f"hyperovals require even q, got q = {geometry.q}")
    fld = geometry.field
    pts = geometry.points
    on_conic = fld.mul[pts[:, 1], pts[:, 2]] == fld.mul[pts[:, 0], pts[:, 0]]
    mask = on_conic.copy()
    mask[geometry.point_index([1, 0, 0])] = True
    return PointSet(geometry, mask)


def _denniston_lambda(field: Field) -> int:
    # smallest lam making x^2 + lam*x + 1 rootless (hence irreducible)
    for lam in range(1, field.q):
        if all(field.add[field.add[field.mul[t, t], field.mul[lam, t]], 1] != 0
               for t in range(field.q)):
            return lam
    raise AssertionError("no irreducible quadratic found")  # unreachable for even q


def _additive_subgroup(field: Field, d: int) -> np.ndarray:
    # F_2-span of the first log2(d) basis elements 1, x, x^2, ...
    gens = [field.p ** i for i in range(d.bit_length() - 1)]
    elems = {0}
    for g in gens:
        elems |= {int(field.add[e, g]) for e in elems}
    assert len(elems) == d
    return np.array(sorted(elems), dtype=np.int16)


def denniston_arc(geometry: Geometry, d: int) -> PointSet:
    """Degree-d maximal arc from a pencil of conics, q even, d | q.

    Affine model: points (x, y, 1) with x^2 + lam*x*y + y^2 in a fixed
    additive subgroup of order d, lam chosen so the quadratic form is
    anisotropic.  Size qd + d - q; every line meets it in 0 or d points.
    """
    _require_plane(geometry)
    q = geometry.q
    if q % 2 != 0:
        raise OddOrder(f"Denniston arcs require even q, got q = {q}")
    if not 2 <= d <= q:
        raise DegreeNotDividingOrder(f"degree must satisfy 2 <= d <= q, got d={d}")
    if q % d != 0:
        raise DegreeNotDividingOrder(f"degree {d} does not divide q = {q}")

    fld = geometry.field
    lam = _denniston_lambda(fld)
    group = _additive_subgroup(fld, d)
    in_group = np.zeros(q, dtype=bool)
    in_group[group] = True

    xs, ys = np.meshgrid(np.arange(q, dtype=np.int16), np.arange(q, dtype=np.int16),
                         indexing="ij")
    form = fld.add[fld.add[fld.mul[xs, xs], fld.mul[lam, fld.mul[xs, ys]]],
                   fld.mul[ys, ys]]
    keep = in_group[form]
    vecs = np.stack([xs[keep], ys[keep], np.ones(int(keep.sum()), dtype=np.int16)], axis=1)
    idx = [geometry.point_index(v) for v in vecs]
    return pointset_from_indices(geometry, idx)


# ---------------------------------------------------------------------------
# canonical cone builders used by the theorem drivers and the CLI
# ---------------------------------------------------------------------------

def _plane_geometry(geometry: Geometry) -> Geometry:
    return Geometry(geometry.field, 2)


def hyperoval_cone(geometry: Geometry) -> PointSet:
    """Cone with an (n-3)-dim vertex over a hyperoval in the first 3 coords."""
    base = embed_in_first_coords(geometry, hyperoval(_plane_geometry(geometry)))
    return cone(geometry, axis_vertex(geometry, geometry.n - 3), base)


def unital_cone(geometry: Geometry) -> PointSet:
    base = embed_in_first_coords(geometry, hermitian_unital(_plane_geometry(geometry)))
    return cone(geometry, axis_vertex(geometry, geometry.n - 3), base)


def maxarc_cone(geometry: Geometry, d: int) -> PointSet:
    base = embed_in_first_coords(geometry, denniston_arc(_plane_geometry(geometry), d))
    return cone(geometry, axis_vertex(geometry, geometry.n - 3), base)
