"""Intersection spectra, blocking tests, pencil counts, cone recognition."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import kernels
from .errors import NotBlocking, WrongDimension
from .objects import PointSet, cone, pointset_from_indices
from .pg import Geometry, Subspace, gaussian_binomial, theta


@dataclass(frozen=True)
class Spectrum:
    """Multiset {intersection size -> number of d-subspaces attaining it}."""

    by_size: dict
    d: int
    total: int

    def sizes(self) -> tuple:
        return tuple(sorted(self.by_size))


@dataclass(frozen=True)
class PencilProfile:
    """Intersection sizes of the q+1 hyperplanes through a codim-2 axis."""

    axis: Subspace = dc_field(repr=False)
    u: dict = dc_field(default_factory=dict)


@dataclass(frozen=True)
class ConeRecognition:
    vertex: Subspace = dc_field(repr=False)
    base: PointSet = dc_field(repr=False)
    is_cone_over_vertex: bool = False


def _counts(K: PointSet, d: int, workers: int = 1):
    g = K.geometry
    if not 0 <= d <= g.n - 1:
        raise WrongDimension(f"need 0 <= d <= n-1, got d={d}")
    if d == g.n - 1:
        return kernels.hyperplane_intersection_counts(g.incidence, K.mask, workers)
    return kernels.subspace_intersection_scan(
        g.n + 1, d, g.q, g.field.add, g.field.mul, g.field.inv,
        g.pows, g.code_to_index, K.mask, workers)


def spectrum(K: PointSet, d: int, workers: int = 1) -> Spectrum:
    """Exact intersection spectrum of K against all d-subspaces."""
    counts, _ = _counts(K, d, workers)
    sizes, mult = np.unique(counts, return_counts=True)
    g = K.geometry
    return Spectrum(by_size={int(s): int(m) for s, m in zip(sizes, mult)},
                    d=d, total=gaussian_binomial(g.n + 1, d + 1, g.q))


def is_blocking(K: PointSet, d: int, workers: int = 1) -> bool:
    """True iff every d-subspace meets K."""
    counts, _ = _counts(K, d, workers)
    return bool(counts.min() > 0)


def essential_points(K: PointSet, d: int, workers: int = 1) -> PointSet:
    """Points whose removal unblocks some d-subspace.

    A point is essential exactly when some d-subspace meets K in that
    point alone.  Raises NotBlocking if K is not a d-blocking set.
    """
    counts, lone = _counts(K, d, workers)
    if counts.min() == 0:
        raise NotBlocking(f"K does not block every {d}-subspace")
    ess = np.unique(lone[lone >= 0])
    return pointset_from_indices(K.geometry, ess)


def pencil_counts(K: PointSet, axis: Subspace) -> PencilProfile:
    """Intersection sizes of the q+1 hyperplanes through an (n-2)-axis."""
    g = K.geometry
    if axis.dim != g.n - 2:
        raise WrongDimension(f"axis must have dimension n-2 = {g.n - 2}, got {axis.dim}")
    through = g.incidence[:, axis.point_indices].all(axis=1)
    assert int(through.sum()) == g.q + 1
    sizes = (g.incidence[through] & K.mask[None, :]).sum(axis=1)
    u = {}
    for s in sizes:
        u[int(s)] = u.get(int(s), 0) + 1
    return PencilProfile(axis=axis, u=u)


# ---------------------------------------------------------------------------
# cone recognition
# ---------------------------------------------------------------------------

def _complementary_subspace(g: Geometry, vertex: Subspace) -> Subspace:
    """Deterministic complement: greedily extend by the lexicographically
    smallest points that stay independent of the vertex."""
    target_rows = g.n + 1 - (vertex.dim + 1)
    chosen = []
    basis = vertex.basis
    for i in range(g.num_points):
        if len(chosen) == target_rows:
            break
        cand = np.vstack([basis] + [g.points[j][None, :] for j in chosen]
                         + [g.points[i][None, :]])
        if g.rref(cand).shape[0] == cand.shape[0]:
            chosen.append(i)
    if target_rows == 0:
        return g.span([])
    return g.span(chosen)


def recognize_cone(K: PointSet, workers: int = 1) -> ConeRecognition:
    """Detect the maximal vertex of K and test whether K is a cone over it.

    The vertex is the span of all points P of K such that every line
    joining P to another point of K lies entirely in K.  The base is the
    intersection of K with a deterministic complementary subspace.
    """
    g = K.geometry
    if K.k == 0:
        raise ValueError("K must be nonempty")
    vertex_pts = kernels.cone_points(
        K.mask, g.points, g.field.add, g.field.mul, g.field.inv,
        g.pows, g.code_to_index)
    vertex = g.span(vertex_pts)
    comp = _complementary_subspace(g, vertex)
    base_mask = K.mask & comp.mask(g.num_points)
    base = PointSet(g, base_mask)
    if vertex.dim == -1:
        return ConeRecognition(vertex=vertex, base=base, is_cone_over_vertex=False)
    rebuilt = cone(g, vertex, base)
    return ConeRecognition(vertex=vertex, base=base,
                           is_cone_over_vertex=(rebuilt == K))
