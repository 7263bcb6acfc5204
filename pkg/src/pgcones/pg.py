"""PG(n,q): normalized point/hyperplane enumeration, incidence, subspaces.

Points and hyperplanes are homogeneous coordinate vectors of length n+1
with the first nonzero coordinate scaled to 1, listed in lexicographic
order.  Incidence is a dense boolean matrix (hyperplane x point) so that
hyperplane spectra reduce to masked row sums.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterator

import numpy as np

from . import kernels
from .errors import GeometryTooLarge, WrongDimension
from .gf import Field

DEFAULT_MAX_POINTS = 100_000


def theta(m: int, q: int) -> int:
    """Number of points of PG(m,q); theta(-1) = 0 for the empty space."""
    if m < -1:
        raise ValueError(f"projective dimension must be >= -1, got {m}")
    return (q ** (m + 1) - 1) // (q - 1)


def gaussian_binomial(m: int, r: int, q: int) -> int:
    """q-binomial [m choose r]_q: number of r-dim linear subspaces of F_q^m."""
    if not 0 <= r <= m:
        raise ValueError(f"need 0 <= r <= m, got r={r}, m={m}")
    num = den = 1
    for i in range(r):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


@dataclass(frozen=True)
class Subspace:
    """A projective subspace given by an echelonized basis and its points."""

    dim: int
    basis: np.ndarray = dc_field(repr=False)  # (dim+1, n+1), empty for dim -1
    point_indices: np.ndarray = dc_field(repr=False)

    def mask(self, num_points: int) -> np.ndarray:
        m = np.zeros(num_points, dtype=bool)
        m[self.point_indices] = True
        return m


class Geometry:
    """Fully enumerated PG(n,q) over a table-backed field."""

    def __init__(self, field: Field, n: int, max_points: int = DEFAULT_MAX_POINTS):
        if n < 2:
            raise WrongDimension(f"projective dimension must be >= 2, got {n}")
        q = field.q
        npts = theta(n, q)
        if npts > max_points:
            raise GeometryTooLarge(f"theta_{n}({q}) = {npts} exceeds the bound {max_points}")
        self.field = field
        self.n = n
        self.q = q
        self.num_points = npts

        self.points = kernels.combo_vectors(n + 1, q)  # normalized, lex order
        self.hyperplanes = self.points  # same normalized representatives
        self.pows = q ** np.arange(n + 1, dtype=np.int64)
        codes = self.points.astype(np.int64) @ self.pows
        self.code_to_index = np.full(q ** (n + 1), -1, dtype=np.int64)
        self.code_to_index[codes] = np.arange(npts, dtype=np.int64)

        # incidence[i, j]: point j lies on hyperplane i (field dot product 0)
        add, mul = field.add, field.mul
        dot = mul[self.points[:, 0][None, :], self.hyperplanes[:, 0][:, None]]
        for c in range(1, n + 1):
            dot = add[dot, mul[self.points[:, c][None, :], self.hyperplanes[:, c][:, None]]]
        self.incidence = dot == 0

    # -- coordinate helpers -------------------------------------------------

    def point_index(self, vector) -> int:
        """Index of the projective point with the given coordinates."""
        vec = np.asarray(vector, dtype=np.int16)
        nz = np.nonzero(vec)[0]
        if nz.size == 0:
            raise ValueError("the zero vector is not a projective point")
        scale = self.field.inv[vec[nz[0]]]
        norm = self.field.mul[scale, vec]
        idx = int(self.code_to_index[int(norm.astype(np.int64) @ self.pows)])
        assert idx >= 0
        return idx

    def rref(self, vectors: np.ndarray) -> np.ndarray:
        """Reduced row echelon form over the field; returns the nonzero rows."""
        add, mul, inv, neg = (self.field.add, self.field.mul,
                              self.field.inv, self.field.neg)
        rows = [np.array(v, dtype=np.int16) for v in vectors]
        out = []
        col = 0
        while rows and col <= self.n:
            pivot = next((i for i, r in enumerate(rows) if r[col] != 0), None)
            if pivot is None:
                col += 1
                continue
            piv = mul[inv[rows[pivot][col]], rows.pop(pivot)]
            rows = [add[r, mul[neg[r[col]], piv]] if r[col] != 0 else r for r in rows]
            out = [add[r, mul[neg[r[col]], piv]] if r[col] != 0 else r for r in out]
            out.append(piv)
            col += 1
        return np.array(out, dtype=np.int16) if out else np.empty((0, self.n + 1), dtype=np.int16)

    def span(self, point_indices) -> Subspace:
        """Smallest subspace containing the given points (possibly empty)."""
        idx = np.asarray(list(point_indices), dtype=np.int64)
        if idx.size == 0:
            return Subspace(-1, np.empty((0, self.n + 1), dtype=np.int16),
                            np.empty(0, dtype=np.int64))
        basis = self.rref(self.points[idx])
        return self.subspace_from_basis(basis)

    def subspace_from_basis(self, basis: np.ndarray) -> Subspace:
        if basis.shape[0] == 0:
            return Subspace(-1, basis, np.empty(0, dtype=np.int64))
        combos = kernels.combo_vectors(basis.shape[0], self.q)
        pts = kernels.span_point_indices(
            basis, combos, self.field.add, self.field.mul, self.field.inv,
            self.pows, self.code_to_index)
        return Subspace(basis.shape[0] - 1, basis, np.sort(pts))

    # -- subspace streams ---------------------------------------------------

    def subspaces_iter(self, d: int) -> Iterator[Subspace]:
        """Every d-subspace exactly once, canonical echelon-basis order."""
        if not 0 <= d <= self.n - 1:
            raise WrongDimension(f"need 0 <= d <= n-1, got d={d}")
        rows = d + 1
        for pivots, free in kernels.pivot_patterns(self.n + 1, rows):
            bases = kernels.pattern_bases_numpy(pivots, free, rows, self.n + 1, self.q)
            for b in bases:
                yield self.subspace_from_basis(b)

    def hyperplane_subspace(self, h_index: int) -> Subspace:
        pts = np.nonzero(self.incidence[h_index])[0]
        basis = self.rref(self.points[pts[: self.n + 1]])
        if basis.shape[0] < self.n:  # first n+1 points may be degenerate
            basis = self.rref(self.points[pts])
        return Subspace(self.n - 1, basis, pts.astype(np.int64))


def geometry_new(field: Field, n: int, max_points: int = DEFAULT_MAX_POINTS) -> Geometry:
    return Geometry(field, n, max_points)
