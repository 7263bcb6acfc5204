"""Hot numeric kernels with numba-jitted and pure-numpy implementations.

The jitted path is used by default when numba imports cleanly; setting the
environment variable ``PGCONES_NO_NUMBA=1`` forces the vectorized numpy
fallback.  Both paths produce bit-identical results; ``benchmarks/``
compares their throughput.

All kernels work on the raw arrays of a Geometry: field tables (add/mul/
inv), the point coordinate matrix, the base-q code -> point-index lookup
table, and boolean membership masks.
"""

from __future__ import annotations

import os
from itertools import combinations

import numpy as np

_flag = os.environ.get("PGCONES_NO_NUMBA", "").lower()
USE_NUMBA = _flag not in ("1", "true", "yes")
if USE_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        USE_NUMBA = False

if not USE_NUMBA:
    def njit(*args, **kwargs):
        def wrap(fn):
            return fn
        if args and callable(args[0]):
            return args[0]
        return wrap


# ---------------------------------------------------------------------------
# subspace enumeration: canonical reduced-echelon representatives
# ---------------------------------------------------------------------------

def pivot_patterns(n_cols: int, rows: int):
    """Pivot-column choices for echelon bases of `rows`-row matrices.

    Each pattern yields q^(number of free slots) distinct subspaces; summed
    over patterns this is the Gaussian binomial.  Order is lexicographic,
    which fixes the global subspace enumeration order.
    """
    out = []
    for pivots in combinations(range(n_cols), rows):
        free = []
        for i, p in enumerate(pivots):
            later_pivots = set(pivots[i + 1:])
            for col in range(p + 1, n_cols):
                if col not in later_pivots:
                    free.append((i, col))
        out.append((pivots, tuple(free)))
    return out


def _basis_template(pivots, rows, n_cols):
    tmpl = np.zeros((rows, n_cols), dtype=np.int16)
    for i, p in enumerate(pivots):
        tmpl[i, p] = 1
    return tmpl


def pattern_bases_numpy(pivots, free, rows, n_cols, q):
    """All echelon basis matrices for one pivot pattern: (q^nf, rows, n_cols)."""
    nf = len(free)
    m = q ** nf
    bases = np.broadcast_to(_basis_template(pivots, rows, n_cols), (m, rows, n_cols)).copy()
    codes = np.arange(m, dtype=np.int64)
    for j, (r, c) in enumerate(free):
        digit = (codes // q ** (nf - 1 - j)) % q
        bases[:, r, c] = digit.astype(np.int16)
    return bases


def combo_vectors(dim_plus_1: int, q: int) -> np.ndarray:
    """Normalized coefficient vectors (first nonzero = 1), i.e. the points
    of PG(dim, q), in lexicographic order.  Shape (theta_dim, dim_plus_1)."""
    out = []
    for lead in range(dim_plus_1):
        tail = dim_plus_1 - lead - 1
        for code in range(q ** tail):
            vec = [0] * lead + [1]
            c = code
            digits = []
            for _ in range(tail):
                digits.append(c % q)
                c //= q
            vec.extend(reversed(digits))
            out.append(vec)
    arr = np.array(out, dtype=np.int16)
    order = np.lexsort(arr.T[::-1])
    return arr[order]


# ---------------------------------------------------------------------------
# span of a basis -> point indices (numpy only; not perf-critical)
# ---------------------------------------------------------------------------

def span_point_indices(basis, combos, add, mul, inv, pows, code_to_index):
    """Point indices of the span of `basis` (rows linearly independent)."""
    rows = basis.shape[0]
    acc = mul[combos[:, 0][:, None], basis[0][None, :]]
    for r in range(1, rows):
        acc = add[acc, mul[combos[:, r][:, None], basis[r][None, :]]]
    acc = _normalize_rows_numpy(acc, mul, inv)
    codes = acc.astype(np.int64) @ pows
    return np.unique(code_to_index[codes])


def _normalize_rows_numpy(vecs, mul, inv):
    lead_col = np.argmax(vecs != 0, axis=1)
    lead = vecs[np.arange(vecs.shape[0]), lead_col]
    return mul[inv[lead][:, None], vecs]


# ---------------------------------------------------------------------------
# intersection counts of a point set against all d-subspaces
# ---------------------------------------------------------------------------

@njit(cache=True, nogil=True)
def _scan_pattern_jit(template, free_rc, combos, add, mul, inv, pows,
                      code_to_index, member, q, counts, lone):
    rows, n_cols = template.shape
    nf = free_rc.shape[0]
    n_combos = combos.shape[0]
    m = counts.shape[0]
    basis = np.empty((rows, n_cols), dtype=np.int16)
    for s in range(m):
        for i in range(rows):
            for j in range(n_cols):
                basis[i, j] = template[i, j]
        code = s
        for j in range(nf - 1, -1, -1):
            basis[free_rc[j, 0], free_rc[j, 1]] = code % q
            code //= q
        cnt = 0
        last = -1
        vec = np.empty(n_cols, dtype=np.int16)
        for t in range(n_combos):
            first = np.int16(0)
            for col in range(n_cols):
                v = np.int16(0)
                for r in range(rows):
                    v = add[v, mul[combos[t, r], basis[r, col]]]
                vec[col] = v
                if first == 0 and v != 0:
                    first = v
            scale = inv[first]
            enc = np.int64(0)
            for col in range(n_cols):
                enc += np.int64(mul[scale, vec[col]]) * pows[col]
            idx = code_to_index[enc]
            if member[idx]:
                cnt += 1
                last = idx
        counts[s] = cnt
        lone[s] = last if cnt == 1 else -1


def _scan_pattern_numpy(template, free_rc, combos, add, mul, inv, pows,
                        code_to_index, member, q, counts, lone):
    rows, n_cols = template.shape
    nf = free_rc.shape[0]
    m = counts.shape[0]
    bases = np.broadcast_to(template, (m, rows, n_cols)).copy()
    codes = np.arange(m, dtype=np.int64)
    for j in range(nf):
        digit = (codes // q ** (nf - 1 - j)) % q
        bases[:, free_rc[j, 0], free_rc[j, 1]] = digit.astype(np.int16)
    counts[:] = 0
    lone_sum = np.zeros(m, dtype=np.int64)
    for t in range(combos.shape[0]):
        acc = mul[combos[t, 0], bases[:, 0, :]]
        for r in range(1, rows):
            acc = add[acc, mul[combos[t, r], bases[:, r, :]]]
        acc = _normalize_rows_numpy(acc, mul, inv)
        idx = code_to_index[acc.astype(np.int64) @ pows]
        hit = member[idx]
        counts += hit
        lone_sum += np.where(hit, idx, 0)
    lone[:] = np.where(counts == 1, lone_sum, -1)


def subspace_intersection_scan(n_cols, d, q, add, mul, inv, pows,
                               code_to_index, member, workers: int = 1):
    """Intersection size of `member` with every d-subspace, plus the lone
    member point where that size is 1.

    Returns (counts, lone) int64/int64 arrays over the canonical subspace
    order.  The worker count only chunks the pattern loop; results are
    byte-identical for any value.
    """
    rows = d + 1
    patterns = pivot_patterns(n_cols, rows)
    combos = combo_vectors(rows, q)
    sizes = [q ** len(free) for _, free in patterns]
    total = int(sum(sizes))
    counts = np.zeros(total, dtype=np.int64)
    lone = np.full(total, -1, dtype=np.int64)
    member = np.ascontiguousarray(member)

    scan = _scan_pattern_jit if USE_NUMBA else _scan_pattern_numpy

    def run(i):
        pivots, free = patterns[i]
        off = int(sum(sizes[:i]))
        template = _basis_template(pivots, rows, n_cols)
        free_rc = np.array(free, dtype=np.int64).reshape(len(free), 2)
        scan(template, free_rc, combos, add, mul, inv, pows,
             code_to_index, member, q, counts[off:off + sizes[i]],
             lone[off:off + sizes[i]])

    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(run, range(len(patterns))))
    else:
        for i in range(len(patterns)):
            run(i)
    return counts, lone


# ---------------------------------------------------------------------------
# hyperplane intersection counts from the incidence matrix
# ---------------------------------------------------------------------------

@njit(cache=True, nogil=True)
def _hyperplane_counts_jit(incidence, member, counts, lone):
    h, p = incidence.shape
    for i in range(h):
        cnt = 0
        last = -1
        for j in range(p):
            if incidence[i, j] and member[j]:
                cnt += 1
                last = j
        counts[i] = cnt
        lone[i] = last if cnt == 1 else -1


def _hyperplane_counts_numpy(incidence, member, counts, lone):
    hits = incidence & member[None, :]
    counts[:] = hits.sum(axis=1)
    lone_sum = hits @ np.arange(incidence.shape[1], dtype=np.int64)
    lone[:] = np.where(counts == 1, lone_sum, -1)


def hyperplane_intersection_counts(incidence, member, workers: int = 1):
    """Per-hyperplane |H ∩ member| and lone member where the count is 1."""
    h = incidence.shape[0]
    counts = np.zeros(h, dtype=np.int64)
    lone = np.full(h, -1, dtype=np.int64)
    fn = _hyperplane_counts_jit if USE_NUMBA else _hyperplane_counts_numpy

    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor
        bounds = np.linspace(0, h, workers + 1).astype(int)
        def run(i):
            lo, hi = bounds[i], bounds[i + 1]
            fn(incidence[lo:hi], member, counts[lo:hi], lone[lo:hi])
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(run, range(workers)))
    else:
        fn(incidence, member, counts, lone)
    return counts, lone


# ---------------------------------------------------------------------------
# cone-point detection: P such that every line P-Q, Q in K, stays in K
# ---------------------------------------------------------------------------

@njit(cache=True, nogil=True)
def _cone_points_jit(member_idx, points, add, mul, inv, pows,
                     code_to_index, member, out):
    n_cols = points.shape[1]
    q = inv.shape[0]
    for a in range(member_idx.shape[0]):
        pi = member_idx[a]
        ok = True
        for b in range(member_idx.shape[0]):
            qi = member_idx[b]
            if qi == pi:
                continue
            for t in range(1, q):
                enc = np.int64(0)
                first = np.int16(0)
                for col in range(n_cols):
                    v = add[points[pi, col], mul[t, points[qi, col]]]
                    if first == 0 and v != 0:
                        first = v
                scale = inv[first]
                for col in range(n_cols):
                    v = add[points[pi, col], mul[t, points[qi, col]]]
                    enc += np.int64(mul[scale, v]) * pows[col]
                if not member[code_to_index[enc]]:
                    ok = False
                    break
            if not ok:
                break
        out[a] = ok


def _cone_points_numpy(member_idx, points, add, mul, inv, pows,
                       code_to_index, member, out):
    q = inv.shape[0]
    k = member_idx.shape[0]
    kpts = points[member_idx]
    ts = np.arange(1, q, dtype=np.int16)
    # scaled[b, t, col] = t * Q_b[col]
    scaled = mul[ts[None, :, None], kpts[:, None, :]]
    for a in range(k):
        others = np.concatenate([scaled[:a], scaled[a + 1:]]) if k > 1 else scaled[:0]
        if others.size == 0:
            out[a] = True
            continue
        line_pts = add[points[member_idx[a]][None, None, :], others]
        flat = line_pts.reshape(-1, points.shape[1])
        flat = _normalize_rows_numpy(flat, mul, inv)
        idx = code_to_index[flat.astype(np.int64) @ pows]
        out[a] = bool(member[idx].all())


def cone_points(member, points, add, mul, inv, pows, code_to_index):
    """Boolean: which member points see every joining line inside the set."""
    member_idx = np.nonzero(member)[0].astype(np.int64)
    out = np.zeros(member_idx.shape[0], dtype=np.bool_)
    fn = _cone_points_jit if USE_NUMBA else _cone_points_numpy
    fn(member_idx, points, add, mul, inv, pows,
       code_to_index, member, out)
    return member_idx[out]
