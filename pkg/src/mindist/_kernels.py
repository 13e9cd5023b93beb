"""Hot integer kernels with a numba path and a pure-numpy fallback.

Two families of kernels live here:

* modular Gaussian elimination over GF(p), p < 2**31, on int64 arrays;
* incidence counting for hyperplanes spanned by n-subsets of integer points.

The numba versions are plain loops compiled with ``@njit``.  The numpy
versions vectorize over rows.  Which pair is active is decided once, at
import, by the ``MINDIST_DISABLE_NUMBA`` environment variable (any of
``1/true/yes`` selects numpy) or by numba being unavailable.

All kernels are exact: callers are responsible for keeping inputs inside
the int64-safe envelope (see :func:`int64_safe_incidence`).
"""
from __future__ import annotations

import math
import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

_FLAG = os.environ.get("MINDIST_DISABLE_NUMBA", "").strip().lower()
USE_NUMBA = numba is not None and _FLAG not in ("1", "true", "yes", "on")

# largest modulus for which a*b fits in int64 without overflow
MAX_KERNEL_PRIME = 2**31


# ---------------------------------------------------------------------------
# plain-loop implementations (compiled by numba when enabled)


def _inv_mod(a, p):
    t, new_t = 0, 1
    r, new_r = p, a % p
    while new_r != 0:
        q = r // new_r
        t, new_t = new_t, t - q * new_t
        r, new_r = new_r, r - q * new_r
    if t < 0:
        t += p
    return t


def _rref_mod_p_loops(a, p, pivots):
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        inv = _inv_mod(a[r, c], p)
        for j in range(c, cols):
            a[r, j] = (a[r, j] * inv) % p
        for i in range(rows):
            if i != r:
                f = a[i, c]
                if f != 0:
                    for j in range(c, cols):
                        a[i, j] = (a[i, j] - f * a[r, j]) % p
        pivots[r] = c
        r += 1
    return r


def _rank_mod_p_loops(a, p):
    # forward elimination only
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, cols):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        inv = _inv_mod(a[r, c], p)
        for i in range(r + 1, rows):
            f = a[i, c]
            if f != 0:
                f = (f * inv) % p
                for j in range(c, cols):
                    a[i, j] = (a[i, j] - f * a[r, j]) % p
        r += 1
    return r


def _det_bareiss(m):
    # fraction-free determinant of a small square int64 matrix (destroys m)
    k = m.shape[0]
    sign = 1
    prev = 1
    for c in range(k - 1):
        if m[c, c] == 0:
            sw = -1
            for i in range(c + 1, k):
                if m[i, c] != 0:
                    sw = i
                    break
            if sw < 0:
                return 0
            for j in range(k):
                tmp = m[c, j]
                m[c, j] = m[sw, j]
                m[sw, j] = tmp
            sign = -sign
        for i in range(c + 1, k):
            for j in range(c + 1, k):
                m[i, j] = (m[i, j] * m[c, c] - m[i, c] * m[c, j]) // prev
        prev = m[c, c]
    return sign * m[k - 1, k - 1]


def _subset_normals_loops(points, combos, normals, counts):
    # normal of the hyperplane through each subset = signed maximal minors
    ncomb, k = combos.shape
    m, width = points.shape
    sub = np.empty((k, k), dtype=np.int64)
    for t in range(ncomb):
        nonzero = False
        for col in range(width):
            for i in range(k):
                jj = 0
                for j in range(width):
                    if j != col:
                        sub[i, jj] = points[combos[t, i], j]
                        jj += 1
            det = _det_bareiss(sub)
            if col % 2 == 1:
                det = -det
            normals[t, col] = det
            if det != 0:
                nonzero = True
        if not nonzero:
            counts[t] = -1
            continue
        cnt = 0
        for q in range(m):
            s = 0
            for j in range(width):
                s += normals[t, j] * points[q, j]
            if s == 0:
                cnt += 1
        counts[t] = cnt


# ---------------------------------------------------------------------------
# vectorized numpy implementations


def _rref_mod_p_numpy(a, p, pivots):
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r, c:] = (a[r, c:] * inv) % p
        f = a[:, c].copy()
        f[r] = 0
        mask = f != 0
        if mask.any():
            a[mask, c:] = (a[mask, c:] - np.outer(f[mask], a[r, c:]) % p) % p
        pivots[r] = c
        r += 1
    return r


def _rank_mod_p_numpy(a, p):
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        f = (a[r + 1:, c] * inv) % p
        mask = f != 0
        if mask.any():
            sub = a[r + 1:]
            sub[mask, c:] = (sub[mask, c:] - np.outer(f[mask], a[r, c:]) % p) % p
        r += 1
    return r


def _subset_normals_numpy(points, combos, normals, counts):
    ncomb, k = combos.shape
    width = points.shape[1]
    if ncomb == 0:
        return
    sel = points[combos]  # (ncomb, k, width)
    for col in range(width):
        keep = [j for j in range(width) if j != col]
        minors = sel[:, :, keep]
        det = _int_det_batch(minors)
        normals[:, col] = -det if col % 2 == 1 else det
    degenerate = ~normals.any(axis=1)
    prods = normals @ points.T
    counts[:] = (prods == 0).sum(axis=1)
    counts[degenerate] = -1


def _int_det_batch(mats):
    # exact batched integer determinant via fraction-free elimination
    mats = mats.astype(np.int64).copy()
    b, k, _ = mats.shape
    sign = np.ones(b, dtype=np.int64)
    prev = np.ones(b, dtype=np.int64)
    alive = np.ones(b, dtype=bool)
    for c in range(k - 1):
        zero = mats[:, c, c] == 0
        for idx in np.flatnonzero(zero & alive):
            col = mats[idx, c + 1:, c]
            nz = np.flatnonzero(col)
            if nz.size == 0:
                alive[idx] = False
                continue
            sw = c + 1 + int(nz[0])
            mats[idx, [c, sw]] = mats[idx, [sw, c]]
            sign[idx] = -sign[idx]
        piv = mats[:, c, c].copy()
        piv[~alive] = 1
        lower = mats[:, c + 1:, c + 1:]
        num = lower * piv[:, None, None] - mats[:, c + 1:, c][:, :, None] * mats[:, c, c + 1:][:, None, :]
        mats[:, c + 1:, c + 1:] = num // prev[:, None, None]
        prev = piv
    det = sign * mats[:, k - 1, k - 1]
    det[~alive] = 0
    return det


# ---------------------------------------------------------------------------
# selection

if USE_NUMBA:
    # helpers are rebound first so the compiled kernels resolve to them
    _inv_mod = numba.njit(cache=True)(_inv_mod)
    _det_bareiss = numba.njit(cache=True)(_det_bareiss)
    _rref_impl = numba.njit(cache=True)(_rref_mod_p_loops)
    _rank_impl = numba.njit(cache=True)(_rank_mod_p_loops)
    _normals_impl = numba.njit(cache=True)(_subset_normals_loops)
else:
    _rref_impl = _rref_mod_p_numpy
    _rank_impl = _rank_mod_p_numpy
    _normals_impl = _subset_normals_numpy

BACKEND = "numba" if USE_NUMBA else "numpy"


def _as_mod_array(a, p):
    if isinstance(a, np.ndarray):
        return np.array(a, dtype=np.int64, copy=True) % p
    rows = [[int(x) % p for x in row] for row in a]
    if not rows or not rows[0]:
        return np.zeros((len(rows), 0), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def rank_mod_p(a, p: int, backend: str | None = None) -> int:
    """Rank of an integer matrix reduced mod ``p`` (``p < 2**31``)."""
    if p >= MAX_KERNEL_PRIME:
        raise ValueError("kernel prime must be below 2**31")
    arr = _as_mod_array(a, p)
    if arr.size == 0:
        return 0
    impl = _pick(backend, _rank_impl, _RANK)
    return int(impl(arr, p))


def rref_mod_p(a, p: int, backend: str | None = None):
    """Reduced row echelon form mod ``p``: ``(R, pivot columns)``."""
    if p >= MAX_KERNEL_PRIME:
        raise ValueError("kernel prime must be below 2**31")
    arr = _as_mod_array(a, p)
    if arr.size == 0:
        return arr, []
    pivots = np.full(arr.shape[0], -1, dtype=np.int64)
    impl = _pick(backend, _rref_impl, _RREF)
    r = impl(arr, p, pivots)
    return arr, [int(c) for c in pivots[: int(r)]]


def subset_normals(points, combos, backend: str | None = None):
    """For each row of ``combos`` (indices of n points), the integer normal
    of the spanned hyperplane and the number of points incident to it.

    ``counts[t] == -1`` marks a subset of rank < n.  Inputs must satisfy
    :func:`int64_safe_incidence`.
    """
    pts = np.ascontiguousarray(points, dtype=np.int64)
    cmb = np.ascontiguousarray(combos, dtype=np.int64)
    normals = np.zeros((cmb.shape[0], pts.shape[1]), dtype=np.int64)
    counts = np.zeros(cmb.shape[0], dtype=np.int64)
    impl = _pick(backend, _normals_impl, _NORMALS)
    impl(pts, cmb, normals, counts)
    return normals, counts


def int64_safe_incidence(max_abs: int, width: int) -> bool:
    """True when maximal minors and incidence dot products of integer
    points with entries bounded by ``max_abs`` cannot overflow int64,
    including Bareiss intermediates (which are themselves minors)."""
    k = width - 1
    if k <= 0:
        return True
    # Hadamard bound for a k x k minor
    minor = math.isqrt(k * max_abs * max_abs) + 1
    minor = minor**k
    bound = max(minor * minor, width * max(max_abs, 1) * minor)
    return bound < 2**62


def _pick(backend, active, table):
    if backend is None:
        return active
    try:
        return table[backend]
    except KeyError:
        raise ValueError(f"unknown backend {backend!r}") from None


_RANK = {"numpy": _rank_mod_p_numpy}
_RREF = {"numpy": _rref_mod_p_numpy}
_NORMALS = {"numpy": _subset_normals_numpy}
if USE_NUMBA:
    _RANK["numba"] = _rank_impl
    _RREF["numba"] = _rref_impl
    _NORMALS["numba"] = _normals_impl


def available_backends() -> list[str]:
    return sorted(_RANK)
