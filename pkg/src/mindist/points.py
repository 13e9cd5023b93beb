"""Hyperplane incidence, minimum distance, Veronese images, generalized
distances and separator degrees of projective point sets.

Why hyp only needs spanning subsets: if Γ is non-degenerate and H is a
hyperplane holding the most points, the points on H span H.  Otherwise
they lie in a codimension-2 space L, and some hyperplane through L also
passes through a point of Γ outside H (there is one, since Γ spans P^n),
which would beat H.  So some n-subset of Γ ∩ H has rank n, and its
kernel normal is H itself.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import comb

import numpy as np

from . import _kernels
from .errors import ConsistencyError, DegenerateConfigurationError, InputError
from .field import QQ
from .groebner import hilbert_function_eval, point_regularity
from .linalg import ExactMatrix, kernel_basis, rank
from .pointset import ProjectivePointSet, as_pointset, canonical, coordinate_matrix, evaluation_matrix
from .poly import monomials_of_degree


@dataclass
class DistanceReport:
    m: int
    hyp: int
    d: int
    witness_hyperplane: tuple
    incident: tuple
    generalized: dict = dc_field(default_factory=dict)


@dataclass
class SeparatorReport:
    per_point: dict
    delta_gamma: int


def is_nondegenerate(points) -> bool:
    """True when the points span P^n (coordinate matrix of rank n+1)."""
    pts = as_pointset(points)
    if pts.m == 0:
        return False
    return rank(coordinate_matrix(pts)) == pts.n + 1


def _require_nondegenerate(pts: ProjectivePointSet):
    if not is_nondegenerate(pts):
        raise DegenerateConfigurationError(
            "all points lie in one hyperplane; the configuration must not be contained in a hyperplane"
        )


# ---------------------------------------------------------------------------
# hyp


def _int_det(rows) -> int:
    # Bareiss on Python ints
    a = [list(r) for r in rows]
    k = len(a)
    if k == 0:
        return 1
    sign, prev = 1, 1
    for c in range(k - 1):
        if a[c][c] == 0:
            for r in range(c + 1, k):
                if a[r][c]:
                    a[c], a[r] = a[r], a[c]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(c + 1, k):
            for j in range(c + 1, k):
                a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) // prev
        prev = a[c][c]
    return sign * a[k - 1][k - 1]


def _normal_exact(rows, width):
    normal = []
    for col in range(width):
        minor = [[r[j] for j in range(width) if j != col] for r in rows]
        det = _int_det(minor)
        normal.append(-det if col % 2 else det)
    return normal


def _hyp_counts(pts: ProjectivePointSet, backend=None):
    """(normals, counts) for all n-subsets in lexicographic order."""
    n, m = pts.n, pts.m
    combos = list(combinations(range(m), n))
    if pts.field == QQ:
        coords = pts.integer_coordinates()
        max_abs = max(abs(x) for row in coords for x in row)
        if _kernels.int64_safe_incidence(max_abs, n + 1):
            normals, counts = _kernels.subset_normals(
                np.array(coords, dtype=np.int64).reshape(m, n + 1),
                np.array(combos, dtype=np.int64).reshape(len(combos), n),
                backend,
            )
            return combos, [tuple(int(x) for x in v) for v in normals], [int(c) for c in counts]
        normals, counts = [], []
        for combo in combos:
            v = _normal_exact([coords[i] for i in combo], n + 1)
            if not any(v):
                normals.append(tuple(v))
                counts.append(-1)
                continue
            normals.append(tuple(v))
            counts.append(sum(1 for p in coords if sum(a * b for a, b in zip(v, p)) == 0))
        return combos, normals, counts
    # prime field: kernel of the subset matrix
    normals, counts = [], []
    zero = pts.field.zero
    for combo in combos:
        M = ExactMatrix._trusted([pts.points[i] for i in combo], n + 1, pts.field)
        ker = kernel_basis(M)
        if len(ker) != 1:
            normals.append(tuple([zero] * (n + 1)))
            counts.append(-1)
            continue
        v = ker[0]
        normals.append(v)
        counts.append(sum(1 for p in pts.points if sum((a * b for a, b in zip(v, p)), zero) == 0))
    return combos, normals, counts


def hyp(points, backend=None) -> tuple[int, tuple]:
    """Largest number of points on one hyperplane, with the hyperplane's
    normal (first nonzero entry 1).  The first maximizing subset in
    lexicographic order supplies the witness."""
    pts = as_pointset(points)
    _require_nondegenerate(pts)
    if pts.m < pts.n:
        raise InputError("need at least n points")
    combos, normals, counts = _hyp_counts(pts, backend)
    best = -1
    best_t = None
    for t, c in enumerate(counts):
        if c > best:
            best, best_t = c, t
    if best < 0:  # pragma: no cover - excluded by non-degeneracy
        raise DegenerateConfigurationError("no spanning n-subset")
    return best, canonical(normals[best_t], pts.field)


def incident_points(points, normal) -> tuple:
    pts = as_pointset(points)
    zero = pts.field.zero
    return tuple(
        i for i, p in enumerate(pts.points) if sum((pts.field(a) * b for a, b in zip(normal, p)), zero) == 0
    )


def min_distance(points, max_a: int = 0, backend=None) -> DistanceReport:
    """d = m - hyp, plus generalized distances for a = 1..max_a."""
    pts = as_pointset(points)
    h, normal = hyp(pts, backend)
    inc = incident_points(pts, normal)
    if len(inc) != h:
        raise ConsistencyError(f"witness hyperplane holds {len(inc)} points, expected {h}")
    rep = DistanceReport(pts.m, h, pts.m - h, normal, inc)
    for a in range(1, max_a + 1):
        rep.generalized[a] = generalized_distance_witness(pts, a)
    return rep


def hyp_bruteforce(points) -> int:
    """Max incidence over the hyperplanes through every n-subset, counted
    by exact kernels with no kernel backend; a slow cross-check."""
    pts = as_pointset(points)
    best = 0
    for combo in combinations(range(pts.m), pts.n):
        M = ExactMatrix._trusted([pts.points[i] for i in combo], pts.n + 1, pts.field)
        for v in kernel_basis(M)[:1] if rank(M) == pts.n else []:
            best = max(best, len(incident_points(pts, v)))
    return best


# ---------------------------------------------------------------------------
# Veronese and generalized distance


def veronese(points, a: int) -> ProjectivePointSet:
    """Image under the degree-``a`` Veronese map; coordinates follow the
    degree-a monomials in descending grevlex order."""
    if a < 1:
        raise ValueError("Veronese degree must be at least 1")
    pts = as_pointset(points)
    monos = monomials_of_degree(pts.n, a)
    E = evaluation_matrix(pts, monos)
    images = tuple(canonical(row, pts.field) for row in E.rows)
    return ProjectivePointSet(len(monos) - 1, images, pts.field)


def _rows_for_rank(pts: ProjectivePointSet, a: int):
    monos = monomials_of_degree(pts.n, a)
    if pts.field == QQ:
        base = ProjectivePointSet(pts.n, tuple(tuple(QQ(x) for x in r) for r in pts.integer_coordinates()), QQ)
        return evaluation_matrix(base, monos)
    return evaluation_matrix(pts, monos)


def generalized_distance_witness(points, a: int) -> tuple[int, tuple]:
    """``(d(Γ)_a, removed indices)``: the least t such that removing some t
    points strictly enlarges the space of degree-a forms vanishing on the
    rest, i.e. drops the rank of the degree-a evaluation matrix.

    A rank mod p equal to the full rank over Q certifies "no drop" without
    exact elimination; every drop is confirmed exactly.
    """
    if a < 1:
        raise ValueError("degree must be at least 1")
    pts = as_pointset(points)
    E = _rows_for_rank(pts, a)
    full = rank(E)
    m = pts.m
    modular = pts.field == QQ
    if modular:
        p = _kernels.MAX_KERNEL_PRIME - 1
        mod_rows = np.array([[int(x) % p for x in r] for r in E.rows], dtype=np.int64).reshape(m, E.ncols)
    for t in range(1, m + 1):
        for removed in combinations(range(m), t):
            keep = [i for i in range(m) if i not in removed]
            if not keep:
                return t, removed
            if modular and _kernels.rank_mod_p(mod_rows[keep], p) == full:
                continue
            sub = ExactMatrix._trusted([E.rows[i] for i in keep], E.ncols, E.field)
            if rank(sub) < full:
                return t, removed
    raise ConsistencyError("removing every point must drop the rank")  # pragma: no cover


def generalized_distance(points, a: int) -> int:
    return generalized_distance_witness(points, a)[0]


def ideal_dim(points, a: int) -> int:
    """dim I(Γ)_a."""
    pts = as_pointset(points)
    return comb(pts.n + a, a) - hilbert_function_eval(pts, a)


def veronese_distance_oracle(points, a: int) -> int | None:
    """m - hyp(v_a(Γ)), valid only when no degree-a form vanishes on Γ
    (otherwise the image is degenerate and ``None`` is returned)."""
    pts = as_pointset(points)
    if ideal_dim(pts, a) != 0:
        return None
    v = veronese(pts, a)
    return pts.m - hyp(v)[0]


# ---------------------------------------------------------------------------
# separators


def hf_difference(points, i: int, upto: int) -> list[int]:
    """HF(Γ, d) - HF(Γ minus P_i, d) for d = 0..upto."""
    pts = as_pointset(points)
    rest = pts.without(i)
    return [hilbert_function_eval(pts, d) - hilbert_function_eval(rest, d) for d in range(upto + 1)]


def separator_degree(points, i: int, reg: int | None = None) -> int:
    """Least degree of a form vanishing on Γ minus P_i but not at P_i."""
    pts = as_pointset(points)
    if pts.m < 2:
        raise InputError("separators need at least two points")
    if not 0 <= i < pts.m:
        raise IndexError(f"point index {i} out of range")
    if reg is None:
        reg = point_regularity(pts)
    rest = pts.without(i)
    for d in range(1, reg + 2):
        if hilbert_function_eval(pts, d) > hilbert_function_eval(rest, d):
            return d
    raise ConsistencyError(f"no separator for point {i} up to degree {reg + 1}")


def separators(points, reg: int | None = None) -> SeparatorReport:
    pts = as_pointset(points)
    if reg is None:
        reg = point_regularity(pts)
    per = {i: separator_degree(pts, i, reg) for i in range(pts.m)}
    return SeparatorReport(per, min(per.values()))


def delta_gamma(points) -> int:
    return separators(points).delta_gamma
