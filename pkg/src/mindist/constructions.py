"""Example families: generic point sets, the hyperplane-plus-line family
Γ1 ∪ Γ2, the stored fixtures, and the s-versus-β prediction.

Randomness comes from numpy's PCG64 (``numpy.random.default_rng``);
batches derive independent child streams with ``SeedSequence.spawn``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from importlib import resources
from itertools import combinations
from math import comb

import numpy as np

from .errors import InputError, ResamplingExhausted
from .field import QQ
from .groebner import hilbert_function_eval
from .io import parse_point_text
from .linalg import ExactMatrix, rank
from .pointset import ProjectivePointSet, normalize
from .points import hyp

MAX_ATTEMPTS = 100
DEFAULT_BOUND = 10
U_RANGE = (1, 100)

D_GT_AN = "D_GT_AN"
D_EQ_AN = "D_EQ_AN"
AN_IN_BETA_OR_BETA_MINUS_1 = "AN_IN_BETA_OR_BETA_MINUS_1"
GRAY_ZONE = "GRAY_ZONE"


def compute_s(alpha: int, n: int) -> int:
    """Smallest s with alpha < C(s + n - 1, n - 1)."""
    if alpha < 1 or n < 2:
        raise ValueError("need alpha >= 1 and n >= 2")
    s = 0
    while alpha >= comb(s + n - 1, n - 1):
        s += 1
    return s


@dataclass(frozen=True)
class MiglioreParams:
    n: int
    alpha: int
    beta: int
    seed: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise InputError("n must be at least 2")
        if self.beta < 1:
            raise InputError("beta must be at least 1")
        if self.alpha < self.beta + self.n - 2:
            raise InputError(
                f"need alpha >= beta + n - 2 (got alpha={self.alpha}, beta={self.beta}, n={self.n})"
            )
        if self.alpha < self.n:
            raise InputError("alpha must be at least n so the hyperplane points span it")
        if self.beta > U_RANGE[1] - U_RANGE[0] + 1:
            raise InputError("beta exceeds the number of available line parameters")

    @property
    def s(self) -> int:
        return compute_s(self.alpha, self.n)

    @property
    def predicted(self) -> str:
        return classify(self)


def classify(p: MiglioreParams) -> str:
    """Prediction from s and β.  Only the two-value set {β-1, β} is
    claimed in the middle band, and s = β - 1 gets no prediction."""
    s, b = p.s, p.beta
    if s <= b - 2:
        return D_GT_AN
    if s >= b + 2:
        return D_EQ_AN
    if s in (b, b + 1):
        return AN_IN_BETA_OR_BETA_MINUS_1
    return GRAY_ZONE


@dataclass
class GenericityCertificate:
    hilbert_values: list
    expected: list
    attempts: int
    general_position: bool = False

    @property
    def valid(self) -> bool:
        return self.hilbert_values == self.expected


def expected_generic_hf(dim: int, count: int) -> list[int]:
    """min(C(i + dim, dim), count) for i up to the first degree reaching count."""
    out = []
    i = 0
    while True:
        v = min(comb(i + dim, dim), count)
        out.append(v)
        if v == count:
            return out
        i += 1


def _sample_points(rng, dim, count, bound, max_draws=None):
    pts = []
    seen = set()
    draws = 0
    max_draws = max_draws or 1000 * count
    while len(pts) < count:
        draws += 1
        if draws > max_draws:
            raise ResamplingExhausted(
                f"could not draw {count} distinct points of P^{dim} with coordinates in [-{bound}, {bound}]"
            )
        v = [int(x) for x in rng.integers(-bound, bound + 1, size=dim + 1)]
        if not any(v):
            continue
        try:
            key = normalize([v], dim).points[0]
        except InputError:  # pragma: no cover
            continue
        if key in seen:
            continue
        seen.add(key)
        pts.append(v)
    return pts


def _in_general_position(pts: ProjectivePointSet) -> bool:
    k = min(pts.m, pts.n + 1)
    for combo in combinations(range(pts.m), k):
        M = ExactMatrix._trusted([pts.points[i] for i in combo], pts.n + 1, pts.field)
        if rank(M) < k:
            return False
    return True


def generic_points(dim: int, count: int, seed=0, bound: int = DEFAULT_BOUND,
                   general_position: bool = False, max_attempts: int = MAX_ATTEMPTS):
    """``count`` integer points of P^dim whose Hilbert function is the
    largest possible, min(C(i + dim, dim), count).

    With ``general_position`` every dim+1 of them must also be independent.
    Returns ``(points, certificate)``; the raw (unscaled) coordinates are
    what get normalized.
    """
    if count < dim + 1:
        raise InputError("need at least dim + 1 points")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    expected = expected_generic_hf(dim, count)
    for attempt in range(1, max_attempts + 1):
        raw = _sample_points(rng, dim, count, bound)
        pts = normalize(raw, dim)
        hf = [hilbert_function_eval(pts, i) for i in range(len(expected))]
        if hf != expected:
            continue
        if general_position and not _in_general_position(pts):
            continue
        return pts, GenericityCertificate(hf, expected, attempt, general_position)
    raise ResamplingExhausted(
        f"no generic set of {count} points in P^{dim} with coordinates in [-{bound}, {bound}] "
        f"after {max_attempts} attempts; try a larger bound"
    )


@dataclass
class MiglioreConfig:
    params: MiglioreParams
    points: ProjectivePointSet
    hyperplane_part: list
    line_part: list
    certificate: GenericityCertificate
    attempts: int = 1
    u: list = dc_field(default_factory=list)


def migliore_config(p: MiglioreParams, bound: int = DEFAULT_BOUND,
                    max_attempts: int = MAX_ATTEMPTS, rng=None) -> MiglioreConfig:
    """Γ1: α generic points of the hyperplane x0 = 0.  Γ2: β points
    [1, u_i, 1, ..., 1] with distinct u_i in [1, 100].  Resampled until
    the hyperplane x0 = 0 is a maximal one, i.e. hyp(Γ) = α."""
    if rng is None:
        rng = np.random.default_rng(p.seed)
    lo, hi = U_RANGE
    for attempt in range(1, max_attempts + 1):
        base, cert = generic_points(p.n - 1, p.alpha, rng, bound)
        gamma1 = [[0] + [x for x in pt] for pt in base.points]
        u = sorted(int(x) + lo for x in rng.choice(hi - lo + 1, size=p.beta, replace=False))
        gamma2 = [[1, ui] + [1] * (p.n - 1) for ui in u]
        pts = normalize(gamma1 + gamma2, p.n)
        if hyp(pts)[0] == p.alpha:
            return MiglioreConfig(p, pts, gamma1, gamma2, cert, attempt, u)
    raise ResamplingExhausted(f"hyp(Γ) = α not reached after {max_attempts} attempts")


def is_collinear(points) -> bool:
    pts = points if isinstance(points, ProjectivePointSet) else normalize(points)
    M = ExactMatrix._trusted(list(pts.points), pts.n + 1, pts.field)
    return rank(M) <= 2


def spawn_seeds(seed: int, count: int) -> list[np.random.Generator]:
    """Independent generators for a batch, derived from one seed."""
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(count)]


# ---------------------------------------------------------------------------
# stored fixtures

FIXTURES = {
    "five_points_four_collinear": "five_points_four_collinear.json",
    "p3_six_plane_three_line": "p3_six_plane_three_line.json",
    "p3_five_plane_three_line": "p3_five_plane_three_line.json",
    "p3_six_plane_two_line": "p3_six_plane_two_line.json",
    "simplex_plus_one_p2": "simplex_plus_one_p2.json",
    "simplex_plus_one_p3": "simplex_plus_one_p3.json",
    "simplex_plus_one_p4": "simplex_plus_one_p4.json",
    "p2_6_points_no_conic": "p2_6_points_no_conic.json",
    "p2_7_points_no_conic": "p2_7_points_no_conic.json",
    "p2_8_points_no_conic": "p2_8_points_no_conic.json",
    "p2_8_points_four_on_a_line": "p2_8_points_four_on_a_line.json",
}

PLANE_SIX = [[0, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1], [0, 1, 1, 1], [0, 2, 1, 2], [0, -1, -2, 1]]
LINE_THREE = [[1, 7, 5, 0], [1, 3, 4, 0], [2, 10, 9, 0]]


def fixture_text(name: str) -> str:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}")
    return resources.files("mindist.data").joinpath(FIXTURES[name]).read_text(encoding="utf-8")


def load_fixture(name: str, field=QQ) -> ProjectivePointSet:
    return parse_point_text(fixture_text(name), field)


def plane_and_line_fixture() -> MiglioreConfig:
    """The explicit 6 + 3 configuration in P^3 (not sampled)."""
    p = MiglioreParams(3, 6, 3, 0)
    pts = normalize(PLANE_SIX + LINE_THREE, 3)
    base = normalize([q[1:] for q in PLANE_SIX], 2)
    expected = expected_generic_hf(2, 6)
    hf = [hilbert_function_eval(base, i) for i in range(len(expected))]
    return MiglioreConfig(p, pts, PLANE_SIX, LINE_THREE, GenericityCertificate(hf, expected, 0), 0, [])
