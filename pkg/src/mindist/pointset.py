"""Projective point sets with canonical scaling, and evaluation matrices."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import hashlib
import json
import re

from .errors import DuplicatePointError, InputError, ZeroVectorError
from .field import QQ, format_exact
from .linalg import ExactMatrix


@dataclass(frozen=True)
class ProjectivePointSet:
    """``m`` labeled points of P^n.  Each point is scaled so that its first
    nonzero coordinate is 1; labels are the input positions."""

    n: int
    points: tuple
    field: object = QQ

    @property
    def m(self) -> int:
        return len(self.points)

    @property
    def nvars(self) -> int:
        return self.n + 1

    @property
    def labels(self) -> range:
        return range(len(self.points))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def subset(self, indices) -> ProjectivePointSet:
        return ProjectivePointSet(self.n, tuple(self.points[i] for i in indices), self.field)

    def without(self, i: int) -> ProjectivePointSet:
        return self.subset(j for j in range(self.m) if j != i)

    def union(self, other: ProjectivePointSet) -> ProjectivePointSet:
        if other.n != self.n:
            raise ValueError("ambient dimensions differ")
        pts = self.points + tuple(p for p in other.points if p not in set(self.points))
        return ProjectivePointSet(self.n, pts, self.field)

    def integer_coordinates(self) -> list[list[int]]:
        """Each point rescaled to a primitive integer vector (rationals only)."""
        out = []
        for p in self.points:
            den = 1
            for x in p:
                den = den * x.denominator // _gcd(den, x.denominator)
            row = [int(x * den) for x in p]
            g = 0
            for v in row:
                g = _gcd(g, abs(v))
            out.append([v // g for v in row] if g > 1 else row)
        return out

    def as_strings(self) -> list[list[str]]:
        return [[str(format_exact(x)) for x in p] for p in self.points]

    def digest(self) -> str:
        payload = json.dumps({"n": self.n, "points": self.as_strings()}, sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def canonical(vec, field=QQ) -> tuple:
    """Scale so that the first nonzero coordinate is 1."""
    v = [field(x) for x in vec]
    for x in v:
        if x != 0:
            inv = field.one / x
            return tuple(y * inv for y in v)
    raise ZeroVectorError("the zero vector is not a projective point")


def normalize(raw, n: int | None = None, field=QQ) -> ProjectivePointSet:
    """Canonically scale ``raw`` coordinate vectors, keeping input order.

    Projectively equal inputs are rejected rather than merged.
    """
    raw = [list(p) for p in raw]
    if n is None:
        if not raw:
            raise InputError("cannot infer n from an empty point list")
        n = len(raw[0]) - 1
    seen: dict = {}
    pts = []
    for idx, p in enumerate(raw):
        if len(p) != n + 1:
            raise InputError(f"point {idx} has {len(p)} coordinates, expected {n + 1}")
        if isinstance(p[0], float) or any(isinstance(x, float) for x in p):
            raise InputError("floating-point coordinates are not exact; use integers or 'p/q' strings")
        try:
            c = canonical(p, field)
        except ZeroVectorError:
            raise ZeroVectorError(f"point {idx} is the zero vector") from None
        if c in seen:
            raise DuplicatePointError(
                f"points {seen[c]} and {idx} are projectively equal; the set must be reduced"
            )
        seen[c] = idx
        pts.append(c)
    return ProjectivePointSet(n, tuple(pts), field)


def as_pointset(points, field=QQ) -> ProjectivePointSet:
    if isinstance(points, ProjectivePointSet):
        return points
    return normalize(points, None, field)


def evaluation_matrix(points: ProjectivePointSet, monomials) -> ExactMatrix:
    """Rows are points, columns are the given monomials evaluated there."""
    field = points.field
    rows = []
    for p in points.points:
        cache = [[field.one] for _ in p]
        row = []
        for mono in monomials:
            v = field.one
            for i, e in enumerate(mono):
                if e:
                    pw = cache[i]
                    while len(pw) <= e:
                        pw.append(pw[-1] * p[i])
                    v = v * pw[e]
            row.append(v)
        rows.append(row)
    return ExactMatrix._trusted(rows, len(monomials), field)


def coordinate_matrix(points: ProjectivePointSet) -> ExactMatrix:
    return ExactMatrix._trusted([list(p) for p in points.points], points.n + 1, points.field)


COORDINATE_RE = re.compile(r"^-?\d+(?:/\d+)?$")


def parse_coordinate(x, field=QQ):
    """An int, or a string ``"-12"`` / ``"3/4"``; nothing else is exact enough."""
    if isinstance(x, bool):
        raise InputError("booleans are not coordinates")
    if isinstance(x, int):
        return field(x)
    if isinstance(x, str):
        if not COORDINATE_RE.match(x):
            raise InputError(f"bad coordinate {x!r}: expected an integer or p/q string")
        try:
            v = Fraction(x)
        except ZeroDivisionError:
            raise InputError(f"bad coordinate {x!r}: zero denominator") from None
        return field(v)
    raise InputError(f"coordinate {x!r} must be an integer or a rational string")
