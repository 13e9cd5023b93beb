"""Socle degrees of R/I by Artinian reduction, without free resolutions.

Cut R/I(Γ) by a linear form that vanishes at no point, present the
quotient in the remaining n variables, and read the socle off the kernels
of the multiplication-by-variable maps between consecutive graded pieces.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import InputError, ResamplingExhausted
from .groebner import GroebnerBasis, buchberger, buchberger_moeller, normal_form
from .linalg import ExactMatrix, rank
from .pointset import as_pointset
from .poly import Polynomial, divides, monomials_in_vars

COEFF_BOUND = 20
MAX_RESAMPLES = 50


class LinearFormVanishes(InputError):
    """The chosen linear form is zero at a point, so it is a zero divisor on R/I."""


@dataclass
class ArtinianAlgebra:
    ideal: GroebnerBasis
    linear_form: tuple
    eliminated: int
    graded_bases: dict
    multiplication_maps: dict
    top_degree: int

    @property
    def nvars(self) -> int:
        return self.ideal.nvars

    def dims(self) -> list[int]:
        return [len(self.graded_bases[d]) for d in range(self.top_degree + 1)]

    def total_dimension(self) -> int:
        return sum(self.dims())


def _eliminated_variable(form) -> int:
    # largest |coefficient|, first index on ties
    best = 0
    for i, c in enumerate(form):
        if abs(_magnitude(c)) > abs(_magnitude(form[best])):
            best = i
    return best


def _magnitude(c):
    return c.v if hasattr(c, "v") else c


def artinian_reduce(G: GroebnerBasis, form, points=None) -> ArtinianAlgebra:
    """The algebra R/(I + <form>) in the n variables other than the one
    eliminated (the variable with the largest coefficient in ``form``).

    When ``points`` are given, the form is checked to vanish at none of
    them first.
    """
    nv = G.nvars
    if len(form) != nv:
        raise ValueError("linear form has the wrong number of coefficients")
    field = G.generators[0].field() if G.generators else None
    form = tuple(field(c) if field is not None else c for c in form)
    if points is not None:
        pts = as_pointset(points)
        for idx, p in enumerate(pts.points):
            if sum((c * x for c, x in zip(form, p)), field.zero) == 0:
                raise LinearFormVanishes(f"linear form vanishes at point {idx}")
    k = _eliminated_variable(form)
    if form[k] == 0:
        raise ValueError("zero linear form")
    keep = [i for i in range(nv) if i != k]
    nn = len(keep)
    images = []
    for i in range(nv):
        if i == k:
            terms = {}
            for pos, j in enumerate(keep):
                if form[j] != 0:
                    e = [0] * nn
                    e[pos] = 1
                    terms[tuple(e)] = -form[j] / form[k]
            images.append(Polynomial(terms, nn))
        else:
            images.append(Polynomial.variable(keep.index(i), nn, field))
    reduced = [g.substitute(images) for g in G.generators]
    reduced = [g for g in reduced if not g.is_zero()]
    if not reduced:
        raise ValueError("reduction killed the ideal; the input is not a point ideal")
    A = buchberger(reduced)
    leads = A.leads
    bases: dict = {}
    d = 0
    while True:
        std = [m for m in monomials_in_vars(nn, d) if not any(divides(lm, m) for lm in leads)]
        if not std:
            break
        bases[d] = std
        d += 1
        if d > 10_000:  # pragma: no cover
            raise RuntimeError("Artinian reduction is not Artinian")
    top = d - 1
    mult: dict = {}
    for deg in range(top + 1):
        src = bases[deg]
        tgt = bases.get(deg + 1, [])
        index = {m: i for i, m in enumerate(tgt)}
        for v in range(nn):
            x = Polynomial.variable(v, nn, field)
            rows = [[field.zero] * len(src) for _ in range(len(tgt))]
            for j, mono in enumerate(src):
                nf = normal_form(Polynomial.monomial(mono, 1, field) * x, A)
                for m, c in nf.terms.items():
                    rows[index[m]][j] = c
            mult[(v, deg)] = ExactMatrix._trusted(rows, len(src), field)
    return ArtinianAlgebra(A, form, k, bases, mult, top)


def socle_degrees(A: ArtinianAlgebra) -> tuple:
    """Multiset (sorted tuple) of socle degrees.

    In degree i the socle is the common kernel of all multiplication maps
    A_i -> A_{i+1}; its dimension is the multiplicity of i.
    """
    out = []
    nn = A.nvars
    for deg in range(A.top_degree + 1):
        ncols = len(A.graded_bases[deg])
        if deg == A.top_degree:
            dim = ncols
        else:
            stacked = []
            for v in range(nn):
                stacked.extend(A.multiplication_maps[(v, deg)].rows)
            field = A.multiplication_maps[(0, deg)].field if nn else None
            dim = ncols - (rank(ExactMatrix._trusted(stacked, ncols, field)) if stacked else 0)
        out.extend([deg] * dim)
    return tuple(out)


def sample_linear_form(points, rng: np.random.Generator, bound: int = COEFF_BOUND,
                       attempts: int = MAX_RESAMPLES) -> tuple:
    """Integer linear form with coefficients in [-bound, bound] vanishing at
    no point; resampled up to ``attempts`` times."""
    pts = as_pointset(points)
    field = pts.field
    for _ in range(attempts):
        coeffs = [int(c) for c in rng.integers(-bound, bound + 1, size=pts.n + 1)]
        form = tuple(field(c) for c in coeffs)
        if all(sum((c * x for c, x in zip(form, p)), field.zero) != 0 for p in pts.points):
            return tuple(coeffs)
    raise ResamplingExhausted(
        f"no linear form avoiding all points after {attempts} samples"
    )


@dataclass
class SocleOracleResult:
    AN: int
    socle: tuple
    linear_form: tuple
    graded_dims: list

    def multiset(self) -> dict:
        return dict(Counter(self.socle))


def min_socle_degree_oracle(points, seed: int = 0, G: GroebnerBasis | None = None) -> SocleOracleResult:
    """Minimum socle degree of R/I(points) via Buchberger-Möller and an
    Artinian reduction by a seeded random linear form."""
    pts = as_pointset(points)
    if G is None:
        G = buchberger_moeller(pts)
    rng = np.random.default_rng(seed)
    form = sample_linear_form(pts, rng)
    A = artinian_reduce(G, form, pts)
    soc = socle_degrees(A)
    if A.total_dimension() != pts.m:
        raise AssertionError("Artinian reduction has the wrong length")
    return SocleOracleResult(min(soc), soc, form, A.dims())
