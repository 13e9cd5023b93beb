"""Gröbner bases under grevlex, vanishing ideals of points, Hilbert functions."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb

from .errors import DegreeCapExceeded
from .linalg import rank, rref
from .pointset import ProjectivePointSet, as_pointset, evaluation_matrix
from .poly import (
    GREVLEX,
    Polynomial,
    divides,
    grevlex_key,
    mono_div,
    mono_lcm,
    mono_mul,
    monomials_in_vars,
    monomials_of_degree,
)

DEFAULT_DEGREE_CEILING = 30


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Gröbner basis: monic generators sorted by ascending lead monomial."""

    generators: tuple
    nvars: int
    order: str = GREVLEX

    @property
    def leads(self) -> list[tuple]:
        return [g.lead() for g in self.generators]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def degrees(self) -> list[int]:
        return [g.degree() for g in self.generators]

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()


@dataclass
class HilbertFunctionTable:
    values: dict = dc_field(default_factory=dict)
    stabilized_at: int | None = None

    def __getitem__(self, d):
        return self.values[d]


def _check_order(order):
    if order != GREVLEX:
        raise ValueError(f"unsupported monomial order {order!r}; only grevlex is implemented")


# ---------------------------------------------------------------------------
# division


def _reduce_terms(terms: dict, reducers, full=True):
    """Divide the polynomial ``terms`` by ``reducers`` (list of (lead, lead
    coefficient, polynomial)).  Returns the remainder as a term dict."""
    p = dict(terms)
    rem: dict = {}
    while p:
        m = max(p, key=grevlex_key)
        c = p[m]
        for lm, lc, g in reducers:
            if divides(lm, m):
                q = mono_div(m, lm)
                f = c / lc
                for gm, gc in g.terms.items():
                    t = mono_mul(gm, q)
                    v = p.get(t)
                    if v is None:
                        p[t] = -f * gc
                    else:
                        v = v - f * gc
                        if v == 0:
                            del p[t]
                        else:
                            p[t] = v
                break
        else:
            if not full:
                rem.update(p)
                return rem
            rem[m] = c
            del p[m]
    return rem


def normal_form(f: Polynomial, G) -> Polynomial:
    """Remainder of ``f`` on full division by ``G`` (a basis or a list)."""
    gens = G.generators if isinstance(G, GroebnerBasis) else list(G)
    reducers = [(g.lead(), g.lead_coeff(), g) for g in gens if not g.is_zero()]
    return Polynomial._from_clean(_reduce_terms(f.terms, reducers), f.nvars)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    L = mono_lcm(f.lead(), g.lead())
    a = f.mul_term(mono_div(L, f.lead()), 1 / f.lead_coeff())
    b = g.mul_term(mono_div(L, g.lead()), 1 / g.lead_coeff())
    return a - b


# ---------------------------------------------------------------------------
# Buchberger


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _update(G: list[int], B: list, h: int, lead):
    """Gebauer-Möller pair update after adding basis element ``h``."""
    lh = lead[h]
    C = [(h, g) for g in G]
    D = []
    while C:
        pair = C.pop(0)
        g1 = pair[1]
        L1 = mono_lcm(lh, lead[g1])
        if _coprime(lh, lead[g1]):
            D.append(pair)
            continue
        dominated = False
        for _, g2 in C + D:
            if divides(mono_lcm(lh, lead[g2]), L1):
                dominated = True
                break
        if not dominated:
            D.append(pair)
    E = [(a, b) for a, b in D if not _coprime(lead[a], lead[b])]
    B_new = []
    for g1, g2 in B:
        L = mono_lcm(lead[g1], lead[g2])
        if (
            divides(lh, L)
            and mono_lcm(lead[g1], lh) != L
            and mono_lcm(lh, lead[g2]) != L
        ):
            continue
        B_new.append((g1, g2))
    B_new.extend(E)
    G_new = [g for g in G if not divides(lh, lead[g])]
    G_new.append(h)
    return G_new, B_new


def _interreduce(polys: list[Polynomial], nvars: int) -> tuple:
    polys = [p.monic() for p in polys if not p.is_zero()]
    polys.sort(key=lambda p: grevlex_key(p.lead()))
    minimal = []
    for p in polys:
        if not any(divides(q.lead(), p.lead()) for q in minimal):
            minimal.append(p)
    out = []
    for i, p in enumerate(minimal):
        others = [(q.lead(), q.lead_coeff(), q) for j, q in enumerate(minimal) if j != i]
        lm = p.lead()
        tail = {m: c for m, c in p.terms.items() if m != lm}
        red = _reduce_terms(tail, others)
        red[lm] = p.terms[lm]
        out.append(Polynomial._from_clean(red, nvars).monic())
    out.sort(key=lambda p: grevlex_key(p.lead()))
    return tuple(out)


def buchberger(gens, order=GREVLEX) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Pairs are pruned with the Gebauer-Möller criteria and processed by the
    normal strategy (smallest lcm first, ties by pair index).
    """
    _check_order(order)
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    nvars = gens[0].nvars
    basis: list[Polynomial] = []
    lead: list[tuple] = []
    G: list[int] = []
    B: list = []

    def add(p):
        nonlocal G, B
        p = p.monic()
        basis.append(p)
        lead.append(p.lead())
        G, B = _update(G, B, len(basis) - 1, lead)

    for g in sorted(gens, key=lambda p: grevlex_key(p.lead())):
        red = normal_form(g, [basis[i] for i in G])
        if not red.is_zero():
            add(red)
    while B:
        B.sort(key=lambda pr: (grevlex_key(mono_lcm(lead[pr[0]], lead[pr[1]])), pr))
        i, j = B.pop(0)
        s = s_polynomial(basis[i], basis[j])
        red = normal_form(s, [basis[k] for k in G])
        if not red.is_zero():
            add(red)
    return GroebnerBasis(_interreduce([basis[i] for i in G], nvars), nvars, order)


def is_groebner(gens) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    gens = list(gens.generators if isinstance(gens, GroebnerBasis) else gens)
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if _coprime(gens[i].lead(), gens[j].lead()):
                continue
            if not normal_form(s_polynomial(gens[i], gens[j]), gens).is_zero():
                return False
    return True


def is_reduced(G: GroebnerBasis) -> bool:
    leads = G.leads
    for k, g in enumerate(G.generators):
        if g.lead_coeff() != 1:
            return False
        for m in g.terms:
            for j, lm in enumerate(leads):
                if j != k and divides(lm, m):
                    return False
    return True


# ---------------------------------------------------------------------------
# Buchberger-Möller, degree by degree


def buchberger_moeller(points, order=GREVLEX, max_degree: int = DEFAULT_DEGREE_CEILING) -> GroebnerBasis:
    """Reduced Gröbner basis of the homogeneous vanishing ideal of ``points``.

    For each degree d the evaluation matrix of all degree-d monomials
    (columns in ascending order) is row reduced; its free columns are the
    leading monomials of I_d and the canonical kernel vectors are already
    reduced polynomials.  Those whose leads are not divisible by earlier
    leads join the basis.  The loop runs two degrees past Hilbert function
    stabilization and then until the S-pair criterion holds.
    """
    _check_order(order)
    pts = as_pointset(points)
    nvars = pts.n + 1
    field = pts.field
    m = pts.m
    gens: list[Polynomial] = []
    leads: list[tuple] = []
    stab = None
    d = 0
    while True:
        if d > max_degree:
            raise DegreeCapExceeded(
                f"vanishing ideal not certified by degree {max_degree}; raise --max-degree"
            )
        monos = monomials_of_degree(pts.n, d)
        asc = monos[::-1]
        E = evaluation_matrix(pts, asc)
        R, rk, pivots = rref(E)
        if rk == m and stab is None:
            stab = d
        pivset = set(pivots)
        for f, mono in enumerate(asc):
            if f in pivset:
                continue
            if any(divides(lm, mono) for lm in leads):
                continue
            terms = {mono: field.one}
            for i, pc in enumerate(pivots):
                x = R[i, f]
                if x != 0:
                    terms[asc[pc]] = -x
            gens.append(Polynomial._from_clean(terms, nvars))
            leads.append(mono)
        if stab is not None and d >= stab + 2 and is_groebner(gens):
            break
        d += 1
    gens.sort(key=lambda p: grevlex_key(p.lead()))
    return GroebnerBasis(tuple(gens), nvars, order)


# ---------------------------------------------------------------------------
# Hilbert functions


def hilbert_function_gb(G: GroebnerBasis, d: int) -> int:
    """Number of degree-d monomials outside the lead ideal of ``G``."""
    if d < 0:
        return 0
    leads = G.leads
    return sum(1 for mono in monomials_in_vars(G.nvars, d) if not any(divides(lm, mono) for lm in leads))


def hilbert_function_eval(points, d: int) -> int:
    """Rank of the evaluation matrix of degree-d monomials at ``points``."""
    pts = as_pointset(points)
    if d < 0:
        return 0
    if pts.m == 0:
        return 0
    return rank(evaluation_matrix(pts, monomials_of_degree(pts.n, d)))


def hilbert_table_eval(points, upto: int | None = None, max_degree: int = DEFAULT_DEGREE_CEILING) -> HilbertFunctionTable:
    """Hilbert function by evaluation ranks, through ``upto`` (default:
    stabilization + 2)."""
    pts = as_pointset(points)
    table = HilbertFunctionTable()
    d = 0
    while True:
        if d > max_degree:
            raise DegreeCapExceeded(f"Hilbert function did not stabilize by degree {max_degree}")
        v = hilbert_function_eval(pts, d)
        table.values[d] = v
        if v == pts.m and table.stabilized_at is None:
            table.stabilized_at = d
        if upto is not None:
            if d >= upto and table.stabilized_at is not None:
                break
        elif table.stabilized_at is not None and d >= table.stabilized_at + 2:
            break
        d += 1
    return table


def hilbert_table_gb(G: GroebnerBasis, upto: int, target: int | None = None) -> HilbertFunctionTable:
    table = HilbertFunctionTable()
    for d in range(upto + 1):
        v = hilbert_function_gb(G, d)
        table.values[d] = v
        if target is not None and v == target and table.stabilized_at is None:
            table.stabilized_at = d
    return table


def point_regularity(points, max_degree: int = DEFAULT_DEGREE_CEILING) -> int:
    """Smallest d with HF(R/I, d) = |points|; the regularity of R/I for points."""
    pts = as_pointset(points)
    for d in range(max_degree + 1):
        if hilbert_function_eval(pts, d) == pts.m:
            return d
    raise DegreeCapExceeded(f"Hilbert function did not stabilize by degree {max_degree}")


def ideal_degree_piece_dim(points, d: int) -> int:
    """dim I(points)_d = (number of degree-d monomials) - HF(d)."""
    pts = as_pointset(points)
    return comb(pts.n + d, d) - hilbert_function_eval(pts, d)
