"""Graded free resolutions: Schreyer frames, cancellation, Betti tables.

A resolution is stored as a list of graded free modules (position 0 is R)
and a list of sparse differentials.  ``differentials[k - 1]`` is the map
F_k -> F_{k-1}, kept as a list of columns; column ``c`` is a dict
``{row: Polynomial}`` holding the nonzero entries of the image of the
c-th basis element.

The Schreyer construction works with module elements as dicts keyed by
``(component, monomial)``.  On F_k the induced order compares a term
``x^a E_i`` by the image ``x^a * LT(h_i)`` in F_{k-1}; unrolled, that is
the grevlex key of ``x^a`` times the accumulated lead monomial of E_i,
followed by the chain of component indices (smaller index wins ties).
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field as dc_field
from math import comb

from .errors import ConsistencyError
from .groebner import GroebnerBasis, hilbert_function_gb
from .linalg import ExactMatrix, rank
from .poly import (
    Polynomial,
    divides,
    grevlex_key,
    mono_div,
    mono_lcm,
    mono_mul,
    monomials_in_vars,
    one,
)


@dataclass(frozen=True)
class GradedFreeModule:
    """The module ⊕ R(-shift_k)."""

    shifts: tuple

    def __len__(self):
        return len(self.shifts)

    def rank(self) -> int:
        return len(self.shifts)

    def dim(self, d: int, nvars: int) -> int:
        """Vector-space dimension of the degree-d piece."""
        return sum(comb(d - s + nvars - 1, nvars - 1) for s in self.shifts if d >= s)

    def describe(self) -> str:
        """E.g. ``R(-4)+R^2(-2)`` with larger shifts first."""
        if not self.shifts:
            return "0"
        parts = []
        for s, k in sorted(Counter(self.shifts).items(), reverse=True):
            base = "R" if k == 1 else f"R^{k}"
            parts.append(base if s == 0 else f"{base}(-{s})")
        return "+".join(parts)


class ModuleElement:
    """Element of a graded free module: ``components`` maps
    ``(basis index, monomial)`` to a nonzero coefficient."""

    __slots__ = ("components", "ambient")

    def __init__(self, components: dict, ambient: GradedFreeModule):
        for (i, _m), _c in components.items():
            if not 0 <= i < len(ambient):
                raise ValueError(f"basis index {i} outside the ambient module")
        self.components = {k: v for k, v in components.items() if v != 0}
        self.ambient = ambient

    def is_homogeneous(self) -> bool:
        degs = {self.ambient.shifts[i] + sum(m) for (i, m) in self.components}
        return len(degs) <= 1

    def degree(self) -> int | None:
        for (i, m) in self.components:
            return self.ambient.shifts[i] + sum(m)
        return None

    def column(self, nvars: int) -> dict:
        return _vector_to_column(self.components, nvars)


@dataclass
class GradedResolution:
    modules: list
    differentials: list
    nvars: int
    minimal: bool = False

    @property
    def length(self) -> int:
        return len(self.differentials)

    def shifts(self, k: int) -> tuple:
        return self.modules[k].shifts

    def entry(self, k: int, row: int, col: int) -> Polynomial:
        return self.differentials[k - 1][col].get(row, Polynomial.zero(self.nvars))

    def describe(self) -> str:
        """``0 -> F_L -> ... -> F_1 -> R`` in shift notation."""
        parts = ["0"] + [self.modules[k].describe() for k in range(self.length, 0, -1)] + ["R"]
        return " -> ".join(parts)


@dataclass
class BettiTable:
    beta: dict
    n: int
    projective_dimension: int
    regularity: int
    last_shifts: tuple
    a_min: int | None
    socle_degrees: tuple
    AN: int | None

    def total(self, i: int) -> int:
        return sum(v for (k, _j), v in self.beta.items() if k == i)

    def shifts(self, i: int) -> tuple:
        out = []
        for (k, j), v in sorted(self.beta.items()):
            if k == i:
                out.extend([j] * v)
        return tuple(out)

    def as_rows(self) -> list[list[int]]:
        return [[i, j, v] for (i, j), v in sorted(self.beta.items())]

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.beta == other.beta and self.n == other.n


# ---------------------------------------------------------------------------
# module orders


class _SchreyerOrder:
    def __init__(self, tot: list, chain: list):
        self.tot = tot
        self.chain = chain
        self._cache: dict = {}

    def key(self, term):
        k = self._cache.get(term)
        if k is None:
            comp, mono = term
            k = (grevlex_key(mono_mul(mono, self.tot[comp])), self.chain[comp])
            self._cache[term] = k
        return k

    def compare(self, a, b) -> int:
        if a == b:
            return 0
        return 1 if self.key(a) > self.key(b) else -1


def schreyer_order_compare(order: _SchreyerOrder, a, b) -> int:
    """Three-way comparison of module terms ``(component, monomial)``."""
    return order.compare(a, b)


# ---------------------------------------------------------------------------
# Schreyer frame


def _lead(vec: dict, order: _SchreyerOrder):
    return max(vec, key=order.key)


def _reduce_module(vec: dict, reducers, by_comp, order, nvars):
    """Divide ``vec`` by the level's elements.  Returns the quotient as a
    vector over the next free module; the remainder must vanish."""
    p = dict(vec)
    quot: dict = {}
    while p:
        t = max(p, key=order.key)
        comp, mono = t
        c = p[t]
        hit = None
        for idx in by_comp.get(comp, ()):
            if divides(reducers[idx][1], mono):
                hit = idx
                break
        if hit is None:
            raise ConsistencyError("S-pair of a Gröbner basis did not reduce to zero")
        _, lm, h = reducers[hit]
        q = mono_div(mono, lm)
        qt = (hit, q)
        quot[qt] = quot.get(qt, 0) + c
        for (hc, hm), hv in h.items():
            key = (hc, mono_mul(hm, q))
            v = p.get(key)
            if v is None:
                p[key] = -c * hv
            else:
                v = v - c * hv
                if v == 0:
                    del p[key]
                else:
                    p[key] = v
    return {k: v for k, v in quot.items() if v != 0}


def _minimal_quotients(cands):
    """Keep candidates ``(q, j)`` whose monomial is not divisible by another
    candidate's (first occurrence wins on equality)."""
    out = []
    for a, (q, j) in enumerate(cands):
        redundant = False
        for b, (q2, _j2) in enumerate(cands):
            if b == a:
                continue
            if divides(q2, q) and (q2 != q or b < a):
                redundant = True
                break
        if not redundant:
            out.append((q, j))
    return out


def _vector_to_column(vec: dict, nvars: int) -> dict:
    col: dict = defaultdict(dict)
    for (comp, mono), c in vec.items():
        col[comp][mono] = c
    return {r: Polynomial._from_clean(t, nvars) for r, t in col.items()}


def schreyer_resolution(G: GroebnerBasis, max_levels: int | None = None) -> GradedResolution:
    """Free resolution of R/<G> from iterated Schreyer syzygies.

    At each level the elements are sorted by (component, lex-descending
    lead monomial) so that one more variable drops out of the lead terms
    per step, and only the pairs whose quotient monomials minimally
    generate the lead module are kept.  The result is usually not minimal.
    """
    if not G.is_homogeneous():
        raise ValueError("Schreyer resolution needs a homogeneous Gröbner basis")
    nv = G.nvars
    if max_levels is None:
        max_levels = nv + 2
    modules = [GradedFreeModule((0,))]
    diffs: list = []
    order = _SchreyerOrder([one(nv)], [()])
    elems = [{(0, m): c for m, c in g.terms.items()} for g in G.generators if not g.is_zero()]
    one_c = _field_one(G)
    level = 0
    while elems:
        level += 1
        if level > max_levels:
            raise ConsistencyError("Schreyer frame did not terminate within the syzygy bound")
        prev_shifts = modules[-1].shifts
        leads = []
        normed = []
        for v in elems:
            lt = _lead(v, order)
            lc = v[lt]
            if lc != 1:
                v = {k: c / lc for k, c in v.items()}
            leads.append(lt)
            normed.append(v)
        perm = sorted(
            range(len(normed)),
            key=lambda i: (leads[i][0], tuple(-e for e in leads[i][1]), i),
        )
        leads = [leads[i] for i in perm]
        normed = [normed[i] for i in perm]
        shifts = tuple(prev_shifts[c] + sum(mu) for c, mu in leads)
        for v, s in zip(normed, shifts):
            for (c, mu) in v:
                if prev_shifts[c] + sum(mu) != s:
                    raise ValueError("Schreyer resolution needs homogeneous input")
        modules.append(GradedFreeModule(shifts))
        diffs.append([_vector_to_column(v, nv) for v in normed])

        next_order = _SchreyerOrder(
            [mono_mul(mu, order.tot[c]) for c, mu in leads],
            [order.chain[c] + (-i,) for i, (c, _mu) in enumerate(leads)],
        )
        by_comp: dict = defaultdict(list)
        for i, (c, _mu) in enumerate(leads):
            by_comp[c].append(i)
        reducers = [(c, mu, v) for (c, mu), v in zip(leads, normed)]
        syz = []
        for i, (c, mu_i) in enumerate(leads):
            cands = []
            for j in by_comp[c]:
                if j <= i:
                    continue
                cands.append((mono_div(mono_lcm(mu_i, leads[j][1]), mu_i), j))
            for q, j in _minimal_quotients(cands):
                L = mono_mul(q, mu_i)
                qj = mono_div(L, leads[j][1])
                S: dict = {}
                for (hc, hm), hv in normed[i].items():
                    S[(hc, mono_mul(hm, q))] = hv
                for (hc, hm), hv in normed[j].items():
                    key = (hc, mono_mul(hm, qj))
                    v = S.get(key, 0) - hv
                    if v == 0:
                        S.pop(key, None)
                    else:
                        S[key] = v
                quot = _reduce_module(S, reducers, by_comp, order, nv)
                vec = {(i, q): one_c, (j, qj): -one_c}
                for k, v in quot.items():
                    w = vec.get(k, 0) - v
                    if w == 0:
                        vec.pop(k, None)
                    else:
                        vec[k] = w
                syz.append(vec)
        elems = syz
        order = next_order
    return GradedResolution(modules, diffs, nv, minimal=False)


def _field_one(G: GroebnerBasis):
    for g in G.generators:
        return g.lead_coeff() / g.lead_coeff()
    from fractions import Fraction

    return Fraction(1)


# ---------------------------------------------------------------------------
# minimalization


def _is_unit(p: Polynomial) -> bool:
    if len(p.terms) != 1:
        return False
    (m,) = p.terms
    return not any(m)


def _copy_resolution(res: GradedResolution) -> GradedResolution:
    diffs = [[dict(col) for col in d] for d in res.differentials]
    return GradedResolution(list(res.modules), diffs, res.nvars, res.minimal)


def _cancel(res: GradedResolution, k: int, r: int, c: int) -> None:
    """Split off the unit entry at (row r, column c) of d_k in place."""
    d = res.differentials[k - 1]
    colc = d[c]
    u = colc[r].terms[one(res.nvars)]
    for j, col in enumerate(d):
        if j == c or r not in col:
            continue
        lam = col[r].scale(1 / u)
        for row, ent in colc.items():
            if row == r:
                continue
            new = col.get(row, Polynomial.zero(res.nvars)) - lam * ent
            if new.is_zero():
                col.pop(row, None)
            else:
                col[row] = new
        del col[r]
    # drop column c and row r of d_k
    del d[c]
    for j, col in enumerate(d):
        d[j] = {(row if row < r else row - 1): ent for row, ent in col.items() if row != r}
    # d_{k+1}: drop row c
    if k < len(res.differentials):
        up = res.differentials[k]
        for j, col in enumerate(up):
            up[j] = {(row if row < c else row - 1): ent for row, ent in col.items() if row != c}
    # d_{k-1}: drop column r
    if k >= 2:
        del res.differentials[k - 2][r]
    sk = list(res.modules[k].shifts)
    del sk[c]
    res.modules[k] = GradedFreeModule(tuple(sk))
    sk1 = list(res.modules[k - 1].shifts)
    del sk1[r]
    res.modules[k - 1] = GradedFreeModule(tuple(sk1))


def _find_unit(d) -> tuple | None:
    best = None
    for c, col in enumerate(d):
        for r, ent in col.items():
            if _is_unit(ent) and (best is None or (r, c) < best):
                best = (r, c)
    return best


def minimalize(res: GradedResolution) -> GradedResolution:
    """Cancel unit entries until the resolution is minimal.

    Positions are processed from the top down; inside one differential the
    unit with the smallest (row, column) index goes first.
    """
    out = _copy_resolution(res)
    for k in range(len(out.differentials), 0, -1):
        while True:
            hit = _find_unit(out.differentials[k - 1])
            if hit is None:
                break
            _cancel(out, k, *hit)
    while out.differentials and not out.modules[-1].shifts:
        out.differentials.pop()
        out.modules.pop()
    out.minimal = True
    return out


def is_minimal(res: GradedResolution) -> bool:
    return all(_find_unit(d) is None for d in res.differentials)


# ---------------------------------------------------------------------------
# Betti tables


def betti_table(res: GradedResolution) -> BettiTable:
    """Betti numbers and derived invariants of a minimal resolution."""
    if not res.minimal and not is_minimal(res):
        raise ValueError("betti_table needs a minimal resolution")
    beta: dict = {}
    for i, mod in enumerate(res.modules):
        for s in mod.shifts:
            beta[(i, s)] = beta.get((i, s), 0) + 1
    n = res.nvars - 1
    pd = max(i for (i, _j) in beta)
    reg = max(j - i for (i, j) in beta)
    last = tuple(sorted(res.modules[pd].shifts)) if pd > 0 else ()
    a_min = min(last) if last else None
    socle = tuple(sorted(a - n for a in last))
    AN = min(socle) if socle else None
    return BettiTable(beta, n, pd, reg, last, a_min, socle, AN)


def render_betti(table: BettiTable) -> str:
    """Betti diagram: columns are homological positions, rows are j - i.

    Layout (right-aligned columns separated by one space, zero shown as
    ``.``)::

               0 1 2
        total: 1 3 2
            0: 1 . .
            1: . 2 1
    """
    if not table.beta:
        return "total: 0\n"
    pd = max(i for (i, _j) in table.beta)
    rows = sorted({j - i for (i, j) in table.beta})
    lo, hi = min(rows), max(rows)
    cols = list(range(pd + 1))
    totals = [table.total(i) for i in cols]
    cells = {}
    for r in range(lo, hi + 1):
        cells[r] = [table.beta.get((i, i + r), 0) for i in cols]
    widths = []
    for i in cols:
        w = max(len(str(i)), len(str(totals[i])))
        for r in cells:
            v = cells[r][i]
            w = max(w, len(str(v)) if v else 1)
        widths.append(w)
    labels = ["total:"] + [f"{r}:" for r in range(lo, hi + 1)]
    lw = max(len(s) for s in labels)
    lines = [" " * lw + " " + " ".join(str(i).rjust(w) for i, w in zip(cols, widths))]
    lines.append("total:".rjust(lw) + " " + " ".join(str(t).rjust(w) for t, w in zip(totals, widths)))
    for r in range(lo, hi + 1):
        vals = [(str(v) if v else ".").rjust(w) for v, w in zip(cells[r], widths)]
        lines.append(f"{r}:".rjust(lw) + " " + " ".join(vals))
    return "\n".join(lines) + "\n"


def minimal_resolution(G: GroebnerBasis) -> GradedResolution:
    return minimalize(schreyer_resolution(G))


# ---------------------------------------------------------------------------
# verification


@dataclass
class VerificationRecord:
    checks: dict = dc_field(default_factory=dict)
    failures: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def record(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks[name] = self.checks.get(name, True) and passed
        if not passed:
            self.failures.append(f"{name}: {detail}" if detail else name)


def _apply_column(col: dict, vec_cols, nvars):
    """Image under the previous differential of a column of d_k."""
    out: dict = {}
    for r, ent in col.items():
        for row, ent2 in vec_cols[r].items():
            prod = ent * ent2
            if prod.is_zero():
                continue
            cur = out.get(row)
            s = prod if cur is None else cur + prod
            if s.is_zero():
                out.pop(row, None)
            else:
                out[row] = s
    return out


def compose_is_zero(res: GradedResolution, k: int) -> bool:
    """d_{k-1} ∘ d_k == 0 for k >= 2."""
    lower = res.differentials[k - 2]
    upper = res.differentials[k - 1]
    return all(not _apply_column(col, lower, res.nvars) for col in upper)


def graded_piece_matrix(res: GradedResolution, k: int, d: int) -> ExactMatrix:
    """Matrix of d_k : (F_k)_d -> (F_{k-1})_d on monomial bases."""
    nv = res.nvars
    src = res.modules[k].shifts
    tgt = res.modules[k - 1].shifts
    row_index: dict = {}
    for r, s in enumerate(tgt):
        if d >= s:
            for mono in monomials_in_vars(nv, d - s):
                row_index[(r, mono)] = len(row_index)
    cols = []
    one_ = None
    for c, s in enumerate(src):
        if d < s:
            continue
        colmap = res.differentials[k - 1][c]
        for mono in monomials_in_vars(nv, d - s):
            v: dict = {}
            for r, ent in colmap.items():
                for m, coef in ent.terms.items():
                    idx = row_index[(r, mono_mul(m, mono))]
                    v[idx] = v.get(idx, 0) + coef
                    one_ = coef
            cols.append(v)
    zero = (one_ - one_) if one_ is not None else 0
    rows = [[zero] * len(cols) for _ in range(len(row_index))]
    for j, v in enumerate(cols):
        for i, x in v.items():
            rows[i][j] = x
    field = _matrix_field(one_)
    return ExactMatrix._trusted(rows, len(cols), field)


def _matrix_field(sample):
    from .field import QQ, ModP, PrimeField

    if isinstance(sample, ModP):
        return PrimeField(sample.p)
    return QQ


def euler_characteristic(table: BettiTable, d: int) -> int:
    n = table.n
    total = 0
    for (i, j), v in table.beta.items():
        if d - j >= 0:
            total += (-1) ** i * v * comb(n + d - j, n)
    return total


def verify_resolution(res: GradedResolution, G: GroebnerBasis, max_degree: int | None = None) -> VerificationRecord:
    """Self-check a resolution of R/<G>.

    * consecutive differentials compose to zero;
    * the image of d_1 is generated by the ideal (degree pieces match);
    * exactness in every degree up to ``max_degree`` (default reg + 2),
      by exact rank counts;
    * Euler characteristic identity against HF(R/<G>).
    """
    rec = VerificationRecord()
    nv = res.nvars
    L = res.length
    for k in range(2, L + 1):
        rec.record("d_squared_zero", compose_is_zero(res, k), f"d_{k - 1} o d_{k} != 0")
    rec.checks.setdefault("d_squared_zero", True)

    table = None
    if res.minimal or is_minimal(res):
        table = betti_table(res)
        reg = table.regularity
    else:
        reg = max(s - k for k, mod in enumerate(res.modules) for s in mod.shifts)
    if max_degree is None:
        max_degree = reg + 2

    ranks: dict = {}

    def rk(k, d):
        if k < 1 or k > L:
            return 0
        key = (k, d)
        if key not in ranks:
            M = graded_piece_matrix(res, k, d)
            ranks[key] = rank(M) if M.nrows and M.ncols else 0
        return ranks[key]

    for d in range(max_degree + 1):
        hf = hilbert_function_gb(G, d)
        dim0 = comb(d + nv - 1, nv - 1)
        rec.record("exact", dim0 - rk(1, d) == hf, f"H_0 mismatch in degree {d}")
        for k in range(1, L + 1):
            dimk = res.modules[k].dim(d, nv)
            ok = dimk - rk(k, d) == rk(k + 1, d)
            rec.record("exact", ok, f"homology at F_{k} in degree {d}")
    rec.checks.setdefault("exact", True)

    if table is not None:
        top = max(s for mod in res.modules for s in mod.shifts) + 2
        for d in range(top + 1):
            hf = hilbert_function_gb(G, d)
            rec.record("euler", euler_characteristic(table, d) == hf, f"degree {d}")
        rec.checks.setdefault("euler", True)
    return rec
