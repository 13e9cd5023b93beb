"""Sparse multivariate polynomials in x0..xn under graded reverse lex.

Monomials are plain exponent tuples; their degree is ``sum(m)``.  The
order is grevlex with ``x0 > x1 > ... > xn``: higher degree wins, and
among equal degrees the monomial with the *smaller* exponent in the last
variable where they differ is larger.

Text form (used in reports and accepted by :func:`parse_polynomial`)::

    poly   := term (("+" | "-") term)*  |  "0"
    term   := [coeff "*"] factor ("*" factor)*  |  coeff
    coeff  := integer | integer "/" integer
    factor := "x" index ["^" exponent]

Terms are written in descending order, a unit coefficient is omitted and
``-1`` is written as a bare minus, e.g. ``x0^2*x1 - 3/2*x2^3``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from .field import QQ, ModP

GREVLEX = "grevlex"


def grevlex_key(m: tuple) -> tuple:
    """Sort key: ``grevlex_key(a) > grevlex_key(b)`` iff ``a > b``."""
    return (sum(m), tuple(-e for e in reversed(m)))


def compare(a: tuple, b: tuple, order=GREVLEX) -> int:
    """Three-way comparison of monomials: -1 (a < b), 0, or 1 (a > b).

    ``order`` is ``"grevlex"`` or any callable mapping a monomial to a sort
    key (the module orders in :mod:`mindist.resolution` pass their own).
    """
    if len(a) != len(b):
        raise ValueError(f"variable count mismatch: {len(a)} vs {len(b)}")
    if a == b:
        return 0
    key = grevlex_key if order == GREVLEX else order
    return 1 if key(a) > key(b) else -1


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: tuple, b: tuple) -> tuple:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def divides(b: tuple, a: tuple) -> bool:
    """True when monomial ``b`` divides ``a``."""
    for x, y in zip(b, a):
        if x > y:
            return False
    return True


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def one(nvars: int) -> tuple:
    return (0,) * nvars


def monomials_of_degree(n: int, a: int) -> list[tuple]:
    """All degree-``a`` monomials in ``n + 1`` variables, descending grevlex."""
    if a < 0:
        raise ValueError("degree must be non-negative")
    nv = n + 1
    out = []
    for combo in combinations_with_replacement(range(nv), a):
        e = [0] * nv
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=grevlex_key, reverse=True)
    assert len(out) == comb(n + a, a)
    return out


def monomials_in_vars(nvars: int, a: int) -> list[tuple]:
    return monomials_of_degree(nvars - 1, a)


class Polynomial:
    """Sparse polynomial: ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("terms", "nvars", "_lead")

    def __init__(self, terms=None, nvars: int = 0):
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}
        self.nvars = nvars
        self._lead = None
        for m in self.terms:
            if len(m) != nvars:
                raise ValueError("monomial length does not match variable count")

    @classmethod
    def _from_clean(cls, terms: dict, nvars: int) -> Polynomial:
        p = cls.__new__(cls)
        p.terms = terms
        p.nvars = nvars
        p._lead = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls._from_clean({}, nvars)

    @classmethod
    def constant(cls, c, nvars: int, field=QQ) -> Polynomial:
        c = field(c)
        return cls._from_clean({one(nvars): c} if c != 0 else {}, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int, field=QQ) -> Polynomial:
        e = [0] * nvars
        e[i] = 1
        return cls._from_clean({tuple(e): field.one}, nvars)

    @classmethod
    def monomial(cls, m: tuple, c=1, field=QQ) -> Polynomial:
        return cls({tuple(m): field(c)}, len(m))

    # -- basic queries --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def lead(self) -> tuple:
        """Leading monomial under grevlex."""
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            self._lead = max(self.terms, key=grevlex_key)
        return self._lead

    def lead_coeff(self):
        return self.terms[self.lead()]

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def sorted_terms(self) -> list[tuple]:
        """(monomial, coeff) pairs in descending grevlex order."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def field(self):
        for c in self.terms.values():
            if isinstance(c, ModP):
                from .field import PrimeField

                return PrimeField(c.p)
            break
        return QQ

    # -- arithmetic -----------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m)
            if v is None:
                t[m] = c
            else:
                v = v + c
                if v == 0:
                    del t[m]
                else:
                    t[m] = v
        return Polynomial._from_clean(t, self.nvars)

    def __neg__(self) -> Polynomial:
        return Polynomial._from_clean({m: -c for m, c in self.terms.items()}, self.nvars)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def scale(self, c) -> Polynomial:
        if c == 0:
            return Polynomial.zero(self.nvars)
        return Polynomial._from_clean({m: v * c for m, v in self.terms.items()}, self.nvars)

    def mul_term(self, mono: tuple, c) -> Polynomial:
        """Multiply by the term ``c * mono``."""
        if c == 0:
            return Polynomial.zero(self.nvars)
        return Polynomial._from_clean(
            {mono_mul(m, mono): v * c for m, v in self.terms.items()}, self.nvars
        )

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                v = t.get(m)
                t[m] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial._from_clean({m: c for m, c in t.items() if c != 0}, self.nvars)

    def __rmul__(self, c) -> Polynomial:
        return self.scale(c)

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial._from_clean({one(self.nvars): self._one()}, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def _one(self):
        for c in self.terms.values():
            return c / c
        return Fraction(1)

    def monic(self) -> Polynomial:
        if not self.terms:
            return self
        return self.scale(1 / self.lead_coeff())

    def evaluate(self, point) -> object:
        """Exact value at a coordinate vector."""
        if len(point) != self.nvars:
            raise ValueError("coordinate count does not match variable count")
        total = 0
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * x**e
            total = total + v
        return total

    def substitute(self, images: list[Polynomial]) -> Polynomial:
        """Ring map sending variable i to ``images[i]``."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target = images[0].nvars if images else 0
        out = Polynomial.zero(target)
        powers: dict = {}
        for m, c in self.terms.items():
            term = None
            for i, e in enumerate(m):
                if not e:
                    continue
                key = (i, e)
                pw = powers.get(key)
                if pw is None:
                    pw = images[i] ** e
                    powers[key] = pw
                term = pw if term is None else term * pw
            if term is None:
                term = Polynomial._from_clean({one(target): c / c}, target)
            out = out + term.scale(c)
        return out

    # -- comparison and display -----------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, nvars={self.nvars})"


def require_homogeneous(f: Polynomial) -> Polynomial:
    if not f.is_homogeneous():
        raise ValueError(f"polynomial is not homogeneous: {f}")
    return f


# ---------------------------------------------------------------------------
# text form


def _format_monomial(m: tuple) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def _format_coeff(c) -> str:
    if isinstance(c, ModP):
        return str(c.v)
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_polynomial(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    out = []
    for k, (m, c) in enumerate(f.sorted_terms()):
        if isinstance(c, ModP):
            neg, mag = False, c
        else:
            neg, mag = c < 0, abs(c)
        mono = _format_monomial(m)
        if not mono:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")
_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")
_COEFF_RE = re.compile(r"^\d+(?:/\d+)?$")


def parse_polynomial(text: str, nvars: int, field=QQ) -> Polynomial:
    """Inverse of :func:`format_polynomial`."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    terms: dict = {}
    pos = 0
    first = True
    while pos < len(text):
        mt = _TERM_RE.match(text, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"cannot parse polynomial near position {pos}: {text!r}")
        sign, body = mt.group(1), mt.group(2).strip()
        if sign is None and not first:
            raise ValueError(f"missing operator near position {pos}: {text!r}")
        first = False
        pos = mt.end()
        coeff = Fraction(1)
        exps = [0] * nvars
        for k, factor in enumerate(body.split("*")):
            factor = factor.strip()
            if k == 0 and _COEFF_RE.match(factor):
                coeff = Fraction(factor)
                continue
            mf = _FACTOR_RE.match(factor)
            if not mf:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            i = int(mf.group(1))
            if i >= nvars:
                raise ValueError(f"variable x{i} out of range for {nvars} variables")
            exps[i] += int(mf.group(2) or 1)
        if sign == "-":
            coeff = -coeff
        m = tuple(exps)
        v = terms.get(m, field.zero) + field(coeff)
        terms[m] = v
    return Polynomial(terms, nvars)
