"""Dense exact linear algebra: RREF, rank, kernel.

Over the rationals the elimination runs on integer rows (denominators
cleared per row, content divided out after every update) and only turns
back into :class:`~fractions.Fraction` entries at the end.  Over a prime
field the generic Gauss-Jordan loop is used, or the int64 kernel when the
modulus is small enough.

``rank`` over the rationals first tries a modular certificate: the rank
mod p never exceeds the rank over Q, so a full-rank result mod p settles
the question without exact elimination.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from . import _kernels
from .field import DEFAULT_PRIME, QQ, ModP, PrimeField

CERT_PRIME = DEFAULT_PRIME


class ExactMatrix:
    """Immutable dense matrix of exact field elements."""

    __slots__ = ("_rows", "_nrows", "_ncols", "field")

    def __init__(self, rows, ncols: int | None = None, field=QQ):
        conv = [tuple(field(x) for x in row) for row in rows]
        if ncols is None:
            ncols = len(conv[0]) if conv else 0
        for row in conv:
            if len(row) != ncols:
                raise ValueError("ragged matrix rows")
        self._rows = tuple(conv)
        self._nrows = len(conv)
        self._ncols = ncols
        self.field = field

    @classmethod
    def _trusted(cls, rows, ncols, field):
        m = cls.__new__(cls)
        m._rows = tuple(tuple(r) for r in rows)
        m._nrows = len(m._rows)
        m._ncols = ncols
        m.field = field
        return m

    @classmethod
    def identity(cls, k: int, field=QQ) -> ExactMatrix:
        return cls([[1 if i == j else 0 for j in range(k)] for i in range(k)], k, field)

    @classmethod
    def zeros(cls, r: int, c: int, field=QQ) -> ExactMatrix:
        return cls([[0] * c for _ in range(r)], c, field)

    @property
    def nrows(self) -> int:
        return self._nrows

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return (self._nrows, self._ncols)

    @property
    def rows(self) -> tuple:
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def transpose(self) -> ExactMatrix:
        cols = [tuple(self._rows[i][j] for i in range(self._nrows)) for j in range(self._ncols)]
        return ExactMatrix._trusted(cols, self._nrows, self.field)

    @property
    def T(self) -> ExactMatrix:
        return self.transpose()

    def apply(self, v) -> tuple:
        """Matrix-vector product."""
        if len(v) != self._ncols:
            raise ValueError("dimension mismatch")
        zero = self.field.zero
        return tuple(sum((a * b for a, b in zip(row, v)), zero) for row in self._rows)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self._ncols != other._nrows:
            raise ValueError("dimension mismatch")
        cols = other.transpose()._rows
        zero = self.field.zero
        out = [[sum((a * b for a, b in zip(row, col)), zero) for col in cols] for row in self._rows]
        return ExactMatrix._trusted(out, other._ncols, self.field)

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.shape == other.shape
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self.shape, self._rows))

    def tolist(self) -> list[list]:
        return [list(r) for r in self._rows]

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._rows)
        return f"ExactMatrix({self._nrows}x{self._ncols}: [{body}])"


def as_matrix(M, field=QQ) -> ExactMatrix:
    if isinstance(M, ExactMatrix):
        return M
    M = [list(r) for r in M]
    return ExactMatrix(M, len(M[0]) if M else 0, field)


# ---------------------------------------------------------------------------
# rational path


def _integer_rows(rows):
    out = []
    for row in rows:
        den = 1
        for x in row:
            d = x.denominator
            if d != 1:
                den = lcm(den, d)
        out.append([int(x * den) for x in row])
    return out


def _primitive(row, start=0):
    g = 0
    for x in row[start:]:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        for j in range(start, len(row)):
            if row[j]:
                row[j] //= g
    return row


def _rref_rational(rows, ncols):
    a = _integer_rows(rows)
    nrows = len(a)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        prow = _primitive(a[r])
        pc = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = a[i]
            f = row[c]
            if not f:
                continue
            g = gcd(pc, f)
            mp, mf = pc // g, f // g
            for j in range(ncols):
                if prow[j]:
                    row[j] = row[j] * mp - prow[j] * mf
                elif mp != 1 and row[j]:
                    row[j] *= mp
            _primitive(row)
        pivots.append(c)
        r += 1
    out = []
    for i, c in enumerate(pivots):
        row = a[i]
        pc = row[c]
        out.append([Fraction(x, pc) for x in row])
    zero = Fraction(0)
    for _ in range(nrows - len(pivots)):
        out.append([zero] * ncols)
    return out, pivots


# ---------------------------------------------------------------------------
# generic path (prime fields)


def _rref_generic(rows, ncols, field):
    a = [list(r) for r in rows]
    nrows = len(a)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = field.one / a[r][c]
        a[r] = [x * inv for x in a[r]]
        prow = a[r]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], prow)]
        pivots.append(c)
        r += 1
    return a, pivots


def _kernel_prime(field) -> bool:
    return isinstance(field, PrimeField) and field.p < _kernels.MAX_KERNEL_PRIME


def rref(M) -> tuple[ExactMatrix, int, list[int]]:
    """Reduced row echelon form.

    Pivot choice: leftmost nonzero column, first nonzero row below the
    current one, pivot scaled to 1.  Returns ``(R, rank, pivots)``.
    """
    M = as_matrix(M)
    field = M.field
    if M.nrows == 0 or M.ncols == 0:
        return M, 0, []
    if field == QQ:
        rows, pivots = _rref_rational(M.rows, M.ncols)
    elif _kernel_prime(field):
        arr, pivots = _kernels.rref_mod_p([[x.v for x in r] for r in M.rows], field.p)
        el = field.element
        rows = [[el(int(x)) for x in r] for r in arr]
    else:
        rows, pivots = _rref_generic(M.rows, M.ncols, field)
    return ExactMatrix._trusted(rows, M.ncols, field), len(pivots), pivots


def rank(M) -> int:
    """Rank over the matrix's field."""
    M = as_matrix(M)
    if M.nrows == 0 or M.ncols == 0:
        return 0
    field = M.field
    if field == QQ:
        full = min(M.nrows, M.ncols)
        modrows = _reduce_rows_mod(M.rows, CERT_PRIME)
        if modrows is not None and _kernels.rank_mod_p(modrows, CERT_PRIME) == full:
            return full
        return len(_rref_rational(M.rows, M.ncols)[1])
    if _kernel_prime(field):
        return _kernels.rank_mod_p([[x.v for x in r] for r in M.rows], field.p)
    return len(_rref_generic(M.rows, M.ncols, field)[1])


def rank_exact(M) -> int:
    """Rank over Q by exact elimination only (no modular shortcut)."""
    M = as_matrix(M)
    if M.nrows == 0 or M.ncols == 0:
        return 0
    if M.field == QQ:
        return len(_rref_rational(M.rows, M.ncols)[1])
    return rank(M)


def _reduce_rows_mod(rows, p):
    out = []
    for row in rows:
        r = []
        for x in row:
            d = x.denominator
            if d % p == 0:
                return None
            r.append(x.numerator * pow(d, -1, p) % p if d != 1 else x.numerator % p)
        out.append(r)
    return out


def rank_lower_bound_mod_p(M, p: int = CERT_PRIME) -> int:
    """Rank of ``M`` mod ``p``; a lower bound for the rank over Q."""
    M = as_matrix(M)
    if M.nrows == 0 or M.ncols == 0:
        return 0
    modrows = _reduce_rows_mod(M.rows, p)
    if modrows is None:
        return 0
    return _kernels.rank_mod_p(modrows, p)


def kernel_basis(M) -> list[tuple]:
    """Canonical right-kernel basis read off the RREF.

    One vector per free column ``f``: entry 1 at ``f``, ``-R[i, f]`` at
    pivot column ``p_i``, 0 elsewhere.
    """
    M = as_matrix(M)
    field = M.field
    n = M.ncols
    if n == 0:
        return []
    if M.nrows == 0:
        return [tuple(field.one if j == f else field.zero for j in range(n)) for f in range(n)]
    R, rk, pivots = rref(M)
    pivset = set(pivots)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        v = [field.zero] * n
        v[f] = field.one
        for i, pc in enumerate(pivots):
            x = R[i, f]
            if x != 0:
                v[pc] = -x
        basis.append(tuple(v))
    return basis


def nullity(M) -> int:
    M = as_matrix(M)
    return M.ncols - rank(M)


def to_field(M, field) -> ExactMatrix:
    """Re-read the entries of ``M`` in another field (Q -> GF(p) only)."""
    M = as_matrix(M)
    if field == M.field:
        return M
    if isinstance(field, PrimeField) and M.field == QQ:
        return ExactMatrix(M.rows, M.ncols, field)
    raise TypeError(f"cannot move a matrix from {M.field!r} to {field!r}")


__all__ = [
    "ExactMatrix",
    "ModP",
    "as_matrix",
    "kernel_basis",
    "nullity",
    "rank",
    "rank_exact",
    "rank_lower_bound_mod_p",
    "rref",
    "to_field",
]
