"""Exact coefficient fields: the rationals and a prime field.

Rationals are plain :class:`fractions.Fraction` values.  Prime-field
residues are instances of a per-prime subclass of :class:`ModP`, so the
rest of the package can use ``+ - * /`` and ``== 0`` on coefficients
without caring which field it is working over.
"""
from __future__ import annotations

from fractions import Fraction

DEFAULT_PRIME = 2**31 - 1


class ModP:
    """Residue modulo the class attribute ``p``.  Always stored reduced."""

    __slots__ = ("v",)
    p = 0

    def __init__(self, v=0):
        if isinstance(v, ModP):
            v = v.v
        elif isinstance(v, Fraction):
            if v.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {v} vanishes mod {self.p}")
            v = v.numerator * pow(v.denominator, -1, self.p)
        self.v = int(v) % self.p

    def _coerce(self, other):
        if isinstance(other, ModP):
            return other.v
        if isinstance(other, (int, Fraction)):
            return type(self)(other).v
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return type(self)(self.v + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return type(self)(self.v - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return type(self)(o - self.v)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return type(self)(self.v * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return type(self)(self.v * pow(o, -1, self.p))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return type(self)(o) / self

    def __neg__(self):
        return type(self)(-self.v)

    def __pos__(self):
        return self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.v == o

    def __hash__(self):
        return hash((self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v} (mod {self.p})"

    def __str__(self):
        return str(self.v)


class RationalField:
    """The field of rational numbers, characteristic 0."""

    name = "q"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, str)):
            return Fraction(x)
        if isinstance(x, ModP):
            raise TypeError("cannot lift a prime-field residue to a rational")
        raise TypeError(f"cannot convert {x!r} to a rational")

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


_ELEMENT_CLASSES: dict[int, type] = {}


def _element_class(p: int) -> type:
    cls = _ELEMENT_CLASSES.get(p)
    if cls is None:
        cls = type(f"GF{p}", (ModP,), {"p": p, "__slots__": ()})
        _ELEMENT_CLASSES[p] = cls
    return cls


class PrimeField:
    """Integers modulo a prime ``p``."""

    name = "fp"

    def __init__(self, p: int = DEFAULT_PRIME):
        if p < 2:
            raise ValueError("p must be a prime >= 2")
        self.characteristic = p
        self.p = p
        self.element = _element_class(p)
        self.zero = self.element(0)
        self.one = self.element(1)

    def __call__(self, x):
        if isinstance(x, str):
            x = Fraction(x)
        return self.element(x)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


def get_field(name: str, p: int = DEFAULT_PRIME):
    """Field by CLI name: ``"q"`` for the rationals, ``"fp"`` for GF(p)."""
    if name == "q":
        return QQ
    if name == "fp":
        return PrimeField(p)
    raise ValueError(f"unknown field {name!r} (expected 'q' or 'fp')")


def field_of(x):
    """Best-effort recovery of the field an element lives in."""
    if isinstance(x, ModP):
        return PrimeField(x.p)
    return QQ


def format_exact(x) -> str | int:
    """Serialize an exact scalar: ints stay ints, other rationals become 'p/q'."""
    if isinstance(x, ModP):
        return x.v
    x = Fraction(x)
    if x.denominator == 1:
        return x.numerator
    return f"{x.numerator}/{x.denominator}"
