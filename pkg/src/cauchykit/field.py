"""Exact scalar fields: the rationals (backed by gmpy2.mpq) and prime fields GF(p).

Every number in the package is an element of one of these fields.  A field
object knows how to coerce, parse and format its elements and exposes the few
structural facts the rest of the code needs (characteristic, a total order for
sorting).  Elements themselves are plain immutable values with the usual
arithmetic operators.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Iterable

import gmpy2
from gmpy2 import mpq, mpz

__all__ = [
    "DivisionByZero",
    "FieldMismatch",
    "Field",
    "Rationals",
    "PrimeField",
    "ModP",
    "QQ",
    "GF",
    "add",
    "sub",
    "mul",
    "inv",
    "field_of",
    "parse_field",
]


class DivisionByZero(ZeroDivisionError):
    """Raised when inverting the zero element of a field."""


class FieldMismatch(TypeError):
    """Raised when an operation mixes elements of different fields."""


def _is_prime(p: int) -> bool:
    return p >= 2 and gmpy2.is_prime(p, 50)


@total_ordering
class ModP:
    """Residue class modulo a prime.  Immutable; the residue is kept in [0, p)."""

    __slots__ = ("residue", "modulus")

    def __init__(self, residue: int, modulus: int):
        object.__setattr__(self, "modulus", int(modulus))
        object.__setattr__(self, "residue", int(residue) % self.modulus)

    def __setattr__(self, name, value):
        raise AttributeError("ModP is immutable")

    def _coerce(self, other) -> int:
        if isinstance(other, ModP):
            if other.modulus != self.modulus:
                raise FieldMismatch(
                    f"modulus mismatch: GF({self.modulus}) vs GF({other.modulus})"
                )
            return other.residue
        if isinstance(other, (int, mpz)) and not isinstance(other, bool):
            return int(other)
        raise FieldMismatch(f"cannot combine GF({self.modulus}) element with {type(other).__name__}")

    def __add__(self, other):
        return ModP(self.residue + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return ModP(self.residue - self._coerce(other), self.modulus)

    def __rsub__(self, other):
        return ModP(self._coerce(other) - self.residue, self.modulus)

    def __mul__(self, other):
        return ModP(self.residue * self._coerce(other), self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.residue, self.modulus)

    def __pos__(self):
        return self

    def inverse(self) -> "ModP":
        if self.residue == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.modulus})")
        return ModP(pow(self.residue, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        return self * ModP(self._coerce(other), self.modulus).inverse()

    def __rtruediv__(self, other):
        return ModP(self._coerce(other), self.modulus) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return ModP(pow(self.residue, k, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.modulus == other.modulus and self.residue == other.residue
        if isinstance(other, int) and not isinstance(other, bool):
            return self.residue == other % self.modulus
        return NotImplemented

    def __lt__(self, other):
        # residue order; only used to sort, carries no algebraic meaning
        return self.residue < self._coerce(other) % self.modulus

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __bool__(self):
        return self.residue != 0

    def __repr__(self):
        return f"ModP({self.residue}, {self.modulus})"

    def __str__(self):
        return str(self.residue)


class Field:
    """Common interface of the two supported fields."""

    name: str
    characteristic: int

    def __call__(self, value):
        return self.coerce(value)

    def coerce(self, value):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    def contains(self, a) -> bool:
        raise NotImplementedError

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def inv(self, a):
        a = self.coerce(a)
        if not a:
            raise DivisionByZero("division by zero")
        return self.one / a

    def char_divides(self, k: int) -> bool:
        """True iff the characteristic of the field divides ``k``."""
        if self.characteristic == 0:
            return False
        return k % self.characteristic == 0

    def sort_key(self, a):
        raise NotImplementedError

    def vector(self, values: Iterable) -> list:
        return [self.coerce(v) for v in values]

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


class Rationals(Field):
    name = "Q"
    characteristic = 0

    def coerce(self, value):
        if isinstance(value, ModP):
            raise FieldMismatch("GF(p) element used where a rational was expected")
        if isinstance(value, str):
            return self.parse(value)
        return mpq(value)

    def parse(self, text: str):
        s = text.strip().replace("−", "-")
        if not s:
            raise ValueError("empty scalar")
        num, sep, den = s.partition("/")
        try:
            n = int(num)
            d = int(den) if sep else 1
        except ValueError:
            raise ValueError(f"not a rational scalar: {text!r}") from None
        if d == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return mpq(n, d)

    def format(self, a) -> str:
        a = mpq(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def contains(self, a) -> bool:
        return isinstance(a, mpq)

    def sort_key(self, a):
        return mpq(a)


class PrimeField(Field):
    def __init__(self, p: int):
        p = int(p)
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def coerce(self, value):
        if isinstance(value, ModP):
            if value.modulus != self.p:
                raise FieldMismatch(f"modulus mismatch: {self.name} vs GF({value.modulus})")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (int, mpz)):
            return ModP(int(value), self.p)
        if isinstance(value, (mpq, Fraction)):
            q = mpq(value)
            return ModP(int(q.numerator), self.p) / ModP(int(q.denominator), self.p)
        return ModP(int(value), self.p)

    def parse(self, text: str):
        s = text.strip().replace("−", "-")
        try:
            v = int(s)
        except ValueError:
            raise ValueError(f"not a {self.name} scalar: {text!r}") from None
        return ModP(v, self.p)

    def format(self, a) -> str:
        return str(self.coerce(a).residue)

    def contains(self, a) -> bool:
        return isinstance(a, ModP) and a.modulus == self.p

    def sort_key(self, a):
        return self.coerce(a).residue


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(spec: str) -> Field:
    """Parse ``Q``, ``GF(p)`` or ``gf:p``."""
    s = spec.strip()
    if s.upper() in ("Q", "QQ"):
        return QQ
    low = s.lower()
    if low.startswith("gf:"):
        return GF(int(low[3:]))
    if low.startswith("gf(") and low.endswith(")"):
        return GF(int(low[3:-1]))
    raise ValueError(f"unknown field {spec!r} (expected Q, GF(p) or gf:p)")


def field_of(a) -> Field:
    if isinstance(a, ModP):
        return GF(a.modulus)
    return QQ


def _check_same(a, b):
    if isinstance(a, ModP) != isinstance(b, ModP):
        raise FieldMismatch("cannot mix rational and GF(p) scalars")


def add(a, b):
    _check_same(a, b)
    return a + b


def sub(a, b):
    _check_same(a, b)
    return a - b


def mul(a, b):
    _check_same(a, b)
    return a * b


def inv(a):
    if isinstance(a, ModP):
        return a.inverse()
    if a == 0:
        raise DivisionByZero("division by zero")
    return 1 / mpq(a)
