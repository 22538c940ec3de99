"""Cauchy matrices C_ij = 1 / (x_i - x~_j), held by their data.

Inversion and solving use the factorization C^{-1} = A~ K A where A, A~ are
the diagonal matrices of the scalings

    alpha_i  = prod_k (x_i - x~_k) / prod_{k != i} (x_i - x_k)
    alpha~_i = prod_k (x~_i - x_k) / prod_{k != i} (x~_i - x~_k)

and K_ij = 1 / (x~_i - x_j) is the Cauchy kernel with the roles of the two
lists swapped.  Both need only O(n^2) field operations.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Sequence, Union

import gmpy2
from gmpy2 import mpq

from . import _subproduct
from .field import QQ, Field, field_of
from .lagrange import product_ratio
from .matrix import DenseMatrix, Singular, gaussian_inverse_oracle, gaussian_solve

__all__ = [
    "InvalidCauchyData",
    "CauchyData",
    "StructuredCauchy",
    "NotCauchy",
    "ShiftMatch",
    "build",
    "entry",
    "alphas",
    "invert",
    "solve",
    "recognize",
    "shift_data",
    "perm_equivalent",
    "displacement_residual",
    "canonical_data",
    "gaussian_inverse_oracle",
    "Singular",
]

# below this size the direct O(n^2) loop beats the subproduct-tree path
FAST_PATH_MIN_N = 48


class InvalidCauchyData(ValueError):
    """The 2n data scalars are not pairwise distinct (or the lists are malformed)."""


@dataclass(frozen=True)
class CauchyData:
    """The lists (x, x~) defining a Cauchy matrix.  All 2n scalars distinct."""

    x: tuple
    x_tilde: tuple
    field: Field = dc_field(default=None, compare=False)

    def __post_init__(self):
        fld = self.field
        if fld is None:
            first = next(iter(self.x), None)
            fld = field_of(first) if first is not None and not isinstance(first, (int, str)) else QQ
        object.__setattr__(self, "field", fld)
        object.__setattr__(self, "x", tuple(fld.coerce(v) for v in self.x))
        object.__setattr__(self, "x_tilde", tuple(fld.coerce(v) for v in self.x_tilde))
        if not self.x:
            raise InvalidCauchyData("need n >= 1")
        if len(self.x) != len(self.x_tilde):
            raise InvalidCauchyData(f"|x| = {len(self.x)} but |x~| = {len(self.x_tilde)}")
        seen = {}
        for name, vals in (("x", self.x), ("x_tilde", self.x_tilde)):
            for i, v in enumerate(vals):
                if v in seen:
                    raise InvalidCauchyData(
                        f"scalar {fld.format(v)} repeated ({seen[v]} and {name}[{i}])"
                    )
                seen[v] = f"{name}[{i}]"

    @property
    def n(self) -> int:
        return len(self.x)

    def swapped(self) -> "CauchyData":
        return CauchyData(self.x_tilde, self.x, self.field)

    def __repr__(self):
        f = self.field.format
        return (f"CauchyData(x=({', '.join(map(f, self.x))}), "
                f"x_tilde=({', '.join(map(f, self.x_tilde))}), field={self.field})")


def _integer_scaling(data: CauchyData):
    """(L, Lx, Lx~) with L the lcm of all denominators; rationals only."""
    L = gmpy2.mpz(1)
    for v in data.x + data.x_tilde:
        L = gmpy2.lcm(L, v.denominator)
    return L, [int(v * L) for v in data.x], [int(v * L) for v in data.x_tilde]


class StructuredCauchy:
    """A Cauchy matrix kept as its data, with the alpha scalings cached."""

    def __init__(self, data: CauchyData):
        self.data = data

    @property
    def n(self) -> int:
        return self.data.n

    @property
    def field(self) -> Field:
        return self.data.field

    @cached_property
    def _alphas(self):
        d = self.data
        if d.field == QQ and d.n >= FAST_PATH_MIN_N:
            L, xi, xti = _integer_scaling(d)
            a, at = _subproduct.alphas_integer_data(xi, xti)
            return tuple(v / L for v in a), tuple(v / L for v in at)
        a = tuple(product_ratio(d.x, d.x_tilde, i) for i in range(d.n))
        at = tuple(product_ratio(d.x_tilde, d.x, i) for i in range(d.n))
        return a, at

    @property
    def alpha(self) -> tuple:
        return self._alphas[0]

    @property
    def alpha_tilde(self) -> tuple:
        return self._alphas[1]

    def entry(self, i: int, j: int):
        n = self.n
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError(f"index ({i}, {j}) out of range for n = {n}")
        return self.field.one / (self.data.x[i] - self.data.x_tilde[j])

    def build(self) -> DenseMatrix:
        x, xt, one = self.data.x, self.data.x_tilde, self.field.one
        return DenseMatrix(self.n, self.n, tuple(one / (a - b) for a in x for b in xt), self.field)

    def invert(self) -> DenseMatrix:
        x, xt = self.data.x, self.data.x_tilde
        a, at = self.alpha, self.alpha_tilde
        return DenseMatrix(
            self.n, self.n,
            tuple(at[i] * a[j] / (xt[i] - x[j]) for i in range(self.n) for j in range(self.n)),
            self.field,
        )

    def solve(self, rhs: Sequence, method: str = "auto") -> list:
        """y with C y = rhs, as y = A~ (K (A rhs)); never forms C^{-1}.

        ``method`` is ``"direct"`` (the O(n^2) double loop), ``"subproduct"``
        (integer polynomial evaluation, rationals only) or ``"auto"``.
        """
        n, fld = self.n, self.field
        if len(rhs) != n:
            raise ValueError(f"right-hand side has length {len(rhs)}, expected {n}")
        rhs = [fld.coerce(b) for b in rhs]
        if method == "auto":
            method = "subproduct" if fld == QQ and n >= FAST_PATH_MIN_N else "direct"
        if method == "subproduct":
            if fld != QQ:
                raise ValueError("the subproduct path needs rational data")
            L, xi, xti = _integer_scaling(self.data)
            return [v / L for v in _subproduct.solve_integer_data(xi, xti, rhs)]
        if method != "direct":
            raise ValueError(f"unknown method {method!r}")
        x, xt = self.data.x, self.data.x_tilde
        a, at = self.alpha, self.alpha_tilde
        w = [aj * bj for aj, bj in zip(a, rhs)]
        y = []
        for i in range(n):
            xti = xt[i]
            s = fld.zero
            for xj, wj in zip(x, w):
                if wj:
                    s += wj / (xti - xj)
            y.append(at[i] * s)
        return y


def _structured(d: Union[CauchyData, StructuredCauchy]) -> StructuredCauchy:
    return d if isinstance(d, StructuredCauchy) else StructuredCauchy(d)


def build(data) -> DenseMatrix:
    """The explicit matrix with entries 1 / (x_i - x~_j)."""
    return _structured(data).build()


def entry(data, i: int, j: int):
    return _structured(data).entry(i, j)


def alphas(data) -> tuple[tuple, tuple]:
    s = _structured(data)
    return s.alpha, s.alpha_tilde


def invert(data) -> DenseMatrix:
    """C^{-1} with entries alpha~_i alpha_j / (x~_i - x_j)."""
    return _structured(data).invert()


def solve(data, rhs: Sequence, method: str = "auto") -> list:
    return _structured(data).solve(rhs, method)


def shift_data(data: CauchyData, zeta) -> CauchyData:
    z = data.field.coerce(zeta)
    return CauchyData(tuple(v + z for v in data.x), tuple(v + z for v in data.x_tilde), data.field)


def displacement_residual(data) -> DenseMatrix:
    """D C - C D~ with D = diag(x), D~ = diag(x~); equals the all-ones matrix."""
    s = _structured(data)
    d = s.data
    C = s.build()
    D = DenseMatrix.diag(d.x, d.field)
    Dt = DenseMatrix.diag(d.x_tilde, d.field)
    return D @ C - C @ Dt


# recognition --------------------------------------------------------------------

@dataclass(frozen=True)
class NotCauchy:
    """Why a matrix failed recognition.

    ``category`` is one of ``zero_entry``, ``duplicate_scalar``,
    ``entry_mismatch``; ``position`` is the offending (row, col) when there is
    one.
    """

    category: str
    detail: str
    position: tuple | None = None

    def __bool__(self):
        return False


def recognize(m: DenseMatrix) -> Union[CauchyData, NotCauchy]:
    """Recover data for ``m`` (gauge x~_0 = 0) or explain why it is not Cauchy."""
    if not m.is_square:
        raise ValueError(f"recognize needs a square matrix, got {m.n_rows}x{m.n_cols}")
    n, fld = m.n_rows, m.field
    for i in range(n):
        if not m[i, 0]:
            return NotCauchy("zero_entry", f"entry ({i}, 0) is zero", (i, 0))
    for j in range(n):
        if not m[0, j]:
            return NotCauchy("zero_entry", f"entry (0, {j}) is zero", (0, j))
    x = [fld.one / m[i, 0] for i in range(n)]
    xt = [x[0] - fld.one / m[0, j] for j in range(n)]
    seen = {}
    for name, vals in (("x", x), ("x_tilde", xt)):
        for i, v in enumerate(vals):
            if v in seen:
                return NotCauchy(
                    "duplicate_scalar",
                    f"recovered {name}[{i}] = {fld.format(v)} repeats {seen[v]}",
                )
            seen[v] = f"{name}[{i}]"
    for i in range(1, n):
        for j in range(1, n):
            e = m[i, j]
            if not e:
                return NotCauchy("zero_entry", f"entry ({i}, {j}) is zero", (i, j))
            if e * (x[i] - xt[j]) != fld.one:
                return NotCauchy(
                    "entry_mismatch",
                    f"entry ({i}, {j}) is {fld.format(e)}, expected {fld.format(fld.one / (x[i] - xt[j]))}",
                    (i, j),
                )
    return CauchyData(tuple(x), tuple(xt), fld)


# permutation equivalence ----------------------------------------------------------

@dataclass(frozen=True)
class ShiftMatch:
    """Outcome of :func:`perm_equivalent`: b = (a + zeta) up to reordering."""

    equivalent: bool
    zeta: object = None

    def __bool__(self):
        return self.equivalent


def _sorted(vals, fld: Field):
    return sorted(vals, key=fld.sort_key)


def perm_equivalent(a: CauchyData, b: CauchyData) -> ShiftMatch:
    """Are the Cauchy matrices of ``a`` and ``b`` equal up to row/column permutations?

    That happens exactly when b's lists are a's lists shifted by one common
    zeta, as multisets.  Outside characteristic dividing n the only candidate
    is the mean difference; otherwise every b.x[0] - a.x[k] is tried.
    """
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")
    if a.field != b.field:
        raise ValueError(f"field mismatch: {a.field} vs {b.field}")
    fld, n = a.field, a.n
    bx, bxt = _sorted(b.x, fld), _sorted(b.x_tilde, fld)

    def works(z) -> bool:
        return (_sorted((v + z for v in a.x), fld) == bx
                and _sorted((v + z for v in a.x_tilde), fld) == bxt)

    if not fld.char_divides(n):
        z = (sum(b.x, fld.zero) - sum(a.x, fld.zero)) / fld.coerce(n)
        return ShiftMatch(True, z) if works(z) else ShiftMatch(False)
    for k in range(n):
        z = b.x[0] - a.x[k]
        if works(z):
            return ShiftMatch(True, z)
    return ShiftMatch(False)


def canonical_data(data: CauchyData) -> CauchyData | None:
    """Shift so that sum(x) + sum(x~) = 0, then sort both lists.

    Two data sets are permutation equivalent iff their canonical forms agree.
    Returns None when 2n is not invertible in the field.
    """
    fld, n = data.field, data.n
    if fld.char_divides(2 * n):
        return None
    total = sum(data.x, fld.zero) + sum(data.x_tilde, fld.zero)
    z = -total / fld.coerce(2 * n)
    s = shift_data(data, z)
    return CauchyData(tuple(_sorted(s.x, fld)), tuple(_sorted(s.x_tilde, fld)), fld)
