"""Small dense exact matrices and the Gaussian-elimination oracle.

Nothing here knows about Cauchy structure.  The elimination routines are the
independent O(n^3) reference that the structured algorithms are checked
against, so they are deliberately plain.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .field import Field, QQ, field_of


class Singular(ArithmeticError):
    """Raised by the elimination oracle for a singular matrix."""

    def __init__(self, rank: int, size: int):
        super().__init__(f"matrix is singular (rank {rank} < {size})")
        self.rank = rank
        self.size = size


@dataclass(frozen=True, eq=False)
class DenseMatrix:
    """Row-major matrix over an exact field."""

    n_rows: int
    n_cols: int
    entries: tuple
    field: Field = QQ

    def __post_init__(self):
        if self.n_rows < 1 or self.n_cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.n_rows * self.n_cols:
            raise ValueError(
                f"{self.n_rows}x{self.n_cols} matrix needs {self.n_rows * self.n_cols} entries, "
                f"got {len(self.entries)}"
            )

    # construction -----------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Field | None = None) -> "DenseMatrix":
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        if field is None:
            field = _guess_field(v for r in rows for v in r)
        entries = tuple(field.coerce(v) for r in rows for v in r)
        return cls(len(rows), width, entries, field)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "DenseMatrix":
        one, zero = field.one, field.zero
        return cls(n, n, tuple(one if i == j else zero for i in range(n) for j in range(n)), field)

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int, field: Field = QQ) -> "DenseMatrix":
        return cls(n_rows, n_cols, (field.zero,) * (n_rows * n_cols), field)

    @classmethod
    def diag(cls, values: Sequence, field: Field | None = None) -> "DenseMatrix":
        values = list(values)
        if field is None:
            field = _guess_field(values)
        n = len(values)
        zero = field.zero
        return cls(
            n, n,
            tuple(field.coerce(values[i]) if i == j else zero for i in range(n) for j in range(n)),
            field,
        )

    @classmethod
    def from_function(cls, n_rows: int, n_cols: int, f, field: Field = QQ) -> "DenseMatrix":
        return cls(
            n_rows, n_cols,
            tuple(field.coerce(f(i, j)) for i in range(n_rows) for j in range(n_cols)),
            field,
        )

    # access -----------------------------------------------------------------

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.n_rows and 0 <= j < self.n_cols):
            raise IndexError(f"index ({i}, {j}) out of range for {self.n_rows}x{self.n_cols}")
        return self.entries[i * self.n_cols + j]

    def rows(self) -> list[list]:
        c = self.n_cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.n_rows)]

    def row(self, i: int) -> list:
        c = self.n_cols
        return list(self.entries[i * c:(i + 1) * c])

    def col(self, j: int) -> list:
        return [self.entries[i * self.n_cols + j] for i in range(self.n_rows)]

    def row_sums(self) -> list:
        return [sum(r, self.field.zero) for r in self.rows()]

    def col_sums(self) -> list:
        return [sum(self.col(j), self.field.zero) for j in range(self.n_cols)]

    # algebra ----------------------------------------------------------------

    def _same_shape(self, other: "DenseMatrix"):
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise ValueError("shape mismatch")
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other: "DenseMatrix") -> "DenseMatrix":
        self._same_shape(other)
        return DenseMatrix(self.n_rows, self.n_cols,
                           tuple(a + b for a, b in zip(self.entries, other.entries)), self.field)

    def __sub__(self, other: "DenseMatrix") -> "DenseMatrix":
        self._same_shape(other)
        return DenseMatrix(self.n_rows, self.n_cols,
                           tuple(a - b for a, b in zip(self.entries, other.entries)), self.field)

    def __neg__(self) -> "DenseMatrix":
        return DenseMatrix(self.n_rows, self.n_cols, tuple(-a for a in self.entries), self.field)

    def scale(self, c) -> "DenseMatrix":
        c = self.field.coerce(c)
        return DenseMatrix(self.n_rows, self.n_cols, tuple(c * a for a in self.entries), self.field)

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.n_cols != other.n_rows:
            raise ValueError(f"cannot multiply {self.n_rows}x{self.n_cols} by {other.n_rows}x{other.n_cols}")
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")
        zero = self.field.zero
        cols = [other.col(j) for j in range(other.n_cols)]
        out = []
        for r in self.rows():
            for c in cols:
                s = zero
                for a, b in zip(r, c):
                    if a and b:
                        s += a * b
                out.append(s)
        return DenseMatrix(self.n_rows, other.n_cols, tuple(out), self.field)

    def apply(self, v: Sequence) -> list:
        if len(v) != self.n_cols:
            raise ValueError("vector length mismatch")
        zero = self.field.zero
        return [sum((a * b for a, b in zip(r, v)), zero) for r in self.rows()]

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(self.n_cols, self.n_rows,
                           tuple(self[i, j] for j in range(self.n_cols) for i in range(self.n_rows)),
                           self.field)

    @property
    def T(self) -> "DenseMatrix":
        return self.transpose()

    def trace(self):
        return sum((self[i, i] for i in range(min(self.n_rows, self.n_cols))), self.field.zero)

    def is_diagonal(self) -> bool:
        return all(not self[i, j] for i in range(self.n_rows) for j in range(self.n_cols) if i != j)

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return (self.n_rows, self.n_cols) == (other.n_rows, other.n_cols) \
            and self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return hash((self.n_rows, self.n_cols, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(self.field.format(a) for a in r) for r in self.rows())
        return f"DenseMatrix[{self.field}]([{body}])"


def _guess_field(values: Iterable) -> Field:
    for v in values:
        return field_of(v) if not isinstance(v, (int, str)) else QQ
    return QQ


# elimination ------------------------------------------------------------------

def _rref(rows: list[list], field: Field, n_pivot_cols: int):
    """In-place reduced row echelon form on the first ``n_pivot_cols`` columns.

    Pivot choice is the first nonzero entry in the column.  Returns the pivot
    column list.
    """
    pivots = []
    r = 0
    m = len(rows)
    for c in range(n_pivot_cols):
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        inv = field.one / pr[c]
        rows[r] = pr = [a * inv for a in pr]
        for i in range(m):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return pivots


def rank(m: DenseMatrix) -> int:
    rows = m.rows()
    return len(_rref(rows, m.field, m.n_cols))


def gaussian_inverse_oracle(m: DenseMatrix) -> DenseMatrix:
    """Exact inverse by Gauss-Jordan elimination on ``[m | I]``; O(n^3).

    Raises :class:`Singular` carrying the rank when ``m`` is not invertible.
    """
    if not m.is_square:
        raise ValueError("inverse of a non-square matrix")
    n = m.n_rows
    one, zero = m.field.one, m.field.zero
    rows = [r + [one if i == j else zero for j in range(n)] for i, r in enumerate(m.rows())]
    pivots = _rref(rows, m.field, n)
    if len(pivots) < n:
        raise Singular(len(pivots), n)
    return DenseMatrix(n, n, tuple(a for r in rows for a in r[n:]), m.field)


def gaussian_solve(m: DenseMatrix, rhs: Sequence) -> list:
    """Solve ``m y = rhs`` by elimination on the augmented matrix."""
    if not m.is_square:
        raise ValueError("solve with a non-square matrix")
    n = m.n_rows
    if len(rhs) != n:
        raise ValueError(f"right-hand side has length {len(rhs)}, expected {n}")
    rows = [r + [m.field.coerce(b)] for r, b in zip(m.rows(), rhs)]
    pivots = _rref(rows, m.field, n)
    if len(pivots) < n:
        raise Singular(len(pivots), n)
    return [r[n] for r in rows]


def nullspace(m: DenseMatrix) -> list[list]:
    """Basis of the right kernel; each vector has a 1 in its free coordinate."""
    rows = m.rows()
    pivots = _rref(rows, m.field, m.n_cols)
    free = [c for c in range(m.n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [m.field.zero] * m.n_cols
        v[f] = m.field.one
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][f]
        basis.append(v)
    return basis
