"""Dense matrices over exact rationals.

Only what the flag oracle needs: products, concatenation, rank and
nullspace dimension. Rank uses fraction-free (Bareiss) elimination on
integer matrices and falls back to pivoted Gaussian elimination over
``Fraction`` otherwise; both are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "ExactMatrix",
    "rank",
    "nullspace_dim",
    "solve_dim",
    "concat_columns",
    "rank_of_vectors",
]


def _scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"exact matrices accept only rational entries, got {type(x).__name__}")


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]  # row-major

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> ExactMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(_scalar(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> ExactMatrix:
        columns = [list(c) for c in columns]
        if any(len(c) != rows for c in columns):
            raise ValueError("column length mismatch")
        return cls.from_rows([[c[k] for c in columns] for k in range(rows)], cols=len(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> ExactMatrix:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    def __getitem__(self, idx):
        i, j = idx
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index ({i},{j}) outside {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def T(self) -> ExactMatrix:
        return ExactMatrix.from_rows(self.columns(), cols=self.rows) if self.cols else ExactMatrix.zeros(0, self.rows)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        ocols = other.columns()
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for c in ocols:
                out.append(sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)))
        return ExactMatrix(self.rows, other.cols, tuple(out))

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        self._same_dims(other)
        return ExactMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        self._same_dims(other)
        return ExactMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return ExactMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> ExactMatrix:
        c = _scalar(c)
        return ExactMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def _same_dims(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(f"dimension mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))


def concat_columns(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """``[a | b]``; both need the same number of rows."""
    if a.rows != b.rows:
        raise ValueError(f"cannot concatenate columns of {a.rows}-row and {b.rows}-row matrices")
    return ExactMatrix.from_rows([a.row(i) + b.row(i) for i in range(a.rows)], cols=a.cols + b.cols)


def rank(m: ExactMatrix | Sequence[Sequence]) -> int:
    if not isinstance(m, ExactMatrix):
        m = ExactMatrix.from_rows(m)
    if m.rows == 0 or m.cols == 0:
        return 0
    rows = m.to_rows()
    if all(x.denominator == 1 for x in m.entries):
        return _rank_bareiss([[int(x) for x in r] for r in rows])
    return _rank_gauss(rows)


def rank_of_vectors(vectors: Sequence[Sequence]) -> int:
    """Dimension of the span of the given vectors (all of one length)."""
    vecs = [list(v) for v in vectors]
    if not vecs or not vecs[0]:
        return 0
    if all(getattr(x, "denominator", 1) == 1 for v in vecs for x in v):
        return _rank_bareiss([[int(x) for x in v] for v in vecs])
    return _rank_gauss([[_scalar(x) for x in v] for v in vecs])


def _rank_bareiss(a: list[list[int]]) -> int:
    nrows, ncols = len(a), len(a[0])
    prev, rk = 1, 0
    for c in range(ncols):
        piv = next((i for i in range(rk, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        p = a[rk][c]
        for i in range(rk + 1, nrows):
            ai = a[i]
            f = ai[c]
            for k in range(c + 1, ncols):
                ai[k] = (p * ai[k] - f * a[rk][k]) // prev
            ai[c] = 0
        prev = p
        rk += 1
        if rk == nrows:
            break
    return rk


def _rank_gauss(a: list[list[Fraction]]) -> int:
    nrows, ncols = len(a), len(a[0])
    rk = 0
    for c in range(ncols):
        piv = next((i for i in range(rk, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        p = a[rk][c]
        for i in range(rk + 1, nrows):
            f = a[i][c]
            if f:
                f = f / p
                ai, ar = a[i], a[rk]
                for k in range(c, ncols):
                    ai[k] -= f * ar[k]
        rk += 1
        if rk == nrows:
            break
    return rk


def nullspace_dim(m: ExactMatrix) -> int:
    """Dimension of ``{x : m x = 0}``."""
    return m.cols - rank(m)


def solve_dim(equations: Iterable[Sequence], unknowns: int) -> int:
    """Dimension of the solution space of a homogeneous system given as coefficient rows."""
    rows = [list(e) for e in equations]
    if any(len(e) != unknowns for e in rows):
        raise ValueError(f"every equation needs {unknowns} coefficients")
    if not rows:
        return unknowns
    return nullspace_dim(ExactMatrix.from_rows(rows, cols=unknowns))
