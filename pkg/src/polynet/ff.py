"""Exact linear algebra over prime fields GF(p).

Matrices are small (the largest worked instance is 8 x 40), so elimination
works on plain Python lists; bulk rank computations over many column groups
go through :mod:`polynet._kernels`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels

MAX_DIM = 64


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The prime field GF(p)."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"field modulus must be prime, got {self.p!r}")

    def inv(self, a: int) -> int:
        return pow(a % self.p, -1, self.p)

    def elements(self) -> range:
        return range(self.p)


def as_field(f: FieldSpec | int) -> FieldSpec:
    return f if isinstance(f, FieldSpec) else FieldSpec(int(f))


@dataclass(frozen=True)
class FqMatrix:
    """Immutable dense matrix with entries stored row-major.

    The matrix does not carry its field; operations take a :class:`FieldSpec`
    and reject entries outside ``[0, p)``.
    """

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        if any(e < 0 for e in self.entries):
            raise ValueError("matrix entries must be non-negative residues")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> FqMatrix:
        rows = [list(map(int, r)) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], nrows: int) -> FqMatrix:
        columns = [list(map(int, c)) for c in columns]
        if any(len(c) != nrows for c in columns):
            raise ValueError("column length does not match row count")
        return cls(nrows, len(columns), tuple(columns[j][i] for i in range(nrows) for j in range(len(columns))))

    @classmethod
    def from_array(cls, a: np.ndarray) -> FqMatrix:
        a = np.asarray(a, dtype=np.int64)
        if a.ndim != 2:
            raise ValueError("expected a 2-D array")
        return cls(a.shape[0], a.shape[1], tuple(int(x) for x in a.ravel()))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> FqMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> FqMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def row_list(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def to_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.rows, self.cols)

    @property
    def T(self) -> FqMatrix:
        return FqMatrix.from_columns(self.row_list(), self.cols)

    def select_columns(self, idx: Iterable[int]) -> FqMatrix:
        return FqMatrix.from_columns([self.column(j) for j in idx], self.rows)

    def __repr__(self) -> str:
        return f"FqMatrix({self.row_list()!r})" if self.rows else f"FqMatrix(0x{self.cols})"


def _check(m: FqMatrix, f: FieldSpec) -> None:
    if any(e >= f.p for e in m.entries):
        raise ValueError(f"matrix entries must lie in [0, {f.p})")
    if m.rows > MAX_DIM or m.cols > 4 * MAX_DIM:
        raise ValueError(f"matrix {m.rows}x{m.cols} exceeds the supported size")


def reduce_mod(m: FqMatrix | Sequence[Sequence[int]], f: FieldSpec | int) -> FqMatrix:
    """Reduce arbitrary integer entries into ``[0, p)``."""
    f = as_field(f)
    if not isinstance(m, FqMatrix):
        return FqMatrix.from_rows([[x % f.p for x in r] for r in m])
    return FqMatrix(m.rows, m.cols, tuple(x % f.p for x in m.entries))


def hstack(mats: Sequence[FqMatrix], rows: int | None = None) -> FqMatrix:
    """Horizontal concatenation; ``rows`` is needed when ``mats`` is empty."""
    if not mats:
        return FqMatrix.zeros(rows or 0, 0)
    r = mats[0].rows
    if any(m.rows != r for m in mats):
        raise ValueError("row-count mismatch in concatenation")
    cols = [c for m in mats for c in m.columns()]
    return FqMatrix.from_columns(cols, r)


def matmul(a: FqMatrix, b: FqMatrix, f: FieldSpec | int) -> FqMatrix:
    f = as_field(f)
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
    out = (a.to_array() @ b.to_array()) % f.p
    return FqMatrix(a.rows, b.cols, tuple(int(x) for x in out.ravel()))


def rref(rows: list[list[int]], p: int, ncols: int | None = None) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form with first-nonzero pivoting.

    Only the first ``ncols`` columns are eligible as pivots; row operations
    act on the full width, which is how augmented systems are solved.
    """
    a = [r[:] for r in rows]
    if not a:
        return a, []
    width = len(a[0])
    ncols = width if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] % p), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                g = a[i][c]
                a[i] = [(x - g * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def mat_rank(m: FqMatrix, f: FieldSpec | int) -> int:
    f = as_field(f)
    _check(m, f)
    if m.rows == 0 or m.cols == 0:
        return 0
    return int(_kernels.rank_mod_p(m.to_array(), f.p))


def subspace_sum_dim(mats: Sequence[FqMatrix], f: FieldSpec | int) -> int:
    """Dimension of the sum of the column spans of ``mats``."""
    if not mats:
        return 0
    return mat_rank(hstack(list(mats)), f)


def solve_right(a: FqMatrix, b: FqMatrix, f: FieldSpec | int) -> FqMatrix | None:
    """Some X with ``a @ X == b``, or None when a column of ``b`` leaves span(a)."""
    f = as_field(f)
    if a.rows != b.rows:
        raise ValueError(f"row mismatch: {a.shape} vs {b.shape}")
    _check(a, f)
    _check(b, f)
    if b.cols == 0:
        return FqMatrix.zeros(a.cols, 0)
    if a.rows == 0:
        return FqMatrix.zeros(a.cols, b.cols)
    aug = [ra + rb for ra, rb in zip(a.row_list(), b.row_list())]
    red, pivots = rref(aug, f.p, a.cols)
    for row in red[len(pivots):]:
        if any(row[a.cols:]):
            return None
    x = [[0] * b.cols for _ in range(a.cols)]
    for r, c in enumerate(pivots):
        x[c] = red[r][a.cols:]
    return FqMatrix.from_rows(x, b.cols)


def invert(b: FqMatrix, f: FieldSpec | int) -> FqMatrix | None:
    f = as_field(f)
    if b.rows != b.cols:
        raise ValueError(f"cannot invert non-square {b.rows}x{b.cols} matrix")
    if mat_rank(b, f) < b.rows:
        return None
    return solve_right(b, FqMatrix.identity(b.rows), f)


def column_basis(m: FqMatrix, f: FieldSpec | int) -> FqMatrix:
    """The leftmost maximal independent subset of the columns of ``m``."""
    f = as_field(f)
    _check(m, f)
    if m.rows == 0:
        return FqMatrix.zeros(0, 0)
    _, pivots = rref(m.row_list(), f.p)
    return m.select_columns(pivots)


def pad_columns(m: FqMatrix, width: int) -> FqMatrix:
    """Append zero columns up to ``width``."""
    if m.cols > width:
        raise ValueError(f"matrix already has {m.cols} > {width} columns")
    return hstack([m, FqMatrix.zeros(m.rows, width - m.cols)]) if m.cols < width else m


def in_span(a: FqMatrix, b: FqMatrix, f: FieldSpec | int) -> bool:
    return solve_right(a, b, f) is not None
