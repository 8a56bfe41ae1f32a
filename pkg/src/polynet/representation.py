"""Representations of discrete polymatroids by subspaces of GF(q)^r.

A representation is a list of matrices ``A_1..A_n`` sharing a row count;
the column span of ``A_i`` is the subspace ``V_i``. A zero-column matrix
stands for the zero subspace, keeping indices aligned with the ground set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .ff import FieldSpec, FqMatrix, as_field, hstack, invert, matmul, mat_rank
from .polymatroid import RankTable, elements_of

SEARCH_MAX_N = 6
SEARCH_MAX_ROWS = 6
SEARCH_MAX_Q = 3


@dataclass(frozen=True)
class Representation:
    field: FieldSpec
    matrices: tuple[FqMatrix, ...]
    rows: int

    def __init__(self, field: FieldSpec | int, matrices: Sequence[FqMatrix], rows: int | None = None):
        field = as_field(field)
        matrices = tuple(matrices)
        if rows is None:
            if not matrices:
                raise ValueError("row count required for an empty representation")
            rows = matrices[0].rows
        if any(m.rows != rows for m in matrices):
            raise ValueError("all matrices of a representation must share their row count")
        if any(e >= field.p for m in matrices for e in m.entries):
            raise ValueError(f"matrix entries must lie in [0, {field.p})")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "matrices", matrices)
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.matrices)

    def __len__(self) -> int:
        return len(self.matrices)

    def __getitem__(self, i: int) -> FqMatrix:
        return self.matrices[i]


def _as_rep(rep: Representation | Sequence[FqMatrix], f: FieldSpec | int | None) -> Representation:
    if isinstance(rep, Representation):
        return rep
    if f is None:
        raise ValueError("a field is required when passing bare matrices")
    return Representation(f, rep)


def rank_table_from_matrices(rep: Representation | Sequence[FqMatrix],
                             f: FieldSpec | int | None = None) -> RankTable:
    """``rho(X) = dim(sum_{i in X} V_i)`` for all subsets X."""
    rep = _as_rep(rep, f)
    if rep.n == 0:
        return RankTable(0, np.zeros(1, dtype=np.int64))
    offsets = np.zeros(rep.n + 1, dtype=np.int_)
    for i, m in enumerate(rep.matrices):
        offsets[i + 1] = offsets[i] + m.cols
    cat = hstack(list(rep.matrices), rep.rows).to_array()
    if cat.size == 0:
        values = np.zeros(1 << rep.n, dtype=np.int64)
    else:
        values = _kernels.rank_table(cat, offsets, rep.field.p)
    return RankTable(rep.n, values)


def verify_representation(rep: Representation | Sequence[FqMatrix], t: RankTable,
                          f: FieldSpec | int | None = None) -> bool:
    rep = _as_rep(rep, f)
    if rep.n != t.n:
        raise ValueError(f"{rep.n} subspaces against a ground set of size {t.n}")
    return rank_table_from_matrices(rep) == t


def normalize_input_basis(rep: Representation, m: int, k: int,
                          inputs: Sequence[int] | None = None) -> Representation:
    """Change basis so the input subspaces become the standard coordinate blocks.

    ``inputs`` lists the 1-based elements playing the role of the ``m``
    message subspaces (default ``1..m``). Their concatenation ``B`` must be an
    invertible ``km x km`` matrix; every ``A_i`` is replaced by ``B^-1 A_i``.
    """
    inputs = list(range(1, m + 1)) if inputs is None else list(inputs)
    if len(inputs) != m:
        raise ValueError(f"expected {m} input elements, got {len(inputs)}")
    b = hstack([rep.matrices[i - 1] for i in inputs], rep.rows)
    if b.rows != b.cols or b.rows != k * m:
        raise ValueError(f"input block is {b.rows}x{b.cols}, expected {k * m}x{k * m}")
    b_inv = invert(b, rep.field)
    if b_inv is None:
        raise ValueError("input block is singular; the input subspaces do not span k*m dimensions")
    return Representation(rep.field, [matmul(b_inv, a, rep.field) for a in rep.matrices], rep.rows)


# -- exhaustive search ---------------------------------------------------------

def subspaces(dim: int, ambient: int, q: int) -> Iterator[FqMatrix]:
    """Every ``dim``-dimensional subspace of GF(q)^ambient, once each.

    Each subspace is yielded as the ``ambient x dim`` transpose of its unique
    reduced row echelon basis, ordered by pivot set then free entries.
    """
    if dim == 0:
        yield FqMatrix.zeros(ambient, 0)
        return
    for pivots in itertools.combinations(range(ambient), dim):
        free = [(r, c) for r in range(dim) for c in range(pivots[r] + 1, ambient) if c not in pivots]
        for vals in itertools.product(range(q), repeat=len(free)):
            basis = [[0] * ambient for _ in range(dim)]
            for r, c in enumerate(pivots):
                basis[r][c] = 1
            for (r, c), v in zip(free, vals):
                basis[r][c] = v
            yield FqMatrix.from_columns(basis, ambient)


def search_representation(t: RankTable, f: FieldSpec | int, row_dim: int) -> Representation | None:
    """First representation of ``t`` by subspaces of GF(q)^row_dim, or None.

    Subspaces are assigned element by element in canonical order; after each
    assignment every subset containing the new element is checked, so a None
    result means no assignment exists.
    """
    f = as_field(f)
    if t.n > SEARCH_MAX_N or row_dim > SEARCH_MAX_ROWS or f.p > SEARCH_MAX_Q:
        raise ValueError(
            f"search limited to n <= {SEARCH_MAX_N}, row_dim <= {SEARCH_MAX_ROWS}, q <= {SEARCH_MAX_Q}"
        )
    dims = t.singletons()
    if any(d > row_dim for d in dims):
        return None
    options = [list(subspaces(d, row_dim, f.p)) for d in dims]
    chosen: list[FqMatrix] = []

    def consistent(j: int) -> bool:
        bit = 1 << j
        for low in range(bit):
            mask = low | bit
            mats = [chosen[i - 1] for i in elements_of(mask)]
            if mat_rank(hstack(mats, row_dim), f) != t(mask):
                return False
        return True

    def extend(j: int) -> bool:
        if j == t.n:
            return True
        for a in options[j]:
            chosen.append(a)
            if consistent(j) and extend(j + 1):
                return True
            chosen.pop()
        return False

    if not extend(0):
        return None
    return Representation(f, chosen, row_dim)
