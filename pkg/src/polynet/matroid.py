"""Matroids as the unit-singleton-rank case of discrete polymatroids."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .ff import FieldSpec, FqMatrix
from .polymatroid import (
    MAX_N,
    DiscretePolymatroid,
    RankTable,
    check_rank_axioms,
    elements_of,
    mask_of,
)
from .representation import rank_table_from_matrices


def _popcount(m: int) -> int:
    return bin(m).count("1")


@dataclass(frozen=True)
class MatroidVerdict:
    ok: bool
    reason: str | None = None
    witness: tuple[frozenset[int], ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        sets = ", ".join("{" + ",".join(map(str, sorted(s))) + "}" for s in self.witness)
        return f"violation {self.reason}: {sets}"


class Matroid:
    """A matroid on ``{1..n}`` given by independent sets or by a rank table.

    Whichever presentation was supplied is kept verbatim (so an invalid one
    can still be diagnosed by :func:`check_matroid`); the other is derived on
    demand.
    """

    def __init__(self, n: int, *, independent: Iterable[Iterable[int]] | None = None,
                 rank: RankTable | None = None):
        if (independent is None) == (rank is None):
            raise ValueError("give exactly one of independent= or rank=")
        if not 0 <= n <= MAX_N:
            raise ValueError(f"matroid ground set size {n} outside 0..{MAX_N}")
        self.n = n
        self._indep: frozenset[int] | None = None
        self._rank: RankTable | None = None
        if independent is not None:
            self._indep = frozenset(mask_of(s) for s in independent)
            if any(m >> n for m in self._indep):
                raise ValueError("independent set mentions an element outside the ground set")
        else:
            if rank.n != n:
                raise ValueError("rank table size does not match n")
            self._rank = rank

    @classmethod
    def from_rank(cls, t: RankTable) -> Matroid:
        return cls(t.n, rank=t)

    @classmethod
    def from_independent_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> Matroid:
        return cls(n, independent=sets)

    @property
    def presentation(self) -> str:
        return "independent" if self._indep is not None else "rank"

    @cached_property
    def independent_masks(self) -> frozenset[int]:
        if self._indep is not None:
            return self._indep
        v = self._rank.values
        return frozenset(m for m in range(1 << self.n) if v[m] == _popcount(m))

    def independent_sets(self) -> list[frozenset[int]]:
        return sorted((frozenset(elements_of(m)) for m in self.independent_masks),
                      key=lambda s: (len(s), sorted(s)))

    @cached_property
    def rank(self) -> RankTable:
        if self._rank is not None:
            return self._rank
        # r(X) = max |I| over independent I inside X, via a subset-max sweep
        best = np.full(1 << self.n, -1, dtype=np.int64)
        for m in self._indep:
            best[m] = _popcount(m)
        for i in range(self.n):
            bit = 1 << i
            for m in range(1 << self.n):
                if m & bit and best[m ^ bit] > best[m]:
                    best[m] = best[m ^ bit]
        return RankTable(self.n, np.maximum(best, 0))

    def r(self, subset: Iterable[int]) -> int:
        return self.rank(subset)

    def circuits(self) -> list[frozenset[int]]:
        return circuits(self)

    def bases(self) -> list[frozenset[int]]:
        top = int(self.rank.values[-1])
        return [s for s in self.independent_sets() if len(s) == top]

    def to_polymatroid(self) -> DiscretePolymatroid:
        return to_polymatroid(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and self.independent_masks == other.independent_masks

    def __hash__(self) -> int:
        return hash((self.n, self.independent_masks))

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, rank={int(self.rank.values[-1])})"


def check_matroid(m: Matroid) -> MatroidVerdict:
    """Validate whichever presentation ``m`` was built from."""
    if m.presentation == "rank":
        t = m._rank
        verdict = check_rank_axioms(t)
        if not verdict:
            return MatroidVerdict(False, verdict.axiom, verdict.witness)
        for x in range(1 << m.n):
            if t.values[x] > _popcount(x):
                return MatroidVerdict(False, "r(X) <= |X|", (frozenset(elements_of(x)),))
        return MatroidVerdict(True)

    indep = m._indep
    if 0 not in indep:
        return MatroidVerdict(False, "empty set independent", (frozenset(),))
    for x in sorted(indep):
        sub = x
        while sub:
            sub = (sub - 1) & x
            if sub not in indep:
                return MatroidVerdict(False, "downward closure",
                                      (frozenset(elements_of(x)), frozenset(elements_of(sub))))
    by_size: dict[int, list[int]] = {}
    for x in indep:
        by_size.setdefault(_popcount(x), []).append(x)
    for s, vs in sorted(by_size.items()):
        for v in sorted(vs):
            for u in sorted(by_size.get(s + 1, [])):
                diff = u & ~v
                if not any((diff >> j & 1) and (v | 1 << j) in indep for j in range(m.n)):
                    return MatroidVerdict(False, "augmentation",
                                          (frozenset(elements_of(u)), frozenset(elements_of(v))))
    return MatroidVerdict(True)


def uniform(k: int, n: int) -> Matroid:
    """The uniform matroid ``U_{k,n}``: ``r(X) = min(|X|, k)``."""
    if not 0 <= k <= n:
        raise ValueError(f"uniform matroid needs 0 <= k <= n, got k={k}, n={n}")
    return Matroid(n, rank=RankTable(n, np.array([min(_popcount(x), k) for x in range(1 << n)])))


def circuits(m: Matroid) -> list[frozenset[int]]:
    """Minimal dependent sets, sorted by size then elements."""
    indep = m.independent_masks
    out = []
    for x in range(1 << m.n):
        if x in indep:
            continue
        # minimal dependent iff every single-element deletion is independent
        if all((x & ~(1 << j)) in indep for j in range(m.n) if x >> j & 1):
            out.append(frozenset(elements_of(x)))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def to_polymatroid(m: Matroid) -> DiscretePolymatroid:
    """``D(M)``: same rank table, members are the incidence vectors of independent sets."""
    return DiscretePolymatroid(m.rank)


def verify_multilinear_representation(mats: Sequence[FqMatrix], m: Matroid, k: int,
                                      f: FieldSpec | int) -> bool:
    """True iff ``dim(sum_{i in X} V_i) == k * r(X)`` for every subset X."""
    if len(mats) != m.n:
        raise ValueError(f"{len(mats)} matrices for a matroid on {m.n} elements")
    table = rank_table_from_matrices(mats, f)
    return bool(np.array_equal(table.values, m.rank.values * k))


def representable_columns(a: FqMatrix) -> list[FqMatrix]:
    """Split a matrix into its single columns, one per ground element."""
    return [a.select_columns([j]) for j in range(a.cols)]


def incidence(s: Iterable[int], n: int) -> tuple[int, ...]:
    mask = mask_of(s)
    return tuple(mask >> j & 1 for j in range(n))


__all__ = [
    "Matroid",
    "MatroidVerdict",
    "check_matroid",
    "circuits",
    "incidence",
    "representable_columns",
    "to_polymatroid",
    "uniform",
    "verify_multilinear_representation",
]
