"""Discrete polymatroids given by their rank functions.

Vectors are plain tuples of non-negative ints. Subsets of the ground set
``{1..n}`` are bitmasks: element ``i`` is bit ``i - 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import _kernels

GroundVector = tuple[int, ...]

MAX_N = 16
MAX_DENSE_N = 20


# -- vector and subset helpers -------------------------------------------------

def mask_of(elements: Iterable[int]) -> int:
    """Bitmask of a set of 1-based ground elements."""
    m = 0
    for i in elements:
        if i < 1:
            raise ValueError(f"ground elements are 1-based, got {i}")
        m |= 1 << (i - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def size(u: Sequence[int]) -> int:
    return sum(u)


def restrict(u: Sequence[int], subset: Iterable[int]) -> tuple[int, ...]:
    """``u(A)``: the components of ``u`` indexed by the 1-based elements of A."""
    return tuple(u[i - 1] for i in sorted(subset))


def support(u: Sequence[int]) -> frozenset[int]:
    """``(u)_{>0}`` as a set of 1-based elements."""
    return frozenset(i + 1 for i, x in enumerate(u) if x > 0)


def support_mask(u: Sequence[int]) -> int:
    m = 0
    for i, x in enumerate(u):
        if x > 0:
            m |= 1 << i
    return m


def join(u: Sequence[int], v: Sequence[int]) -> GroundVector:
    """Componentwise maximum ``u v v``."""
    return tuple(max(a, b) for a, b in zip(u, v))


def leq(u: Sequence[int], v: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(u, v))


def lt(u: Sequence[int], v: Sequence[int]) -> bool:
    return leq(u, v) and tuple(u) != tuple(v)


def unit(i: int, n: int) -> GroundVector:
    """``epsilon_i`` of length ``n`` (``i`` is 1-based)."""
    return tuple(int(j == i - 1) for j in range(n))


def subset_sums(u: Sequence[int]) -> np.ndarray:
    """``|u(A)|`` for every bitmask ``A``."""
    sums = np.zeros(1, dtype=np.int64)
    for x in u:
        sums = np.concatenate([sums, sums + int(x)])
    return sums


# -- rank tables ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class RankTable:
    """Set function on ``2^[n]`` stored densely, indexed by bitmask."""

    n: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=np.int64).ravel().copy()
        if self.n < 0 or self.n > MAX_DENSE_N:
            raise ValueError(f"ground set size {self.n} outside 0..{MAX_DENSE_N}")
        if vals.size != 1 << self.n:
            raise ValueError(f"rank table for n={self.n} needs {1 << self.n} entries, got {vals.size}")
        if (vals < 0).any():
            raise ValueError("rank values must be non-negative")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_values(cls, values: Sequence[int]) -> RankTable:
        """Infer ``n`` from the entry count, which must be a power of two."""
        count = len(values)
        if count == 0 or count & (count - 1):
            raise ValueError(f"entry count {count} is not a power of two")
        return cls(count.bit_length() - 1, np.asarray(values, dtype=np.int64))

    @classmethod
    def from_function(cls, n: int, fn) -> RankTable:
        """Build from ``fn(frozenset_of_1_based_elements)``."""
        return cls(n, np.array([fn(frozenset(elements_of(m))) for m in range(1 << n)], dtype=np.int64))

    def __call__(self, subset: Iterable[int] | int) -> int:
        m = subset if isinstance(subset, (int, np.integer)) else mask_of(subset)
        return int(self.values[m])

    def singleton(self, i: int) -> int:
        return int(self.values[1 << (i - 1)])

    def singletons(self) -> tuple[int, ...]:
        return tuple(int(self.values[1 << i]) for i in range(self.n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RankTable):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.values, other.values)

    def __hash__(self) -> int:
        return hash((self.n, self.values.tobytes()))

    def __repr__(self) -> str:
        shown = self.values.tolist() if self.n <= 4 else f"<{self.values.size} entries>"
        return f"RankTable(n={self.n}, values={shown})"


@dataclass(frozen=True)
class AxiomVerdict:
    """Outcome of :func:`check_rank_axioms`; truthy when all axioms hold."""

    ok: bool
    axiom: str | None = None
    witness: tuple[frozenset[int], ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        sets = ", ".join("{" + ",".join(map(str, sorted(s))) + "}" for s in self.witness)
        return f"violation {self.axiom}: {sets}"


def check_rank_axioms(t: RankTable | Sequence[int]) -> AxiomVerdict:
    """Check (D1) monotonicity, (D2) submodularity and (D3) rho(empty) = 0.

    D3 is reported first, then D1, then D2. Monotonicity and submodularity are
    checked in their local forms (one added element, resp. two), which are
    equivalent to the global statements; the reported witnesses are genuine
    violating pairs.
    """
    if not isinstance(t, RankTable):
        t = RankTable.from_values(list(t))
    if t.values[0] != 0:
        return AxiomVerdict(False, "D3", (frozenset(),))
    code, a, b = _kernels.axiom_scan(t.values, t.n)
    if code == 0:
        return AxiomVerdict(True)
    axiom = "D1" if code == 1 else "D2"
    return AxiomVerdict(False, axiom, (frozenset(elements_of(int(a))), frozenset(elements_of(int(b)))))


def is_matroid_rank(t: RankTable) -> bool:
    if not check_rank_axioms(t):
        return False
    return all(int(t.values[m]) <= bin(m).count("1") for m in range(1 << t.n))


def scale_rank(r: RankTable, k: int) -> RankTable:
    """``rho(X) = k * r(X)`` for a matroid rank function ``r``."""
    if k <= 0:
        raise ValueError("scale factor must be a positive integer")
    if not is_matroid_rank(r):
        raise ValueError("scale_rank expects a matroid rank function")
    return RankTable(r.n, r.values * k)


def modular_table(caps: Sequence[int]) -> RankTable:
    """``rho(A) = sum of caps over A``; its polymatroid is the whole box."""
    return RankTable(len(caps), subset_sums(caps))


# -- membership and derived sets -----------------------------------------------

def _as_table(d: DiscretePolymatroid | RankTable) -> RankTable:
    return d.rank if isinstance(d, DiscretePolymatroid) else d


def membership(u: Sequence[int], t: DiscretePolymatroid | RankTable) -> bool:
    """True iff ``|u(A)| <= rho(A)`` for every subset A."""
    t = _as_table(t)
    if len(u) != t.n:
        raise ValueError(f"vector of length {len(u)} against ground set of size {t.n}")
    if any(x < 0 for x in u):
        return False
    return bool((subset_sums(u) <= t.values).all())


def _require_enumerable(t: RankTable, allow_large: bool) -> None:
    if t.n > MAX_N and not allow_large:
        raise ValueError(f"set enumeration for n={t.n} > {MAX_N} requires allow_large=True")


class DiscretePolymatroid:
    """The polymatroid ``{u : |u(A)| <= rho(A) for all A}`` of a rank table.

    Member and excluded-vector sets are materialized lazily and cached.
    """

    def __init__(self, rank: RankTable | Sequence[int], *, validate: bool = True, allow_large: bool = False):
        if not isinstance(rank, RankTable):
            rank = RankTable.from_values(list(rank))
        if validate:
            verdict = check_rank_axioms(rank)
            if not verdict:
                raise ValueError(f"not a polymatroid rank function: {verdict}")
        self.rank = rank
        self.allow_large = allow_large
        self._caps = rank.singletons()

    @property
    def n(self) -> int:
        return self.rank.n

    def __repr__(self) -> str:
        return f"DiscretePolymatroid({self.rank!r})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DiscretePolymatroid) and self.rank == other.rank

    def __hash__(self) -> int:
        return hash(self.rank)

    def __contains__(self, u: Sequence[int]) -> bool:
        if len(u) != self.n:
            return False
        if any(x < 0 or x > c for x, c in zip(u, self._caps)):
            return False
        if "members" in self.__dict__:
            return tuple(u) in self._member_set
        return membership(u, self.rank)

    # lazily materialized sets

    @cached_property
    def members(self) -> tuple[GroundVector, ...]:
        _require_enumerable(self.rank, self.allow_large)
        caps = np.array(self.rank.singletons(), dtype=np.int64)
        rows = _kernels.box_members(self.rank.values, self.n, caps)
        return tuple(tuple(int(x) for x in r) for r in rows)

    @cached_property
    def _member_set(self) -> frozenset[GroundVector]:
        return frozenset(self.members)

    def box(self) -> Iterable[GroundVector]:
        """All vectors with ``u_i <= rho({i})``, lexicographically."""
        return itertools.product(*(range(c + 1) for c in self.rank.singletons()))

    @cached_property
    def excluded(self) -> tuple[GroundVector, ...]:
        _require_enumerable(self.rank, self.allow_large)
        mem = self._member_set
        return tuple(u for u in self.box() if u not in mem)

    @cached_property
    def bases(self) -> tuple[GroundVector, ...]:
        mem = self._member_set
        caps = self.rank.singletons()
        out = []
        for u in self.members:
            # maximal iff no single coordinate can be raised (downward closure)
            if all(
                u[i] == caps[i] or (u[:i] + (u[i] + 1,) + u[i + 1:]) not in mem
                for i in range(self.n)
            ):
                out.append(u)
        return tuple(out)

    @property
    def rank_value(self) -> int:
        return int(self.rank.values[-1])

    @property
    def rho_max(self) -> int:
        return max(self.rank.singletons(), default=0)

    def d_i(self, i: int) -> tuple[GroundVector, ...]:
        """Excluded vectors whose ``i``-th component is 1."""
        self._check_index(i)
        return tuple(u for u in self._excluded_with_unit(i))

    def _excluded_with_unit(self, i: int) -> Iterable[GroundVector]:
        caps = list(self.rank.singletons())
        if caps[i - 1] < 1:
            return
        ranges = [range(c + 1) for c in caps]
        ranges[i - 1] = range(1, 2)
        mem = self._member_set
        for u in itertools.product(*ranges):
            if u not in mem:
                yield u

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise ValueError(f"element {i} outside ground set 1..{self.n}")

    def _top(self, subset_mask: int, i: int) -> GroundVector:
        # largest box vector supported on subset_mask with component 1 at i
        caps = self._caps
        return tuple(
            (1 if j == i - 1 else caps[j]) if subset_mask >> j & 1 else 0
            for j in range(self.n)
        )

    def is_c_i(self, i: int, u: Sequence[int]) -> bool:
        """Whether ``u`` belongs to ``C_i``.

        Uses that excluded vectors are upward closed inside the box: ``u`` has
        no smaller element of ``D_i`` iff every ``u - eps_j`` (j != i) is a
        member, and no element of ``D_i`` has strictly smaller support iff the
        top box vector on each ``supp(u) - {j}`` is a member.
        """
        self._check_index(i)
        u = tuple(u)
        if len(u) != self.n or u[i - 1] != 1:
            return False
        if any(x < 0 or x > c for x, c in zip(u, self._caps)) or u in self:
            return False
        minus_i = u[: i - 1] + (0,) + u[i:]
        if minus_i not in self:  # condition 1
            return False
        for j in range(self.n):
            if j != i - 1 and u[j] > 0:
                if (u[:j] + (u[j] - 1,) + u[j + 1:]) not in self:  # condition 2
                    return False
        supp = support_mask(u)
        for j in range(self.n):
            if j != i - 1 and supp >> j & 1:
                if self._top(supp & ~(1 << j), i) not in self:  # condition 3
                    return False
        return True

    def c_i(self, i: int) -> tuple[GroundVector, ...]:
        """``C_i`` in lexicographic order (cached per element)."""
        self._check_index(i)
        cache = self.__dict__.setdefault("_c_cache", {})
        if i not in cache:
            if self._caps[i - 1] < 1:
                cache[i] = ()
            else:
                # condition 1 says u = w + eps_i for a member w with w_i = 0; members
                # are lexicographic and the shift fixes coordinate i, so order is kept
                shifted = (w[: i - 1] + (1,) + w[i:] for w in self.members if w[i - 1] == 0)
                cache[i] = tuple(u for u in shifted if self.is_c_i(i, u))
        return cache[i]

    def r_vectors(self) -> tuple[GroundVector, ...]:
        """Members whose non-zero components all equal ``rho_max``, support-maximal."""
        rmax = self.rho_max
        n = self.n
        caps = self.rank.singletons()
        eligible = mask_of(i + 1 for i in range(n) if caps[i] == rmax and rmax > 0)
        cands = []
        sub = eligible
        while True:
            v = tuple(rmax if sub >> j & 1 else 0 for j in range(n))
            if v in self:
                cands.append(sub)
            if sub == 0:
                break
            sub = (sub - 1) & eligible
        keep = [s for s in cands if not any(s != o and (s & o) == s for o in cands)]
        return tuple(sorted(tuple(rmax if s >> j & 1 else 0 for j in range(n)) for s in keep))


# -- functional interface ------------------------------------------------------

def _poly(d: DiscretePolymatroid | RankTable) -> DiscretePolymatroid:
    return d if isinstance(d, DiscretePolymatroid) else DiscretePolymatroid(d)


def enumerate_members(t: DiscretePolymatroid | RankTable) -> tuple[GroundVector, ...]:
    return _poly(t).members


def basis_vectors(d: DiscretePolymatroid | RankTable) -> tuple[GroundVector, ...]:
    return _poly(d).bases


def rank_of(d: DiscretePolymatroid | RankTable) -> int:
    return _poly(d).rank_value


def rho_max(d: DiscretePolymatroid | RankTable) -> int:
    return max(_as_table(d).singletons(), default=0)


def excluded_vectors(d: DiscretePolymatroid | RankTable) -> tuple[GroundVector, ...]:
    return _poly(d).excluded


def d_i(d: DiscretePolymatroid | RankTable, i: int) -> tuple[GroundVector, ...]:
    return _poly(d).d_i(i)


def c_i_vectors(d: DiscretePolymatroid | RankTable, i: int) -> tuple[GroundVector, ...]:
    return _poly(d).c_i(i)


def r_vectors(d: DiscretePolymatroid | RankTable) -> tuple[GroundVector, ...]:
    return _poly(d).r_vectors()
