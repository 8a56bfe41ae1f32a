"""Pure-Python implementations of the hot loops.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and the same output, down to the order of reported witnesses.
"""

from __future__ import annotations

import numpy as np


def _reduce(vec: list[int], basis: list[list[int]], pivots: list[int], p: int) -> None:
    for b, c in zip(basis, pivots):
        a = vec[c]
        if a:
            for t in range(c, len(vec)):
                if b[t]:
                    vec[t] = (vec[t] - a * b[t]) % p


def _insert(vec: list[int], basis: list[list[int]], pivots: list[int], p: int) -> bool:
    _reduce(vec, basis, pivots, p)
    for c, a in enumerate(vec):
        if a:
            inv = pow(a, -1, p)
            basis.append([(x * inv) % p for x in vec])
            pivots.append(c)
            return True
    return False


def rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank of a 2-D integer array over GF(p); entries must already be in [0, p)."""
    if a.size == 0:
        return 0
    # columns are reduced as vectors; rank(A) == rank of its column set
    basis: list[list[int]] = []
    pivots: list[int] = []
    for j in range(a.shape[1]):
        _insert([int(x) for x in a[:, j]], basis, pivots, p)
    return len(basis)


def rank_table(cols: np.ndarray, offsets: np.ndarray, p: int) -> np.ndarray:
    """dim of the span of the columns of every union of column groups.

    ``cols`` is rows x total; group ``i`` owns columns ``offsets[i]:offsets[i+1]``.
    Entry ``mask`` of the result is the rank of the groups whose bits are set.
    """
    n = len(offsets) - 1
    out = np.zeros(1 << n, dtype=np.int64)
    groups = [
        [[int(x) for x in cols[:, j]] for j in range(offsets[i], offsets[i + 1])]
        for i in range(n)
    ]

    rows = cols.shape[0]
    if p == 2:
        return _rank_table_gf2(groups, n, rows, out)

    def visit(start: int, mask: int, basis: list[list[int]], pivots: list[int]) -> None:
        out[mask] = len(basis)
        if len(basis) == rows and start < n:
            # full rank already: every superset built from the remaining elements is full too
            out[mask | (np.arange(1 << (n - start), dtype=np.int64) << start)] = rows
            return
        for el in range(start, n):
            b = [row[:] for row in basis]
            pv = pivots[:]
            for col in groups[el]:
                _insert(col[:], b, pv, p)
            visit(el + 1, mask | (1 << el), b, pv)

    visit(0, 0, [], [])
    return out


def _rank_table_gf2(groups: list[list[list[int]]], n: int, rows: int, out: np.ndarray) -> np.ndarray:
    """GF(2) case with vectors packed into ints and an XOR basis kept sorted by leading bit."""
    packed = [[int("".join(map(str, col)), 2) if col else 0 for col in g] for g in groups]

    def visit(start: int, mask: int, basis: tuple[int, ...]) -> None:
        out[mask] = len(basis)
        if len(basis) == rows and start < n:
            out[mask | (np.arange(1 << (n - start), dtype=np.int64) << start)] = rows
            return
        for el in range(start, n):
            b = list(basis)
            for v in packed[el]:
                for x in b:
                    v = min(v, v ^ x)
                if v:
                    b.append(v)
                    b.sort(reverse=True)
            visit(el + 1, mask | (1 << el), tuple(b))

    visit(0, 0, ())
    return out


def axiom_scan(values: np.ndarray, n: int) -> tuple[int, int, int]:
    """Local monotonicity and submodularity scan.

    Returns ``(0, 0, 0)`` when both hold, ``(1, A, B)`` for a monotonicity
    failure with ``A`` a subset of ``B`` and ``values[A] > values[B]``, or
    ``(2, A, B)`` for a submodularity failure on the pair ``A, B``.
    """
    v = np.asarray(values, dtype=np.int64)
    masks = np.arange(1 << n, dtype=np.int64)
    for i in range(n):
        bi = 1 << i
        base = masks[(masks & bi) == 0]
        bad = np.nonzero(v[base] > v[base | bi])[0]
        if bad.size:
            a = int(base[bad[0]])
            return 1, a, a | bi
    for i in range(n):
        bi = 1 << i
        for j in range(i + 1, n):
            bj = 1 << j
            base = masks[(masks & (bi | bj)) == 0]
            lhs = v[base | bi] + v[base | bj]
            rhs = v[base | bi | bj] + v[base]
            bad = np.nonzero(rhs > lhs)[0]
            if bad.size:
                a = int(base[bad[0]])
                return 2, a | bi, a | bj
    return 0, 0, 0


def box_members(values: np.ndarray, n: int, caps: np.ndarray) -> np.ndarray:
    """All integer vectors u with 0 <= u_i <= caps[i] and |u(A)| <= values[A].

    Rows come out in lexicographic order.
    """
    v = np.asarray(values, dtype=np.int64)
    found: list[tuple[int, ...]] = []
    cur = [0] * n
    sums = np.zeros(1 << n, dtype=np.int64)

    def visit(j: int) -> None:
        if j == n:
            found.append(tuple(cur))
            return
        width = 1 << j
        # largest admissible value for coordinate j given the prefix sums
        slack = int(np.min(v[width: 2 * width] - sums[:width]))
        top = min(slack, int(caps[j]))
        for c in range(top + 1):
            cur[j] = c
            sums[width: 2 * width] = sums[:width] + c
            visit(j + 1)
        cur[j] = 0

    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    visit(0)
    if not found:
        return np.zeros((0, n), dtype=np.int64)
    return np.array(found, dtype=np.int64)
