# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the loops in ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

cnp.import_array()

ctypedef long long i64


cdef i64 _inv(i64 a, i64 p):
    cdef i64 r = 1, e = p - 2
    a %= p
    while e > 0:
        if e & 1:
            r = (r * a) % p
        a = (a * a) % p
        e >>= 1
    return r


cdef int _insert(i64* vec, i64* basis, int* pivots, int rank, int rows, i64 p):
    """Reduce ``vec`` against ``basis`` and append it if independent. Returns new rank."""
    cdef int r, t, c
    cdef i64 a, inv
    cdef i64* b
    for r in range(rank):
        c = pivots[r]
        a = vec[c]
        if a != 0:
            b = basis + r * rows
            for t in range(c, rows):
                if b[t] != 0:
                    vec[t] = (vec[t] - a * b[t]) % p
                    if vec[t] < 0:
                        vec[t] += p
    for c in range(rows):
        if vec[c] != 0:
            inv = _inv(vec[c], p)
            b = basis + rank * rows
            for t in range(rows):
                b[t] = (vec[t] * inv) % p
            pivots[rank] = c
            return rank + 1
    return rank


def rank_mod_p(cnp.ndarray a_in, i64 p):
    cdef cnp.ndarray[i64, ndim=2] a = np.ascontiguousarray(a_in, dtype=np.int64)
    cdef int rows = a.shape[0], ncols = a.shape[1]
    if rows == 0 or ncols == 0:
        return 0
    cdef i64* basis = <i64*> malloc(rows * rows * sizeof(i64))
    cdef int* pivots = <int*> malloc(rows * sizeof(int))
    cdef i64* vec = <i64*> malloc(rows * sizeof(i64))
    cdef int rank = 0, j, t
    try:
        for j in range(ncols):
            if rank == rows:
                break
            for t in range(rows):
                vec[t] = a[t, j]
            rank = _insert(vec, basis, pivots, rank, rows, p)
    finally:
        free(basis)
        free(pivots)
        free(vec)
    return rank


cdef void _visit(int start, long mask, int depth, int rank, int n, int rows, i64 p,
                 i64* cols, long* offsets, i64* stack, int* pstack, i64* vec,
                 i64* out):
    cdef int el, j, t, r
    cdef i64* parent = stack + depth * rows * rows
    cdef int* ppiv = pstack + depth * rows
    cdef i64* child = stack + (depth + 1) * rows * rows
    cdef int* cpiv = pstack + (depth + 1) * rows
    out[mask] = rank
    for el in range(start, n):
        memcpy(child, parent, rank * rows * sizeof(i64))
        memcpy(cpiv, ppiv, rank * sizeof(int))
        r = rank
        for j in range(offsets[el], offsets[el + 1]):
            if r == rows:
                break
            for t in range(rows):
                vec[t] = cols[t * offsets[n] + j]
            r = _insert(vec, child, cpiv, r, rows, p)
        _visit(el + 1, mask | (1L << el), depth + 1, r, n, rows, p,
               cols, offsets, stack, pstack, vec, out)


def rank_table(cnp.ndarray cols_in, cnp.ndarray offsets_in, i64 p):
    cdef cnp.ndarray[i64, ndim=2] cols = np.ascontiguousarray(cols_in, dtype=np.int64)
    cdef cnp.ndarray[long, ndim=1] offsets = np.ascontiguousarray(offsets_in, dtype=np.int_)
    cdef int n = offsets.shape[0] - 1
    cdef int rows = cols.shape[0]
    cdef cnp.ndarray[i64, ndim=1] out = np.zeros(1 << n, dtype=np.int64)
    if rows == 0:
        return out
    cdef i64* stack = <i64*> malloc((n + 2) * rows * rows * sizeof(i64))
    cdef int* pstack = <int*> malloc((n + 2) * rows * sizeof(int))
    cdef i64* vec = <i64*> malloc(rows * sizeof(i64))
    try:
        _visit(0, 0, 0, 0, n, rows, p, &cols[0, 0], &offsets[0], stack, pstack,
               vec, &out[0])
    finally:
        free(stack)
        free(pstack)
        free(vec)
    return out


def axiom_scan(cnp.ndarray values_in, int n):
    cdef cnp.ndarray[i64, ndim=1] v = np.ascontiguousarray(values_in, dtype=np.int64)
    cdef long size = 1L << n, a, bi, bj
    cdef int i, j
    for i in range(n):
        bi = 1L << i
        for a in range(size):
            if a & bi:
                continue
            if v[a] > v[a | bi]:
                return 1, a, a | bi
    for i in range(n):
        bi = 1L << i
        for j in range(i + 1, n):
            bj = 1L << j
            for a in range(size):
                if a & (bi | bj):
                    continue
                if v[a | bi | bj] + v[a] > v[a | bi] + v[a | bj]:
                    return 2, a | bi, a | bj
    return 0, 0, 0


cdef class _Growable:
    cdef list chunks
    cdef cnp.ndarray buf
    cdef long used
    cdef int n

    def __init__(self, int n):
        self.n = n
        self.chunks = []
        self.buf = np.zeros((4096, max(n, 1)), dtype=np.int64)
        self.used = 0

    cdef void push(self, i64* cur):
        cdef int t
        cdef i64[:, :] view
        if self.used == self.buf.shape[0]:
            self.chunks.append(self.buf)
            self.buf = np.zeros((self.buf.shape[0] * 2, max(self.n, 1)), dtype=np.int64)
            self.used = 0
        view = self.buf
        for t in range(self.n):
            view[self.used, t] = cur[t]
        self.used += 1

    def result(self):
        parts = self.chunks + [self.buf[: self.used]]
        return np.concatenate(parts, axis=0)[:, : self.n]


cdef void _box(int j, int n, i64* v, i64* caps, i64* sums, i64* cur, _Growable out):
    cdef long width, a
    cdef i64 slack, top, c
    if j == n:
        out.push(cur)
        return
    width = 1L << j
    slack = v[width] - sums[0]
    for a in range(1, width):
        if v[width + a] - sums[a] < slack:
            slack = v[width + a] - sums[a]
    top = slack if slack < caps[j] else caps[j]
    c = 0
    while c <= top:
        cur[j] = c
        for a in range(width):
            sums[width + a] = sums[a] + c
        _box(j + 1, n, v, caps, sums, cur, out)
        c += 1
    cur[j] = 0


def box_members(cnp.ndarray values_in, int n, cnp.ndarray caps_in):
    cdef cnp.ndarray[i64, ndim=1] v = np.ascontiguousarray(values_in, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] caps = np.ascontiguousarray(caps_in, dtype=np.int64)
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] sums = np.zeros(1 << n, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] cur = np.zeros(n, dtype=np.int64)
    out = _Growable(n)
    _box(0, n, &v[0], &caps[0], &sums[0], &cur[0], out)
    return out.result()
