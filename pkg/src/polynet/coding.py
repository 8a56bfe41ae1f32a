"""Vector linear network codes and the discrete-polymatroidal-network check.

A code of dimension ``k`` over GF(q) for a network with ``m`` messages
assigns every edge a global encoding matrix ``M_e`` of shape ``mk x k``;
the edge carries ``x M_e`` where ``x`` is the row vector of all message
symbols.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .ff import (
    FieldSpec,
    FqMatrix,
    as_field,
    column_basis,
    hstack,
    mat_rank,
    pad_columns,
    rref,
    solve_right,
)
from .network import Network, NetworkError, ancestral_order, in_edges, in_out_sets, validate
from .polymatroid import RankTable, mask_of, membership
from .representation import Representation, normalize_input_basis, rank_table_from_matrices

DEFAULT_BUDGET = 2 ** 32


class CodeShapeError(ValueError):
    """Encodings are missing or have the wrong shape for the network."""


class BudgetExceeded(RuntimeError):
    """The scalar search space is larger than the configured budget."""


@dataclass(frozen=True)
class Verdict:
    ok: bool
    rule: str | None = None
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "ok" if self.ok else f"invalid {self.rule}: {self.witness}"


@dataclass(frozen=True)
class VectorLinearCode:
    field: FieldSpec
    k: int
    m: int
    encodings: Mapping[int, FqMatrix]

    def __post_init__(self) -> None:
        object.__setattr__(self, "field", as_field(self.field))
        object.__setattr__(self, "encodings", dict(sorted(self.encodings.items())))

    def __getitem__(self, edge: int) -> FqMatrix:
        return self.encodings[edge]


@dataclass(frozen=True)
class PolymatroidMapping:
    """The map ``f`` from edge ids to 1-based ground elements."""

    f: Mapping[int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "f", dict(sorted((int(e), int(i)) for e, i in self.f.items())))

    def __call__(self, edge: int) -> int:
        return self.f[edge]

    def image(self, edges) -> frozenset[int]:
        return frozenset(self.f[e] for e in edges)


def message_block(j: int, m: int, k: int) -> FqMatrix:
    """The ``j``-th ``mk x k`` block column of the identity."""
    return FqMatrix.from_columns(
        [tuple(int(r == (j - 1) * k + c) for r in range(m * k)) for c in range(k)], m * k
    )


def _check_shapes(net: Network, code: VectorLinearCode) -> None:
    if code.m != net.m:
        raise CodeShapeError(f"code is for {code.m} messages, network has {net.m}")
    want = (code.m * code.k, code.k)
    for e in net.edge_ids():
        if e not in code.encodings:
            raise CodeShapeError(f"no encoding for edge {e}")
        if code.encodings[e].shape != want:
            raise CodeShapeError(f"edge {e} encoding has shape {code.encodings[e].shape}, expected {want}")
        if any(x >= code.field.p for x in code.encodings[e].entries):
            raise CodeShapeError(f"edge {e} encoding has entries outside GF({code.field.p})")


def verify_code(net: Network, code: VectorLinearCode) -> Verdict:
    """Check (N1) input edges carry their message, (N3) every intermediate
    edge is a linear function of the edges entering its tail, and (N2) every
    demanded message is decodable from the edges entering the demanding node.
    """
    _check_shapes(net, code)
    f, k, m = code.field, code.k, code.m
    enc = code.encodings
    for s in net.inputs:
        if enc[s.edge] != message_block(s.msg, m, k):
            return Verdict(False, "N1", (s.edge,))
    ins = in_edges(net)
    rows = m * k
    for e in net.edges:
        a = hstack([enc[i] for i in ins[e.tail]], rows)
        if solve_right(a, enc[e.id], f) is None:
            return Verdict(False, "N3", (e.id,))
    for d in net.demands:
        a = hstack([enc[i] for i in ins[d.node]], rows)
        if solve_right(a, message_block(d.msg, m, k), f) is None:
            return Verdict(False, "N2", (d.node, d.msg))
    return Verdict(True)


def local_matrices(net: Network, code: VectorLinearCode) -> dict[int, list[tuple[int, FqMatrix]]]:
    """Local encoding witnesses: ``M_e = sum_p M_{i_p} W_p`` for each intermediate edge."""
    _check_shapes(net, code)
    ins = in_edges(net)
    out = {}
    for e in net.edges:
        srcs = ins[e.tail]
        a = hstack([code.encodings[i] for i in srcs], code.m * code.k)
        x = solve_right(a, code.encodings[e.id], code.field)
        if x is None:
            raise ValueError(f"edge {e.id} is not a function of its tail's inputs")
        rows = x.row_list()
        out[e.id] = [
            (i, FqMatrix.from_rows(rows[p * code.k:(p + 1) * code.k], code.k)) for p, i in enumerate(srcs)
        ]
    return out


# -- discrete polymatroidal networks ---------------------------------------------

def check_dpn(net: Network, t: RankTable, f: PolymatroidMapping | Mapping[int, int]) -> Verdict:
    """(DN1) f is one-one on input edges; (DN2) the indicator of f(S) scaled
    by rho_max is a member; (DN3) rho(f(In(x))) == rho(f(In(x) u Out(x)))
    at every node.
    """
    if not isinstance(f, PolymatroidMapping):
        f = PolymatroidMapping(f)
    missing = [e for e in net.edge_ids() if e not in f.f]
    if missing:
        raise ValueError(f"mapping is not total: no image for edges {missing}")
    bad = [e for e, i in f.f.items() if not 1 <= i <= t.n]
    if bad:
        raise ValueError(f"edges {bad} map outside the ground set 1..{t.n}")

    images = [f(s.edge) for s in net.inputs]
    if len(set(images)) != len(images):
        clash = sorted(s.edge for s in net.inputs if images.count(f(s.edge)) > 1)
        return Verdict(False, "DN1", tuple(clash))

    rmax = max(t.singletons(), default=0)
    u = [0] * t.n
    for i in images:
        u[i - 1] = rmax
    if not membership(u, t):
        return Verdict(False, "DN2", tuple(u))

    for v in net.nodes:
        ins, outs = in_out_sets(net, v)
        a = mask_of(f.image(ins))
        b = a | mask_of(f.image(outs))
        if t(a) != t(b):
            return Verdict(False, "DN3", (v,))
    return Verdict(True)


def _prepare(a: FqMatrix, k: int, field: FieldSpec) -> FqMatrix:
    basis = column_basis(a, field)
    if basis.cols > k:
        raise ValueError(f"subspace of dimension {basis.cols} cannot ride an edge of width {k}")
    return pad_columns(basis, k)


def code_from_representation(net: Network, rep: Representation, f: PolymatroidMapping | Mapping[int, int],
                             k: int | None = None) -> VectorLinearCode:
    """Global encodings ``M_e = A'_{f(e)}`` after moving the input subspaces
    to the standard basis.

    Each ``A_i`` is first replaced by a column basis of its span, padded with
    zero columns to width ``k`` (default: ``rho_max`` of the representation).
    """
    if not isinstance(f, PolymatroidMapping):
        f = PolymatroidMapping(f)
    table = rank_table_from_matrices(rep)
    k = max(table.singletons(), default=0) if k is None else k
    if k <= 0:
        raise ValueError("code dimension must be positive")
    m = net.m
    field = rep.field
    prepared = [_prepare(a, k, field) for a in rep.matrices]
    inputs = [f(net.input_edge_of(j)) for j in range(1, m + 1)]
    if len(set(inputs)) != m:
        raise ValueError("input edges must map to distinct ground elements")

    if rep.rows == k * m:
        coords = normalize_input_basis(Representation(field, prepared, rep.rows), m, k, inputs).matrices
    else:
        b = hstack([prepared[i - 1] for i in inputs], rep.rows)
        if mat_rank(b, field) != k * m:
            raise ValueError("input subspaces do not span k*m dimensions")
        coords = []
        for i, a in enumerate(prepared, start=1):
            x = solve_right(b, a, field)
            if x is None and i in f.image(net.edge_ids()):
                raise ValueError(f"subspace {i} leaves the span of the input subspaces")
            coords.append(x)
    enc = {e: coords[f(e) - 1] for e in net.edge_ids()}
    return VectorLinearCode(field, k, m, enc)


def polymatroid_from_code(net: Network, code: VectorLinearCode) -> tuple[RankTable, PolymatroidMapping]:
    """Rank table of the column spans of the global encodings, edge i -> element i.

    Edges are numbered by ascending edge id.
    """
    verdict = verify_code(net, code)
    if not verdict:
        raise ValueError(f"code does not solve the network: {verdict}")
    ids = net.edge_ids()
    rep = Representation(code.field, [code.encodings[e] for e in ids], code.m * code.k)
    return rank_table_from_matrices(rep), PolymatroidMapping({e: j for j, e in enumerate(ids, start=1)})


# -- scalar search -----------------------------------------------------------------

def _budget_from_env() -> int:
    raw = os.environ.get("POLYNET_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def coefficient_options(d: int, q: int, reduce_symmetry: bool = True) -> list[tuple[int, ...]]:
    """Local coefficient vectors for an edge whose tail has in-degree ``d``.

    With ``reduce_symmetry`` only non-zero vectors whose first non-zero entry
    is 1 are kept: rescaling an edge by a unit, or replacing a zero edge by a
    non-zero one, never destroys solvability, since downstream coefficients
    can absorb the scale or ignore the edge.
    """
    vecs = list(itertools.product(range(q), repeat=d))
    if not reduce_symmetry or d == 0:
        return vecs
    return [v for v in vecs if any(v) and next(x for x in v if x) == 1]


def _in_span(vectors: Sequence[tuple[int, ...]], target: tuple[int, ...], q: int) -> bool:
    if not vectors:
        return not any(target)
    rows = [list(v) for v in vectors]
    _, piv = rref(rows, q)
    _, piv2 = rref(rows + [list(target)], q)
    return len(piv) == len(piv2)


@dataclass
class ScalarSearch:
    """Backtracking over local coefficients, edge by edge in an ancestral order.

    Edges with fewer options are scheduled first among those available, so
    demands are checked (and dead branches cut) as early as possible. The
    first solution in lexicographic option order is returned.
    """

    net: Network
    field: FieldSpec
    budget: int | None = None
    reduce_symmetry: bool = True
    nodes_visited: int = field(default=0, init=False)
    space_size: int = field(default=0, init=False)

    def __post_init__(self) -> None:
        self.field = as_field(self.field)
        verdict = validate(self.net)
        if not verdict:
            raise NetworkError(f"invalid network: {verdict}")
        q = self.field.p
        self.ins = in_edges(self.net)
        self.options = {
            e.id: coefficient_options(len(self.ins[e.tail]), q, self.reduce_symmetry) for e in self.net.edges
        }
        self.space_size = 1
        for opts in self.options.values():
            self.space_size *= len(opts)
        self.order = ancestral_order(self.net, priority=lambda e: len(self.options[e]))

    def run(self) -> VectorLinearCode | None:
        budget = _budget_from_env() if self.budget is None else self.budget
        if self.space_size > budget:
            raise BudgetExceeded(f"search space {self.space_size} exceeds budget {budget}")
        net, q, m = self.net, self.field.p, self.net.m
        glob: dict[int, tuple[int, ...]] = {}
        for s in net.inputs:
            glob[s.edge] = tuple(int(j == s.msg - 1) for j in range(m))

        # demand checks fire when the last edge entering the demanding node is set
        pending: dict[int, list] = {}
        ready_now = []
        for v in net.nodes:
            wants = net.demands_at(v)
            if not wants:
                continue
            inter = [e for e in self.ins[v] if not net.is_input(e)]
            if inter:
                last = max(inter, key=self.order.index)
                pending.setdefault(last, []).append((v, wants))
            else:
                ready_now.append((v, wants))

        def satisfied(v, wants) -> bool:
            vecs = [glob[e] for e in self.ins[v]]
            return all(_in_span(vecs, tuple(int(j == w - 1) for j in range(m)), q) for w in wants)

        if not all(satisfied(v, w) for v, w in ready_now):
            return None

        inter_order = [e for e in self.order if not net.is_input(e)]
        chosen: dict[int, tuple[int, ...]] = {}

        def extend(pos: int) -> bool:
            if pos == len(inter_order):
                return True
            eid = inter_order[pos]
            srcs = [glob[i] for i in self.ins[net.edge(eid).tail]]
            for coeffs in self.options[eid]:
                self.nodes_visited += 1
                vec = [0] * m
                for c, g in zip(coeffs, srcs):
                    if c:
                        for j in range(m):
                            vec[j] = (vec[j] + c * g[j]) % q
                glob[eid] = tuple(vec)
                chosen[eid] = coeffs
                if all(satisfied(v, w) for v, w in pending.get(eid, ())) and extend(pos + 1):
                    return True
            del glob[eid]
            del chosen[eid]
            return False

        if not extend(0):
            return None
        enc = {e: FqMatrix.from_columns([g], m) for e, g in glob.items()}
        self.local = dict(chosen)
        return VectorLinearCode(self.field, 1, m, enc)


def search_scalar_solution(net: Network, f: FieldSpec | int, budget: int | None = None,
                           reduce_symmetry: bool = True) -> VectorLinearCode | None:
    """A scalar linear solution over GF(q), or None if none exists.

    Raises :class:`BudgetExceeded` (distinct from None) when the reduced
    search space is larger than ``budget`` (default 2**32, or the
    ``POLYNET_BUDGET`` environment variable).
    """
    return ScalarSearch(net, as_field(f), budget, reduce_symmetry).run()


__all__ = [
    "BudgetExceeded",
    "CodeShapeError",
    "PolymatroidMapping",
    "ScalarSearch",
    "Verdict",
    "VectorLinearCode",
    "check_dpn",
    "code_from_representation",
    "coefficient_options",
    "local_matrices",
    "message_block",
    "polymatroid_from_code",
    "search_scalar_solution",
    "verify_code",
]
