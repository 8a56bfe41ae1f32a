"""Hypothesis strategies shared by the property tests."""

from __future__ import annotations

from hypothesis import strategies as st

from polynet.ff import FqMatrix
from polynet.representation import Representation


@st.composite
def representations(draw, max_n: int = 4, max_rows: int = 4, max_cols: int = 2, qs=(2, 3)):
    """Random subspace tuples ``V_1..V_n`` given by spanning columns."""
    q = draw(st.sampled_from(qs))
    rows = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_n))
    mats = []
    for _ in range(n):
        c = draw(st.integers(0, max_cols))
        entries = draw(st.lists(st.integers(0, q - 1), min_size=rows * c, max_size=rows * c))
        mats.append(FqMatrix(rows, c, tuple(entries)))
    return Representation(q, mats, rows)


@st.composite
def rank_tables(draw, max_n: int = 3, max_value: int = 4):
    """Arbitrary non-negative tables with a zero at the empty set (mostly not polymatroids)."""
    n = draw(st.integers(1, max_n))
    vals = draw(st.lists(st.integers(0, max_value), min_size=1 << n, max_size=1 << n))
    vals[0] = 0
    return n, vals


@st.composite
def dag_networks(draw, max_nodes: int = 5, max_edges: int = 6, max_m: int = 2, max_demands: int = 3):
    """Random valid networks: edges go from lower to higher node index."""
    from polynet.network import Network

    n_nodes = draw(st.integers(2, max_nodes))
    nodes = [f"v{i}" for i in range(n_nodes)]
    m = draw(st.integers(1, max_m))
    inputs = [(j, nodes[draw(st.integers(0, n_nodes - 2))], j) for j in range(1, m + 1)]
    pairs = [(a, b) for a in range(n_nodes) for b in range(a + 1, n_nodes)]
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=max_edges))
    edges = [(m + 1 + i, nodes[a], nodes[b]) for i, (a, b) in enumerate(chosen)]
    demands = draw(st.lists(st.tuples(st.sampled_from(nodes[1:]), st.integers(1, m)),
                            min_size=1, max_size=max_demands, unique=True))
    return Network(nodes, inputs, edges, demands)


@st.composite
def random_codes(draw, max_k: int = 2, qs=(2, 3)):
    """A network with a random vector linear code on it.

    Local ``k x k`` coefficient matrices are drawn at random and pushed
    through the network in node order; demands are then chosen among the
    messages each node can actually decode (checked by span enumeration),
    so the code always solves the network.
    """
    import numpy as np

    import oracles
    from polynet.coding import VectorLinearCode
    from polynet.ff import FqMatrix
    from polynet.network import Network

    q = draw(st.sampled_from(qs))
    k = draw(st.integers(1, max_k))
    base = draw(dag_networks(max_nodes=5, max_edges=6, max_m=2, max_demands=1))
    m = base.m
    glob: dict[int, np.ndarray] = {}
    for s in base.inputs:
        g = np.zeros((m * k, k), dtype=np.int64)
        g[(s.msg - 1) * k:s.msg * k, :] = np.eye(k, dtype=np.int64)
        glob[s.edge] = g
    incoming: dict[str, list[int]] = {v: [s.edge for s in base.inputs if s.head == v] for v in base.nodes}
    for e in base.edges:
        incoming[e.head].append(e.id)
    for v in base.nodes:  # nodes are already in topological order
        for e in [e for e in base.edges if e.tail == v]:
            acc = np.zeros((m * k, k), dtype=np.int64)
            for src in incoming[v]:
                w = np.array(draw(st.lists(st.integers(0, q - 1), min_size=k * k, max_size=k * k)))
                acc = acc + glob[src] @ w.reshape(k, k)
            glob[e.id] = acc % q
    demands = []
    for v in base.nodes:
        cols = [tuple(int(x) for x in glob[e][:, c]) for e in incoming[v] for c in range(k)]
        have = oracles.span(cols, q, m * k) if cols else {(0,) * (m * k)}
        for j in range(1, m + 1):
            block = [tuple(int(r == (j - 1) * k + c) for r in range(m * k)) for c in range(k)]
            if all(b in have for b in block) and draw(st.booleans()):
                demands.append((v, j))
    net = Network(base.nodes, base.inputs, base.edges, demands)
    enc = {e: FqMatrix.from_array(g) for e, g in glob.items()}
    return net, VectorLinearCode(q, k, m, enc)


@st.composite
def toy_networks(draw, max_intermediate: int = 3):
    """Small networks for the scalar-search cross-check."""
    return draw(dag_networks(max_nodes=4, max_edges=max_intermediate, max_m=2, max_demands=3))
