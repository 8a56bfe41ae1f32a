"""Acyclic networks with input edges, intermediate edges and demands.

Input edges have a head but no tail; each carries one message, numbered
``1..m``. A demand ``(node, msg)`` is resolved to the input edge generating
``msg`` whenever edge-level reasoning needs it, so ``Out(v)`` is a set of
edge ids just like ``In(v)``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, NamedTuple

Node = str


class InputEdge(NamedTuple):
    edge: int
    head: Node
    msg: int


class Edge(NamedTuple):
    id: int
    tail: Node
    head: Node


class Demand(NamedTuple):
    node: Node
    msg: int


@dataclass(frozen=True)
class NetworkVerdict:
    ok: bool
    invariant: str | None = None
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "ok" if self.ok else f"violation {self.invariant}: {self.witness}"


class NetworkError(ValueError):
    pass


@dataclass(frozen=True)
class Network:
    nodes: tuple[Node, ...]
    inputs: tuple[InputEdge, ...]
    edges: tuple[Edge, ...]
    demands: tuple[Demand, ...]

    def __init__(self, nodes: Iterable[Node], inputs: Iterable, edges: Iterable, demands: Iterable):
        object.__setattr__(self, "nodes", tuple(str(v) for v in nodes))
        object.__setattr__(self, "inputs", tuple(InputEdge(int(e), str(h), int(m)) for e, h, m in inputs))
        object.__setattr__(self, "edges", tuple(Edge(int(e), str(t), str(h)) for e, t, h in edges))
        object.__setattr__(self, "demands", tuple(Demand(str(v), int(m)) for v, m in demands))

    @property
    def m(self) -> int:
        return len(self.inputs)

    def edge_ids(self) -> list[int]:
        """All edge ids, sorted."""
        return sorted([s.edge for s in self.inputs] + [e.id for e in self.edges])

    def input_edge_of(self, msg: int) -> int:
        for s in self.inputs:
            if s.msg == msg:
                return s.edge
        raise NetworkError(f"no input edge carries message {msg}")

    def message_of(self, edge: int) -> int | None:
        for s in self.inputs:
            if s.edge == edge:
                return s.msg
        return None

    def is_input(self, edge: int) -> bool:
        return any(s.edge == edge for s in self.inputs)

    def edge(self, edge_id: int) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise NetworkError(f"no intermediate edge {edge_id}")

    def demands_at(self, v: Node) -> list[int]:
        return sorted(d.msg for d in self.demands if d.node == v)

    def sources(self) -> list[Node]:
        heads = {s.head for s in self.inputs}
        return [v for v in self.nodes if v in heads]

    def sinks(self) -> list[Node]:
        wanting = {d.node for d in self.demands}
        return [v for v in self.nodes if v in wanting]


def _find_cycle(nodes: Iterable[Node], edges: Iterable[Edge]) -> list[Node] | None:
    succ: dict[Node, list[Node]] = {}
    for e in edges:
        succ.setdefault(e.tail, []).append(e.head)
    color: dict[Node, int] = {}
    for root in nodes:
        if color.get(root):
            continue
        stack = [(root, iter(succ.get(root, ())))]
        path = [root]
        color[root] = 1
        while stack:
            v, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[v] = 2
                stack.pop()
                path.pop()
                continue
            c = color.get(nxt, 0)
            if c == 1:
                return path[path.index(nxt):] + [nxt]
            if c == 0:
                color[nxt] = 1
                stack.append((nxt, iter(succ.get(nxt, ()))))
                path.append(nxt)
    return None


def validate(net: Network) -> NetworkVerdict:
    nodes = set(net.nodes)
    if len(nodes) != len(net.nodes):
        dup = sorted({v for v in net.nodes if net.nodes.count(v) > 1})
        return NetworkVerdict(False, "distinct node ids", tuple(dup))
    ids = [s.edge for s in net.inputs] + [e.id for e in net.edges]
    if len(set(ids)) != len(ids):
        dup = sorted({i for i in ids if ids.count(i) > 1})
        return NetworkVerdict(False, "distinct edge ids", tuple(dup))
    for s in net.inputs:
        if s.head not in nodes:
            return NetworkVerdict(False, "input edge head exists", (s.edge, s.head))
    for e in net.edges:
        if e.tail not in nodes or e.head not in nodes:
            return NetworkVerdict(False, "edge endpoints exist", (e.id, e.tail, e.head))
    msgs = sorted(s.msg for s in net.inputs)
    if msgs != list(range(1, len(msgs) + 1)):
        return NetworkVerdict(False, "messages are 1..m, one per input edge", tuple(msgs))
    for d in net.demands:
        if d.node not in nodes:
            return NetworkVerdict(False, "demanding node exists", (d.node, d.msg))
        if d.msg not in msgs:
            return NetworkVerdict(False, "demanded message exists", (d.node, d.msg))
    cycle = _find_cycle(net.nodes, net.edges)
    if cycle is not None:
        return NetworkVerdict(False, "acyclicity", tuple(cycle))
    return NetworkVerdict(True)


def in_out_sets(net: Network, v: Node) -> tuple[frozenset[int], frozenset[int]]:
    """``(In(v), Out(v))`` as sets of edge ids."""
    if v not in net.nodes:
        raise NetworkError(f"unknown node {v!r}")
    ins = {s.edge for s in net.inputs if s.head == v} | {e.id for e in net.edges if e.head == v}
    outs = {e.id for e in net.edges if e.tail == v} | {net.input_edge_of(m) for m in net.demands_at(v)}
    return frozenset(ins), frozenset(outs)


def in_edges(net: Network) -> dict[Node, list[int]]:
    """``In(v)`` for every node, each list sorted by edge id."""
    out: dict[Node, list[int]] = {v: [] for v in net.nodes}
    for s in net.inputs:
        out[s.head].append(s.edge)
    for e in net.edges:
        out[e.head].append(e.id)
    for v in out:
        out[v].sort()
    return out


def ancestral_order(net: Network, priority=None) -> list[int]:
    """Input edges by message index, then intermediate edges topologically.

    An intermediate edge becomes available once every edge entering its
    tail has been placed; among available edges the smallest
    ``(priority(edge_id), edge_id)`` goes next (default: edge id alone).
    """
    order = [s.edge for s in sorted(net.inputs, key=lambda s: s.msg)]
    placed = set(order)
    ins = in_edges(net)
    waiting: dict[int, set[int]] = {}
    by_edge: dict[int, list[int]] = {}
    heap: list[tuple] = []
    key = (lambda e: (e,)) if priority is None else (lambda e: (priority(e), e))
    for e in net.edges:
        need = set(ins[e.tail]) - placed
        waiting[e.id] = need
        for x in need:
            by_edge.setdefault(x, []).append(e.id)
        if not need:
            heapq.heappush(heap, key(e.id))
    while heap:
        eid = heapq.heappop(heap)[-1]
        order.append(eid)
        for nxt in by_edge.get(eid, ()):
            waiting[nxt].discard(eid)
            if not waiting[nxt]:
                heapq.heappush(heap, key(nxt))
    if len(order) != len(net.inputs) + len(net.edges):
        raise NetworkError("network has a directed cycle; no ancestral order exists")
    return order
