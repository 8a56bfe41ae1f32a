"""Building networks from discrete polymatroids.

The construction has three steps. Step 1 creates a source node (with an
input edge) for each element in the support of a vector from ``R(D)``.
Step 2 repeatedly adds a relay pair ``i' -> i`` fed by the nodes in the
support of ``u - eps_i`` for some ``u`` in ``C_i(D)``. Step 3 adds sinks
demanding a source message, fed according to a ``C_i(D)`` vector whose
support is already covered.

Every free choice can be fixed by a :class:`ChoiceScript`; without one, ties
are broken lexicographically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx

from .coding import PolymatroidMapping, VectorLinearCode, check_dpn, code_from_representation, verify_code
from .network import Network
from .polymatroid import DiscretePolymatroid, GroundVector, RankTable, support
from .representation import Representation

Choice = tuple[int, GroundVector]


class ConstructionError(ValueError):
    """A scripted choice is not allowed at the point it is applied."""


@dataclass(frozen=True)
class ChoiceScript:
    step1: GroundVector
    step2: tuple[Choice, ...] = ()
    step3: tuple[Choice, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "step1", tuple(int(x) for x in self.step1))
        for name in ("step2", "step3"):
            fixed = tuple((int(i), tuple(int(x) for x in u)) for i, u in getattr(self, name))
            object.__setattr__(self, name, fixed)


@dataclass(frozen=True)
class ConstructionResult:
    network: Network
    mapping: PolymatroidMapping
    transcript: ChoiceScript
    uncovered: tuple[int, ...] = field(default=())
    """Ground elements Step 2 could never reach."""


def _minus(u: GroundVector, i: int) -> GroundVector:
    return u[: i - 1] + (u[i - 1] - 1,) + u[i:]


def _candidates(d: DiscretePolymatroid, i: int, allowed: set[int]) -> list[GroundVector]:
    """``C_i`` vectors supported inside ``allowed | {i}``, lexicographically."""
    room = set(allowed) | {i}
    return [u for u in d.c_i(i) if support(u) <= room]


class _Builder:
    def __init__(self, d: DiscretePolymatroid):
        self.d = d
        self.nodes: list[str] = []
        self.inputs: list[tuple[int, str, int]] = []
        self.edges: list[tuple[int, str, str]] = []
        self.demands: list[tuple[str, int]] = []
        self.f: dict[int, int] = {}
        self.next_edge = 1
        self.next_sink = d.n + 1
        self.msg_of: dict[int, int] = {}

    def edge(self, tail: str, head: str, image: int) -> None:
        self.edges.append((self.next_edge, tail, head))
        self.f[self.next_edge] = image
        self.next_edge += 1

    def network(self) -> Network:
        return Network(self.nodes, self.inputs, self.edges, self.demands)


def construct(d: DiscretePolymatroid | RankTable, script: ChoiceScript | None = None,
              step3_rounds: int | None = None) -> ConstructionResult:
    """Run the three construction steps on ``d``.

    Source node ``i`` is named ``"i"``, relay nodes ``"i'"``, and sinks are
    numbered ``n+1, n+2, ...`` in creation order. Input edges get ids
    ``1..m`` (message ``j`` is the ``j``-th smallest element of the Step 1
    support); intermediate edges are numbered as they are created.

    With a script, its Step 2 choices are applied first (then any remaining
    eligible elements are added by default order) and its Step 3 choices
    are applied exactly, ignoring ``step3_rounds``. Without one, Step 3 adds
    one sink per distinct ``(i, u)`` pair, or the first ``step3_rounds``.
    """
    if not isinstance(d, DiscretePolymatroid):
        d = DiscretePolymatroid(d)
    b = _Builder(d)

    # Step 1
    r_vecs = d.r_vectors()
    if script is not None:
        if script.step1 not in r_vecs:
            raise ConstructionError(f"step 1 vector {script.step1} is not in R(D)")
        v = script.step1
    else:
        if not r_vecs:
            raise ConstructionError("R(D) is empty")
        best = max(len(support(r)) for r in r_vecs)
        v = min(r for r in r_vecs if len(support(r)) == best)
    sources = sorted(support(v))
    for msg, i in enumerate(sources, start=1):
        b.nodes.append(str(i))
        b.inputs.append((b.next_edge, str(i), msg))
        b.f[b.next_edge] = i
        b.next_edge += 1
        b.msg_of[i] = msg
    covered = set(sources)

    # Step 2
    step2: list[Choice] = []

    def add_relay(i: int, u: GroundVector) -> None:
        if i in covered:
            raise ConstructionError(f"element {i} is already in T")
        if not d.is_c_i(i, u):
            raise ConstructionError(f"{u} is not in C_{i}(D)")
        feed = sorted(support(_minus(u, i)))
        if not set(feed) <= covered:
            raise ConstructionError(f"support of u - eps_{i} is not inside T for {u}")
        relay = f"{i}'"
        b.nodes.append(relay)
        for j in feed:
            b.edge(str(j), relay, j)
        b.nodes.append(str(i))
        b.edge(relay, str(i), i)
        covered.add(i)
        step2.append((i, u))

    for i, u in script.step2 if script is not None else ():
        add_relay(i, u)
    while True:
        pick = None
        for i in range(1, d.n + 1):
            if i in covered:
                continue
            cands = _candidates(d, i, covered)
            if cands:
                pick = (i, cands[0])
                break
        if pick is None:
            break
        add_relay(*pick)

    # Step 3
    step3: list[Choice] = []

    def add_sink(i: int, u: GroundVector) -> None:
        if i not in b.msg_of:
            raise ConstructionError(f"element {i} is not a source (not in M)")
        if not d.is_c_i(i, u):
            raise ConstructionError(f"{u} is not in C_{i}(D)")
        if not support(u) <= covered:
            raise ConstructionError(f"support of {u} is not inside T")
        sink = str(b.next_sink)
        b.next_sink += 1
        b.nodes.append(sink)
        for j in sorted(support(_minus(u, i))):
            b.edge(str(j), sink, j)
        b.demands.append((sink, b.msg_of[i]))
        step3.append((i, u))

    if script is not None:
        for i, u in script.step3:
            add_sink(i, u)
    else:
        pairs = [(i, u) for i in sources for u in _candidates(d, i, covered)]
        if step3_rounds is not None:
            pairs = pairs[:step3_rounds]
        for i, u in pairs:
            add_sink(i, u)

    transcript = ChoiceScript(v, tuple(step2), tuple(step3))
    uncovered = tuple(i for i in range(1, d.n + 1) if i not in covered)
    return ConstructionResult(b.network(), PolymatroidMapping(b.f), transcript, uncovered)


def replay_check(result: ConstructionResult, rep: Representation) -> VectorLinearCode:
    """The code a representation induces on a constructed network; raises if it fails to verify."""
    code = code_from_representation(result.network, rep, result.mapping)
    verdict = verify_code(result.network, code)
    if not verdict:
        raise ValueError(f"induced code does not verify: {verdict}")
    return code


def check_result(result: ConstructionResult, d: DiscretePolymatroid | RankTable):
    t = d.rank if isinstance(d, DiscretePolymatroid) else d
    return check_dpn(result.network, t, result.mapping)


def to_digraph(net: Network) -> nx.DiGraph:
    """Node-labelled digraph with input edges as explicit message nodes."""
    g = nx.DiGraph()
    for v in net.nodes:
        g.add_node(("node", v), demands=tuple(net.demands_at(v)))
    for s in net.inputs:
        g.add_node(("msg", s.msg), demands=("source", s.msg))
        g.add_edge(("msg", s.msg), ("node", s.head))
    for e in net.edges:
        if g.has_edge(("node", e.tail), ("node", e.head)):
            g.edges[("node", e.tail), ("node", e.head)]["mult"] += 1
        else:
            g.add_edge(("node", e.tail), ("node", e.head), mult=1)
    return g


def isomorphic(a: Network, b: Network) -> bool:
    """Graph isomorphism that respects message indices, demands and edge multiplicity."""
    ga, gb = to_digraph(a), to_digraph(b)
    return nx.is_isomorphic(
        ga, gb,
        node_match=lambda x, y: x["demands"] == y["demands"],
        edge_match=lambda x, y: x.get("mult", 1) == y.get("mult", 1),
    )


__all__ = [
    "ChoiceScript",
    "ConstructionError",
    "ConstructionResult",
    "check_result",
    "construct",
    "isomorphic",
    "replay_check",
    "to_digraph",
]
