from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given

from polynet.network import Network, NetworkError, ancestral_order, in_edges, in_out_sets, validate
from strategies import dag_networks


def _butterfly() -> Network:
    return Network(
        ["s", "a", "b", "c", "d", "t1", "t2"],
        [(1, "s", 1), (2, "s", 2)],
        [(3, "s", "a"), (4, "s", "b"), (5, "a", "t1"), (6, "a", "c"), (7, "b", "c"),
         (8, "b", "t2"), (9, "c", "d"), (10, "d", "t1"), (11, "d", "t2")],
        [("t1", 2), ("t2", 1)],
    )


@pytest.mark.parametrize("name", ["fig6", "fig8", "mnetwork"])
def test_fixture_networks_are_valid(fx, name):
    assert validate(fx(name))


def test_mnetwork_shape(fx):
    net = fx("mnetwork")
    assert net.m == 4 and len(net.edges) == 16
    assert net.sources() == ["s12", "s34"]
    assert net.sinks() == ["t13", "t14", "t23", "t24"]
    assert net.demands_at("t14") == [1, 4]


def test_in_out_sets_resolve_demands_to_input_edges():
    net = _butterfly()
    assert in_out_sets(net, "s") == (frozenset({1, 2}), frozenset({3, 4}))
    assert in_out_sets(net, "t1") == (frozenset({5, 10}), frozenset({2}))
    with pytest.raises(NetworkError):
        in_out_sets(net, "zz")


@pytest.mark.parametrize("broken,invariant", [
    (Network(["a", "a"], [(1, "a", 1)], [], []), "distinct node ids"),
    (Network(["a", "b"], [(1, "a", 1)], [(1, "a", "b")], []), "distinct edge ids"),
    (Network(["a"], [(1, "x", 1)], [], []), "input edge head exists"),
    (Network(["a"], [(1, "a", 1)], [(2, "a", "x")], []), "edge endpoints exist"),
    (Network(["a"], [(1, "a", 2)], [], []), "messages are 1..m, one per input edge"),
    (Network(["a"], [(1, "a", 1)], [], [("x", 1)]), "demanding node exists"),
    (Network(["a"], [(1, "a", 1)], [], [("a", 3)]), "demanded message exists"),
    (Network(["a", "b"], [(1, "a", 1)], [(2, "a", "b"), (3, "b", "a")], []), "acyclicity"),
])
def test_validate_reports_each_invariant(broken, invariant):
    v = validate(broken)
    assert not v and v.invariant == invariant


def test_cycle_witness_is_a_cycle():
    net = Network(["a", "b", "c"], [(1, "a", 1)], [(2, "a", "b"), (3, "b", "c"), (4, "c", "b")], [])
    v = validate(net)
    cyc = list(v.witness)
    assert cyc[0] == cyc[-1] and set(cyc) == {"b", "c"}
    with pytest.raises(NetworkError):
        ancestral_order(net)


def test_ancestral_order_respects_priority():
    net = _butterfly()
    order = ancestral_order(net)
    assert order[:2] == [1, 2]
    late = ancestral_order(net, priority=lambda e: -e)
    assert late[:2] == [1, 2] and late[2] == 4


@given(dag_networks())
def test_ancestral_order_is_valid(net):
    assert validate(net)
    order = ancestral_order(net)
    assert sorted(order) == net.edge_ids()
    pos = {e: i for i, e in enumerate(order)}
    ins = in_edges(net)
    for e in net.edges:
        assert all(pos[x] < pos[e.id] for x in ins[e.tail])


@given(dag_networks())
def test_validate_agrees_with_networkx_on_cycles(net):
    extra = Network(net.nodes, net.inputs, list(net.edges) + [(99, net.nodes[-1], net.nodes[0])], net.demands)
    g = nx.MultiDiGraph()
    g.add_nodes_from(extra.nodes)
    g.add_edges_from((e.tail, e.head) for e in extra.edges)
    assert bool(validate(extra)) == nx.is_directed_acyclic_graph(g)
