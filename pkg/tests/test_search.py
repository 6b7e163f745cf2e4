from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from sppreserve import (
    BudgetExceededError,
    WeightedGraph,
    dag_extreme_cost,
    dag_extreme_path,
    enumerate_walks,
    fig1_fixture,
    gen_directed_chain,
    gen_path_shortcut,
    shortest_paths,
)

import oracles
from strategies import weighted_graphs


def test_fig1_distances_under_new_weights():
    graph, better = fig1_fixture()
    table = shortest_paths(graph, 0, better)
    assert table.dist[3] == 2
    # the tight route to d is a-b-d
    succ = table.tight_successors()
    assert (1, 0) in succ[0] and (3, 3) in succ[1]


def test_single_vertex_graph():
    g = WeightedGraph(False, 1, ())
    table = shortest_paths(g, 0)
    assert table.dist == (F(0),)
    assert table.tight == ()


def test_fig3_distance():
    graph, _ = gen_path_shortcut(5)
    assert shortest_paths(graph, 0).dist[4] == 4


def test_fig3_walks_within_five():
    graph, _ = gen_path_shortcut(5)
    walks = enumerate_walks(graph, 0, 4, F(5))
    assert walks == [((0, 1, 2, 3, 4), F(4)), ((0, 4), F(5))]


def test_zero_length_walk():
    graph, _ = gen_path_shortcut(5)
    assert enumerate_walks(graph, 2, 2, F(0)) == [((2,), F(0))]
    assert enumerate_walks(graph, 2, 2, F(-1)) == []


def test_chain_walk_enumeration_matches_named_path():
    graph, system = gen_directed_chain(2)
    delta = graph.edges[6][2]
    walks = enumerate_walks(graph, 1, 5, delta + F(2, 9))
    assert walks == [((1, 4, 3, 5), delta + F(2, 9))]
    assert system.entries[(1, 5)] == (1, 4, 3, 5)


def test_walk_budget_is_loud():
    graph, _ = gen_directed_chain(3)
    with pytest.raises(BudgetExceededError):
        enumerate_walks(graph, 0, 5, F(10), budget=3)


@given(weighted_graphs(max_n=10))
@settings(max_examples=30)
def test_dijkstra_against_brute_force(graph):
    for s in range(graph.n):
        table = shortest_paths(graph, s)
        for t in range(graph.n):
            if t == s:
                continue
            best, _ = oracles.shortest_path_set(graph, s, t)
            assert table.dist[t] == best


@given(weighted_graphs(max_n=6))
@settings(max_examples=20)
def test_walks_come_out_lexicographically_sorted(graph):
    for s in range(min(graph.n, 2)):
        table = shortest_paths(graph, s)
        for t in range(graph.n):
            if t == s or table.dist[t] is None:
                continue
            walks = enumerate_walks(graph, s, t, table.dist[t] + 1)
            paths = [p for p, _ in walks]
            assert paths == sorted(paths)


@given(weighted_graphs(max_n=6))
@settings(max_examples=25)
def test_walks_at_distance_bound_are_exactly_shortest_paths(graph):
    for s in range(graph.n):
        table = shortest_paths(graph, s)
        for t in range(graph.n):
            if t == s or table.dist[t] is None:
                continue
            walks = enumerate_walks(graph, s, t, table.dist[t])
            _, best_set = oracles.shortest_path_set(graph, s, t)
            assert {p for p, _ in walks} == best_set


@given(weighted_graphs(max_n=5))
@settings(max_examples=25)
def test_walk_enumeration_against_brute_force(graph):
    # Additive slack keeps the unpruned oracle's walk count finite-small;
    # weight-heterogeneous graphs are covered by the distance-bound test.
    slack = min(graph.weights, default=F(1))
    for s in range(min(graph.n, 3)):
        table = shortest_paths(graph, s)
        for t in range(graph.n):
            if t == s or table.dist[t] is None:
                continue
            bound = table.dist[t] + slack
            assert enumerate_walks(graph, s, t, bound) == oracles.all_walks_within(
                graph, s, t, bound
            )


@given(weighted_graphs(max_n=7))
@settings(max_examples=25)
def test_tight_paths_all_realize_the_distance(graph):
    # min = max = dist(t) when edge costs are the graph's own weights
    for s in range(graph.n):
        table = shortest_paths(graph, s)
        for t in range(graph.n):
            if t == s or table.dist[t] is None:
                continue
            lo = dag_extreme_cost(table, graph.weights, s, t, "min")
            hi = dag_extreme_cost(table, graph.weights, s, t, "max")
            assert lo == hi == table.dist[t]


def test_dag_extreme_on_fig1():
    graph, better = fig1_fixture()
    table = shortest_paths(graph, 0, better)
    lo, lo_path = dag_extreme_path(table, graph.weights, 0, 3, "min")
    hi, hi_path = dag_extreme_path(table, graph.weights, 0, 3, "max")
    assert lo == hi == 102
    assert lo_path == hi_path == (0, 1, 3)


def test_dag_extreme_diamond():
    g = WeightedGraph(True, 4, ((0, 1, F(1)), (0, 2, F(1)), (1, 3, F(1)), (2, 3, F(1))))
    table = shortest_paths(g, 0)
    alt = (F(1), F(2), F(2), F(5))  # route 0-1-3 costs 3, route 0-2-3 costs 7
    assert dag_extreme_cost(table, alt, 0, 3, "min") == 3
    assert dag_extreme_cost(table, alt, 0, 3, "max") == 7


def test_dag_extreme_errors():
    g = WeightedGraph(True, 3, ((0, 1, F(1)),))
    table = shortest_paths(g, 0)
    with pytest.raises(ValueError, match="no tight path"):
        dag_extreme_cost(table, g.weights, 0, 2, "min")
    with pytest.raises(ValueError, match="source"):
        dag_extreme_cost(table, g.weights, 1, 0, "min")
    with pytest.raises(ValueError, match="mode"):
        dag_extreme_cost(table, g.weights, 0, 1, "best")
