import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from sppreserve import (
    WeightMap,
    WeightedGraph,
    aspect_ratio,
    check_exact,
    fig1_fixture,
    recombine,
    undirected_to_directed,
)

from strategies import weighted_graphs, positive_fractions


def test_single_edge_forward_and_back():
    g = WeightedGraph(False, 2, ((0, 1, F(3)),))
    d = undirected_to_directed(g)
    assert d.directed and d.edges == ((0, 1, F(3)), (1, 0, F(3)))
    back = recombine(WeightMap((F(1), F(2))))
    assert back.weights == (F(3),)


def test_recombine_equal_weights_doubles():
    assert recombine(WeightMap((F(5), F(5)))).weights == (F(10),)


def test_forward_rejects_directed_input():
    g = WeightedGraph(True, 2, ((0, 1, F(1)),))
    with pytest.raises(ValueError):
        undirected_to_directed(g)
    with pytest.raises(ValueError, match="odd"):
        recombine(WeightMap((F(1),)))


def test_fig1_doubled_keeps_aspect_ratio():
    graph, _ = fig1_fixture()
    doubled = undirected_to_directed(graph)
    assert aspect_ratio(doubled) == 100


@given(weighted_graphs(directed=False, max_n=6))
@settings(max_examples=40)
def test_recombination_never_increases_aspect_ratio(graph):
    if graph.m == 0:
        return
    doubled = undirected_to_directed(graph)
    rng = random.Random(graph.n * 1000 + graph.m)
    weights = tuple(F(rng.randint(1, 50), rng.randint(1, 4)) for _ in range(doubled.m))
    dmap = WeightMap(weights)
    assert aspect_ratio(graph, recombine(dmap)) <= aspect_ratio(doubled, dmap)


def _price_map(doubled: WeightedGraph, rng: random.Random) -> WeightMap:
    """A positive reduced-weight map on the doubled graph; price functions
    preserve shortest paths exactly, giving nontrivial preserving inputs."""
    least = min(doubled.weights)
    phi = [F(rng.randint(-10, 10)) * least / 21 for _ in range(doubled.n)]
    return WeightMap(
        tuple(w + phi[u] - phi[v] for u, v, w in doubled.edges)
    )


@given(weighted_graphs(directed=False, max_n=6))
@settings(max_examples=30)
def test_preserving_directed_maps_recombine_to_preserving_undirected(graph):
    if graph.m == 0:
        return
    doubled = undirected_to_directed(graph)
    rng = random.Random(graph.m * 31 + graph.n)
    dmap = _price_map(doubled, rng)
    assert check_exact(doubled, dmap, model="both").passed
    back = recombine(dmap)
    assert check_exact(graph, back, model="both").passed
    assert aspect_ratio(graph, back) <= aspect_ratio(doubled, dmap)
