import io
from fractions import Fraction as F
from pathlib import Path

import pytest
from hypothesis import given, settings

from sppreserve import (
    ParseError,
    WeightMap,
    fig1_fixture,
    gen_directed_chain,
    gen_grid,
    read_graph,
    read_paths,
    read_weights,
    write_graph,
    write_paths,
    write_weights,
)
from sppreserve.fileio import graph_to_text, paths_to_text, weights_to_text

from strategies import graph_with_map

DATA = Path(__file__).parent / "data"


def test_fig1_matches_golden_files():
    graph, better = fig1_fixture()
    assert graph_to_text(graph) == (DATA / "fig1.graph").read_text()
    assert weights_to_text(graph, better) == (DATA / "fig1_h.weights").read_text()
    loaded = read_graph(DATA / "fig1.graph")
    assert loaded == graph
    assert read_weights(DATA / "fig1_h.weights", loaded) == better


def test_graph_round_trip_is_normalizing(tmp_path):
    graph, _ = gen_directed_chain(3)
    out = tmp_path / "g.graph"
    write_graph(graph, out)
    again = read_graph(out)
    # second write is byte-identical: write(read(x)) == x for written files
    out2 = tmp_path / "g2.graph"
    write_graph(again, out2)
    assert out.read_text() == out2.read_text()
    assert sorted((u, v, w) for u, v, w in again.edges) == sorted(
        (u, v, w) for u, v, w in graph.edges
    )


@given(graph_with_map(max_n=6))
@settings(max_examples=25)
def test_weights_round_trip(pair):
    graph, wmap = pair
    buf = io.StringIO(weights_to_text(graph, wmap))
    loaded = read_weights(buf, graph)
    assert loaded == wmap


@given(graph_with_map(max_n=7))
@settings(max_examples=25)
def test_graph_text_round_trip_preserves_structure(pair):
    graph, _ = pair
    loaded = read_graph(io.StringIO(graph_to_text(graph)))
    assert loaded.directed == graph.directed and loaded.n == graph.n
    normalize = lambda u, v: (u, v) if graph.directed else (min(u, v), max(u, v))
    assert sorted((*normalize(u, v), w) for u, v, w in loaded.edges) == sorted(
        (*normalize(u, v), w) for u, v, w in graph.edges
    )
    assert graph_to_text(loaded) == graph_to_text(graph)


def test_paths_round_trip(tmp_path):
    _, system = gen_grid(3, 2)
    out = tmp_path / "p.paths"
    write_paths(system, out)
    loaded = read_paths(out)
    assert loaded.entries == system.entries
    out2 = tmp_path / "p2.paths"
    write_paths(loaded, out2)
    assert out.read_text() == out2.read_text()


def test_malformed_rational_names_line():
    text = "graph directed 2\ne 0 1 3/0\n"
    with pytest.raises(ParseError, match="line 2"):
        read_graph(io.StringIO(text))
    with pytest.raises(ParseError, match="line 2"):
        read_graph(io.StringIO("graph directed 2\ne 0 1 0.5\n"))


def test_graph_header_errors():
    with pytest.raises(ParseError, match="header"):
        read_graph(io.StringIO("e 0 1 1/1\n"))
    with pytest.raises(ParseError, match="line 1"):
        read_graph(io.StringIO("graph sideways 2\ne 0 1 1/1\n"))


def test_comments_and_blank_lines_ignored():
    text = "# a graph\ngraph undirected 2\n\ne 0 1 3/2  # the only edge\n"
    graph = read_graph(io.StringIO(text))
    assert graph.edges == ((0, 1, F(3, 2)),)


def test_weight_file_must_match_edge_set():
    graph, _ = fig1_fixture()
    with pytest.raises(ParseError, match="missing weight"):
        read_weights(io.StringIO("w 0 1 1/1\n"), graph)
    full = weights_to_text(graph, WeightMap((F(1),) * 5))
    with pytest.raises(ParseError, match="non-edge"):
        read_weights(io.StringIO(full + "w 1 2 1/1\n"), graph)
    with pytest.raises(ParseError, match="duplicate"):
        read_weights(io.StringIO(full + "w 1 0 1/1\n"), graph)


def test_path_file_validation():
    with pytest.raises(ParseError, match="endpoints"):
        read_paths(io.StringIO("path 0 2 0 1\n"))
    graph, _ = fig1_fixture()
    with pytest.raises(ValueError, match="not a path"):
        read_paths(io.StringIO("path 1 2 1 2\n"), graph)
    system = read_paths(io.StringIO("path 0 3 0 1 3\n"), graph)
    assert system.entries[(0, 3)] == (0, 1, 3)


def test_generator_output_is_deterministic():
    a, pa = gen_grid(3, 2)
    b, pb = gen_grid(3, 2)
    assert graph_to_text(a) == graph_to_text(b)
    assert paths_to_text(pa) == paths_to_text(pb)
