"""Black-box reduction between undirected and directed reweighting.

An undirected edge {u,v} of weight c becomes the two directed edges (u,v) and
(v,u), each of weight c.  A weight map found on the directed image recombines
to an undirected map by summing the two directions; recombination never
increases aspect ratio.
"""

from __future__ import annotations

from fractions import Fraction

from .core import WeightMap, WeightedGraph


def undirected_to_directed(graph: WeightedGraph) -> WeightedGraph:
    """Replace each undirected edge {u,v} with directed (u,v) and (v,u).

    Edge order is documented: undirected edge index e maps to directed
    indices 2e and 2e+1, which is what :func:`recombine` relies on.
    """
    if graph.directed:
        raise ValueError("graph is already directed")
    edges: list[tuple[int, int, Fraction]] = []
    for u, v, w in graph.edges:
        edges.append((u, v, w))
        edges.append((v, u, w))
    return WeightedGraph(directed=True, n=graph.n, edges=tuple(edges))


def recombine(directed_map: WeightMap) -> WeightMap:
    """Undirected weights from a map on the directed image: w(u,v)+w(v,u)."""
    if len(directed_map) % 2 != 0:
        raise ValueError("directed weight map does not pair up: odd length")
    ws = directed_map.weights
    return WeightMap(tuple(ws[2 * i] + ws[2 * i + 1] for i in range(len(ws) // 2)))
