"""Price-function reweighting of DAGs.

Adding W*(position difference) to every edge, where W is the heaviest input
weight and positions come from a topological order, preserves the exact set
of shortest paths in both directions while capping the aspect ratio at n+1.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Path, WeightMap, WeightedGraph


class CycleError(ValueError):
    """The graph is not acyclic; ``cycle`` holds one witness walk u...u."""

    def __init__(self, cycle: Sequence[int]):
        self.cycle = tuple(cycle)
        super().__init__(f"graph contains a cycle: {self.cycle}")


@dataclass(frozen=True)
class TopologicalOrder:
    """Per-vertex position; every edge goes from lower to higher position."""

    position: tuple[int, ...]

    def validate_for(self, graph: WeightedGraph) -> None:
        for u, v, _ in graph.edges:
            if self.position[u] >= self.position[v]:
                raise ValueError(f"edge ({u},{v}) violates the order")


def topological_order(graph: WeightedGraph) -> TopologicalOrder:
    """Deterministic topological order (smallest ready index first).

    Raises :class:`CycleError` with a witness cycle when the graph is cyclic.
    """
    if not graph.directed:
        raise ValueError("topological order needs a directed graph")
    indegree = [0] * graph.n
    for _, v, _ in graph.edges:
        indegree[v] += 1
    ready = [v for v in range(graph.n) if indegree[v] == 0]
    heapq.heapify(ready)
    position = [-1] * graph.n
    placed = 0
    while ready:
        u = heapq.heappop(ready)
        position[u] = placed
        placed += 1
        for v, _ in graph.adjacency[u]:
            indegree[v] -= 1
            if indegree[v] == 0:
                heapq.heappush(ready, v)
    if placed < graph.n:
        raise CycleError(_find_cycle(graph, {v for v in range(graph.n) if position[v] < 0}))
    return TopologicalOrder(position=tuple(position))


def _find_cycle(graph: WeightedGraph, remaining: set[int]) -> tuple[int, ...]:
    # Every remaining vertex has an outgoing edge inside `remaining`, so a
    # greedy walk must revisit a vertex; report the loop it closes.
    start = min(remaining)
    walk = [start]
    seen = {start: 0}
    u = start
    while True:
        u = min(v for v, _ in graph.adjacency[u] if v in remaining)
        if u in seen:
            cycle = walk[seen[u] :] + [u]
            shift = cycle.index(min(cycle[:-1]))
            body = cycle[:-1]
            return tuple(body[shift:] + body[:shift] + [body[shift]])
        seen[u] = len(walk)
        walk.append(u)


def reweight_dag(graph: WeightedGraph) -> WeightMap:
    """Shortest-paths preserving weights with aspect ratio at most n+1.

    New weight of (u, v) is w(u,v) + W*(pos(v) - pos(u)) for the heaviest
    input weight W; the additive part telescopes along any path, so path
    weight comparisons between common endpoints are unchanged.
    """
    if graph.m == 0:
        raise ValueError("no edges")
    order = topological_order(graph)
    heaviest = max(graph.weights)
    pos = order.position
    return WeightMap(
        tuple(w + heaviest * (pos[v] - pos[u]) for u, v, w in graph.edges)
    )


def price_identity(
    graph: WeightedGraph, wmap: WeightMap, path_a: Path, path_b: Path
) -> tuple[Fraction, Fraction]:
    """Return (w(P)-w(Q), w_H(P)-w_H(Q)) for same-endpoint paths P, Q.

    When ``wmap`` comes from :func:`reweight_dag` the two components are
    equal, exactly; that identity is what makes the reweighting safe.
    """
    if not path_a or not path_b or path_a[0] != path_b[0] or path_a[-1] != path_b[-1]:
        raise ValueError("paths must share both endpoints")
    base = graph.path_weight(path_a) - graph.path_weight(path_b)
    new = graph.path_weight(path_a, wmap) - graph.path_weight(path_b, wmap)
    return base, new
