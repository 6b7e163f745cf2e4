"""A first look at shortest-paths preserving reweighting.

The showcase instance: a four-vertex graph whose weights span a factor of
100, and a reweighting that brings the spread down to 4 without disturbing a
single shortest path.  We also try a careless candidate map and let the
checker hand us a concrete counterexample.
"""

from fractions import Fraction as F

from sppreserve import WeightMap, aspect_ratio, check_exact, fig1_fixture

graph, better = fig1_fixture()
names = "abcd"

print("the graph (undirected):")
for (u, v, w), new in zip(graph.edges, better.weights):
    print(f"  {names[u]}-{names[v]}: weight {w}, reweighted {new}")

print(f"\naspect ratio before: {aspect_ratio(graph)}")
print(f"aspect ratio after:  {aspect_ratio(graph, better)}")

report = check_exact(graph, better)
print(f"\nexact preservation check: {report.verdict} over {report.pairs_checked} ordered pairs")

print("\nnow a careless candidate: every weight set to 1")
ones = WeightMap((F(1),) * graph.m)
report = check_exact(graph, ones)
print(f"check: {report.verdict}")
w = report.witnesses[0]
print(
    f"witness: under the candidate, {'-'.join(names[v] for v in w.path)} becomes a "
    f"shortest {names[w.s]}->{names[w.t]} route (new weight {w.w_h}), but its true "
    f"weight {w.w_g} is worse than the true distance {w.d_g}"
)
