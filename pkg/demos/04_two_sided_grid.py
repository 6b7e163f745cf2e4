"""Two-sided stretch: even DAGs can force exponential aspect ratio.

If approximate shortest paths of the reweighted graph must map back to
approximate shortest paths of the original, the grid DAG below defeats every
bounded-ratio reweighting: each designated corner-turn path must stay the
only alpha_H-approximate route, and an induction over nested subgrids
multiplies the last-row-plus-column weight by alpha_H per layer.

The separation LP certifies that floor exactly at desk scale: its optimum is
a machine-checked lower bound on the final row and column of any valid
reweighting, and it grows like alpha_H^(L-1).
"""

from fractions import Fraction as F

from sppreserve import (
    StretchParams,
    WeightMap,
    audit_grid,
    check_two_sided,
    gen_grid,
    grid_lower_bound,
)

EPS = F(1, 10**9)

print("audits: every designated path is the only 2-approximate route")
for side in (2, 3, 4):
    report = audit_grid(side, 2)
    print(f"  {side}x{side}: {report.verdict}")

print("\nthe identity map is (2 -> 2)-stretch preserving on the 3x3 grid:")
graph, _ = gen_grid(3, 2)
report = check_two_sided(graph, WeightMap(graph.weights), StretchParams(2, 2))
print(f"  two-sided check: {report.verdict} ({report.stats['walks_checked']} walks examined)")

print("\ncertified lower bounds on last-row + last-column weight (alpha_H = 2):")
previous = None
for side in (2, 3):
    bound = grid_lower_bound(side, 2, 2, EPS)
    growth = "" if previous is None else f"  growth x{float(bound / previous):.3f}"
    print(f"  L={side}: optimum ~ {float(bound):.4f} >= 2^{side - 1} = {2 ** (side - 1)}{growth}")
    previous = bound

print("\nso one of those 2L edges weighs at least alpha_H^(L-1)/(2L): exponential spread.")
