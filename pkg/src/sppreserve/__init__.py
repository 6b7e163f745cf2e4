"""Shortest-paths preserving graph reweighting, over exact rationals.

The package answers three kinds of question about a positively weighted
graph:

* can its aspect ratio be reduced without disturbing shortest paths (for
  DAGs: yes, to at most n+1, via :func:`reweight_dag`);
* does a candidate reweighting actually preserve shortest paths, exactly or
  approximately (:func:`check_exact`, :func:`check_alpha`,
  :func:`check_two_sided`), with concrete witnesses on failure;
* what is the minimum aspect ratio any preserving reweighting can achieve on
  a given instance (:func:`min_aspect_ratio`, exact rational LP), and how
  fast must it grow on the cycle-chain and grid families that force
  exponential blowup (:mod:`sppreserve.constructions`,
  :mod:`sppreserve.audit`).
"""

__version__ = "0.1.0"

from .audit import (
    AuditReport,
    LemmaCheck,
    audit_cycle_doubling,
    audit_directed_chain,
    audit_grid,
    audit_undirected_chain,
)
from .checks import (
    CheckReport,
    StretchParams,
    UniquenessCheck,
    Witness,
    check_alpha,
    check_exact,
    check_two_sided,
    unique_alpha_approx,
)
from .constructions import (
    ChainLayout,
    GridLayout,
    fig1_fixture,
    gen_directed_chain,
    gen_grid,
    gen_path_shortcut,
    gen_undirected_chain,
)
from .core import (
    BudgetExceededError,
    Path,
    PathSystem,
    WeightMap,
    WeightedGraph,
    WorkBudget,
    as_fraction,
    aspect_ratio,
    format_fraction,
    is_simple,
)
from .fileio import (
    ParseError,
    read_graph,
    read_paths,
    read_weights,
    write_graph,
    write_paths,
    write_weights,
)
from .optimize import (
    build_preservation_lp,
    build_separation_lp,
    canonical_designated_path,
    grid_lower_bound,
    min_aspect_ratio,
    simple_paths,
)
from .reduction import recombine, undirected_to_directed
from .reweight import (
    CycleError,
    TopologicalOrder,
    price_identity,
    reweight_dag,
    topological_order,
)
from .search import (
    DistanceTable,
    dag_extreme_cost,
    dag_extreme_path,
    enumerate_walks,
    shortest_paths,
)
from .simplex import Constraint, LinearProgram, LpCertificate, solve_lp, verify_certificate

__all__ = [name for name in dir() if not name.startswith("_")]
