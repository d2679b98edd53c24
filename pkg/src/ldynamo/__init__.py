"""Worst-case irreversible dynamic monopolies under threshold budgets.

Library layout:

- :mod:`ldynamo.graph` — graphs, parsing, degrees, bipartition
- :mod:`ldynamo.propagation` — activation process and resistant subgraphs
- :mod:`ldynamo.exact` — brute-force oracles (minimum dynamo, worst case,
  vertex cover, decision problem)
- :mod:`ldynamo.bounds` — degree-sequence bound, self-opinioned closed
  form, c/(c+1) bound
- :mod:`ldynamo.mcflow` — min-cost flow and cost-bounded matching
- :mod:`ldynamo.forest` — polynomial worst case on forests
- :mod:`ldynamo.constructions` — worst-case family and hardness reduction
  generators
- :mod:`ldynamo.transforms` — interpolation chains and the triangle-free
  rewrite
- :mod:`ldynamo.cli` — the `ldynamo` command
"""

from .bounds import BoundReport, cc1_upper_bound, ksz_bound, ldyn_self_opinioned
from .constructions import (
    HardnessInstance,
    gen_hardness_instance,
    gen_prop3_family,
    verify_reduction_claim,
)
from .exact import LdynWitness, decide_ldynamo, ldyn_brute, min_dynamo, min_vertex_cover
from .forest import (
    ForestLdynResult,
    edge_costs,
    ldyn_forest,
    min_dynamo_zero_degree,
    zero_degree_from_matching,
)
from .graph import (
    Graph,
    bipartition,
    connected_components,
    degree_sequence,
    edge_density,
    is_forest,
    parse_graph,
    serialize_graph,
)
from .mcflow import (
    CostedMatching,
    FlowNetwork,
    cost_bounded_max_matching,
    min_cost_flow,
)
from .propagation import (
    PropagationTrace,
    ThresholdAssignment,
    is_dynamo,
    is_resistant,
    max_resistant_subgraph,
    propagate,
)
from .transforms import (
    InterpolationChain,
    delta,
    find_intermediate,
    interpolation_chain,
    triangle_free_rewrite,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
