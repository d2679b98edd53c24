"""Polynomial-time worst-case dynamo computation on forests.

The worst case at budget t is always witnessed by an assignment that
puts deg(v) on the vertices of some matching and 0 everywhere else; the
matching has edge costs deg(u)+deg(v), and its total cost equals n times
the average threshold.  That turns the whole problem into a cost-bounded
maximum matching, after which a minimum dynamo is just a minimum vertex
cover of the full-threshold induced subgraph.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import NotAForestError
from .exact import LdynWitness, min_vertex_cover
from .graph import Edge, Graph, is_forest, _normalize_edge
from .mcflow import cost_bounded_max_matching
from .propagation import ThresholdAssignment


@dataclass(frozen=True)
class ForestLdynResult:
    """Worst-case witness plus the matching and budget that produced it."""

    value: int
    tau: ThresholdAssignment
    dynamo: frozenset[int]
    matching: frozenset[Edge]
    budget: int

    def witness(self) -> LdynWitness:
        return LdynWitness(self.value, self.tau, self.dynamo)


def edge_costs(g: Graph) -> dict[Edge, int]:
    """cost(uv) = deg(u) + deg(v)."""
    return {(u, v): g.degree(u) + g.degree(v) for u, v in g.edges}


def is_zero_degree(g: Graph, t: ThresholdAssignment) -> bool:
    return all(t[v] in (0, g.degree(v)) for v in range(g.n))


def zero_degree_from_matching(
    g: Graph, matching: Iterable[Edge]
) -> ThresholdAssignment:
    """deg(w) on the matched vertices, 0 elsewhere."""
    edges = {_normalize_edge(u, v) for u, v in matching}
    saturated: set[int] = set()
    for u, v in edges:
        if (u, v) not in g.edges:
            raise ValueError(f"({u}, {v}) is not an edge of the graph")
        if u in saturated or v in saturated:
            raise ValueError("edges are not pairwise non-incident")
        saturated.update((u, v))
    values = tuple(g.degree(v) if v in saturated else 0 for v in range(g.n))
    return ThresholdAssignment(values)


def full_threshold_subgraph(
    g: Graph, t: ThresholdAssignment
) -> tuple[Graph, list[int]]:
    """Induced subgraph on {v : tau(v) = deg(v)} and its vertex map."""
    return g.induced(v for v in range(g.n) if t[v] == g.degree(v))


def min_dynamo_zero_degree(
    g: Graph, t: ThresholdAssignment
) -> tuple[int, frozenset[int]]:
    """Minimum dynamo for a (zero,degree)-assignment: a minimum vertex
    cover of the full-threshold induced subgraph."""
    if len(t) != g.n:
        raise ValueError("threshold length mismatch")
    if not is_zero_degree(g, t):
        raise ValueError("not a (zero,degree)-assignment")
    sub, back = full_threshold_subgraph(g, t)
    size, cover = min_vertex_cover(sub)
    return size, frozenset(back[v] for v in cover)


def ldyn_forest(f: Graph, t: Fraction | int) -> ForestLdynResult:
    """Exact worst case on a forest (no self-opinioned vertices).

    The budget comparison cost(M) <= t*n is exact rational arithmetic;
    the floor below is harmless because all edge costs are integers.
    """
    t = Fraction(t)
    if t < 0:
        raise ValueError("t must be nonnegative")
    if not is_forest(f):
        raise NotAForestError("input graph contains a cycle")
    budget = math.floor(t * f.n)
    matching = cost_bounded_max_matching(f, edge_costs(f), budget)
    tau = zero_degree_from_matching(f, matching.edges)
    _, dynamo = min_dynamo_zero_degree(f, tau)
    return ForestLdynResult(
        value=len(matching.edges),
        tau=tau,
        dynamo=dynamo,
        matching=matching.edges,
        budget=budget,
    )
