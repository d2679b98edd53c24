"""Instance generators: the worst-case clique family and the vertex-cover
reduction used for the hardness of the budgeted worst-case problem."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .errors import DegenerateInstanceError
from .exact import min_vertex_cover
from .forest import min_dynamo_zero_degree
from .graph import Graph, edge_density
from .propagation import ThresholdAssignment

Mode = Literal["star-per-vertex", "one-star"]


def gen_prop3_family(n: int) -> tuple[Graph, ThresholdAssignment]:
    """Worst-case family member G_n: a K_n plus n copies of K_{n+1},
    one bridge from each copy to K_n (attachment points round-robin).

    Thresholds: 0 inside K_n, deg(v) on every copy vertex.  The average
    works out to (n^2 + n + 1)/(n + 2) and any dynamo needs at least n
    vertices from each copy, hence at least n^2 in total.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    edges: set[tuple[int, int]] = set()
    # vertices 0..n-1: the K_n; then n blocks of n+1 vertices each
    for i in range(n):
        for j in range(i + 1, n):
            edges.add((i, j))
    total = n + n * (n + 1)
    for b in range(n):
        base = n + b * (n + 1)
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                edges.add((base + i, base + j))
        edges.add((b % n, base))  # bridge; round-robin is the identity here
    g = Graph(total, frozenset(edges))
    values = tuple(0 if v < n else g.degree(v) for v in range(total))
    return g, ThresholdAssignment(values)


@dataclass(frozen=True)
class HardnessInstance:
    """Reduction output: graph H with its (zero,degree)-assignment.

    A vertex cover of size <= l exists in the base graph iff
    (H, decision_threshold) is a no-instance of the budgeted worst-case
    decision problem at ratio k.
    """

    h: Graph
    s: int
    p: int
    tau: ThresholdAssignment
    decision_threshold: int
    mode: Mode
    base_n: int
    path_vertices: tuple[int, ...]


def _star_size(m: int, k: Fraction) -> int:
    return math.ceil(4 * m * max(Fraction(1), 1 / k)) + 14


def gen_hardness_instance(
    g: Graph, k: Fraction | int, l: int, mode: Mode = "star-per-vertex"
) -> HardnessInstance:
    """Build H from G: stars of s vertices hung on G, plus a path of p
    vertices grown from a star leaf y; thresholds deg_H on V(G) and the
    path (y included), 0 on the stars.

    `mode` picks between a star on every vertex of G (the construction as
    described) and a single star (the variant matching the edge-count
    arithmetic); both are generated from the same (s, p) parameters.
    """
    k = Fraction(k)
    if not 0 < k < 2:
        raise DegenerateInstanceError("k must lie strictly between 0 and 2")
    if g.n < 1:
        raise ValueError("base graph must have at least one vertex")
    m = g.m
    s = _star_size(m, k)
    p = math.floor((k * s - 2) / (2 - k)) - m
    if p <= 0:
        raise DegenerateInstanceError(f"degenerate instance: p = {p} <= 0")
    edges = set(g.edges)
    next_v = g.n
    y = -1
    attach_points = range(g.n) if mode == "star-per-vertex" else range(1)
    for v in attach_points:
        center = next_v
        next_v += 1
        edges.add((v, center) if v < center else (center, v))
        leaves = []
        for _ in range(s - 1):
            edges.add((center, next_v))
            leaves.append(next_v)
            next_v += 1
        if v == 0:
            y = leaves[0]
    path_vertices = [y]
    prev = y
    for _ in range(p - 1):
        edges.add((prev, next_v))
        path_vertices.append(next_v)
        prev = next_v
        next_v += 1
    h = Graph(next_v, frozenset(edges))
    full = set(range(g.n)) | set(path_vertices)
    values = tuple(h.degree(v) if v in full else 0 for v in range(h.n))
    return HardnessInstance(
        h=h,
        s=s,
        p=p,
        tau=ThresholdAssignment(values),
        decision_threshold=l + p // 2 + 1,
        mode=mode,
        base_n=g.n,
        path_vertices=tuple(path_vertices),
    )


@dataclass(frozen=True)
class ReductionReport:
    beta_base: int
    dyn_h: int
    expected_dyn: int
    claim_holds: bool
    tau_average: Fraction
    budget_ratio: Fraction  # k * eps(H)
    within_budget: bool


def verify_reduction_claim(
    inst: HardnessInstance, g: Graph, k: Fraction | int
) -> ReductionReport:
    """Check dyn_tau(H) = beta(G) + floor(p/2) on a generated instance.

    dyn_tau(H) is computed through the (zero,degree) route: a minimum
    vertex cover of the full-threshold induced subgraph of H, which is
    exactly G together with the added path.
    """
    k = Fraction(k)
    beta, _ = min_vertex_cover(g)
    dyn_h, _ = min_dynamo_zero_degree(inst.h, inst.tau)
    expected = beta + inst.p // 2
    avg = inst.tau.average
    ratio = k * edge_density(inst.h)
    return ReductionReport(
        beta_base=beta,
        dyn_h=dyn_h,
        expected_dyn=expected,
        claim_holds=dyn_h == expected,
        tau_average=avg,
        budget_ratio=ratio,
        within_budget=avg <= ratio,
    )
