"""Polynomial-time bounds and closed forms for the worst-case dynamo size."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import LdynWitness
from .graph import Graph, degree_sequence, edge_density, vertices_by_degree
from .propagation import ThresholdAssignment


@dataclass(frozen=True)
class BoundReport:
    """Result of the c/(c+1) upper bound.

    k0 is the degree-sequence quantity evaluated at the extreme admissible
    budget t_star = c*eps(G)/n; the bound applies to every t <= t_star.
    `applicable` flags whether any positive budget satisfies the
    hypothesis (false only for edgeless graphs, where t_star = 0).
    """

    k0: int
    bound_value: Fraction
    applicable: bool
    t_star: Fraction


def ksz_bound(g: Graph, t: Fraction | int) -> int:
    """Largest k whose k smallest (d_i + 1) sum to at most n*t.

    Upper-bounds every dynamo size at average-threshold budget t, even
    when self-opinioned vertices are allowed.
    """
    t = Fraction(t)
    if t < 0:
        raise ValueError("t must be nonnegative")
    budget = t * g.n
    acc = 0
    k = 0
    for d in degree_sequence(g):
        acc += d + 1
        if acc > budget:
            break
        k += 1
    return k


def ldyn_self_opinioned(g: Graph, t: Fraction | int) -> LdynWitness:
    """Closed form of the worst case when self-opinioned vertices are
    allowed: give deg+1 to the k0 lowest-degree vertices (ties by index)
    and seed exactly those."""
    k0 = ksz_bound(g, t)
    chosen = vertices_by_degree(g)[:k0]
    values = [0] * g.n
    for v in chosen:
        values[v] = g.degree(v) + 1
    return LdynWitness(
        value=k0,
        tau=ThresholdAssignment(tuple(values)),
        dynamo=frozenset(chosen),
    )


def cc1_upper_bound(g: Graph, c: Fraction | int) -> BoundReport:
    """Strict bound c*n/(c+1) on the worst case whenever t <= c*eps(G)/n."""
    c = Fraction(c)
    if c <= 0:
        raise ValueError("c must be positive")
    t_star = c * edge_density(g) / g.n
    return BoundReport(
        k0=ksz_bound(g, t_star),
        bound_value=c * g.n / (c + 1),
        applicable=t_star > 0,
        t_star=t_star,
    )
