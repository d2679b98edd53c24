"""Shared fixtures: small-graph corpora and independent oracles."""
from __future__ import annotations

import itertools
from fractions import Fraction

import networkx as nx
import pytest

from ldynamo.graph import Graph, _normalize_edge
from ldynamo.propagation import ThresholdAssignment


def nx_to_graph(G) -> Graph:
    nodes = sorted(G.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph(
        len(nodes),
        frozenset(_normalize_edge(index[u], index[v]) for u, v in G.edges()),
    )


def atlas_graphs(min_n: int, max_n: int) -> list[Graph]:
    """All non-isomorphic graphs with min_n <= n <= max_n (max_n <= 7)."""
    return [
        nx_to_graph(G)
        for G in nx.graph_atlas_g()
        if min_n <= G.number_of_nodes() <= max_n
    ]


def _trees(size: int) -> list[Graph]:
    if size == 1:
        return [Graph(1, frozenset())]
    return [nx_to_graph(T) for T in nx.nonisomorphic_trees(size)]


def _partitions(n: int, max_part: int):
    if n == 0:
        yield ()
        return
    for part in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


def all_forests(n: int) -> list[Graph]:
    """All non-isomorphic forests on exactly n vertices."""
    trees_by_size = {s: _trees(s) for s in range(1, n + 1)}
    forests = []
    for partition in _partitions(n, n):
        sizes = sorted(set(partition))
        choices_per_size = []
        for s in sizes:
            r = partition.count(s)
            choices_per_size.append(
                list(itertools.combinations_with_replacement(trees_by_size[s], r))
            )
        for combo in itertools.product(*choices_per_size):
            components = [t for group in combo for t in group]
            edges = set()
            offset = 0
            for t in components:
                edges.update((offset + u, offset + v) for u, v in t.edges)
                offset += t.n
            forests.append(Graph(n, frozenset(edges)))
    return forests


def all_taus(g: Graph, extra: int = 0):
    """Every assignment with tau(v) <= deg(v) + extra."""
    ranges = [range(g.degree(v) + 1 + extra) for v in range(g.n)]
    for values in itertools.product(*ranges):
        yield ThresholdAssignment(values)


def brute_matchings(edges, costs):
    """All matchings of an edge set as (edge frozenset, cost) pairs."""
    edges = sorted(edges)

    def rec(i, used, chosen, cost):
        if i == len(edges):
            yield frozenset(chosen), cost
            return
        yield from rec(i + 1, used, chosen, cost)
        u, v = edges[i]
        if u not in used and v not in used:
            yield from rec(
                i + 1, used | {u, v}, chosen + [edges[i]], cost + costs[edges[i]]
            )

    yield from rec(0, set(), [], 0)


def best_matching_within_budget(edges, costs, budget):
    """(max size, min cost at that size) over matchings of cost <= budget."""
    best = (0, 0)
    for m, cost in brute_matchings(edges, costs):
        if cost <= budget:
            key = (len(m), -cost)
            if key > (best[0], -best[1]):
                best = (len(m), cost)
    return best


@pytest.fixture(scope="session")
def graphs_to_4() -> list[Graph]:
    return atlas_graphs(1, 4)


@pytest.fixture(scope="session")
def graphs_to_5() -> list[Graph]:
    return atlas_graphs(1, 5)


@pytest.fixture(scope="session")
def graphs_to_6() -> list[Graph]:
    return atlas_graphs(1, 6)


@pytest.fixture(scope="session")
def forests_to_8() -> list[Graph]:
    return [f for n in range(1, 9) for f in all_forests(n)]


def frac(p, q=1) -> Fraction:
    return Fraction(p, q)
