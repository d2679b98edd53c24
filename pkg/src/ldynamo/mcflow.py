"""Minimum-cost flow (successive shortest paths with potentials) and the
cost-bounded maximum matching built on top of it.

Costs are nonnegative integers throughout, so shortest paths under
reduced costs stay well-defined and every returned flow is integral.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Mapping, Optional

from .errors import MalformedLineError
from .graph import Edge, Graph, bipartition, _normalize_edge


@dataclass(frozen=True)
class FlowNetwork:
    """Directed network with arc capacities/costs and vertex balances."""

    n: int
    arcs: tuple[tuple[int, int, int, int], ...]  # (i, j, capacity, cost)
    balances: tuple[int, ...]

    def __post_init__(self):
        if len(self.balances) != self.n:
            raise ValueError("balance vector length mismatch")
        if sum(self.balances) != 0:
            raise ValueError("balances must sum to zero")
        for i, j, u, c in self.arcs:
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"arc ({i}, {j}) out of range")
            if u < 0 or c < 0:
                raise ValueError("capacities and costs must be nonnegative")


@dataclass(frozen=True)
class CostedMatching:
    edges: frozenset[Edge]
    total_cost: int

    @property
    def size(self) -> int:
        return len(self.edges)


def parse_network(text: str) -> FlowNetwork:
    """Debug format: "n a" header, n balance lines, a lines "i j u c"."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MalformedLineError("empty document")
    head = lines[0].split()
    if len(head) != 2:
        raise MalformedLineError(f"header must be 'n a', got {lines[0]!r}")
    try:
        n, a = int(head[0]), int(head[1])
    except ValueError:
        raise MalformedLineError(f"non-integer header {lines[0]!r}") from None
    if len(lines) != 1 + n + a:
        raise MalformedLineError("line count does not match header")
    try:
        balances = tuple(int(ln) for ln in lines[1 : 1 + n])
        arcs = []
        for ln in lines[1 + n :]:
            i, j, u, c = (int(x) for x in ln.split())
            arcs.append((i, j, u, c))
    except ValueError:
        raise MalformedLineError("malformed balance or arc line") from None
    return FlowNetwork(n, tuple(arcs), balances)


def serialize_network(net: FlowNetwork) -> str:
    lines = [f"{net.n} {len(net.arcs)}"]
    lines.extend(str(b) for b in net.balances)
    lines.extend(f"{i} {j} {u} {c}" for i, j, u, c in net.arcs)
    return "\n".join(lines) + "\n"


class _Residual:
    """Residual network for successive-shortest-path augmentation."""

    def __init__(self, n: int):
        self.n = n
        self.to: list[int] = []
        self.cap: list[int] = []
        self.cost: list[int] = []
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.potential = [0] * n

    def add_arc(self, i: int, j: int, cap: int, cost: int) -> int:
        idx = len(self.to)
        self.to.extend((j, i))
        self.cap.extend((cap, 0))
        self.cost.extend((cost, -cost))
        self.head[i].append(idx)
        self.head[j].append(idx + 1)
        return idx

    def shortest_path(self, source: int) -> tuple[list[int], list[int]]:
        """Dijkstra on reduced costs; ties broken by vertex index.

        Returns (dist, incoming residual edge per vertex); unreachable
        vertices get dist = -1.
        """
        INF = float("inf")
        dist: list[float] = [INF] * self.n
        pred = [-1] * self.n
        dist[source] = 0
        heap = [(0, source)]
        done = [False] * self.n
        while heap:
            d, v = heapq.heappop(heap)
            if done[v]:
                continue
            done[v] = True
            for e in self.head[v]:
                if self.cap[e] <= 0:
                    continue
                w = self.to[e]
                nd = d + self.cost[e] + self.potential[v] - self.potential[w]
                if nd < dist[w]:
                    dist[w] = nd
                    pred[w] = e
                    heapq.heappush(heap, (nd, w))
        return [int(x) if x < INF else -1 for x in dist], pred

    def push(self, pred: list[int], target: int, amount: int) -> tuple[int, int]:
        """Push up to `amount` along the path to target.

        Returns (units pushed, unit cost of the path)."""
        path = []
        v = target
        while pred[v] != -1:
            path.append(pred[v])
            v = self.to[pred[v] ^ 1]
        pushed = min([amount] + [self.cap[e] for e in path])
        unit_cost = sum(self.cost[e] for e in path)
        for e in path:
            self.cap[e] -= pushed
            self.cap[e ^ 1] += pushed
        return pushed, unit_cost

    def update_potentials(self, dist: list[int], cutoff: int) -> None:
        # standard SSP update: pi[v] += min(dist[v], dist[target])
        for v in range(self.n):
            self.potential[v] += dist[v] if dist[v] != -1 and dist[v] < cutoff else cutoff


def min_cost_flow(net: FlowNetwork) -> Optional[list[int]]:
    """Integral minimum-cost flow meeting all balances, or None if the
    demands cannot be met.  Flows are returned per arc, in input order."""
    res = _Residual(net.n)
    arc_edge = [res.add_arc(i, j, u, c) for i, j, u, c in net.arcs]
    excess = list(net.balances)
    while True:
        sources = [v for v in range(net.n) if excess[v] > 0]
        if not sources:
            break
        s = sources[0]
        dist, pred = res.shortest_path(s)
        targets = [v for v in range(net.n) if excess[v] < 0 and dist[v] != -1]
        if not targets:
            return None
        t = min(targets, key=lambda v: (dist[v], v))
        pushed, _ = res.push(pred, t, min(excess[s], -excess[t]))
        res.update_potentials(dist, dist[t])
        excess[s] -= pushed
        excess[t] += pushed
    return [res.cap[e ^ 1] for e in arc_edge]


def flow_cost(net: FlowNetwork, flows: list[int]) -> int:
    return sum(f * c for f, (_, _, _, c) in zip(flows, net.arcs))


def matching_network(
    g: Graph, cost: Mapping[Edge, int], demand: int
) -> FlowNetwork:
    """Unit-capacity network whose min-cost flow of value `demand` is a
    minimum-cost matching of that size: source -> X -> Y -> sink."""
    left, right = bipartition(g)
    n = g.n
    s, t = n, n + 1
    arcs: list[tuple[int, int, int, int]] = []
    for x in sorted(left):
        arcs.append((s, x, 1, 0))
    for u, v in sorted(g.edges):
        x, y = (u, v) if u in left else (v, u)
        arcs.append((x, y, 1, cost[_normalize_edge(u, v)]))
    for y in sorted(right):
        arcs.append((y, t, 1, 0))
    balances = [0] * n + [demand, -demand]
    return FlowNetwork(n + 2, tuple(arcs), tuple(balances))


def cost_bounded_max_matching(
    g: Graph, cost: Mapping[Edge, int], d: int
) -> CostedMatching:
    """Largest matching of total cost <= d; minimum cost among those.

    Unit augmentations on the source/sink network: each successive
    shortest path adds one matching edge at the cheapest possible
    marginal cost, and marginal costs never decrease, so the first
    augmentation that would overshoot the budget ends the search.
    """
    if d < 0:
        raise ValueError("budget must be nonnegative")
    left, right = bipartition(g)
    normalized = {_normalize_edge(u, v): int(c) for (u, v), c in cost.items()}
    for e in g.edges:
        if e not in normalized:
            raise ValueError(f"missing cost for edge {e}")
        if normalized[e] < 0:
            raise ValueError(f"negative cost on edge {e}")
    n = g.n
    s, t = n, n + 1
    res = _Residual(n + 2)
    for x in sorted(left):
        res.add_arc(s, x, 1, 0)
    edge_arcs: dict[int, Edge] = {}
    for u, v in sorted(g.edges):
        x, y = (u, v) if u in left else (v, u)
        idx = res.add_arc(x, y, 1, normalized[(u, v)])
        edge_arcs[idx] = (u, v)
    for y in sorted(right):
        res.add_arc(y, t, 1, 0)
    total = 0
    while True:
        dist, pred = res.shortest_path(s)
        if dist[t] == -1:
            break
        marginal = dist[t] + res.potential[t] - res.potential[s]
        if total + marginal > d:
            break
        res.push(pred, t, 1)
        res.update_potentials(dist, dist[t])
        total += marginal
    matched = frozenset(e for idx, e in edge_arcs.items() if res.cap[idx] == 0)
    return CostedMatching(edges=matched, total_cost=total)
