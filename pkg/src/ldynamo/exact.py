"""Brute-force oracles: minimum dynamos, worst-case values, vertex cover.

Everything here is exponential and gated by explicit caps; these are the
ground truth the polynomial algorithms are validated against.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import _kernels
from .errors import CapExceededError
from .graph import Graph, connected_components, edge_density, is_forest
from .propagation import ThresholdAssignment

MIN_DYNAMO_CAP = 20
LDYN_BRUTE_CAP = 8
VERTEX_COVER_CAP = 25

_FULL_GRID_LIMIT = 1_500_000


@dataclass(frozen=True)
class LdynWitness:
    """A worst-case assignment together with a minimum dynamo for it."""

    value: int
    tau: ThresholdAssignment
    dynamo: frozenset[int]


def min_dynamo(
    g: Graph, t: ThresholdAssignment, cap: int = MIN_DYNAMO_CAP
) -> tuple[int, frozenset[int]]:
    """Smallest dynamo by subset enumeration in nondecreasing size order
    (lexicographic within a size)."""
    if g.n > cap:
        raise CapExceededError(f"min_dynamo cap {cap} exceeded (n={g.n})")
    if len(t) != g.n:
        raise ValueError("threshold length mismatch")
    if g.n == 0:
        return 0, frozenset()
    adj = _kernels.adj_array(g)
    tau = np.array(t.values, dtype=np.int64)
    size, mask = _kernels.min_dynamo_mask(adj, tau)
    return int(size), _kernels.mask_to_set(int(mask))


def _threshold_grid(caps: list[int], budget: int) -> np.ndarray:
    """All integer rows with 0 <= row[i] <= caps[i] and sum <= budget,
    in lexicographic order (row[0] most significant)."""
    n = len(caps)
    if budget < 0:
        return np.empty((0, n), dtype=np.int64)
    caps = [min(c, budget) for c in caps]
    size = math.prod(c + 1 for c in caps)
    if size <= _FULL_GRID_LIMIT:
        if n == 0:
            return np.zeros((1, 0), dtype=np.int64)
        grid = np.indices([c + 1 for c in caps]).reshape(n, -1).T
        grid = grid[grid.sum(axis=1) <= budget]
        return np.ascontiguousarray(grid, dtype=np.int64)
    # odometer with budget pruning, for graphs too dense for the full grid
    rows: list[tuple[int, ...]] = []
    prefix = [0] * n

    def rec(i: int, remaining: int) -> None:
        if i == n:
            rows.append(tuple(prefix))
            return
        for val in range(min(caps[i], remaining) + 1):
            prefix[i] = val
            rec(i + 1, remaining - val)

    rec(0, budget)
    return np.array(rows, dtype=np.int64)


def ldyn_brute(
    g: Graph,
    t: Fraction | int,
    allow_self_opinioned: bool = False,
    cap: int = LDYN_BRUTE_CAP,
) -> LdynWitness:
    """Maximize dyn over all assignments with total <= floor(t*n).

    Per-vertex thresholds run up to deg(v), or deg(v)+1 when
    self-opinioned vertices are allowed.  Returns the lexicographically
    least maximizing assignment and a minimum dynamo for it.
    """
    t = Fraction(t)
    if t < 0:
        raise ValueError("t must be nonnegative")
    if g.n > cap:
        raise CapExceededError(f"ldyn_brute cap {cap} exceeded (n={g.n})")
    if g.n == 0:
        return LdynWitness(0, ThresholdAssignment(()), frozenset())
    budget = math.floor(t * g.n)
    extra = 1 if allow_self_opinioned else 0
    caps = [g.degree(v) + extra for v in range(g.n)]
    taus = _threshold_grid(caps, budget)
    adj = _kernels.adj_array(g)
    value, idx = _kernels.ldyn_scan(adj, taus)
    best_tau = ThresholdAssignment(tuple(int(x) for x in taus[idx]))
    _, mask = _kernels.min_dynamo_mask(adj, taus[idx])
    return LdynWitness(int(value), best_tau, _kernels.mask_to_set(int(mask)))


def _tree_vertex_cover(g: Graph, comp: list[int]) -> set[int]:
    """Minimum vertex cover of one acyclic component, rooted at its
    smallest vertex; prefers excluding a vertex on ties."""
    root = comp[0]
    parent = {root: None}
    order = [root]
    stack = [root]
    while stack:
        v = stack.pop()
        for u in g.adjacency[v]:
            if u not in parent:
                parent[u] = v
                order.append(u)
                stack.append(u)
    children: dict[int, list[int]] = {v: [] for v in comp}
    for v in order[1:]:
        children[parent[v]].append(v)
    cost_in: dict[int, int] = {}
    cost_out: dict[int, int] = {}
    for v in reversed(order):
        cost_in[v] = 1 + sum(min(cost_in[c], cost_out[c]) for c in children[v])
        cost_out[v] = sum(cost_in[c] for c in children[v])
    cover: set[int] = set()
    take = [(root, cost_in[root] < cost_out[root])]
    while take:
        v, in_cover = take.pop()
        if in_cover:
            cover.add(v)
        for c in children[v]:
            if in_cover:
                take.append((c, cost_in[c] < cost_out[c]))
            else:
                take.append((c, True))
    return cover


def min_vertex_cover(
    g: Graph, cap: int = VERTEX_COVER_CAP
) -> tuple[int, frozenset[int]]:
    """Minimum vertex cover: tree DP on acyclic components, brute force
    (up to `cap` vertices) on the rest."""
    cover: set[int] = set()
    for comp in connected_components(g):
        sub, back = g.induced(comp)
        if is_forest(sub):
            cover.update(back[v] for v in _tree_vertex_cover(sub, sorted(range(sub.n))))
        elif sub.n <= cap:
            _, mask = _kernels.min_vertex_cover_mask(_kernels.adj_array(sub))
            cover.update(back[v] for v in _kernels.mask_to_set(int(mask)))
        else:
            raise CapExceededError(
                f"non-forest component with {sub.n} vertices exceeds brute-force cap {cap}"
            )
    return len(cover), frozenset(cover)


def decide_ldynamo(
    g: Graph, k: Fraction | int, d: int, cap: int = LDYN_BRUTE_CAP
) -> bool:
    """Is there tau with total exactly floor(n*k*eps(G)) and
    tau(v) <= deg(v) whose minimum dynamo has size >= d?"""
    k = Fraction(k)
    if not 0 < k <= 2:
        raise ValueError("k must lie in (0, 2]")
    if d <= 0:
        return True
    if g.n > cap:
        raise CapExceededError(f"decide_ldynamo cap {cap} exceeded (n={g.n})")
    budget = math.floor(g.n * k * edge_density(g))
    caps = [g.degree(v) for v in range(g.n)]
    taus = _threshold_grid(caps, budget)
    taus = taus[taus.sum(axis=1) == budget]
    if taus.shape[0] == 0:
        return False
    adj = _kernels.adj_array(g)
    return bool(_kernels.exists_dyn_at_least(adj, taus, d))


def enumerate_min_dynamos(
    g: Graph, t: ThresholdAssignment, size: int
) -> list[frozenset[int]]:
    """All dynamos of exactly the given size (desk-scale sanity helper)."""
    from .propagation import is_dynamo

    return [
        frozenset(c)
        for c in combinations(range(g.n), size)
        if is_dynamo(g, t, c)
    ]
