"""Threshold-assignment transformations.

Two assignments with the same total can be walked into each other by
unit moves (one vertex down, one up), and the minimum-dynamo size changes
by at most one per move; scanning the walk therefore realizes every
intermediate value.  The triangle-free rewrite concentrates a resistant
subgraph's budget onto a single edge without raising the average.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .exact import MIN_DYNAMO_CAP, min_dynamo
from .graph import Graph, _normalize_edge
from .propagation import ThresholdAssignment, is_resistant


@dataclass(frozen=True)
class InterpolationChain:
    """Unit-move walk between two assignments of equal total."""

    steps: tuple[ThresholdAssignment, ...]

    def __len__(self) -> int:
        return len(self.steps)


def delta(t1: ThresholdAssignment, t2: ThresholdAssignment) -> int:
    """Sum of the pointwise drops from t1 to t2 (the walk length when the
    totals agree)."""
    if len(t1) != len(t2):
        raise ValueError("assignment length mismatch")
    return sum(a - b for a, b in zip(t1.values, t2.values) if a > b)


def interpolation_chain(
    g: Graph, t1: ThresholdAssignment, t2: ThresholdAssignment
) -> InterpolationChain:
    """Walk t1 -> t2 by unit moves: at each step decrement the
    smallest-index vertex still above its target and increment the
    smallest-index vertex still below.  Exactly delta(t1, t2) steps."""
    if len(t1) != g.n or len(t2) != g.n:
        raise ValueError("assignment length mismatch")
    if t1.total != t2.total:
        raise ValueError("assignments must have equal totals")
    steps = [t1]
    cur = list(t1.values)
    target = t2.values
    while True:
        w = next((v for v in range(g.n) if cur[v] > target[v]), None)
        if w is None:
            break
        u = next(v for v in range(g.n) if cur[v] < target[v])
        cur[w] -= 1
        cur[u] += 1
        steps.append(ThresholdAssignment(tuple(cur)))
    return InterpolationChain(tuple(steps))


def find_intermediate(
    g: Graph,
    t1: ThresholdAssignment,
    t2: ThresholdAssignment,
    r: int,
    cap: int = MIN_DYNAMO_CAP,
) -> ThresholdAssignment:
    """First assignment on the walk whose minimum-dynamo size equals r.

    Exists whenever r lies between the endpoint values, because each step
    moves the minimum-dynamo size by at most one.
    """
    d1, _ = min_dynamo(g, t1, cap=cap)
    d2, _ = min_dynamo(g, t2, cap=cap)
    if not min(d1, d2) <= r <= max(d1, d2):
        raise ValueError(f"r={r} outside [{min(d1, d2)}, {max(d1, d2)}]")
    for step in interpolation_chain(g, t1, t2).steps:
        value, _ = min_dynamo(g, step, cap=cap)
        if value == r:
            return step
    raise AssertionError("unit moves skipped an intermediate value")


def triangle_free_rewrite(
    g: Graph,
    t: ThresholdAssignment,
    h: Iterable[int],
    u: int,
    v: int,
) -> ThresholdAssignment:
    """Zero out a triangle-free resistant subgraph except for one of its
    edges, whose endpoints get their full degrees.  Never raises the
    total."""
    hset = set(h)
    if u not in hset or v not in hset or not g.has_edge(u, v):
        raise ValueError("uv must be an edge inside the subgraph")
    for a in hset:
        for b in g.adjacency[a]:
            if b <= a or b not in hset:
                continue
            if any(c in hset for c in g.adjacency[b] if c in set(g.adjacency[a])):
                raise ValueError("subgraph contains a triangle")
    if not is_resistant(g, t, hset):
        raise ValueError("subgraph is not resistant")
    values = list(t.values)
    for w in hset:
        values[w] = 0
    values[u] = g.degree(u)
    values[v] = g.degree(v)
    return ThresholdAssignment(tuple(values))
