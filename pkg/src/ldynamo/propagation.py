"""Synchronous threshold activation and resistant subgraphs.

A seed set activates a vertex v in round i+1 as soon as at least tau(v)
of its neighbors are active after round i.  The dual obstruction is a
resistant subgraph: an induced K with deg_K(v) >= deg_G(v) - tau(v) + 1
for every v in K; a seed is a dynamo exactly when its complement contains
no resistant subgraph.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from . import _kernels
from .errors import MalformedLineError
from .graph import Graph


@dataclass(frozen=True)
class ThresholdAssignment:
    """Per-vertex nonnegative integer thresholds."""

    values: tuple[int, ...]

    def __post_init__(self):
        if any(t < 0 for t in self.values):
            raise ValueError("thresholds must be nonnegative")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    @property
    def total(self) -> int:
        return sum(self.values)

    @property
    def average(self) -> Fraction:
        """Average threshold as an exact rational."""
        if not self.values:
            raise ValueError("average threshold undefined on 0 vertices")
        return Fraction(self.total, len(self.values))

    def is_self_opinioned(self, g: Graph, v: int) -> bool:
        """tau(v) = deg(v) + 1: the vertex can only be activated by seeding."""
        return self.values[v] == g.degree(v) + 1

    def replace(self, v: int, value: int) -> "ThresholdAssignment":
        vals = list(self.values)
        vals[v] = value
        return ThresholdAssignment(tuple(vals))


def parse_thresholds(text: str) -> ThresholdAssignment:
    """One nonnegative integer per line, vertex order = index order."""
    values = []
    for ln in text.splitlines():
        if not ln.strip():
            continue
        try:
            t = int(ln)
        except ValueError:
            raise MalformedLineError(f"non-integer threshold line {ln!r}") from None
        if t < 0:
            raise MalformedLineError(f"negative threshold {t}")
        values.append(t)
    return ThresholdAssignment(tuple(values))


def serialize_thresholds(t: ThresholdAssignment) -> str:
    return "\n".join(str(v) for v in t.values) + "\n"


@dataclass(frozen=True)
class PropagationTrace:
    """Round partition D_0, ..., D_k plus whatever never activates."""

    rounds: tuple[frozenset[int], ...]
    unactivated: frozenset[int]

    @property
    def activated(self) -> frozenset[int]:
        return frozenset().union(*self.rounds) if self.rounds else frozenset()

    def to_json(self) -> str:
        return json.dumps(
            {
                "rounds": [sorted(r) for r in self.rounds],
                "unactivated": sorted(self.unactivated),
            }
        )


def _check_lengths(g: Graph, t: ThresholdAssignment) -> None:
    if len(t) != g.n:
        raise ValueError(
            f"threshold assignment has {len(t)} entries for a graph on {g.n} vertices"
        )


def propagate(g: Graph, t: ThresholdAssignment, seed: Iterable[int]) -> PropagationTrace:
    """Run the synchronous activation process to its fixpoint.

    Round i+1 consists of exactly the not-yet-active vertices with at
    least tau(v) active neighbors; the process stops when a round would
    be empty.  Vertices with tau(v) = 0 outside the seed enter round 1.
    """
    _check_lengths(g, t)
    seed_set = frozenset(seed)
    if any(not 0 <= v < g.n for v in seed_set):
        raise ValueError("seed contains a vertex out of range")
    active = set(seed_set)
    rounds = [seed_set]
    active_neighbors = [0] * g.n
    for v in active:
        for u in g.adjacency[v]:
            active_neighbors[u] += 1
    frontier = [v for v in range(g.n) if v not in active and active_neighbors[v] >= t[v]]
    while frontier:
        rounds.append(frozenset(frontier))
        for v in frontier:
            active.add(v)
        for v in frontier:
            for u in g.adjacency[v]:
                active_neighbors[u] += 1
        frontier = [
            v for v in range(g.n) if v not in active and active_neighbors[v] >= t[v]
        ]
    return PropagationTrace(
        rounds=tuple(rounds),
        unactivated=frozenset(range(g.n)) - active,
    )


def is_dynamo(g: Graph, t: ThresholdAssignment, seed: Iterable[int]) -> bool:
    """True iff the seed activates every vertex."""
    return not propagate(g, t, seed).unactivated


def is_resistant(g: Graph, t: ThresholdAssignment, k: Iterable[int]) -> bool:
    """Check deg_K(v) >= deg_G(v) - tau(v) + 1 for every v of the induced K."""
    _check_lengths(g, t)
    kset = set(k)
    if not kset:
        raise ValueError("resistance of the empty set is undefined")
    if any(not 0 <= v < g.n for v in kset):
        raise ValueError("subgraph contains a vertex out of range")
    for v in kset:
        deg_k = sum(1 for u in g.adjacency[v] if u in kset)
        if deg_k < g.degree(v) - t[v] + 1:
            return False
    return True


def max_resistant_subgraph(
    g: Graph, t: ThresholdAssignment, within: Iterable[int]
) -> frozenset[int]:
    """Unique maximal resistant subgraph inside `within` (empty if none).

    Computed by peeling: repeatedly delete any vertex whose current degree
    drops below deg_G(v) - tau(v) + 1.  The fixpoint does not depend on
    the deletion order.
    """
    _check_lengths(g, t)
    cur = set(within)
    if any(not 0 <= v < g.n for v in cur):
        raise ValueError("vertex out of range")
    changed = True
    while changed:
        changed = False
        for v in sorted(cur):
            deg_cur = sum(1 for u in g.adjacency[v] if u in cur)
            if deg_cur < g.degree(v) - t[v] + 1:
                cur.discard(v)
                changed = True
    return frozenset(cur)


def resistant_duality_violation(g: Graph, t: ThresholdAssignment) -> frozenset[int] | None:
    """Exhaustively check, over every seed D, that D is a dynamo iff
    V \\ D contains no resistant subgraph; return the first violating seed.

    Desk-scale helper (needs n <= 62); runs the same closure and peel
    fixpoints as `is_dynamo` and `max_resistant_subgraph` but compiled,
    so all 2^n seeds can be covered.
    """
    _check_lengths(g, t)
    adj = _kernels.adj_array(g)
    tau = np.array(t.values, dtype=np.int64)
    deg = np.array(g.degrees(), dtype=np.int64)
    bad = _kernels.duality_violation(adj, tau, deg)
    if bad < 0:
        return None
    return _kernels.mask_to_set(int(bad))
