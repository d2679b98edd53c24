"""Undirected simple graphs: parsing, degrees, bipartition, components.

Vertices are the integers 0..n-1.  Graphs are immutable after
construction; every operation in this module is a pure function.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .errors import (
    DuplicateEdgeError,
    MalformedLineError,
    OddCycleError,
    SelfLoopError,
    VertexRangeError,
)

Edge = tuple[int, int]


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset[Edge]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise VertexRangeError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if u > v:
                raise ValueError(f"edge ({u}, {v}) not normalized")
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(
            self, "adjacency", tuple(tuple(sorted(ns)) for ns in adj)
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(ns) for ns in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edges

    def neighbor_masks(self) -> tuple[int, ...]:
        """Adjacency as per-vertex bitmasks (for the brute-force kernels)."""
        return tuple(
            sum(1 << u for u in ns) for ns in self.adjacency
        )

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph plus the list mapping new indices to old ones."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = frozenset(
            (index[u], index[v])
            for (u, v) in self.edges
            if u in index and v in index
        )
        return Graph(len(keep), edges), keep


def graph_from_edges(n: int, edge_iter: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, rejecting self-loops and duplicate edges."""
    seen: set[Edge] = set()
    for u, v in edge_iter:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        e = _normalize_edge(u, v)
        if e in seen:
            raise DuplicateEdgeError(f"duplicate edge {e}")
        seen.add(e)
    return Graph(n, frozenset(seen))


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: first line "n m", then m lines "u v"."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MalformedLineError("empty document")
    head = lines[0].split()
    if len(head) != 2:
        raise MalformedLineError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise MalformedLineError(f"non-integer header {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise MalformedLineError("negative counts in header")
    if len(lines) - 1 != m:
        raise MalformedLineError(
            f"header announces {m} edges but {len(lines) - 1} lines follow"
        )
    edges: set[Edge] = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise MalformedLineError(f"edge line must be 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLineError(f"non-integer edge line {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"vertex out of range on line {ln!r}")
        if u == v:
            raise SelfLoopError(f"self-loop on line {ln!r}")
        e = _normalize_edge(u, v)
        if e in edges:
            raise DuplicateEdgeError(f"duplicate edge {e}")
        edges.add(e)
    return Graph(n, frozenset(edges))


def serialize_graph(g: Graph) -> str:
    """Emit the edge-list format with edges sorted lexicographically."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Degree multiset in nondecreasing order."""
    return tuple(sorted(g.degrees()))


def vertices_by_degree(g: Graph) -> list[int]:
    """Vertices sorted by (degree, index); the deterministic tie-break used
    whenever a sorted vertex order, not just the degree multiset, is needed."""
    return sorted(range(g.n), key=lambda v: (g.degree(v), v))


def edge_density(g: Graph) -> Fraction:
    """|E| / |G| as an exact rational."""
    if g.n == 0:
        raise ValueError("edge density undefined for the empty graph")
    return Fraction(g.m, g.n)


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def bipartition(g: Graph) -> tuple[set[int], set[int]]:
    """2-color by BFS per component; raises OddCycleError with a witness."""
    color: list[Optional[int]] = [None] * g.n
    parent: list[int] = [-1] * g.n
    left: set[int] = set()
    right: set[int] = set()
    for s in range(g.n):
        if color[s] is not None:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            v = queue.pop(0)
            for u in g.adjacency[v]:
                if color[u] is None:
                    color[u] = 1 - color[v]
                    parent[u] = v
                    queue.append(u)
                elif color[u] == color[v]:
                    raise OddCycleError(_odd_cycle_witness(parent, v, u))
    for v in range(g.n):
        (left if color[v] == 0 else right).add(v)
    return left, right


def _odd_cycle_witness(parent: list[int], v: int, u: int) -> list[int]:
    """Cycle through edge (v, u) using BFS tree paths to their junction."""
    path_v = [v]
    while parent[path_v[-1]] != -1:
        path_v.append(parent[path_v[-1]])
    path_u = [u]
    while parent[path_u[-1]] != -1:
        path_u.append(parent[path_u[-1]])
    anc_v = set(path_v)
    k = 0
    while path_u[k] not in anc_v:
        k += 1
    junction = path_u[k]
    return path_v[: path_v.index(junction)] + [junction] + path_u[:k][::-1]


def is_bipartite(g: Graph) -> bool:
    try:
        bipartition(g)
        return True
    except OddCycleError:
        return False


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(connected_components(g))


# Small constructors used throughout the tests and generators.

def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    edges = {(i, i + 1) for i in range(n - 1)} | {(0, n - 1)}
    return Graph(n, frozenset(edges))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(leaves: int) -> Graph:
    """K_{1, leaves} with the center at vertex 0."""
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))
