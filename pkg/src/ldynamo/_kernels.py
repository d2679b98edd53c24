"""Numba bitmask kernels behind the exhaustive desk-scale operations.

Vertex sets are int64 bitmasks, so every kernel requires n <= 62.  The
callers in `exact` and `propagation` enforce much smaller caps anyway.
The closure kernel is the activation fixpoint of `propagation.propagate`;
the peel kernel is the resistant-subgraph fixpoint of
`propagation.max_resistant_subgraph`.  Pure-Python counterparts exist for
both and the test suite cross-checks the two routes.
"""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def closure_mask(adj, tau, seed):
    """Activation fixpoint of a seed bitmask."""
    n = adj.shape[0]
    active = seed
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if not (active >> v) & 1:
                if _popcount(adj[v] & active) >= tau[v]:
                    active |= 1 << v
                    changed = True
    return active


@njit(cache=True)
def peel_mask(adj, tau, deg, within):
    """Maximal resistant-subgraph fixpoint inside a bitmask."""
    cur = within
    n = adj.shape[0]
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if (cur >> v) & 1:
                if _popcount(adj[v] & cur) < deg[v] - tau[v] + 1:
                    cur &= ~(1 << v)
                    changed = True
    return cur


@njit(cache=True)
def min_dynamo_mask(adj, tau):
    """Smallest dynamo: (size, seed mask).

    Subsets are scanned in nondecreasing size, lexicographically within a
    size (combination order on sorted vertex lists), so the witness is the
    lexicographically least minimum dynamo.
    """
    n = adj.shape[0]
    full = (1 << n) - 1
    if closure_mask(adj, tau, 0) == full:
        return 0, 0
    idx = np.empty(n, dtype=np.int64)
    for k in range(1, n + 1):
        for i in range(k):
            idx[i] = i
        while True:
            mask = 0
            for i in range(k):
                mask |= 1 << idx[i]
            if closure_mask(adj, tau, mask) == full:
                return k, mask
            # next combination in lexicographic order
            j = k - 1
            while j >= 0 and idx[j] == n - k + j:
                j -= 1
            if j < 0:
                break
            idx[j] += 1
            for i in range(j + 1, k):
                idx[i] = idx[i - 1] + 1
    return n, full  # unreachable: seeding everything is always a dynamo


@njit(cache=True)
def ldyn_scan(adj, taus):
    """Max of dyn over the given threshold rows; keeps the first maximizer.

    Returns (best value, row index); (-1, -1) when taus is empty.
    """
    best = -1
    best_idx = -1
    for i in range(taus.shape[0]):
        size, _ = min_dynamo_mask(adj, taus[i])
        if size > best:
            best = size
            best_idx = i
    return best, best_idx


@njit(cache=True)
def exists_dyn_at_least(adj, taus, d):
    for i in range(taus.shape[0]):
        size, _ = min_dynamo_mask(adj, taus[i])
        if size >= d:
            return True
    return False


@njit(cache=True)
def duality_violation(adj, tau, deg):
    """First seed mask violating: closure full <=> complement peels empty.

    Returns -1 when the equivalence holds for every one of the 2^n seeds.
    """
    n = adj.shape[0]
    full = (1 << n) - 1
    for seed in range(1 << n):
        dynamo = closure_mask(adj, tau, seed) == full
        no_resistant = peel_mask(adj, tau, deg, full & ~seed) == 0
        if dynamo != no_resistant:
            return seed
    return -1


@njit(cache=True)
def min_vertex_cover_mask(adj):
    """Brute-force minimum vertex cover: (size, cover mask), lex-least."""
    n = adj.shape[0]
    idx = np.empty(n, dtype=np.int64)
    for k in range(n + 1):
        for i in range(k):
            idx[i] = i
        while True:
            mask = 0
            for i in range(k):
                mask |= 1 << idx[i]
            ok = True
            for v in range(n):
                if not (mask >> v) & 1 and adj[v] & ~mask:
                    ok = False
                    break
            if ok:
                return k, mask
            j = k - 1
            while j >= 0 and idx[j] == n - k + j:
                j -= 1
            if j < 0:
                break
            idx[j] += 1
            for i in range(j + 1, k):
                idx[i] = idx[i - 1] + 1
    return n, (1 << n) - 1


def adj_array(g) -> np.ndarray:
    """Graph adjacency as an int64 bitmask array (n <= 62 required)."""
    if g.n > 62:
        raise ValueError("bitmask kernels support at most 62 vertices")
    return np.array(g.neighbor_masks(), dtype=np.int64)


def mask_to_set(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)
