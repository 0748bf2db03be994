"""Exact counts of connected induced subgraphs.

count_cis(g) is the workhorse: a direct 2^n subset sweep up to a size
threshold, and above it the standard split N(G) = N(G - v) + N(G)_v,
generalised to a required vertex set so the rooted variants share the same
recursion. Both routes are exact and must agree; tests exercise the
recursive route by forcing a tiny threshold.

closed_form gives the textbook values for paths, cycles and cliques. It is
deliberately separate from count_cis (no family pattern matching inside the
counter), so the two can be compared as independent routes.
"""

from __future__ import annotations

import numpy as np

from . import graph as G
from ._kernels import count_connected_subsets
from .errors import BadClass, BadOrder, SameVertex

# Largest free-vertex count handled by the direct subset sweep. 2^24 bitset
# closure checks run in about a second; beyond that the vertex split keeps
# memory flat and lets callers go up to MAX_VERTICES.
SWEEP_LIMIT = 24


def _count(g: G.Graph, required: int, sweep_limit: int) -> int:
    free = g.n - required.bit_count()
    if free <= sweep_limit:
        adj = np.asarray(g.adj, dtype=np.int64)
        return int(count_connected_subsets(adj, g.n, required))
    # split on a free vertex of maximum degree (lowest index on ties)
    v = max(
        (w for w in range(g.n) if not (required >> w) & 1),
        key=lambda w: (g.degree(w), -w),
    )
    with_v = _count(g, required | (1 << v), sweep_limit)
    low = required & ((1 << v) - 1)
    high = (required >> (v + 1)) << v
    without_v = _count(G.delete_vertex(g, v), low | high, sweep_limit)
    return with_v + without_v


def count_cis(g: G.Graph, sweep_limit: int = SWEEP_LIMIT) -> int:
    """Number of nonempty vertex subsets inducing a connected subgraph.

    Disconnected input is fine: subsets never span components, so the
    total is the sum over components.
    """
    comps = G.components(g)
    if len(comps) == 1:
        return _count(g, 0, sweep_limit)
    return sum(_count(G.induced_subgraph(g, c), 0, sweep_limit) for c in comps)


def count_cis_rooted(g: G.Graph, u: int, sweep_limit: int = SWEEP_LIMIT) -> int:
    """Connected induced subgraphs containing vertex u."""
    if not 0 <= u < g.n:
        raise BadClass(f"root {u} outside 0..{g.n - 1}")
    return _count(g, 1 << u, sweep_limit)


def count_cis_rooted2(g: G.Graph, u: int, v: int, sweep_limit: int = SWEEP_LIMIT) -> int:
    """Connected induced subgraphs containing both u and v."""
    for w in (u, v):
        if not 0 <= w < g.n:
            raise BadClass(f"root {w} outside 0..{g.n - 1}")
    if u == v:
        raise SameVertex("rooted pair needs two distinct vertices")
    return _count(g, (1 << u) | (1 << v), sweep_limit)


def closed_form(kind: str, n: int) -> int:
    """Known totals: path n(n+1)/2, cycle n^2-n+1, clique 2^n-1."""
    if kind == "path":
        if n < 1:
            raise BadOrder(f"path needs n >= 1, got {n}")
        return n * (n + 1) // 2
    if kind == "cycle":
        if n < 3:
            raise BadOrder(f"cycle needs n >= 3, got {n}")
        return n * n - n + 1
    if kind == "clique":
        if n < 1:
            raise BadOrder(f"clique needs n >= 1, got {n}")
        return 2**n - 1
    raise BadClass(f"unknown closed form kind {kind!r}")
