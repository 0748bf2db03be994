"""Shared oracles and graph strategies.

The counting oracle avoids bitmasks on purpose: subsets come from itertools
and connectivity from a BFS over adjacency sets, so a bug in the fast path
cannot hide in the reference implementation.
"""

import itertools
import random

import pytest
from hypothesis import strategies as st

from cisgraph import graph as G


def adjacency_sets(g: G.Graph) -> list[set[int]]:
    return [set(G.bits(g.adj[v])) for v in range(g.n)]


def subset_connected(adj: list[set[int]], subset) -> bool:
    todo = set(subset)
    if not todo:
        return False
    start = todo.pop()
    stack = [start]
    while stack:
        v = stack.pop()
        hits = adj[v] & todo
        todo -= hits
        stack.extend(hits)
    return not todo


def oracle_count(g: G.Graph, required=()) -> int:
    """Number of connected induced subgraphs containing all of required."""
    adj = adjacency_sets(g)
    req = set(required)
    total = 0
    for k in range(1, g.n + 1):
        for subset in itertools.combinations(range(g.n), k):
            if req <= set(subset) and subset_connected(adj, subset):
                total += 1
    return total


def oracle_connected(g: G.Graph) -> bool:
    return subset_connected(adjacency_sets(g), range(g.n))


def oracle_cut_vertices(g: G.Graph) -> set[int]:
    """Definitional: v is a cut vertex iff G - v is disconnected."""
    adj = adjacency_sets(g)
    out = set()
    for v in range(g.n):
        rest = [x for x in range(g.n) if x != v]
        if not rest:
            continue
        trimmed = [s - {v} for s in adj]
        if not subset_connected(trimmed, rest):
            out.add(v)
    return out


def oracle_two_connected(g: G.Graph) -> bool:
    return g.n >= 3 and oracle_connected(g) and not oracle_cut_vertices(g)


def oracle_minimally_two_connected(g: G.Graph) -> bool:
    if not oracle_two_connected(g):
        return False
    for u, v in g.edges():
        if oracle_two_connected(G.remove_edge(g, u, v)):
            return False
    return True


def relabel(g: G.Graph, perm) -> G.Graph:
    adj = [0] * g.n
    for u in range(g.n):
        for v in G.bits(g.adj[u]):
            adj[perm[u]] |= 1 << perm[v]
    return G.Graph(g.n, tuple(adj))


def random_connected(rng: random.Random, n: int, extra: float = 0.3) -> G.Graph:
    """Random spanning tree plus a sprinkle of extra edges."""
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < extra:
                edges.add((i, j))
    return G.from_edge_list(n, sorted(edges))


@pytest.fixture
def rng():
    return random.Random(20260814)


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        edges.add((draw(st.integers(0, v - 1)), v))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if pairs:
        edges.update(draw(st.lists(st.sampled_from(pairs), max_size=2 * n)))
    return G.from_edge_list(n, sorted(edges))


@st.composite
def permutations_of(draw, n: int):
    perm = list(range(n))
    for i in range(n - 1, 0, -1):
        j = draw(st.integers(0, i))
        perm[i], perm[j] = perm[j], perm[i]
    return perm
