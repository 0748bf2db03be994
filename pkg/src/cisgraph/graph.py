"""Immutable bitset graphs of order at most 32.

Vertices are integers 0..n-1. Adjacency is a tuple of n bitmasks, so a
vertex set is just an int and neighbourhood queries are single word ops.
All operations return new Graph values; nothing mutates in place.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import (
    BadClass,
    BadEdge,
    NotConnected,
    OrderOutOfRange,
    ParseError,
    SameVertex,
    TrivialGraph,
)

MAX_VERTICES = 32

VertexSet = int  # bitmask over vertices 0..n-1


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: VertexSet) -> Iterator[int]:
    """Iterate the vertices in a mask in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def lowest_bit(mask: VertexSet) -> int:
    """Index of the smallest vertex in a nonempty mask."""
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    @cached_property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                yield (u, v + u + 1)

    def __repr__(self) -> str:  # pragma: no cover
        return f"Graph(n={self.n}, m={self.m})"


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_VERTICES:
        raise OrderOutOfRange(f"order {n} outside 1..{MAX_VERTICES}")


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise BadEdge(f"vertex {v} outside 0..{g.n - 1}")


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on n vertices from (u, v) pairs."""
    _check_order(n)
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise BadEdge(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise BadEdge(f"self loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def parse_edge_list(text: str) -> Graph:
    """Parse the plain text format: first line n, then one 'u v' pair per line."""
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(no, ln) for no, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty edge list input")
    no, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"line {no}: expected vertex count, got {head!r}") from None
    if not 1 <= n <= MAX_VERTICES:
        raise OrderOutOfRange(f"line {no}: order {n} outside 1..{MAX_VERTICES}")
    edges = []
    for no, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"line {no}: expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {no}: expected integers, got {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(f"line {no}: bad edge ({u}, {v}) for order {n}")
        edges.append((u, v))
    return from_edge_list(n, edges)


# graph6: header byte 63+n (n <= 62 covers our range), then the upper
# triangle x(0,1) x(0,2) x(1,2) x(0,3) ... packed into 6-bit groups, each
# group offset by 63.

_G6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    out = [chr(63 + g.n)]
    acc = 0
    nbits = 0
    for col in range(1, g.n):
        for row in range(col):
            acc = (acc << 1) | ((g.adj[row] >> col) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise ParseError("empty graph6 string")
    c0 = ord(s[0])
    if c0 == 126:
        raise OrderOutOfRange("graph6 long form implies order >= 63")
    if not 63 <= c0 <= 125:
        raise ParseError(f"bad graph6 header byte {s[0]!r}")
    n = c0 - 63
    if not 1 <= n <= MAX_VERTICES:
        raise OrderOutOfRange(f"graph6 order {n} outside 1..{MAX_VERTICES}")
    body = s[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need}")
    stream = 0
    for ch in body:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise ParseError(f"bad graph6 byte {ch!r}")
        stream = (stream << 6) | (c - 63)
    total = 6 * need
    adj = [0] * n
    pos = total - 1  # bit index of x(0,1) from the LSB end
    for col in range(1, n):
        for row in range(col):
            if (stream >> pos) & 1:
                adj[row] |= 1 << col
                adj[col] |= 1 << row
            pos -= 1
    if total and stream & ((1 << (pos + 1)) - 1):
        raise ParseError("nonzero padding bits in graph6 body")
    return Graph(n, tuple(adj))


def reach(g: Graph, start: int, within: VertexSet | None = None) -> VertexSet:
    """Vertices reachable from start inside the mask `within` (default: all)."""
    s = g.full_mask if within is None else within
    comp = (1 << start) & s
    while True:
        grow = comp
        for v in bits(comp):
            grow |= g.adj[v]
        grow &= s
        if grow == comp:
            return comp
        comp = grow


def is_connected(g: Graph) -> bool:
    return reach(g, 0) == g.full_mask


def components(g: Graph) -> list[VertexSet]:
    left = g.full_mask
    out = []
    while left:
        start = (left & -left).bit_length() - 1
        c = reach(g, start, left)
        out.append(c)
        left &= ~c
    return out


def induced_subgraph(g: Graph, mask: VertexSet) -> Graph:
    """Subgraph induced by the vertices in mask, relabelled in ascending order."""
    keep = list(bits(mask & g.full_mask))
    if not keep:
        raise OrderOutOfRange("cannot induce on an empty vertex set")
    pos = {v: i for i, v in enumerate(keep)}
    adj = [0] * len(keep)
    for v in keep:
        for w in bits(g.adj[v] & mask):
            adj[pos[v]] |= 1 << pos[w]
    return Graph(len(keep), tuple(adj))


def delete_vertex(g: Graph, v: int) -> Graph:
    _check_vertex(g, v)
    if g.n == 1:
        raise TrivialGraph("cannot delete the only vertex")
    return induced_subgraph(g, g.full_mask & ~(1 << v))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise BadEdge(f"self loop at {u}")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if not g.has_edge(u, v):
        raise BadEdge(f"no edge ({u}, {v}) to remove")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def pendant_vertices(g: Graph) -> VertexSet:
    """Mask of degree-one vertices."""
    return mask_of(v for v in range(g.n) if g.degree(v) == 1)


def _lowpoint_scan(g: Graph) -> tuple[VertexSet, list[VertexSet]]:
    """One DFS pass: (cut vertex mask, blocks as vertex masks).

    Iterative Hopcroft-Tarjan with an explicit edge stack; assumes g is
    connected. Blocks come out in pop order and are re-sorted by caller.
    """
    n = g.n
    if n == 1:
        return 0, [1]
    nbr = [list(bits(a)) for a in g.adj]
    disc = [-1] * n
    low = [0] * n
    ptr = [0] * n
    disc[0] = low[0] = 0
    timer = 1
    stack = [(0, -1)]
    estack: list[tuple[int, int]] = []
    cut = 0
    blocks: list[int] = []
    root_children = 0
    while stack:
        v, parent = stack[-1]
        moved = False
        while ptr[v] < len(nbr[v]):
            w = nbr[v][ptr[v]]
            ptr[v] += 1
            if disc[w] == -1:
                estack.append((v, w))
                disc[w] = low[w] = timer
                timer += 1
                if v == 0:
                    root_children += 1
                stack.append((w, v))
                moved = True
                break
            if w != parent and disc[w] < disc[v]:
                estack.append((v, w))
                if disc[w] < low[v]:
                    low[v] = disc[w]
        if moved:
            continue
        stack.pop()
        if parent == -1:
            continue
        if low[v] < low[parent]:
            low[parent] = low[v]
        if low[v] >= disc[parent]:
            if parent != 0:
                cut |= 1 << parent
            mask = 0
            while True:
                a, b = estack.pop()
                mask |= (1 << a) | (1 << b)
                if (a, b) == (parent, v):
                    break
            blocks.append(mask)
    if root_children >= 2:
        cut |= 1
    return cut, blocks


def cut_vertices(g: Graph) -> VertexSet:
    """Mask of cut vertices. Requires a connected graph."""
    if not is_connected(g):
        raise NotConnected("cut vertices are defined here for connected graphs")
    cut, _ = _lowpoint_scan(g)
    return cut


def blocks(g: Graph) -> list[VertexSet]:
    """Vertex masks of the blocks, sorted by smallest member vertex."""
    if g.n < 2:
        raise TrivialGraph("blocks need at least two vertices")
    if not is_connected(g):
        raise NotConnected("block decomposition requires a connected graph")
    _, blks = _lowpoint_scan(g)
    return sorted(blks, key=lambda m: m & -m)


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and cut_vertices(g) == 0


def is_minimally_two_connected(g: Graph) -> bool:
    """Two-connected, and every single edge removal breaks two-connectivity."""
    if not is_two_connected(g):
        return False
    return all(not is_two_connected(remove_edge(g, u, v)) for u, v in g.edges())


def identify(g1: Graph, u: int, g2: Graph, v: int) -> Graph:
    """Glue g2 onto g1 by merging g2's vertex v into g1's vertex u.

    g1 keeps its labels; the rest of g2 is relabelled to n1, n1+1, ... in
    ascending original order.
    """
    _check_vertex(g1, u)
    _check_vertex(g2, v)
    n = g1.n + g2.n - 1
    _check_order(n)
    mapping = {}
    nxt = g1.n
    for w in range(g2.n):
        if w == v:
            mapping[w] = u
        else:
            mapping[w] = nxt
            nxt += 1
    adj = list(g1.adj) + [0] * (g2.n - 1)
    for w in range(g2.n):
        for x in bits(g2.adj[w]):
            adj[mapping[w]] |= 1 << mapping[x]
    return Graph(n, tuple(adj))


def attach_path(g: Graph, v: int, k: int) -> Graph:
    """Identify vertex v with a leaf of a path on k vertices (k = 1: no-op)."""
    _check_vertex(g, v)
    if k < 1:
        raise BadClass(f"attached path order must be >= 1, got {k}")
    if k == 1:
        return g
    n = g.n + k - 1
    _check_order(n)
    adj = list(g.adj) + [0] * (k - 1)
    prev = v
    for w in range(g.n, n):
        adj[prev] |= 1 << w
        adj[w] |= 1 << prev
        prev = w
    return Graph(n, tuple(adj))
