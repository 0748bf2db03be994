"""Builders and closed-form evaluators for the extremal graph families.

Every builder documents its vertex layout, and layouts are deterministic so
a family spec string always produces the same labelled graph. The formula
evaluators are independent of the builders; tests compare them against
count_cis on the built graphs.

Family spec strings look like "tadpole(6)" or "clique_paths(2,2,1)"; see
FamilySpec / parse_family_spec.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb

from . import graph as G
from .errors import BadClass, BadOrder, ParseError, TooFewParts


# elementary families -------------------------------------------------------

def path(n: int) -> G.Graph:
    """P_n with vertices 0-1-...-(n-1)."""
    if n < 1:
        raise BadOrder(f"path needs n >= 1, got {n}")
    return G.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> G.Graph:
    """C_n on 0..n-1 in cyclic order."""
    if n < 3:
        raise BadOrder(f"cycle needs n >= 3, got {n}")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return G.from_edge_list(n, edges)


def clique(n: int) -> G.Graph:
    if n < 1:
        raise BadOrder(f"clique needs n >= 1, got {n}")
    return G.from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> G.Graph:
    """S_n: centre 0 joined to 1..n-1."""
    if n < 1:
        raise BadOrder(f"star needs n >= 1, got {n}")
    return G.from_edge_list(n, [(0, i) for i in range(1, n)])


# clique with attached paths: maximisers over a fixed cut-vertex count ------

def build_clique_paths(parts: tuple[int, ...] | list[int]) -> G.Graph:
    """A clique K_q with a path of order parts[i] hanging at clique vertex i
    (a part of 1 attaches nothing). Clique vertices are 0..q-1 and path
    vertices are appended in part order."""
    parts = tuple(int(x) for x in parts)
    q = len(parts)
    if q < 3:
        raise TooFewParts(f"need at least 3 parts, got {q}")
    if any(x < 1 for x in parts):
        raise BadClass(f"parts must be positive, got {parts}")
    g = clique(q)
    for i, x in enumerate(parts):
        g = G.attach_path(g, i, x)
    return g


def build_balanced_max(n: int, c: int) -> G.Graph:
    """The balanced clique-with-paths graph on n vertices with c cut
    vertices: q = n - c parts, n mod q of them one longer than the rest.

    Rejects c = n - 2 (the only member of that class is the path, which
    this family cannot express with q >= 3); c = n - 3 and below only.
    """
    if n < 3 or not 0 <= c <= n - 3:
        raise BadClass(f"balanced max family needs 0 <= c <= n-3, got n={n}, c={c}")
    q = n - c
    s, t = divmod(n, q)
    return build_clique_paths((s,) * (q - t) + (s + 1,) * t)


def max_cut_formula(n: int, c: int) -> int:
    """Maximum CIS count over connected graphs with n vertices and c cut
    vertices. Covers c = n - 2 as well, where it equals the path total."""
    if not 0 <= c <= n - 2:
        raise BadClass(f"cut-vertex count must satisfy 0 <= c <= n-2, got n={n}, c={c}")
    q = n - c
    s, t = divmod(n, q)
    return (q - t) * comb(s, 2) + t * comb(s + 1, 2) + (s + 1) ** (q - t) * (s + 2) ** t - 1


# two cliques sharing a vertex ----------------------------------------------

def build_two_cliques(n: int, l: int) -> G.Graph:
    """K_l and K_{n+1-l} glued at one vertex. K_l occupies 0..l-1, the shared
    vertex is l-1, the rest of the larger clique follows."""
    if n < 3 or not 2 <= l <= (n + 1) // 2:
        raise BadClass(f"two-cliques family needs 2 <= l <= (n+1)/2, got n={n}, l={l}")
    return G.identify(clique(l), l - 1, clique(n + 1 - l), 0)


def two_cliques_formula(n: int, l: int) -> int:
    if n < 3 or not 2 <= l <= (n + 1) // 2:
        raise BadClass(f"two-cliques family needs 2 <= l <= (n+1)/2, got n={n}, l={l}")
    return 2 ** (n - 1) + 2 ** (l - 1) + 2 ** (n - l) - 2


# pendant-count minimisers ---------------------------------------------------

def build_t1(n: int, p: int) -> G.Graph:
    """Path of order n - p with floor(p/2) extra leaves on one end and
    ceil(p/2) on the other; exactly p pendant vertices. Core path is
    0..n-p-1, leaves at end 0 come first."""
    if n < 4 or not 2 <= p <= n - 2:
        raise BadClass(f"t1 family needs n >= 4 and 2 <= p <= n-2, got n={n}, p={p}")
    core = n - p
    edges = [(i, i + 1) for i in range(core - 1)]
    nxt = core
    for _ in range(p // 2):
        edges.append((0, nxt))
        nxt += 1
    for _ in range(p - p // 2):
        edges.append((core - 1, nxt))
        nxt += 1
    return G.from_edge_list(n, edges)


def build_t2(n: int, p: int) -> G.Graph:
    """Spider with p legs from root 0, leg lengths as equal as possible:
    with m = (n-1) // p, the first (n-1) mod p legs have m+1 edges and the
    rest have m. Legs are laid out longest first."""
    if n < 4 or not 2 <= p <= n - 1:
        raise BadClass(f"t2 family needs n >= 4 and 2 <= p <= n-1, got n={n}, p={p}")
    m, extra = divmod(n - 1, p)
    g = G.from_edge_list(1, [])
    for leg in range(p):
        edges = m + 1 if leg < extra else m
        g = G.attach_path(g, 0, edges + 1)
    return g


def min_pendant_formula(n: int, p: int) -> int:
    """Minimum CIS count over connected graphs with n vertices and exactly
    p >= 2 pendant vertices (attained by the t1 graph)."""
    if n < 4 or not 2 <= p <= n - 2:
        raise BadClass(f"pendant minimum needs n >= 4 and 2 <= p <= n-2, got n={n}, p={p}")
    half = p // 2
    return (
        2**p
        + (n - p - 1) * (2**half + 2 ** (p - half))
        + p
        + (n - p - 1) * (n - p - 2) // 2
    )


def build_tadpole(n: int) -> G.Graph:
    """Triangle with a path of order n - 2 hanging off one corner (n = 3
    gives the bare triangle). Triangle is 0, 1, 2; the tail starts at 0."""
    if n < 3:
        raise BadOrder(f"tadpole needs n >= 3, got {n}")
    return G.identify(clique(3), 0, path(n - 2), 0) if n > 3 else clique(3)


def unicyclic_min_formula(n: int) -> int:
    """Minimum CIS count over unicyclic graphs of order n, equivalently
    over connected graphs with exactly one pendant vertex (n >= 4); the
    triangle tadpole is the unique witness."""
    if n < 3:
        raise BadOrder(f"unicyclic minimum needs n >= 3, got {n}")
    return (n * n + 3 * n - 4) // 2


# pendant-count maximisers ---------------------------------------------------

def build_clique_star(n: int, p: int) -> G.Graph:
    """K_{n-p} with p pendant vertices on clique vertex 0 (p = 0: K_n)."""
    if n < 3 or not 0 <= p <= n - 3:
        raise BadClass(f"clique-star needs 0 <= p <= n-3, got n={n}, p={p}")
    if p == 0:
        return clique(n)
    return G.identify(clique(n - p), 0, star(p + 1), 0)


def build_subdivided_star(n: int) -> G.Graph:
    """Star S_{n-1} with one edge subdivided; has n - 2 pendant vertices.
    Centre 0, the lengthened ray runs 0-1-(n-1)."""
    if n < 5:
        raise BadClass(f"subdivided star needs n >= 5, got {n}")
    return G.attach_path(star(n - 1), 1, 2)


def build_maxnp(n: int, p: int) -> G.Graph:
    """The maximiser over connected graphs with n vertices and p pendant
    vertices: clique-star for p < n - 2, subdivided star for p = n - 2."""
    if n < 5 or not 0 <= p <= n - 2:
        raise BadClass(f"pendant maximum needs n >= 5 and 0 <= p <= n-2, got n={n}, p={p}")
    if p == n - 2:
        return build_subdivided_star(n)
    return build_clique_star(n, p)


def maxnp_formula(n: int, p: int) -> int:
    if n < 5 or not 0 <= p <= n - 2:
        raise BadClass(f"pendant maximum needs n >= 5 and 0 <= p <= n-2, got n={n}, p={p}")
    if p == n - 2:
        return n + 3 * 2 ** (n - 3)
    return 2 ** (n - 1) + 2 ** (n - p - 1) + p - 1


# pendant-free minimisers -----------------------------------------------------

def build_double_tadpole(n: int, l: int, r: int) -> G.Graph:
    """Cycles C_l and C_r joined by a path, n vertices total (the path has
    n + 2 - l - r vertices including both junctions; n = l + r means the
    cycles are joined by a single edge). Left cycle is 0..l-1 with the path
    leaving vertex 0."""
    if l < 3 or r < 3 or l + r > n:
        raise BadClass(f"double tadpole needs l, r >= 3 and l + r <= n, got n={n}, l={l}, r={r}")
    g = G.attach_path(cycle(l), 0, n + 2 - l - r)
    return G.identify(g, n - r, cycle(r), 0)


def double_tadpole_min_formula(n: int) -> int:
    """Minimum CIS count over connected pendant-free graphs of order n > 5,
    attained only by the double tadpole with two triangles."""
    if n < 6:
        raise BadClass(f"pendant-free minimum needs n >= 6, got {n}")
    return (n - 1) * (n + 6) // 2


# cycle plus one extra vertex -------------------------------------------------

def build_special(n: int, i: int, j: int) -> G.Graph:
    """C_{n-1} plus one vertex adjacent to cycle vertices i and j. The extra
    vertex is n - 1; i and j may or may not be neighbours on the cycle."""
    if n < 4 or not 0 <= i < j <= n - 2:
        raise BadClass(f"special family needs n >= 4 and 0 <= i < j <= n-2, got n={n}, i={i}, j={j}")
    g = cycle(n - 1)
    g = G.add_edge(G.Graph(n, g.adj + (0,)), n - 1, i)
    return G.add_edge(g, n - 1, j)


# family specs ----------------------------------------------------------------

_BUILDERS = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "clique": (clique, 1),
    "star": (star, 1),
    "clique_paths": (lambda *parts: build_clique_paths(parts), None),
    "balanced_max": (build_balanced_max, 2),
    "two_cliques": (build_two_cliques, 2),
    "t1": (build_t1, 2),
    "t2": (build_t2, 2),
    "tadpole": (build_tadpole, 1),
    "double_tadpole": (build_double_tadpole, 3),
    "clique_star": (build_clique_star, 2),
    "subdivided_star": (build_subdivided_star, 1),
    "special": (build_special, 3),
}

_SPEC_RE = re.compile(r"^\s*([a-z][a-z0-9_]*)\s*\(\s*([-0-9,\s]*)\)\s*$")


@dataclass(frozen=True)
class FamilySpec:
    """A named family with integer parameters; text form kind(p1,p2,...)."""

    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in _BUILDERS:
            raise BadClass(f"unknown family kind {self.kind!r}")
        arity = _BUILDERS[self.kind][1]
        if arity is not None and len(self.params) != arity:
            raise BadClass(
                f"family {self.kind!r} takes {arity} parameters, got {len(self.params)}"
            )

    def build(self) -> G.Graph:
        return _BUILDERS[self.kind][0](*self.params)

    def text(self) -> str:
        return f"{self.kind}({','.join(str(p) for p in self.params)})"


def parse_family_spec(text: str) -> FamilySpec:
    m = _SPEC_RE.match(text)
    if not m:
        raise ParseError(f"bad family spec {text!r}, expected kind(p1,p2,...)")
    kind = m.group(1)
    body = m.group(2).strip()
    try:
        params = tuple(int(x) for x in body.split(",")) if body else ()
    except ValueError:
        raise ParseError(f"bad family parameters in {text!r}") from None
    return FamilySpec(kind, params)


def build_family(text: str) -> G.Graph:
    return parse_family_spec(text).build()
