"""The transformation lemmas as checkable objects.

Each lemma becomes: an instance schema (component graphs, marked vertices,
integer parameters), eager validation that names the violated hypothesis,
an apply() that builds the before/after pair exactly per the construction,
and a check() that compares exact subgraph counts and cut-vertex counts
against the claimed relation.

Instances are small by design; random_instance() draws component graphs
from the order <= 5 catalogue and is deterministic per seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from . import families as fam
from . import graph as G
from .counting import count_cis, count_cis_rooted, count_cis_rooted2
from .enumeration import enumerate_connected
from .errors import BadInstance, Unsatisfiable

LEMMA_IDS = (
    "add_edge_block",
    "two_block",
    "path_order",
    "one_cut",
    "block_two_cut_pend",
    "block_two_cut_center",
    "block_two_cut_center_m1",
    "spe_graph",
    "path_order_min",
    "qk_sliding",
    "q1k_sliding",
    "ref_qk_sliding",
)

_CUT_PRESERVING = {
    "add_edge_block",
    "two_block",
    "block_two_cut_pend",
    "block_two_cut_center",
    "block_two_cut_center_m1",
}


@dataclass(frozen=True)
class LemmaInstance:
    lemma_id: str
    graphs: dict[str, G.Graph]
    marks: dict[str, int]
    params: dict[str, int]

    def describe(self) -> str:
        parts = [self.lemma_id]
        parts += [f"{k}={G.to_graph6(self.graphs[k])}" for k in sorted(self.graphs)]
        parts += [f"{k}={self.marks[k]}" for k in sorted(self.marks)]
        parts += [f"{k}={self.params[k]}" for k in sorted(self.params)]
        return " ".join(parts)


@dataclass(frozen=True)
class LemmaReport:
    lemma_id: str
    instance: str
    lhs: int
    rhs: int
    relation_claimed: str
    relation_observed: str
    cut_count_before: int
    cut_count_after: int
    cut_preservation_claimed: bool
    holds: bool
    equality_condition_matched: bool | None

    def to_json_dict(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "instance": self.instance,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation_claimed": self.relation_claimed,
            "relation_observed": self.relation_observed,
            "cut_count_before": self.cut_count_before,
            "cut_count_after": self.cut_count_after,
            "cut_preservation_claimed": self.cut_preservation_claimed,
            "holds": self.holds,
            "equality_condition_matched": self.equality_condition_matched,
        }


def _need(cond: bool, hypothesis: str) -> None:
    if not cond:
        raise BadInstance(hypothesis)


def _mark(inst: LemmaInstance, key: str, g: G.Graph, gname: str) -> int:
    v = inst.marks.get(key)
    _need(v is not None, f"mark {key!r} missing")
    _need(0 <= v < g.n, f"mark {key}={v} is not a vertex of {gname} (order {g.n})")
    return v


def _rooted_after_delete(h: G.Graph, gone: int, root: int) -> int:
    """N(H - gone) rooted at root, tracking the relabelling."""
    g = G.delete_vertex(h, gone)
    return count_cis_rooted(g, root - 1 if root > gone else root)


def _dists(g: G.Graph, src: int) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    frontier = [src]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            for w in G.bits(g.adj[v]):
                if dist[w] < 0:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def _rooted_in_induced(g: G.Graph, mask: int, vertex: int) -> int:
    sub = G.induced_subgraph(g, mask)
    return count_cis_rooted(sub, (mask & ((1 << vertex) - 1)).bit_count())


def _complete_over(g: G.Graph, vertices: list[int]) -> G.Graph:
    for i, a in enumerate(vertices):
        for b in vertices[i + 1:]:
            if not g.has_edge(a, b):
                g = G.add_edge(g, a, b)
    return g


# assembly ---------------------------------------------------------------

def _u_path_v(left: G.Graph, u: int, right: G.Graph, v: int, q: int) -> G.Graph:
    """Join u to v by a path of order q (q = 1 identifies u with v)."""
    if q == 1:
        return G.identify(left, u, right, v)
    ext = G.attach_path(right, v, q)
    return G.identify(left, u, ext, ext.n - 1)


def _assemble_pend(inst: LemmaInstance):
    l, r = inst.params["l"], inst.params["r"]
    g = G.identify(fam.clique(l), 0, fam.clique(r), 0)
    w = {j: l + j - 2 for j in range(2, r + 1)}
    for j in range(2, r + 1):
        comp = inst.graphs[f"r{j}"]
        g = G.identify(g, w[j], comp, inst.marks[f"v{j}"])
    return g, w


def _assemble_center(inst: LemmaInstance):
    m = inst.graphs["m"]
    v1, v2 = inst.marks["v1"], inst.marks["v2"]
    l, r = inst.params["l"], inst.params["r"]
    g = G.identify(m, v1, fam.clique(l), 0)
    u = {j: m.n + j - 2 for j in range(2, l + 1)}
    g = G.identify(g, v2, fam.clique(r), 0)
    w = {j: m.n + l - 1 + j - 2 for j in range(2, r + 1)}
    left_mask = (1 << v1) | G.mask_of(u.values())
    right_mask = (1 << v2) | G.mask_of(w.values())
    for j in range(2, l + 1):
        start = g.n
        g = G.identify(g, u[j], inst.graphs[f"l{j}"], inst.marks[f"x{j}"])
        left_mask |= ((1 << (g.n - start)) - 1) << start
    for j in range(2, r + 1):
        start = g.n
        g = G.identify(g, w[j], inst.graphs[f"r{j}"], inst.marks[f"z{j}"])
        right_mask |= ((1 << (g.n - start)) - 1) << start
    return g, u, w, left_mask, right_mask


def _assemble_center_m1(inst: LemmaInstance):
    l, r = inst.params["l"], inst.params["r"]
    g = G.identify(fam.clique(l), 0, fam.clique(r), 0)
    u = {j: j - 1 for j in range(2, l + 1)}
    w = {j: l + j - 2 for j in range(2, r + 1)}
    for j in range(2, l + 1):
        g = G.identify(g, u[j], inst.graphs[f"l{j}"], inst.marks[f"x{j}"])
    for j in range(2, r + 1):
        g = G.identify(g, w[j], inst.graphs[f"r{j}"], inst.marks[f"z{j}"])
    return g, u, w


# validation ---------------------------------------------------------------

def _component(inst: LemmaInstance, name: str, min_order: int = 1) -> G.Graph:
    g = inst.graphs.get(name)
    _need(g is not None, f"component graph {name!r} missing")
    _need(G.is_connected(g), f"component {name!r} must be connected")
    _need(g.n >= min_order, f"component {name!r} needs order >= {min_order}")
    return g


def validate_instance(inst: LemmaInstance) -> None:
    """Raise BadInstance naming the first violated hypothesis."""
    lem = inst.lemma_id
    p = inst.params
    if lem == "add_edge_block":
        g = _component(inst, "g", 2)
        a = _mark(inst, "a", g, "g")
        b = _mark(inst, "b", g, "g")
        _need(a != b, "a and b must be distinct")
        _need(not g.has_edge(a, b), "a and b must be nonadjacent")
        pair = (1 << a) | (1 << b)
        _need(any(bm & pair == pair for bm in G.blocks(g)),
              "a and b must lie in the same block")
    elif lem == "two_block":
        g = _component(inst, "g", 2)
        w = _mark(inst, "w", g, "g")
        v1 = _mark(inst, "v1", g, "g")
        v2 = _mark(inst, "v2", g, "g")
        _need(len({w, v1, v2}) == 3, "w, v1, v2 must be distinct")
        _need(g.has_edge(w, v1), "v1 must be a neighbour of w")
        _need(g.has_edge(w, v2), "v2 must be a neighbour of w")
        at_w = [bm for bm in G.blocks(g) if (bm >> w) & 1]
        _need(len(at_w) >= 3, "w must belong to at least three blocks")
        b1 = next(bm for bm in at_w if (bm >> v1) & 1)
        b2 = next(bm for bm in at_w if (bm >> v2) & 1)
        _need(b1 != b2, "v1 and v2 must come from distinct blocks at w")
    elif lem in ("path_order", "path_order_min"):
        h = _component(inst, "h", 3)
        u = _mark(inst, "u", h, "h")
        v = _mark(inst, "v", h, "h")
        _need(u != v, "u and v must be distinct")
        _need(count_cis_rooted2(h, u, v) > 1, "N(H) rooted at u,v must exceed 1")
        n1, n2 = p["n1"], p["n2"]
        if lem == "path_order":
            _need(1 <= n1 <= n2 - 1, "need 1 <= n1 <= n2 - 1")
            _need(_rooted_after_delete(h, u, v) <= _rooted_after_delete(h, v, u),
                  "need N(H-u) rooted at v <= N(H-v) rooted at u")
        else:
            _need(n1 >= 1 and n2 >= 1, "need n1, n2 >= 1")
            _need(_rooted_after_delete(h, v, u) <= _rooted_after_delete(h, u, v),
                  "need N(H-v) rooted at u <= N(H-u) rooted at v")
    elif lem == "one_cut":
        n, l = p["n"], p["l"]
        _need(n >= 3, "need n >= 3")
        _need(l >= 2, "need l >= 2")
        _need(2 * l <= n - 1, "need l + 1 <= (n+1)/2 for the chain step")
    elif lem == "spe_graph":
        n, i, j = p["n"], p["i"], p["j"]
        _need(n >= 4, "need n >= 4")
        _need(0 <= i < j <= n - 2, "attachment indices need 0 <= i < j <= n-2")
    elif lem == "qk_sliding":
        left = _component(inst, "left", 2)
        right = _component(inst, "right", 2)
        _mark(inst, "u", left, "left")
        _mark(inst, "v", right, "right")
        _need(p["k"] >= 2, "need k > 1")
        _need(p["q"] >= 2, "need q >= 2")
    elif lem == "q1k_sliding":
        left = _component(inst, "left", 2)
        right = _component(inst, "right", 2)
        _mark(inst, "u", left, "left")
        _mark(inst, "v", right, "right")
        _need(p["k"] >= 2, "need k >= 2")
    elif lem == "ref_qk_sliding":
        left = _component(inst, "left", 2)
        right = _component(inst, "right", 2)
        u = _mark(inst, "u", left, "left")
        w = _mark(inst, "w", left, "left")
        _mark(inst, "v", right, "right")
        _need(u != w, "u and w must be distinct")
        _need(p["k"] >= 2, "need k > 1")
        _need(p["q"] >= 1, "need q >= 1")
    elif lem == "block_two_cut_pend":
        l, r = p["l"], p["r"]
        _need(l >= 3, "need l >= 3")
        _need(r >= 2, "need r >= 2")
        for j in range(2, r + 1):
            g = _component(inst, f"r{j}", 2 if j == 2 else 1)
            _mark(inst, f"v{j}", g, f"r{j}")
    elif lem == "block_two_cut_center":
        l, r = p["l"], p["r"]
        _need(l >= 3 and r >= 3, "need l, r >= 3")
        m = _component(inst, "m", 2)
        v1 = _mark(inst, "v1", m, "m")
        v2 = _mark(inst, "v2", m, "m")
        _need(v1 != v2, "v1 and v2 must be distinct")
        for j in range(2, l + 1):
            _mark(inst, f"x{j}", _component(inst, f"l{j}"), f"l{j}")
        for j in range(2, r + 1):
            _mark(inst, f"z{j}", _component(inst, f"r{j}"), f"r{j}")
        g1, _, _, left_mask, right_mask = _assemble_center(inst)
        _need(_rooted_in_induced(g1, right_mask, v2)
              >= _rooted_in_induced(g1, left_mask, v1),
              "need N(right side) rooted >= N(left side) rooted")
    elif lem == "block_two_cut_center_m1":
        l, r = p["l"], p["r"]
        _need(l >= 3 and r >= 3, "need l, r >= 3")
        for j in range(2, l + 1):
            _mark(inst, f"x{j}", _component(inst, f"l{j}"), f"l{j}")
        for j in range(2, r + 1):
            _mark(inst, f"z{j}", _component(inst, f"r{j}"), f"r{j}")
        _need(count_cis_rooted(inst.graphs["r2"], inst.marks["z2"])
              >= count_cis_rooted(inst.graphs["l2"], inst.marks["x2"]),
              "need N(R2) rooted at z2 >= N(L2) rooted at x2")
    else:
        raise BadInstance(f"unknown lemma id {lem!r}")


# apply -----------------------------------------------------------------------

def apply(inst: LemmaInstance) -> tuple[G.Graph, G.Graph]:
    """Build the lemma's (before, after) pair."""
    validate_instance(inst)
    lem = inst.lemma_id
    p = inst.params
    if lem == "add_edge_block":
        g = inst.graphs["g"]
        return g, G.add_edge(g, inst.marks["a"], inst.marks["b"])
    if lem == "two_block":
        g = inst.graphs["g"]
        return g, G.add_edge(g, inst.marks["v1"], inst.marks["v2"])
    if lem in ("path_order", "path_order_min"):
        h = inst.graphs["h"]
        u, v = inst.marks["u"], inst.marks["v"]
        n1, n2 = p["n1"], p["n2"]
        before = G.attach_path(G.attach_path(h, u, n1), v, n2)
        if lem == "path_order":
            after = G.attach_path(G.attach_path(h, u, n1 + 1), v, n2 - 1)
        else:
            after = G.attach_path(h, u, n1 + n2 - 1)
        return before, after
    if lem == "one_cut":
        n, l = p["n"], p["l"]
        return fam.build_two_cliques(n, l), fam.build_two_cliques(n, l + 1)
    if lem == "spe_graph":
        return fam.build_special(p["n"], p["i"], p["j"]), fam.cycle(p["n"])
    if lem == "qk_sliding":
        left, right = inst.graphs["left"], inst.graphs["right"]
        u, v = inst.marks["u"], inst.marks["v"]
        k, q = p["k"], p["q"]
        before = _u_path_v(G.attach_path(left, u, k), u, right, v, q)
        after = _u_path_v(left, u, right, v, q + k - 1)
        return before, after
    if lem == "q1k_sliding":
        left, right = inst.graphs["left"], inst.graphs["right"]
        u, v = inst.marks["u"], inst.marks["v"]
        k = p["k"]
        shared = G.identify(left, u, right, v)
        return G.attach_path(shared, u, k), _u_path_v(left, u, right, v, k)
    if lem == "ref_qk_sliding":
        left, right = inst.graphs["left"], inst.graphs["right"]
        u, w, v = inst.marks["u"], inst.marks["w"], inst.marks["v"]
        k, q = p["k"], p["q"]
        before = _u_path_v(G.attach_path(left, w, k), u, right, v, q)
        after = _u_path_v(left, u, right, v, q + k - 1)
        return before, after
    if lem == "block_two_cut_pend":
        l, r = p["l"], p["r"]
        g1, w = _assemble_pend(inst)
        g = g1
        for x in range(2, l):
            g = G.remove_edge(g, 1, x)
        g3 = _complete_over(g, list(range(2, l)) + [w[j] for j in range(2, r + 1)])
        return g1, g3
    if lem == "block_two_cut_center":
        l = p["l"]
        g1, u, w, _, _ = _assemble_center(inst)
        v1, v2 = inst.marks["v1"], inst.marks["v2"]
        # Detach u_2 from the rest of the clique so that L_2 hangs off u_1 by
        # the single edge u_1 u_2; u_1 keeps its edges to u_3, ..., u_l.
        g2 = g1
        for j in range(3, l + 1):
            g2 = G.remove_edge(g2, u[2], u[j])
        dv2 = _dists(g2, v2)
        m = inst.graphs["m"]
        wprime = -1
        for x in G.bits(m.adj[v1]):
            if 1 + dv2[x] == dv2[v1]:
                wprime = x
                break
        _need(wprime >= 0, "no neighbour of v1 in M lies on a shortest v1-v2 path")
        g3 = g2
        for j in range(3, l + 1):
            g3 = G.add_edge(g3, wprime, u[j])
        return g1, g3
    # block_two_cut_center_m1
    l, r = p["l"], p["r"]
    g1, u, w = _assemble_center_m1(inst)
    g2 = g1
    for j in range(3, l + 1):
        g2 = G.remove_edge(g2, u[2], u[j])
    g3 = _complete_over(
        g2, [u[j] for j in range(3, l + 1)] + [w[j] for j in range(2, r + 1)]
    )
    return g1, g3


# check ------------------------------------------------------------------

def _claimed_relation(inst: LemmaInstance) -> str:
    lem = inst.lemma_id
    if lem in ("add_edge_block", "two_block", "block_two_cut_pend",
               "block_two_cut_center", "block_two_cut_center_m1"):
        return "<"
    if lem == "path_order":
        return "<="
    if lem == "path_order_min":
        strict = inst.params["n1"] > 1 and inst.params["n2"] > 1
        return ">" if strict else ">="
    return ">"


_SATISFIES = {
    "<": ("<",),
    "<=": ("<", "="),
    "=": ("=",),
    ">": (">",),
    ">=": (">", "="),
}


def check(inst: LemmaInstance) -> LemmaReport:
    before, after = apply(inst)
    lhs = count_cis(before)
    rhs = count_cis(after)
    observed = "<" if lhs < rhs else (">" if lhs > rhs else "=")
    claimed = _claimed_relation(inst)
    cut_before = G.cut_vertices(before).bit_count()
    cut_after = G.cut_vertices(after).bit_count()
    preserves = inst.lemma_id in _CUT_PRESERVING
    holds = observed in _SATISFIES[claimed]
    if preserves:
        holds = holds and cut_before == cut_after
    eq_matched = None
    if inst.lemma_id == "path_order":
        h = inst.graphs["h"]
        u, v = inst.marks["u"], inst.marks["v"]
        predicted_equal = (
            _rooted_after_delete(h, u, v) == _rooted_after_delete(h, v, u)
            and inst.params["n1"] == inst.params["n2"] - 1
        )
        eq_matched = predicted_equal == (lhs == rhs)
        holds = holds and eq_matched
    return LemmaReport(
        lemma_id=inst.lemma_id,
        instance=inst.describe(),
        lhs=lhs,
        rhs=rhs,
        relation_claimed=claimed,
        relation_observed=observed,
        cut_count_before=cut_before,
        cut_count_after=cut_after,
        cut_preservation_claimed=preserves,
        holds=holds,
        equality_condition_matched=eq_matched,
    )


# generators ------------------------------------------------------------------

@lru_cache(maxsize=None)
def _catalogue(lo: int, hi: int) -> tuple[G.Graph, ...]:
    out: list[G.Graph] = []
    for n in range(lo, hi + 1):
        out.extend(enumerate_connected(n))
    return tuple(out)


def _glue_chain(rng: random.Random, pieces: list[G.Graph]) -> G.Graph:
    g = pieces[0]
    for nxt in pieces[1:]:
        g = G.identify(g, rng.randrange(g.n), nxt, rng.randrange(nxt.n))
    return g


def random_instance(lemma_id: str, order_budget: int, seed: int) -> LemmaInstance:
    """A valid random instance whose before/after graphs have order at most
    order_budget. Deterministic per (lemma_id, order_budget, seed)."""
    if lemma_id not in LEMMA_IDS:
        raise BadInstance(f"unknown lemma id {lemma_id!r}")
    if order_budget > G.MAX_VERTICES:
        raise Unsatisfiable(f"order budget cannot exceed {G.MAX_VERTICES}")
    rng = random.Random((lemma_id, order_budget, seed).__repr__())
    for _ in range(400):
        inst = _draw(lemma_id, order_budget, rng)
        if inst is None:
            continue
        try:
            validate_instance(inst)
        except BadInstance:
            continue
        return inst
    raise Unsatisfiable(
        f"no {lemma_id} instance found within order budget {order_budget}"
    )


def _draw(lemma_id: str, budget: int, rng: random.Random) -> LemmaInstance | None:
    pick = lambda lo, hi: rng.choice(_catalogue(lo, hi))

    if lemma_id == "add_edge_block":
        pieces = [pick(2, 5) for _ in range(rng.randint(1, 3))]
        if sum(g.n for g in pieces) - len(pieces) + 1 > budget:
            return None
        g = _glue_chain(rng, pieces)
        pairs = []
        for bm in G.blocks(g):
            verts = list(G.bits(bm))
            pairs += [(a, b) for i, a in enumerate(verts) for b in verts[i + 1:]
                      if not g.has_edge(a, b)]
        if not pairs:
            return None
        a, b = rng.choice(pairs)
        return LemmaInstance("add_edge_block", {"g": g}, {"a": a, "b": b}, {})

    if lemma_id == "two_block":
        parts = [pick(2, 5) for _ in range(3)]
        if sum(g.n for g in parts) - 2 > budget:
            return None
        m1 = rng.randrange(parts[0].n)
        m2 = rng.randrange(parts[1].n)
        m3 = rng.randrange(parts[2].n)
        g = G.identify(parts[0], m1, parts[1], m2)
        g = G.identify(g, m1, parts[2], m3)
        w = m1
        v1 = rng.choice([x for x in G.bits(parts[0].adj[m1])])
        shift2 = lambda x: parts[0].n + x - (1 if x > m2 else 0)
        v2 = rng.choice([shift2(x) for x in G.bits(parts[1].adj[m2])])
        return LemmaInstance("two_block", {"g": g},
                             {"w": w, "v1": v1, "v2": v2}, {})

    if lemma_id in ("path_order", "path_order_min"):
        h = pick(3, 5)
        cap = budget - h.n + 2
        if cap < 3:
            return None
        u = rng.randrange(h.n)
        v = rng.choice([x for x in range(h.n) if x != u])
        if count_cis_rooted2(h, u, v) <= 1:
            return None
        duv = _rooted_after_delete(h, u, v)
        dvu = _rooted_after_delete(h, v, u)
        if lemma_id == "path_order":
            if duv > dvu:
                u, v = v, u
            n2 = rng.randint(2, cap - 1)
            n1 = rng.randint(1, min(n2 - 1, cap - n2))
        else:
            if dvu > duv:
                u, v = v, u
            n1 = rng.randint(1, cap - 1)
            n2 = rng.randint(1, cap - n1)
        return LemmaInstance(lemma_id, {"h": h}, {"u": u, "v": v},
                             {"n1": n1, "n2": n2})

    if lemma_id == "one_cut":
        if budget < 5:
            return None
        n = rng.randint(5, budget)
        return LemmaInstance("one_cut", {}, {},
                             {"n": n, "l": rng.randint(2, (n - 1) // 2)})

    if lemma_id == "spe_graph":
        if budget < 4:
            return None
        n = rng.randint(4, budget)
        j = rng.randint(1, n - 2)
        i = rng.randint(0, j - 1)
        return LemmaInstance("spe_graph", {}, {}, {"n": n, "i": i, "j": j})

    if lemma_id in ("qk_sliding", "ref_qk_sliding"):
        left = pick(2, 5)
        right = pick(2, 5)
        room = budget - left.n - right.n + 3
        qmin = 2 if lemma_id == "qk_sliding" else 1
        if room < 2 + qmin:
            return None
        k = rng.randint(2, room - qmin)
        q = rng.randint(qmin, room - k)
        u = rng.randrange(left.n)
        marks = {"u": u, "v": rng.randrange(right.n)}
        if lemma_id == "ref_qk_sliding":
            w = rng.choice([x for x in range(left.n) if x != u])
            marks["w"] = w
            # The slide only strictly gains when the branch at w beats the
            # straightened path; the exact margin is
            # (k-1)((A-1)(N(R)_v+q-2) + N(L-u)_w - N(L-w)_u) with
            # A = N(L)_{u,w}. Sample only from the positive region.
            a = count_cis_rooted2(left, u, w)
            rv = count_cis_rooted(right, marks["v"])
            gain = ((a - 1) * (rv + q - 2)
                    + _rooted_after_delete(left, u, w)
                    - _rooted_after_delete(left, w, u))
            if gain <= 0:
                return None
        return LemmaInstance(lemma_id, {"left": left, "right": right},
                             marks, {"k": k, "q": q})

    if lemma_id == "q1k_sliding":
        left = pick(2, 5)
        right = pick(2, 5)
        room = budget - left.n - right.n + 2
        if room < 2:
            return None
        k = rng.randint(2, room)
        return LemmaInstance("q1k_sliding", {"left": left, "right": right},
                             {"u": rng.randrange(left.n), "v": rng.randrange(right.n)},
                             {"k": k})

    if lemma_id == "block_two_cut_pend":
        l = rng.randint(3, 5)
        r = rng.randint(2, 4)
        graphs: dict[str, G.Graph] = {}
        marks: dict[str, int] = {}
        order = l + r - 1
        for j in range(2, r + 1):
            comp = pick(2, 5) if j == 2 else pick(1, 4)
            graphs[f"r{j}"] = comp
            marks[f"v{j}"] = rng.randrange(comp.n)
            order += comp.n - 1
        if order > budget:
            return None
        return LemmaInstance("block_two_cut_pend", graphs, marks, {"l": l, "r": r})

    if lemma_id in ("block_two_cut_center", "block_two_cut_center_m1"):
        l = rng.randint(3, 4)
        r = rng.randint(3, 4)
        graphs = {}
        marks = {}
        if lemma_id == "block_two_cut_center":
            m = pick(2, 4)
            graphs["m"] = m
            v1 = rng.randrange(m.n)
            marks["v1"] = v1
            marks["v2"] = rng.choice([x for x in range(m.n) if x != v1])
            order = m.n + l + r - 2
        else:
            order = l + r - 1
        for j in range(2, l + 1):
            comp = pick(1, 3)
            graphs[f"l{j}"] = comp
            marks[f"x{j}"] = rng.randrange(comp.n)
            order += comp.n - 1
        for j in range(2, r + 1):
            comp = pick(1, 3)
            graphs[f"r{j}"] = comp
            marks[f"z{j}"] = rng.randrange(comp.n)
            order += comp.n - 1
        if order > budget:
            return None
        inst = LemmaInstance(lemma_id, graphs, marks, {"l": l, "r": r})
        try:
            validate_instance(inst)
            return inst
        except BadInstance:
            return _swap_sides(inst)
    return None


def _swap_sides(inst: LemmaInstance) -> LemmaInstance:
    """Mirror a center instance: the side conditions are total, so whichever
    orientation the sampler missed, the swapped one satisfies."""
    l, r = inst.params["l"], inst.params["r"]
    graphs = dict(inst.graphs)
    marks = dict(inst.marks)
    new_graphs = {}
    new_marks = {}
    if "m" in graphs:
        new_graphs["m"] = graphs["m"]
        new_marks["v1"], new_marks["v2"] = marks["v2"], marks["v1"]
    for j in range(2, r + 1):
        new_graphs[f"l{j}"] = graphs[f"r{j}"]
        new_marks[f"x{j}"] = marks[f"z{j}"]
    for j in range(2, l + 1):
        new_graphs[f"r{j}"] = graphs[f"l{j}"]
        new_marks[f"z{j}"] = marks[f"x{j}"]
    return LemmaInstance(inst.lemma_id, new_graphs, new_marks,
                         {"l": r, "r": l})


# exhaustive equality sweep ------------------------------------------------------

def path_order_equality_sweep(max_order: int = 7) -> tuple[int, int]:
    """Every valid path_order instance with base order <= 5 and total order
    <= max_order; returns (instances checked, equality mispredictions)."""
    checked = 0
    mismatches = 0
    for h in _catalogue(3, 5):
        for u in range(h.n):
            for v in range(h.n):
                if u == v or count_cis_rooted2(h, u, v) <= 1:
                    continue
                if (_rooted_after_delete(h, u, v)
                        > _rooted_after_delete(h, v, u)):
                    continue
                for n2 in range(2, max_order - h.n + 2):
                    for n1 in range(1, n2):
                        if h.n + n1 + n2 - 2 > max_order:
                            continue
                        inst = LemmaInstance("path_order", {"h": h},
                                             {"u": u, "v": v},
                                             {"n1": n1, "n2": n2})
                        rep = check(inst)
                        checked += 1
                        if not rep.equality_condition_matched:
                            mismatches += 1
    return checked, mismatches
