import pytest

from cisgraph import graph as G
from cisgraph import families as fam
from cisgraph.counting import closed_form, count_cis
from cisgraph.errors import BadClass, BadOrder, ParseError, TooFewParts

from conftest import oracle_count


def cuts(g):
    return G.cut_vertices(g).bit_count()


def pendants(g):
    return G.pendant_vertices(g).bit_count()


# clique-paths family ---------------------------------------------------------

def test_clique_paths_basics():
    assert fam.build_clique_paths([1, 1, 1]) == fam.clique(3)
    paw = fam.build_clique_paths([1, 1, 2])
    assert paw.n == 4 and cuts(paw) == 1
    g = fam.build_clique_paths([2, 2, 1])
    assert g.n == 5 and cuts(g) == 2
    assert count_cis(g) == 19
    with pytest.raises(TooFewParts):
        fam.build_clique_paths([2, 3])


def test_clique_paths_order_and_cuts(rng):
    for _ in range(40):
        q = rng.randint(3, 5)
        parts = [rng.randint(1, 3) for _ in range(q)]
        g = fam.build_clique_paths(parts)
        assert g.n == sum(parts)
        assert cuts(g) == sum(p - 1 for p in parts)


# balanced maximiser ----------------------------------------------------------

def test_balanced_max_examples():
    assert fam.build_balanced_max(5, 0) == fam.clique(5)
    paw = fam.build_balanced_max(4, 1)
    assert count_cis(paw) == 12
    g62 = fam.build_balanced_max(6, 2)
    assert g62.n == 6 and cuts(g62) == 2


def test_max_cut_formula_values():
    assert fam.max_cut_formula(5, 0) == 31
    assert fam.max_cut_formula(4, 1) == 12
    assert fam.max_cut_formula(5, 3) == closed_form("path", 5)


def test_max_cut_formula_matches_builder():
    for n in range(3, 13):
        for c in range(0, n - 2):
            g = fam.build_balanced_max(n, c)
            assert g.n == n and cuts(g) == c, (n, c)
            assert count_cis(g) == fam.max_cut_formula(n, c), (n, c)
        # c = n-2 is the path, covered by the formula only
        assert fam.max_cut_formula(n, n - 2) == closed_form("path", n)
    with pytest.raises(BadClass):
        fam.build_balanced_max(6, 4)
    with pytest.raises(BadClass):
        fam.max_cut_formula(6, 5)


# two cliques -----------------------------------------------------------------

def test_two_cliques_values():
    assert fam.two_cliques_formula(7, 2) == 96
    assert fam.two_cliques_formula(7, 3) == 82
    assert fam.two_cliques_formula(3, 2) == 6
    for n in range(3, 15):
        for l in range(2, (n + 1) // 2 + 1):
            g = fam.build_two_cliques(n, l)
            assert g.n == n and cuts(g) == 1
            assert count_cis(g) == fam.two_cliques_formula(n, l)
    with pytest.raises(BadClass):
        fam.build_two_cliques(7, 5)


def test_two_cliques_chain_decreases():
    for n in range(5, 21):
        values = [fam.two_cliques_formula(n, l) for l in range(2, (n + 1) // 2 + 1)]
        assert values == sorted(values, reverse=True)
        assert len(set(values)) == len(values)


# trees with p pendant vertices ------------------------------------------------

def test_t1_examples():
    p5 = fam.build_t1(5, 2)
    assert p5.n == 5 and pendants(p5) == 2 and count_cis(p5) == 15
    dstar = fam.build_t1(6, 4)
    assert pendants(dstar) == 4 and count_cis(dstar) == 28
    spider = fam.build_t1(7, 3)
    assert spider.n == 7 and pendants(spider) == 3


def test_min_pendant_formula_matches_t1():
    assert fam.min_pendant_formula(5, 2) == 15
    assert fam.min_pendant_formula(6, 2) == 21
    assert fam.min_pendant_formula(6, 4) == 28
    for n in range(4, 15):
        for p in range(2, n - 1):
            g = fam.build_t1(n, p)
            assert g.n == n and pendants(g) == p
            assert count_cis(g) == fam.min_pendant_formula(n, p), (n, p)


def test_t2_spider():
    g = fam.build_t2(7, 3)
    assert g.n == 7 and pendants(g) == 3
    assert g.adj[0].bit_count() == 3  # root carries all three legs
    assert fam.build_t2(5, 4) == fam.star(5)
    g = fam.build_t2(8, 3)
    assert g.n == 8 and pendants(g) == 3


def test_unicyclic_min_formula():
    assert fam.unicyclic_min_formula(4) == 12
    assert fam.unicyclic_min_formula(5) == 18
    assert fam.unicyclic_min_formula(6) == 25
    for n in range(3, 15):
        tad = fam.build_tadpole(n)
        assert tad.n == n and count_cis(tad) == fam.unicyclic_min_formula(n)


# pendant-count maximisers ------------------------------------------------------

def test_maxnp_values():
    assert fam.maxnp_formula(5, 2) == 21
    assert fam.maxnp_formula(6, 2) == 41
    assert fam.maxnp_formula(6, 4) == 30
    for n in range(5, 13):
        for p in range(0, n - 1):
            g = fam.build_maxnp(n, p)
            assert g.n == n and pendants(g) == p, (n, p)
            assert count_cis(g) == fam.maxnp_formula(n, p), (n, p)
    with pytest.raises(BadClass):
        fam.maxnp_formula(4, 1)


def test_clique_star_shape():
    g = fam.build_maxnp(6, 2)
    assert pendants(g) == 2 and cuts(g) == 1
    sub = fam.build_subdivided_star(6)
    assert pendants(sub) == 4 and g.n == sub.n == 6


# double tadpoles ----------------------------------------------------------------

def test_double_tadpole():
    d6 = fam.build_double_tadpole(6, 3, 3)
    assert d6.n == 6 and pendants(d6) == 0 and cuts(d6) == 2
    assert count_cis(d6) == 30
    assert fam.double_tadpole_min_formula(6) == 30
    assert fam.double_tadpole_min_formula(7) == 39
    assert fam.double_tadpole_min_formula(10) == 72
    for n in range(6, 13):
        assert count_cis(fam.build_double_tadpole(n, 3, 3)) == \
            fam.double_tadpole_min_formula(n)
        for l in range(3, n - 2):
            for r in range(3, n - l + 1):
                g = fam.build_double_tadpole(n, l, r)
                assert g.n == n and pendants(g) == 0
                assert cuts(g) == n - l - r + 2, (n, l, r)
    with pytest.raises(BadClass):
        fam.build_double_tadpole(5, 3, 3)


def test_double_tadpole_strictly_beats_base():
    for n in range(6, 13):
        base = fam.double_tadpole_min_formula(n)
        for l in range(3, n - 2):
            for r in range(3, n - l + 1):
                if (l, r) == (3, 3):
                    continue
                assert count_cis(fam.build_double_tadpole(n, l, r)) > base


# special near-cycle graph ---------------------------------------------------------

def test_special_graph_beats_cycle():
    for n in range(4, 12):
        base = closed_form("cycle", n)
        for i in range(0, n - 2):
            for j in range(i + 1, n - 1):
                g = fam.build_special(n, i, j)
                assert g.n == n
                assert count_cis(g) > base, (n, i, j)
    with pytest.raises(BadClass):
        fam.build_special(5, 2, 2)


def test_special_k23():
    g = fam.build_special(5, 0, 2)
    assert oracle_count(g) == count_cis(g)
    degs = sorted(m.bit_count() for m in g.adj)
    assert degs == [2, 2, 2, 3, 3]


# spec strings --------------------------------------------------------------------

def test_family_spec_round_trip():
    spec = fam.parse_family_spec(" clique_paths( 2, 2,1 ) ")
    assert spec.text() == "clique_paths(2,2,1)"
    assert count_cis(spec.build()) == 19
    assert fam.parse_family_spec("path(6)").build() == fam.path(6)
    assert fam.build_family("double_tadpole(6,3,3)").n == 6


def test_family_spec_errors():
    with pytest.raises(ParseError):
        fam.parse_family_spec("path[6]")
    with pytest.raises(BadClass):
        fam.parse_family_spec("unknown_family(3)")
    with pytest.raises(BadClass):
        fam.parse_family_spec("path(2,3)")
    with pytest.raises(BadOrder):
        fam.build_family("cycle(2)")
