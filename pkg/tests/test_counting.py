import pytest
from hypothesis import given, settings

from cisgraph import graph as G
from cisgraph.counting import (
    closed_form,
    count_cis,
    count_cis_rooted,
    count_cis_rooted2,
)
from cisgraph.errors import BadClass, BadOrder, SameVertex
from cisgraph import families as fam

from conftest import connected_graphs, oracle_count, random_connected


def test_closed_forms_small_against_oracle():
    for n in range(1, 9):
        assert oracle_count(fam.path(n)) == closed_form("path", n)
        assert oracle_count(fam.clique(n)) == closed_form("clique", n)
        if n >= 3:
            assert oracle_count(fam.cycle(n)) == closed_form("cycle", n)


def test_closed_form_values():
    assert closed_form("path", 5) == 15
    assert closed_form("cycle", 5) == 21
    assert closed_form("clique", 5) == 31
    with pytest.raises(BadClass):
        closed_form("hypercube", 4)
    with pytest.raises(BadOrder):
        closed_form("cycle", 2)


def test_count_matches_oracle_random(rng):
    for _ in range(120):
        g = random_connected(rng, rng.randint(1, 9))
        assert count_cis(g) == oracle_count(g)


def test_rooted_counts_match_oracle(rng):
    for _ in range(80):
        n = rng.randint(2, 8)
        g = random_connected(rng, n)
        u = rng.randrange(n)
        v = (u + 1 + rng.randrange(n - 1)) % n
        assert count_cis_rooted(g, u) == oracle_count(g, [u])
        assert count_cis_rooted2(g, u, v) == oracle_count(g, [u, v])


def test_rooted_examples():
    assert count_cis(G.from_graph6("Bw")) == 7
    assert count_cis_rooted(G.from_graph6("Bg"), 0) == 3
    paw = fam.build_balanced_max(4, 1)
    assert count_cis(paw) == 12


def test_same_vertex_rejected():
    with pytest.raises(SameVertex):
        count_cis_rooted2(fam.path(3), 1, 1)


def test_disconnected_graph_counts_components():
    g = G.from_edge_list(5, [(0, 1), (2, 3), (3, 4)])
    # P_2 and P_3 side by side: 3 + 6
    assert count_cis(g) == 9
    assert count_cis_rooted(g, 2) == 3


@settings(max_examples=100, deadline=None)
@given(connected_graphs(min_n=2, max_n=8))
def test_deletion_identity(g):
    # subgraph counts split over "contains v" for any v; use v = 0
    assert count_cis(g) == count_cis_rooted(g, 0) + count_cis(G.delete_vertex(g, 0))


@settings(max_examples=100, deadline=None)
@given(connected_graphs(min_n=2, max_n=8))
def test_adding_an_edge_strictly_increases(g):
    nonedges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
                if not g.has_edge(u, v)]
    for u, v in nonedges[:4]:
        assert count_cis(G.add_edge(g, u, v)) > count_cis(g)


def test_large_orders_use_the_split_path():
    # orders above the subset-sweep limit exercise the deletion recursion
    assert count_cis(fam.path(30)) == closed_form("path", 30)
    assert count_cis(fam.cycle(28)) == closed_form("cycle", 28)
    star = fam.star(26)
    assert count_cis(star) == 2 ** 25 + 25
    assert count_cis_rooted(star, 0) == 2 ** 25


def test_rooted2_path_ends():
    # only the full path connects its two ends
    for n in range(2, 10):
        assert count_cis_rooted2(fam.path(n), 0, n - 1) == 1
