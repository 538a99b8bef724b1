import math

import networkx as nx
import pytest
from hypothesis import given, settings

from oracles import brute_automorphisms, small_graphs
from symbreak import generators as G
from symbreak import refine
from symbreak.automorphism import (
    AutGroup,
    aut_order,
    check_group_axioms,
    enumerate_automorphisms,
    group_order_formula_dutch,
    orbits,
)
from symbreak.errors import BadParams, CappedGroup
from symbreak.graph import Graph, is_automorphism


def _nx_count(g: Graph) -> int:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(h, h).isomorphisms_iter())


def test_p3_order():
    assert enumerate_automorphisms(G.path(3)).order == 2


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("k", [3, 4, 5])
def test_dutch_order(n, k):
    group = enumerate_automorphisms(G.dutch(n, k))
    assert group.order == math.factorial(n) * 2**n == group_order_formula_dutch(n, k)


def test_q53_order():
    assert enumerate_automorphisms(G.q_graph(5, 3)).order == 3840


@pytest.mark.parametrize("n, k, expected", [(2, 3, 8), (3, 5, 48), (4, 3, 384)])
def test_dutch_formula_examples(n, k, expected):
    assert group_order_formula_dutch(n, k) == expected


def test_dutch_formula_big_integers():
    assert group_order_formula_dutch(30, 3) == math.factorial(30) * 2**30
    with pytest.raises(BadParams):
        group_order_formula_dutch(1, 3)


def test_identity_first_and_sorted():
    group = enumerate_automorphisms(G.cycle(5))
    assert group.elements[0] == tuple(range(5))
    assert list(group.elements) == sorted(group.elements)
    assert group.n == 5 and len(group) == 10


def test_orbits_examples():
    assert orbits(enumerate_automorphisms(G.path(3))) == [[0, 2], [1]]
    assert orbits(enumerate_automorphisms(G.complete(4))) == [[0, 1, 2, 3]]
    assert orbits(enumerate_automorphisms(G.friendship(2))) == [[0], [1, 2, 3, 4]]


def test_cap_sets_flag():
    group = enumerate_automorphisms(G.complete(5), cap=10)
    assert group.capped and group.order == 10
    with pytest.raises(CappedGroup):
        group.require_exact()
    with pytest.raises(CappedGroup):
        orbits(group)
    with pytest.raises(BadParams):
        enumerate_automorphisms(G.path(3), cap=0)


def test_cap_exact_boundary():
    group = enumerate_automorphisms(G.complete(4), cap=24)
    assert not group.capped and group.order == 24


def test_empty_graph():
    assert enumerate_automorphisms(Graph(0)).elements == ((),)


@given(small_graphs(max_n=7))
@settings(max_examples=80, deadline=None)
def test_enumeration_matches_brute(g):
    assert set(enumerate_automorphisms(g).elements) == set(brute_automorphisms(g))


@given(small_graphs(max_n=8))
@settings(max_examples=60, deadline=None)
def test_order_matches_networkx(g):
    count = _nx_count(g)
    assert enumerate_automorphisms(g).order == count
    assert aut_order(g) == count
    assert math.factorial(g.n) % count == 0


@given(small_graphs(max_n=8))
@settings(max_examples=40, deadline=None)
def test_group_axioms_hold(g):
    assert check_group_axioms(g, enumerate_automorphisms(g)) == []


def test_group_axioms_detect_missing_element():
    full = enumerate_automorphisms(G.cycle(4))
    broken = AutGroup(full.elements[:-1])
    assert check_group_axioms(G.cycle(4), broken)


def test_group_axioms_detect_non_automorphism():
    group = AutGroup(((0, 1, 2), (1, 0, 2)))
    assert any("not an automorphism" in p for p in check_group_axioms(G.path(3), group))


@pytest.mark.parametrize(
    "g, expected",
    [(G.friendship(8), 10_321_920), (G.nanostar(2), None), (G.star(7), 5040), (G.q_graph(5, 3), 3840)],
)
def test_refinement_order_on_large_groups(g, expected):
    order = aut_order(g)
    if expected is None:
        assert order == enumerate_automorphisms(g).order
    else:
        assert order == expected


@given(small_graphs(min_n=2, max_n=8))
@settings(max_examples=60, deadline=None)
def test_moving_automorphism_exists_iff_nontrivial(g):
    adj = [sorted(a) for a in g.adj]
    found = refine.find_moving_automorphism(adj, [0] * g.n)
    if len(brute_automorphisms(g)) == 1:
        assert found is None
    else:
        assert found is not None and is_automorphism(g, found) and found != tuple(range(g.n))


@given(small_graphs(min_n=2, max_n=8))
@settings(max_examples=40, deadline=None)
def test_strong_generators_generate_group(g):
    adj = [sorted(a) for a in g.adj]
    gens = refine.strong_generators(adj)
    group = set(brute_automorphisms(g))
    closure = {tuple(range(g.n))}
    frontier = list(closure)
    while frontier:
        nxt = []
        for p in frontier:
            for t in gens:
                q = tuple(p[x] for x in t)
                if q not in closure:
                    closure.add(q)
                    nxt.append(q)
        frontier = nxt
    assert closure == group
