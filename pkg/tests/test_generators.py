import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import isomorphic
from symbreak import generators as G
from symbreak.errors import BadContacts, BadParams, IndexOutOfRange, UnknownFamily
from symbreak.generators import FamilySpec, Part, family
from symbreak.io import to_json


def test_make_base_examples():
    c5 = G.make_base("cycle", 5)
    assert (c5.n, c5.m) == (5, 5)
    assert G.make_base("complete", 4).m == 6
    k17 = G.make_base("star", 7)
    assert k17.degree(0) == 7 and k17.role("center") == 0


@pytest.mark.parametrize("kind, p", [("cycle", 2), ("complete", 0), ("path", 0), ("star", 0)])
def test_make_base_rejects(kind, p):
    with pytest.raises(BadParams):
        G.make_base(kind, p)


def test_make_base_unknown():
    with pytest.raises(UnknownFamily):
        G.make_base("petersen", 10)


def test_point_attach_examples():
    k2 = G.complete(2)
    assert isomorphic(G.point_attach(k2, 0, k2, 0), G.path(3))
    bowtie = G.point_attach(G.cycle(3), 0, G.cycle(3), 0)
    assert (bowtie.n, bowtie.m) == (5, 6)
    with pytest.raises(IndexOutOfRange):
        G.point_attach(k2, 2, k2, 0)


def test_point_attach_keeps_part_roles():
    g = G.point_attach(G.star(2), "center", G.star(3), 1)
    assert g.role("0/center") == 0
    assert g.degree(g.role("1/center")) == 3


bases = st.one_of(
    st.integers(1, 5).map(G.complete),
    st.integers(3, 6).map(G.cycle),
    st.integers(1, 6).map(G.path),
    st.integers(1, 5).map(G.star),
)


@given(bases, bases, st.data())
@settings(max_examples=50, deadline=None)
def test_point_attach_order_additive(g1, g2, data):
    v1 = data.draw(st.integers(0, g1.n - 1))
    v2 = data.draw(st.integers(0, g2.n - 1))
    g = G.point_attach(g1, v1, g2, v2)
    assert g.n == g1.n + g2.n - 1
    assert g.m == g1.m + g2.m
    assert g.is_connected()


def test_bouquet_examples():
    assert isomorphic(G.bouquet([(G.cycle(3), 0)] * 3), G.friendship(3))
    assert isomorphic(G.bouquet([(G.star(3), "center"), (G.star(4), "center")]), G.star(7))
    assert isomorphic(G.bouquet([(G.path(2), 0), (G.path(2), 0)]), G.path(3))
    with pytest.raises(BadParams):
        G.bouquet([(G.cycle(3), 0)])


def test_circuit_examples():
    assert isomorphic(G.circuit([(G.complete(1), 0)] * 3), G.cycle(3))
    assert G.circuit([(G.cycle(3), 0)] * 5).n == 15
    net = G.circuit([(G.complete(2), 0)] * 3)
    assert (net.n, net.m) == (6, 6)
    assert sorted(net.degrees()) == [1, 1, 1, 3, 3, 3]
    with pytest.raises(BadParams):
        G.circuit([(G.cycle(3), 0)] * 2)


def test_chain_examples():
    k2 = G.complete(2)
    assert isomorphic(G.chain([(k2, 0, 1), (k2, 0, 1)]), G.path(3))
    s622 = G.chain([(G.cycle(6), 0, 2)] * 2)
    assert s622.n == 11
    assert s622 == G.spiro(6, 2, 2)
    single = G.chain([(G.cycle(5), 0, 2)])
    assert single.edges == G.cycle(5).edges


def test_chain_rejects_equal_contacts():
    with pytest.raises(BadContacts):
        G.chain([(G.cycle(4), 1, 1), (G.cycle(4), 0, 2)])


def test_chain_contact_roles():
    g = G.chain([(G.cycle(6), 0, 2)] * 3)
    assert g.role("contact:0:y") == g.role("contact:1:x")
    assert g.degree(g.role("contact:1:x")) == 4


def test_link_examples():
    k1 = G.complete(1)
    assert isomorphic(G.link([(k1, 0, 0), (k1, 0, 0)]), G.complete(2))
    two = G.link([(G.cycle(6), 0, 3)] * 2)
    assert (two.n, two.m) == (12, 13)


@given(st.lists(bases, min_size=1, max_size=4), st.data())
@settings(max_examples=40, deadline=None)
def test_link_bridges_are_cut_edges(parts, data):
    triples = [(g, data.draw(st.integers(0, g.n - 1)), data.draw(st.integers(0, g.n - 1))) for g in parts]
    g = G.link(triples)
    assert g.n == sum(p.n for p in parts)
    assert g.m == sum(p.m for p in parts) + len(parts) - 1
    assert g.is_connected()
    for i in range(len(parts) - 1):
        bridge = tuple(sorted((g.role(f"contact:{i}:y"), g.role(f"contact:{i + 1}:x"))))
        assert bridge in g.edges
        assert not G.Graph(g.n, [e for e in g.edges if e != bridge]).is_connected()


@given(st.lists(bases, min_size=2, max_size=4), st.sampled_from(["bouquet", "circuit", "chain"]), st.data())
@settings(max_examples=60, deadline=None)
def test_compositions_order_formulas(parts, kind, data):
    k = len(parts)
    if kind == "chain":
        parts = [p for p in parts if p.n >= 2] or [G.cycle(3)]
        k = len(parts)
        triples = []
        for p in parts:
            x = data.draw(st.integers(0, p.n - 1))
            y = data.draw(st.integers(0, p.n - 1).filter(lambda v, x=x: v != x))
            triples.append((p, x, y))
        g = G.chain(triples)
        assert g.n == sum(p.n for p in parts) - (k - 1)
    elif kind == "bouquet":
        g = G.bouquet([(p, data.draw(st.integers(0, p.n - 1))) for p in parts])
        assert g.n == sum(p.n for p in parts) - (k - 1)
    else:
        if k < 3:
            parts = parts + [G.complete(1)] * (3 - k)
            k = 3
        g = G.circuit([(p, data.draw(st.integers(0, p.n - 1))) for p in parts])
        assert g.n == k + sum(p.n - 1 for p in parts)
    assert g.is_connected()


def test_q_graph_counts_and_roles():
    g = family(FamilySpec("q_graph", (5, 3)))
    assert (g.n, g.m) == (15, 25)
    assert g.role("hub:4") == 4
    hub = g.role("hub:2")
    assert {g.role("outer:2:0"), g.role("outer:2:1")} <= g.neighbors(hub)


@pytest.mark.parametrize("n, k", [(2, 3), (3, 4), (4, 5), (2, 9)])
def test_dutch_counts(n, k):
    g = family(FamilySpec("dutch", (n, k)))
    assert (g.n, g.m) == (1 + n * (k - 1), n * k)
    assert g.role("center") == 0 and g.degree(0) == 2 * n


def test_friendship_is_dutch_k3():
    assert to_json(family(FamilySpec("friendship", (4,)))) == to_json(family(FamilySpec("dutch", (4, 3))))


def test_spiro_312_is_friendship_2():
    assert isomorphic(G.spiro(3, 1, 2), G.friendship(2))


@pytest.mark.parametrize("q, h", [(6, 1), (6, 2), (6, 3), (5, 2), (4, 2)])
def test_spiro_contacts_at_cycle_distance(q, h):
    g = G.spiro(q, h, 3)
    assert g.n == 3 * q - 2
    x, y = g.role("contact:1:x"), g.role("contact:1:y")
    # a spiro chain has no shortcut between the two contacts of a ring
    assert _distance(g, x, y) == h


def _distance(g, a, b):
    frontier, seen, d = {a}, {a}, 0
    while b not in frontier:
        frontier = {w for v in frontier for w in g.neighbors(v)} - seen
        seen |= frontier
        d += 1
    return d


@pytest.mark.parametrize("bad", [(2, 1, 2), (6, 4, 2), (6, 0, 2), (6, 2, 0)])
def test_chem_params_rejected(bad):
    with pytest.raises(BadParams):
        G.spiro(*bad)
    with pytest.raises(BadParams):
        G.poly(*bad)


def test_poly_counts():
    g = G.poly(6, 3, 3)
    assert (g.n, g.m) == (18, 20)


@pytest.mark.parametrize("k, expected", [(1, 19), (2, 58), (3, 136)])
def test_nanostar_order(k, expected):
    assert G.nanostar_order(k) == expected
    g = G.nanostar(k)
    assert g.n == expected
    assert g.is_connected()
    assert g.degree(g.role("center")) == 3


def test_nanostar_custom_bases():
    f = G.Graph(3, [(0, 1), (1, 2)], {"root": 0, "tip": 2})
    g1 = G.Graph(2, [(0, 1)], {"root": 0})
    g = G.nanostar(2, f, g1)
    assert g.n == G.nanostar_order(2, f_order=3, g1_order=2)


def test_nanostar_base_without_root():
    with pytest.raises(BadParams):
        G.nanostar(1, g1=G.cycle(6))


def test_family_composition_spec():
    spec = FamilySpec("chain", parts=(Part(FamilySpec("cycle", (6,)), 0, 2), Part(FamilySpec("cycle", (6,)), 0, 2)))
    assert family(spec) == G.spiro(6, 2, 2)
    assert spec.key == "chain(cycle(6),cycle(6))"


def test_family_errors():
    with pytest.raises(UnknownFamily):
        family(FamilySpec("hypercube", (3,)))
    with pytest.raises(BadParams):
        family(FamilySpec("dutch", (3,)))
    with pytest.raises(BadParams):
        family(FamilySpec("bouquet"))
    with pytest.raises(BadContacts):
        family(FamilySpec("link", parts=(Part(FamilySpec("cycle", (3,)), 0),)))


@given(st.sampled_from([("dutch", (3, 4)), ("q_graph", (3, 3)), ("spiro", (5, 2, 3)), ("nanostar", (1,))]))
@settings(max_examples=10, deadline=None)
def test_family_deterministic(item):
    kind, params = item
    assert to_json(family(FamilySpec(kind, params))) == to_json(family(FamilySpec(kind, params)))
