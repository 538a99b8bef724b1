import json

import pytest
from hypothesis import given, settings

from oracles import small_graphs
from symbreak import generators as G
from symbreak import io
from symbreak.errors import ParseError
from symbreak.generators import FamilySpec, Part, family


@given(small_graphs(max_n=8))
@settings(max_examples=60)
def test_edgelist_round_trip(g):
    assert io.parse_edgelist(io.to_edgelist(g)) == g


@given(small_graphs(max_n=8))
@settings(max_examples=60)
def test_json_round_trip(g):
    assert io.parse_json(io.to_json(g)) == g
    assert io.loads(io.to_json(g)) == g


def test_json_keeps_roles():
    g = G.q_graph(3, 3)
    back = io.parse_json(io.to_json(g))
    assert back.roles == g.roles


def test_edgelist_comments_and_blank_lines():
    g = io.parse_edgelist("# P3\n\n3 2\n0 1\n# middle\n1 2\n")
    assert g == G.path(3)


@pytest.mark.parametrize(
    "text",
    [
        "",
        "# only comments\n",
        "3 2\n0 1\n",
        "3 1\n0 1 2\n",
        "3 1\nzero one\n",
        "3 1\n0 3\n",
        "3 1\n1 1\n",
    ],
)
def test_edgelist_errors(text):
    with pytest.raises(ParseError):
        io.parse_edgelist(text)


@pytest.mark.parametrize(
    "text",
    ["{", "[1, 2]", '{"edges": []}', '{"n": 3, "edges": [[0, 1, 2]]}', '{"n": 2, "edges": [[0, 5]]}', '{"n": "x"}'],
)
def test_json_errors(text):
    with pytest.raises(ParseError):
        io.parse_json(text)


def test_dot_output():
    g = G.star(3)
    dot = io.dumps(g, "dot")
    assert dot.startswith("graph G {") and dot.rstrip().endswith("}")
    assert dot.count(" -- ") == 3
    assert "center" in dot


def test_unknown_format():
    with pytest.raises(ParseError):
        io.dumps(G.path(2), "graphml")


def test_load_graph_from_file(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text(io.to_edgelist(G.cycle(5)))
    assert io.load_graph(path) == G.cycle(5)


def test_spec_round_trip(tmp_path):
    spec = FamilySpec(
        "chain",
        parts=(Part(FamilySpec("cycle", (6,)), 0, 2), Part(FamilySpec("cycle", (6,)), 0, "0")),
    )
    obj = io.spec_to_obj(spec)
    path = tmp_path / "chain.json"
    path.write_text(json.dumps(obj))
    back = io.load_spec(path)
    assert io.spec_to_obj(back) == obj
    assert back.key == spec.key


def test_spec_from_file_builds_spiro(tmp_path):
    obj = {"kind": "chain", "parts": [{"kind": "cycle", "params": [6], "x": 0, "y": 2}] * 2}
    path = tmp_path / "chain.json"
    path.write_text(json.dumps(obj))
    assert family(io.load_spec(path)) == G.spiro(6, 2, 2)


def test_spec_with_role_selectors():
    obj = {"kind": "bouquet", "parts": [{"kind": "star", "params": [3], "x": "center"}, {"kind": "star", "params": [4], "x": "center"}]}
    assert family(io.spec_from_obj(obj)).degree(0) == 7


def test_spec_with_custom_graphs():
    f = G.Graph(3, [(0, 1), (1, 2)], {"root": 0})
    g1 = G.Graph(2, [(0, 1)], {"root": 0})
    obj = {"kind": "nanostar", "params": [1], "graphs": {"F": io.graph_to_obj(f), "G1": io.graph_to_obj(g1)}}
    spec = io.spec_from_obj(obj)
    assert family(spec) == G.nanostar(1, f, g1)
    assert io.spec_from_obj(io.spec_to_obj(spec)).graphs == spec.graphs


@pytest.mark.parametrize(
    "obj",
    [[], {"params": [1]}, {"kind": "cycle", "params": ["a"]}, {"kind": "chain", "parts": [3]},
     {"kind": "chain", "parts": [{"kind": "cycle", "params": [3], "x": 1.5}]}],
)
def test_spec_errors(obj):
    with pytest.raises(ParseError):
        io.spec_from_obj(obj)


def test_load_spec_bad_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{nope")
    with pytest.raises(ParseError):
        io.load_spec(path)
