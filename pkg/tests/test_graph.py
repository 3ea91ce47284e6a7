import itertools

import pytest
from hypothesis import given, settings

from conftest import digraphs, fixture_graph, simple_graphs
from homtool import Budget, BudgetExceeded, Graph, HGFError, ModeMismatch, parse_hgf, serialize_hgf
from homtool.generators import (complete, complete_multipartite, cycle, empty, generate, grotzsch,
                                kneser, loop_vertex, multipartite_parts, path)
from homtool.graph import disjoint_union, or_power, remove_isolated, tensor_product, union
from homtool.homs import VertexMap, is_hom
from homtool.invariants import chromatic_number, clique_number

K2_TEXT = "hgf 1 undirected\nv a\nv b\ne a b"


# --- representation ----------------------------------------------------------------

def test_undirected_edges_stored_once_in_canonical_orientation():
    g = Graph.build(["b", "a"], [("b", "a"), ("a", "b")])
    assert g.edges == frozenset({("a", "b")})
    assert g.vertices == ("b", "a")


def test_directed_keeps_both_arcs():
    g = Graph.build("ab", [("a", "b"), ("b", "a")], directed=True)
    assert len(g.edges) == 2
    assert g.outdegree("a") == g.indegree("a") == 1


def test_endpoint_must_be_declared():
    with pytest.raises(ValueError):
        Graph(("a",), frozenset({("a", "b")}))


def test_subgraph_rejects_foreign_edges():
    g = path(3)
    with pytest.raises(ValueError):
        g.subgraph(["1", "3"], [("1", "3")])
    with pytest.raises(ValueError, match="not in the graph"):
        g.subgraph(["9"], [])
    sub = g.subgraph(["3"], [("1", "2")])
    assert set(sub.vertices) == {"1", "2", "3"} and sub.is_spanning


# --- HGF ----------------------------------------------------------------------------

def test_parse_smallest_graph():
    g = parse_hgf(K2_TEXT.encode())
    assert g.vertices == ("a", "b") and g.edges == {("a", "b")} and not g.directed


def test_serialize_k2_is_the_canonical_text():
    assert serialize_hgf(parse_hgf(K2_TEXT)) == (K2_TEXT + "\n").encode()


@pytest.mark.parametrize("text, line, column, fragment", [
    ("hgf 1 directed\nv a\ne a b", 3, 5, "undeclared endpoint 'b'"),
    ("hgf 1 undirected\nv a\nv a", 3, 3, "duplicate vertex"),
    ("hgf 1 undirected\nv a\nv b\ne a b\ne b a", 5, 1, "duplicate edge"),
    ("hgf 2 undirected", 1, 1, "header"),
    ("hgf 1 sideways", 1, 7, "unknown mode"),
    ("hgf 1 undirected\nx a", 2, 1, "unknown record"),
    ("hgf 1 undirected\nv a b", 2, 1, "exactly one"),
])
def test_parse_errors_carry_position(text, line, column, fragment):
    with pytest.raises(HGFError) as err:
        parse_hgf(text)
    assert (err.value.line, err.value.column) == (line, column)
    assert fragment in str(err.value)


def test_parse_rejects_bad_utf8():
    with pytest.raises(HGFError):
        parse_hgf(b"hgf 1 undirected\nv \xff")


def test_comments_blank_lines_and_loops():
    g = parse_hgf("hgf 1 undirected\n# note\n\nv x\ne x x\n")
    assert g.loops == {"x"}


def test_worked_example_fixtures_counts():
    g, h = fixture_graph("sec5_G"), fixture_graph("sec5_H")
    assert (len(g.vertices), len(g.edges)) == (8, 10)
    text = serialize_hgf(h).decode().splitlines()
    assert sum(t.startswith("v ") for t in text) == 6
    assert sum(t.startswith("e ") for t in text) == 7


def test_cycle_serialization_line_counts():
    text = serialize_hgf(generate("cycle", 5)).decode().splitlines()
    assert sum(t.startswith("v ") for t in text) == 5
    assert sum(t.startswith("e ") for t in text) == 5


@settings(max_examples=150, deadline=None)
@given(simple_graphs(7))
def test_round_trip_undirected(g):
    back = parse_hgf(serialize_hgf(g))
    assert back == g and back.vertices == g.vertices


@settings(max_examples=150, deadline=None)
@given(digraphs(5, loops=True))
def test_round_trip_directed(g):
    assert parse_hgf(serialize_hgf(g)) == g


# --- generators ---------------------------------------------------------------------

def test_family_counts():
    assert (len(complete(4).vertices), len(complete(4).edges)) == (4, 6)
    m4 = grotzsch()
    assert (len(m4.vertices), len(m4.edges)) == (11, 20)
    kn = kneser(5, 2)
    brute = sum(1 for a, b in itertools.combinations(itertools.combinations(range(1, 6), 2), 2)
                if not set(a) & set(b))
    assert (len(kn.vertices), len(kn.edges)) == (10, brute) == (10, 15)
    assert "{1,2}" in kn.vertices


def test_grotzsch_is_triangle_free_and_four_chromatic():
    m4 = grotzsch()
    adj = m4.nbrs
    assert not any(b in adj[a] and c in adj[a] and c in adj[b]
                   for a, b, c in itertools.combinations(m4.vertices, 3))
    assert chromatic_number(m4)[0] == 4
    assert clique_number(m4)[0] == 2


def test_complete_multipartite_maps_onto_parts():
    sizes = (2, 1, 3)
    g = complete_multipartite(*sizes)
    parts = multipartite_parts(*sizes)
    k = complete(len(sizes))
    f = VertexMap(g, k, {v: str(i + 1) for i, p in enumerate(parts) for v in p})
    assert is_hom(f, ["surjective"]).ok


@pytest.mark.parametrize("call", [
    lambda: complete(0), lambda: path(0), lambda: cycle(2), lambda: complete_multipartite(2, 0),
    lambda: kneser(3, 2), lambda: generate("random", 3, 1.5), lambda: generate("nope"),
])
def test_parameter_errors(call):
    with pytest.raises(ValueError):
        call()


def test_random_is_seeded():
    assert generate("random", 6, 0.5, seed=4) == generate("random", 6, 0.5, seed=4)
    assert generate("random_directed", 4, 0.5, seed=1).directed
    assert loop_vertex().loops == {"1"}


# --- algebra ------------------------------------------------------------------------

def test_union_examples():
    g = cycle(5)
    assert union(g, g) == g
    p4 = path(4)
    closing = Graph.build(["4", "1"], [("4", "1")])
    assert union(p4, closing).edges == cycle(4).edges
    a, b = complete(2), Graph.build("xy", [("x", "y")])
    assert union(a, b) == disjoint_union(a, b)


def test_union_mode_mismatch():
    with pytest.raises(ModeMismatch):
        union(complete(2), Graph.build("ab", [("a", "b")], directed=True))


def test_disjoint_union_counts_and_priming():
    k2_point = disjoint_union(complete(2), complete(1))
    assert (len(k2_point.vertices), len(k2_point.edges)) == (3, 1)
    two_triangles = disjoint_union(complete(3), complete(3))
    assert (len(two_triangles.vertices), len(two_triangles.edges)) == (6, 6)
    g = cycle(4)
    assert disjoint_union(empty(0), g) == g


def test_tensor_product_examples():
    kk = tensor_product(complete(2), complete(2))
    assert (len(kk.vertices), len(kk.edges)) == (4, 2)
    assert {frozenset(e) for e in kk.edges} == {frozenset({"(1,1)", "(2,2)"}),
                                                 frozenset({"(1,2)", "(2,1)"})}
    g = cycle(4)
    assert not tensor_product(g, complete(1)).edges
    c3 = cycle(3)
    prod = tensor_product(c3, c3)
    for axis in (0, 1):
        proj = VertexMap(prod, c3, {v: v.strip("()").split(",")[axis] for v in prod.vertices})
        assert is_hom(proj).ok


def test_or_power_k2_squared_is_complete():
    # every pair of distinct tuples differs in some coordinate, and K2 joins distinct vertices
    p = or_power(complete(2), 2)
    assert len(p.vertices) == 4 and len(p.edges) == 6
    assert p.relabel(dict(zip(p.vertices, "1234"))) == complete(4)


def test_or_power_brute_adjacency():
    for h in (path(3), complete(2), Graph.build("ab", [("a", "b")], directed=True)):
        for k in (1, 2, 3):
            p = or_power(h, k)
            assert len(p.vertices) == len(h.vertices) ** k
            tuples = list(itertools.product(h.vertices, repeat=k))
            for x in tuples:
                for y in tuples:
                    want = any(h.has_edge(a, b) for a, b in zip(x, y))
                    assert p.has_edge("(" + ",".join(x) + ")", "(" + ",".join(y) + ")") == want


def test_or_power_first_power_is_isomorphic():
    h = fixture_graph("sec5_H")
    p = or_power(h, 1)
    assert p.relabel({v: v.strip("()") for v in p.vertices}) == h


def test_or_power_budget():
    with pytest.raises(BudgetExceeded):
        or_power(complete(10), 3, Budget(orpower_vertices=999))


def test_remove_isolated():
    assert remove_isolated(disjoint_union(complete(2), complete(1))) == complete(2)
    assert remove_isolated(empty(5)).vertices == ()
    assert remove_isolated(cycle(5)) == cycle(5)
    assert remove_isolated(loop_vertex()) == loop_vertex()
