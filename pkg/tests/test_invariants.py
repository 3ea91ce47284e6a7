import itertools
import math
import random

import pytest
from hypothesis import given, settings

import oracles
from conftest import fixture_graph, random_simple, simple_graphs
from homtool import Graph, VertexMap, is_hom
from homtool.decompose import decompose_complete
from homtool.generators import complete, complete_multipartite, cycle, empty, grotzsch
from homtool.graph import disjoint_union
from homtool.homs import find_hom
from homtool.invariants import (chromatic_number, clique_number, colour_classes, dsatur,
                                invariant_report, is_l_partite, maximal_cliques, parts_map,
                                product_coloring)


def test_chromatic_examples():
    assert chromatic_number(fixture_graph("sec5_G"))[0] == 4
    assert chromatic_number(cycle(7))[0] == 3
    chi, f = chromatic_number(empty(5))
    assert chi == 1 and is_hom(f).ok


def test_chromatic_witness_is_surjective_colouring():
    chi, f = chromatic_number(grotzsch())
    assert chi == 4 and is_hom(f, ["surjective"]).ok
    assert len(colour_classes(f)) == 4


def test_clique_examples():
    assert clique_number(grotzsch())[0] == 2
    for sizes in [(1, 1), (2, 3), (1, 2, 3), (2, 2, 2, 1)]:
        assert clique_number(complete_multipartite(*sizes))[0] == len(sizes)
    omega, witness = clique_number(fixture_graph("sec5_H"))
    h = fixture_graph("sec5_H")
    assert omega == 3 and all(h.has_edge(u, v) for u, v in itertools.combinations(witness, 2))


def test_directed_input_rejected():
    d = Graph.build("ab", [("a", "b")], directed=True)
    with pytest.raises(ValueError):
        is_l_partite(d, 2)


def test_l_partite_examples():
    for l in range(2, 6):
        assert is_l_partite(complete(l - 1), l) == (False, None)
    ok, parts = is_l_partite(cycle(6), 2)
    assert ok and sorted(map(sorted, parts)) == [["1", "3", "5"], ["2", "4", "6"]]
    two = disjoint_union(complete(3), complete(3))
    ok, parts = is_l_partite(two, 3)
    assert ok and len(parts) == 3 and all(parts)
    assert is_hom(parts_map(two, parts)).ok


def test_l_partite_pads_with_extra_parts():
    ok, parts = is_l_partite(empty(4), 3)
    assert ok and len(parts) == 3 and sorted(v for p in parts for v in p) == ["1", "2", "3", "4"]


@settings(max_examples=150, deadline=None)
@given(simple_graphs(6))
def test_l_partite_criterion(g):
    for l in range(2, 5):
        ok, parts = is_l_partite(g, l)
        brute = any(all(not (u in p and v in p) for p in parts_ for u, v in g.edges)
                    for parts_ in map(lambda ps: [set(p) for p in ps],
                                      oracles.l_partitions(g.vertices, l)))
        assert ok == brute == (oracles.chromatic(g) <= l and len(g.vertices) >= l)
        if ok:
            assert len(parts) == l and is_hom(parts_map(g, parts)).ok


@settings(max_examples=150, deadline=None)
@given(simple_graphs(7))
def test_chromatic_and_clique_match_brute_force(g):
    chi, f = chromatic_number(g)
    assert chi == oracles.chromatic(g)
    omega, witness = clique_number(g)
    assert omega == oracles.clique(g) == len(witness)
    assert omega <= chi
    assert max(dsatur(g).values(), default=0) >= chi


def test_chromatic_is_tight_on_random_suite():
    rng = random.Random(17)
    for _ in range(150):
        g = random_simple(rng, 7)
        chi, _ = chromatic_number(g)
        assert find_hom(g, complete(chi)) is not None
        if chi > 1:
            assert find_hom(g, complete(chi - 1)) is None


def test_maximal_cliques_of_square_plus_chord():
    g = Graph.build("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")])
    assert sorted(map(sorted, maximal_cliques(g))) == [["a", "b", "c"], ["a", "c", "d"]]


# --- product colouring ------------------------------------------------------------------

def _two_colouring(g, piece_vertices, piece_edges):
    sub = g.subgraph(piece_vertices, piece_edges).graph
    f = find_hom(sub, complete(2))
    assert f is not None
    return f


def test_product_colouring_of_odd_cycle_pieces():
    c5 = cycle(5)
    path_edges = [e for e in c5.edges if e != ("1", "5")]
    f1 = _two_colouring(c5, c5.vertices, path_edges)
    f2 = _two_colouring(c5, ["1", "5"], [("1", "5")])
    prod = product_coloring([f1, f2], c5)
    assert is_hom(prod).ok and len(prod.codomain.vertices) == 4


def test_product_colouring_of_a_single_colouring():
    g = cycle(6)
    f = find_hom(g, complete(2))
    prod = product_coloring([f], g)
    assert len(prod.codomain.vertices) == 2
    assert [prod[v].strip("()") for v in g.vertices] == [f[v] for v in g.vertices]


def test_product_colouring_of_complete_decomposition():
    plan = decompose_complete(4, 2)
    k4 = complete(4)
    prod = product_coloring([p.map for p in plan.pieces], k4)
    assert is_hom(prod).ok and len(prod.codomain.vertices) <= 4
    assert len(set(prod.mapping.values())) == 4


def test_product_colouring_rejects_uncovered_edges():
    c5 = cycle(5)
    f1 = _two_colouring(c5, c5.vertices, [e for e in c5.edges if e != ("1", "5")])
    with pytest.raises(ValueError, match="15"):
        product_coloring([f1], c5)


def test_product_colouring_random_covers():
    rng = random.Random(23)
    for _ in range(80):
        g = random_simple(rng, 6, 2)
        edges = sorted(g.edges)
        k = rng.randint(1, 3)
        groups = [[] for _ in range(k)]
        for e in edges:
            groups[rng.randrange(k)].append(e)
        maps = []
        for es in groups:
            sub = g.subgraph(g.vertices, es).graph
            _, f = chromatic_number(sub)
            maps.append(f)
        prod = product_coloring(maps, g)
        sizes = [len(f.codomain.vertices) for f in maps]
        assert is_hom(prod).ok
        assert len(prod.codomain.vertices) == math.prod(sizes)
        assert chromatic_number(g)[0] <= len(prod.codomain.vertices)


def test_invariant_report_fields():
    r = invariant_report(fixture_graph("sec5_H"))
    assert (r.chromatic, r.clique) == (3, 3)
    assert isinstance(r.colouring, VertexMap)
