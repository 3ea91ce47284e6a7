"""The brute-force references agree with textbook values before anything relies on them."""

import oracles
from homtool import Graph
from homtool.generators import complete, complete_multipartite, cycle, path


def test_brute_hom_basic():
    assert oracles.hom_exists(complete(2), complete(3))
    assert not oracles.hom_exists(complete(3), complete(2))
    assert oracles.hom_exists(cycle(6), complete(2))
    assert not oracles.hom_exists(cycle(5), complete(2))
    assert not oracles.hom_exists(complete(3), complete(3).induced(["1", "2"]))


def test_brute_hom_directed_respects_orientation():
    a = Graph.build("ab", [("a", "b")], directed=True)
    back = Graph.build("xy", [("y", "x")], directed=True)
    assert oracles.hom_exists(a, back)
    two_in = Graph.build("abc", [("a", "b"), ("c", "b")], directed=True)
    fan_out = Graph.build("xyz", [("z", "x"), ("z", "y")], directed=True)
    assert not oracles.hom_exists(two_in, fan_out, injective=True)
    assert oracles.hom_exists(two_in, fan_out)


def test_brute_chromatic_and_clique():
    assert [oracles.chromatic(cycle(m)) for m in (4, 5, 6, 7)] == [2, 3, 2, 3]
    assert oracles.chromatic(complete(5)) == 5
    assert oracles.clique(complete_multipartite(2, 1, 2)) == 3
    assert oracles.clique(cycle(5)) == 2


def test_labelled_cover_small_values():
    k2 = complete(2)
    assert oracles.labelled_cover_complexity(complete(3), k2) == 2
    assert oracles.labelled_cover_complexity(complete(3), k2, injective=True) == 3
    assert oracles.labelled_cover_complexity(cycle(4), k2) == 1
    lonely = Graph.build("abc", [("a", "b")])
    assert oracles.labelled_cover_complexity(lonely, k2) == 1
    assert oracles.labelled_cover_complexity(lonely, k2, injective=True) == 2
    assert oracles.labelled_cover_complexity(complete(4), k2, injective=True) is None


def test_brute_covers():
    assert oracles.brute_cc(cycle(5)) == 5
    assert oracles.brute_cc(complete(4)) == 1
    assert oracles.brute_partite_dimension(path(4), 2) == 2
    assert oracles.brute_particity(path(4), 2) == 1
    assert oracles.brute_particity(complete(4), 2) == 2
    assert oracles.brute_particity(complete(2), 3) == oracles.INF  # no third vertex to pad with
    assert oracles.brute_particity(Graph.build("abc", [("a", "b")]), 3) == 1
