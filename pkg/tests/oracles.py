"""Independent brute-force references.

Nothing here calls the library's solvers: graphs are read only through their
vertex tuple, edge set and direction flag, and every answer comes from plain
enumeration. Only usable at toy sizes.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

INF = math.inf


def arcs(directed: bool, edges) -> frozenset:
    """Ordered adjacency pairs; undirected edges contribute both orientations."""
    out = set()
    for u, v in edges:
        out.add((u, v))
        if not directed:
            out.add((v, u))
    return frozenset(out)


def brute_hom(vertices, edges, directed, h_vertices, h_edges, injective=False):
    """First map (in product order) preserving every edge, or None."""
    vertices = tuple(vertices)
    h_arcs = arcs(directed, h_edges)
    pool = itertools.permutations(h_vertices, len(vertices)) if injective \
        else itertools.product(h_vertices, repeat=len(vertices))
    for images in pool:
        f = dict(zip(vertices, images))
        if all((f[u], f[v]) in h_arcs for u, v in edges):
            return f
    return None


def hom_exists(g, h, injective=False) -> bool:
    return brute_hom(g.vertices, g.edges, g.directed, h.vertices, h.edges, injective) is not None


def chromatic(g) -> int:
    if not g.vertices:
        return 0
    for k in range(1, len(g.vertices) + 1):
        cols = [str(i) for i in range(k)]
        k_edges = [(a, b) for a in cols for b in cols if a != b]
        if brute_hom(g.vertices, g.edges, False, cols, k_edges) is not None:
            return k
    raise AssertionError("unreachable for loopless graphs")


def clique(g) -> int:
    adj = arcs(g.directed, g.edges)
    best = 0
    for r in range(1, len(g.vertices) + 1):
        for s in itertools.combinations(g.vertices, r):
            if all((u, v) in adj for u, v in itertools.combinations(s, 2)):
                best = r
                break
    return best


def isolated(g) -> list:
    touched = {x for e in g.edges for x in e}
    return [v for v in g.vertices if v not in touched]


def labelled_cover_complexity(g, h, injective=False, kmax=3):
    """Least k <= kmax such that some labelling of the edges by nonempty subsets of
    {0..k-1}, plus a choice of piece for every isolated vertex, yields pieces that
    each map into h (injectively if asked). Every labelling is tried; there is no
    pruning and no symmetry breaking. Returns None when k > kmax."""
    edges = sorted(g.edges)
    lonely = isolated(g)
    h_vs, h_es = tuple(h.vertices), tuple(h.edges)

    @lru_cache(maxsize=None)
    def piece_ok(vs: frozenset, es: frozenset) -> bool:
        return brute_hom(sorted(vs), es, g.directed, h_vs, h_es, injective) is not None

    for k in range(1, kmax + 1):
        subsets = [s for r in range(1, k + 1) for s in itertools.combinations(range(k), r)]
        for labels in itertools.product(subsets, repeat=len(edges)):
            for homes in itertools.product(range(k), repeat=len(lonely)):
                ok = True
                for i in range(k):
                    es = frozenset(e for e, lab in zip(edges, labels) if i in lab)
                    vs = {x for e in es for x in e}
                    vs.update(v for v, home in zip(lonely, homes) if home == i)
                    if not piece_ok(frozenset(vs), es):
                        ok = False
                        break
                if ok:
                    return k
    return None


def edge_cover_number(g, is_piece, kmax=None):
    """Least number of edge subsets, each passing ``is_piece(edge_set)``, covering E(g).

    Brute force over all collections of distinct nonempty edge subsets."""
    edges = sorted(g.edges)
    if not edges:
        return 0
    subsets = [frozenset(c) for r in range(1, len(edges) + 1)
               for c in itertools.combinations(edges, r)]
    good = [s for s in subsets if is_piece(s)]
    everything = frozenset(edges)
    for k in range(1, (kmax or len(edges)) + 1):
        for combo in itertools.combinations(good, k):
            if frozenset().union(*combo) == everything:
                return k
    return INF


def _vertices_of(es):
    return sorted({x for e in es for x in e})


def is_clique_edges(es) -> bool:
    vs = _vertices_of(es)
    return all((min(u, v), max(u, v)) in es or (u, v) in es or (v, u) in es
               for u, v in itertools.combinations(vs, 2))


def l_partitions(vs, l):
    """Every split of ``vs`` into exactly ``l`` nonempty unlabelled blocks."""
    vs = list(vs)
    for labels in itertools.product(range(l), repeat=len(vs)):
        # canonical: first occurrences of labels appear in increasing order
        seen = []
        for x in labels:
            if x not in seen:
                seen.append(x)
        if seen != list(range(l)):
            continue
        yield [[v for v, x in zip(vs, labels) if x == b] for b in range(l)]


def is_l_partite_edges(es, l, all_vertices, complete=False) -> bool:
    """Some superset of the edge span's vertices splits into l independent blocks;
    ``complete`` asks for all cross edges present and the vertex set equal to the span."""
    span = _vertices_of(es)
    es = {frozenset(e) for e in es}
    pools = [span] if complete else [span + list(extra) for r in range(len(all_vertices) + 1)
                                     for extra in itertools.combinations(
                                         [v for v in all_vertices if v not in span], r)]
    for vs in pools:
        if len(vs) < l:
            continue
        for parts in l_partitions(vs, l):
            where = {v: i for i, p in enumerate(parts) for v in p}
            if any(where[u] == where[v] for u, v in map(tuple, es)):
                continue
            if complete:
                cross = {frozenset((u, v)) for a, b in itertools.combinations(parts, 2)
                         for u in a for v in b}
                if cross != es:
                    continue
            return True
    return False


def brute_cc(g):
    return edge_cover_number(g, is_clique_edges)


def brute_particity(g, l):
    return edge_cover_number(g, lambda es: is_l_partite_edges(es, l, g.vertices))


def brute_partite_dimension(g, l):
    return edge_cover_number(g, lambda es: is_l_partite_edges(es, l, g.vertices, complete=True))


def core_size(g) -> int:
    """Vertex count of the smallest subgraph g retracts onto (via plain homomorphisms)."""
    for r in range(1, len(g.vertices) + 1):
        for s in itertools.combinations(g.vertices, r):
            sub_edges = [(u, v) for u, v in g.edges if u in s and v in s]
            if brute_hom(g.vertices, g.edges, g.directed, s, sub_edges) is not None:
                return r
    return 0
