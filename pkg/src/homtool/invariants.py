"""Chromatic and clique numbers with witnesses, ℓ-partiteness, product colourings."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .budget import DEFAULT_BUDGET, Budget
from .generators import complete
from .graph import Graph, tuple_id
from .homs import VertexMap, find_hom


def _require_undirected(g: Graph, what: str) -> None:
    if g.directed:
        raise ValueError(f"{what} is defined for undirected graphs only")


def complete_graph(n: int) -> Graph:
    """K_n with vertices "1".."n"; K_0 is the empty graph."""
    return complete(n) if n else Graph((), frozenset(), name="K0")


# --- cliques -----------------------------------------------------------------

def maximal_cliques(g: Graph, budget: Budget = DEFAULT_BUDGET) -> list[tuple[str, ...]]:
    """All maximal cliques (loops ignored), each sorted by vertex order; list sorted likewise."""
    _require_undirected(g, "clique enumeration")
    n = len(g.vertices)
    ix = g.index
    adj = [0] * n
    for v in g.vertices:
        for w in g.nbrs[v]:
            adj[ix[v]] |= 1 << ix[w]
    found: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        budget.check_time()
        if not p and not x:
            found.append(r)
            return
        pivot_pool = p | x
        pivot = max(_bits(pivot_pool), key=lambda u: (adj[u] & p).bit_count())
        for v in _bits(p & ~adj[pivot]):
            bk(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if n:
        bk(0, (1 << n) - 1, 0)
    cliques = [tuple(_bits(c)) for c in found]
    cliques.sort()
    return [tuple(g.vertices[i] for i in c) for c in cliques]


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def clique_number(g: Graph, budget: Budget = DEFAULT_BUDGET) -> tuple[int, tuple[str, ...]]:
    """ω(g) and the first maximum clique in canonical order."""
    cliques = maximal_cliques(g, budget)
    if not cliques:
        return 0, ()
    best = max(len(c) for c in cliques)
    return best, next(c for c in cliques if len(c) == best)


# --- colouring -----------------------------------------------------------------

def dsatur(g: Graph) -> dict[str, int]:
    """Greedy colouring by saturation degree; colours start at 1."""
    _require_undirected(g, "colouring")
    colour: dict[str, int] = {}
    seen: dict[str, set[int]] = {v: set() for v in g.vertices}
    order = g.index
    while len(colour) < len(g.vertices):
        v = max((u for u in g.vertices if u not in colour),
                key=lambda u: (len(seen[u]), g.degree(u), -order[u]))
        c = 1
        while c in seen[v]:
            c += 1
        colour[v] = c
        for w in g.nbrs[v]:
            seen[w].add(c)
    return colour


def chromatic_number(g: Graph, budget: Budget = DEFAULT_BUDGET) -> tuple[int, VertexMap]:
    """Exact χ(g) with a vertex-surjective colouring g -> K_χ."""
    _require_undirected(g, "the chromatic number")
    if g.loops:
        raise ValueError("the chromatic number is undefined for graphs with loops")
    if not g.vertices:
        return 0, VertexMap(g, complete_graph(0), {}, True, True, True)
    greedy = dsatur(g)
    upper = max(greedy.values())
    lower = max(1, clique_number(g, budget)[0])
    for k in range(lower, upper):
        f = find_hom(g, complete(k), budget)
        if f is not None:
            return k, f.verified(["surjective"])
    f = VertexMap(g, complete(upper), {v: str(c) for v, c in greedy.items()})
    return upper, f.verified(["surjective"])


def colour_classes(f: VertexMap) -> list[tuple[str, ...]]:
    """Preimages of the codomain vertices, in codomain order, empty ones dropped."""
    classes = {x: [] for x in f.codomain.vertices}
    for v in f.domain.vertices:
        classes[f.mapping[v]].append(v)
    return [tuple(c) for c in classes.values() if c]


def is_l_partite(g: Graph, l: int, budget: Budget = DEFAULT_BUDGET
                 ) -> tuple[bool, list[tuple[str, ...]] | None]:
    """Whether V(g) splits into exactly ``l`` nonempty independent sets; returns the parts."""
    _require_undirected(g, "ℓ-partiteness")
    if l < 1:
        raise ValueError("ℓ must be positive")
    if g.loops or len(g.vertices) < l:
        return False, None
    chi, f = chromatic_number(g, budget)
    if chi > l:
        return False, None
    parts = [list(c) for c in colour_classes(f)]
    while len(parts) < l:
        big = max(range(len(parts)), key=lambda i: (len(parts[i]), -i))
        parts.append([parts[big].pop()])
    return True, [tuple(p) for p in parts]


def parts_map(g: Graph, parts: Sequence[Sequence[str]]) -> VertexMap:
    """The map sending part i to vertex i+1 of K_len(parts)."""
    k = complete_graph(len(parts))
    return VertexMap(g, k, {v: str(i + 1) for i, p in enumerate(parts) for v in p})


def product_coloring(colourings: Sequence[VertexMap], g: Graph) -> VertexMap:
    """Combine colourings of pieces covering E(g) into one colouring v -> (f_1(v), ..., f_m(v)).

    Vertices missing from a piece take that piece's first colour. The codomain is the
    complete graph on all colour tuples, so its size is the product of the piece sizes."""
    if not colourings:
        raise ValueError("need at least one colouring")
    for f in colourings:
        if f.codomain.loops:
            raise ValueError("colourings must map into loopless graphs")
        if not f.codomain.vertices:
            raise ValueError("a colouring has an empty codomain")
        if not set(f.domain.vertices) <= set(g.vertices) or not f.domain.edges <= g.edges:
            raise ValueError("a colouring's domain is not a subgraph of g")
    covered = set().union(*(f.domain.edges for f in colourings))
    missing = g.edges - covered
    if missing:
        shown = ", ".join(f"{u}{v}" for u, v in sorted(missing))
        raise ValueError(f"the pieces do not cover edge(s) {shown}")
    palette = [tuple_id(t) for t in itertools.product(*(f.codomain.vertices for f in colourings))]
    target = Graph.build(palette, itertools.combinations(palette, 2),
                         name=f"K{len(palette)}")
    mapping = {v: tuple_id(f.mapping.get(v, f.codomain.vertices[0]) for f in colourings)
               for v in g.vertices}
    return VertexMap(g, target, mapping).verified()


@dataclass(frozen=True)
class InvariantReport:
    chromatic: int
    clique: int
    colouring: VertexMap
    clique_witness: tuple[str, ...]


def invariant_report(g: Graph, budget: Budget = DEFAULT_BUDGET) -> InvariantReport:
    chi, f = chromatic_number(g, budget)
    omega, c = clique_number(g, budget)
    return InvariantReport(chi, omega, f, c)
