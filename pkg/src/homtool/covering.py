"""Edge-covering numbers: the generic σ_S cover, clique cover, ℓ-particity and ℓ-partite dimension.

A cover only has to contain every edge; vertices outside all pieces are allowed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .budget import DEFAULT_BUDGET, Budget, BudgetExceeded
from .complexity import INF, HypothesisError, ceil_log, injective_hom_complexity
from .generators import complete
from .graph import Graph, SubgraphRef
from .invariants import chromatic_number, clique_number, maximal_cliques
from .setcover import drop_dominated, exact_set_cover

Predicate = Callable[[Graph], bool]


@dataclass(frozen=True)
class CoverCertificate:
    source: Graph
    pieces: tuple[SubgraphRef, ...]
    kind: str  # clique | l-partite | complete-l-partite | predicate
    l: int | None = None
    witnesses: tuple[tuple[tuple[str, ...], ...], ...] = ()  # per piece: clique or parts

    def __len__(self) -> int:
        return len(self.pieces)

    def problems(self) -> list[str]:
        """Coverage and class failures; empty when the certificate is sound."""
        out = []
        covered = set().union(*(p.edges for p in self.pieces)) if self.pieces else set()
        out += [f"edge {u}-{v} is not covered" for u, v in self.source.edge_list()
                if (u, v) not in covered]
        for i, (p, wit) in enumerate(zip(self.pieces, self.witnesses), 1):
            if self.kind == "clique":
                ok = _is_clique_on(p, wit[0])
            elif self.kind == "l-partite":
                ok = _is_partition_into(p, wit, self.l, complete_between=False)
            elif self.kind == "complete-l-partite":
                ok = _is_partition_into(p, wit, self.l, complete_between=True)
            else:
                ok = True
            if not ok:
                out.append(f"piece {i} fails its class check")
        return out


def _is_clique_on(p: SubgraphRef, clique: Sequence[str]) -> bool:
    want = {p.parent.canonical_edge(u, v) for u, v in itertools.combinations(clique, 2)}
    return set(p.vertices) == set(clique) and p.edges == want


def _is_partition_into(p: SubgraphRef, parts, l: int, complete_between: bool) -> bool:
    flat = [v for part in parts for v in part]
    if len(parts) != l or any(not part for part in parts):
        return False
    if sorted(flat) != sorted(p.vertices) or len(set(flat)) != len(flat):
        return False
    where = {v: i for i, part in enumerate(parts) for v in part}
    if any(where[u] == where[v] for u, v in p.edges):
        return False
    if complete_between:
        cross = {p.parent.canonical_edge(u, v) for a, b in itertools.combinations(parts, 2)
                 for u in a for v in b}
        return cross == set(p.edges)
    return True


@dataclass
class CoverResult:
    value: float
    certificate: CoverCertificate | None
    lower: int = 1
    note: str | None = None

    @property
    def finite(self) -> bool:
        return self.value != INF


# --- generic σ_S ---------------------------------------------------------------------

def _piece_graph(g: Graph, edges) -> Graph:
    keep = {x for e in edges for x in e}
    return Graph(tuple(v for v in g.vertices if v in keep), frozenset(edges), g.directed)


def sigma_cover(g: Graph, predicate: Predicate | None, hereditary: bool = True,
                lower: int = 1, budget: Budget = DEFAULT_BUDGET) -> CoverResult:
    """Least k such that E(g) is covered by k subgraphs satisfying ``predicate``.

    ``None`` stands for the empty class (value ∞). Hereditary predicates (closed
    under deleting edges) are searched as edge partitions with memoised checks;
    others by enumerating every qualifying edge set and solving a set cover."""
    if predicate is None:
        return CoverResult(INF, None, note="empty class")
    edges = g.edge_list()
    if not edges:
        empty = g.subgraph([], [])
        if predicate(empty.graph):
            return CoverResult(1, CoverCertificate(g, (empty,), "predicate", None, ((),)))
        return CoverResult(INF, None, note="no member of the class fits")
    if not hereditary:
        return _general_cover(g, edges, predicate, lower, budget)
    if len(edges) > budget.cover_edges:
        raise BudgetExceeded(f"cover search limited to {budget.cover_edges} edges, got {len(edges)}")
    memo: dict[frozenset, bool] = {}

    def ok(es: frozenset) -> bool:
        if es not in memo:
            memo[es] = predicate(_piece_graph(g, es))
        return memo[es]

    if any(not ok(frozenset([e])) for e in edges):
        return CoverResult(INF, None, note="some edge fits no member of the class")
    for k in range(max(1, lower), len(edges) + 1):
        parts = _edge_partition(edges, ok, k, budget)
        if parts is not None:
            pieces = tuple(g.subgraph(None, p) for p in parts)
            return CoverResult(k, CoverCertificate(g, pieces, "predicate", None,
                                                   tuple(() for _ in pieces)), max(1, lower))
    raise AssertionError("single-edge pieces always cover")


def _edge_partition(edges: list, ok: Callable[[frozenset], bool], k: int,
                    budget: Budget) -> list[list] | None:
    pieces: list[list] = []
    nodes = 0

    def rec(i: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes & 255 == 0:
            budget.check_time()
        if i == len(edges):
            return True
        e = edges[i]
        for p in range(min(len(pieces) + 1, k)):
            if p == len(pieces):
                pieces.append([])
            if ok(frozenset(pieces[p]) | {e}):
                pieces[p].append(e)
                if rec(i + 1):
                    return True
                pieces[p].pop()
            if not pieces[p]:
                pieces.pop()
        return False

    return pieces if rec(0) else None


def _general_cover(g: Graph, edges: list, predicate: Predicate, lower: int,
                   budget: Budget) -> CoverResult:
    m = len(edges)
    if m > budget.partition_edges:
        raise BudgetExceeded(f"general cover search limited to {budget.partition_edges} edges")
    good = []
    for mask in range(1, 1 << m):
        budget.check_time()
        es = [edges[i] for i in range(m) if mask >> i & 1]
        if predicate(_piece_graph(g, es)):
            good.append(mask)
    kept = [good[i] for i in drop_dominated(good)]
    chosen = exact_set_cover((1 << m) - 1, kept, lower, budget=budget)
    if chosen is None:
        return CoverResult(INF, None, note="edges cannot be covered")
    pieces = tuple(g.subgraph(None, [edges[i] for i in range(m) if kept[c] >> i & 1])
                   for c in chosen)
    return CoverResult(len(chosen), CoverCertificate(g, pieces, "predicate", None,
                                                     tuple(() for _ in pieces)), lower)


# --- named covering numbers ---------------------------------------------------------------

def _require_simple(g: Graph) -> None:
    if g.directed or g.loops:
        raise ValueError("covering numbers are defined here for simple undirected graphs")


def _edge_bits(g: Graph) -> dict[tuple[str, str], int]:
    return {e: 1 << i for i, e in enumerate(g.edge_list())}


def clique_cover_number(g: Graph, budget: Budget = DEFAULT_BUDGET) -> CoverResult:
    """cc(g): fewest cliques covering every edge, via maximal cliques and exact set cover."""
    _require_simple(g)
    if not g.edges:
        start = g.vertices[:1]
        piece = g.subgraph(start, [])
        return CoverResult(1, CoverCertificate(g, (piece,), "clique", None, (tuple(start),)))
    bits = _edge_bits(g)
    cliques = [c for c in maximal_cliques(g, budget) if len(c) >= 2]
    masks = []
    for c in cliques:
        mask = 0
        for u, v in itertools.combinations(c, 2):
            mask |= bits[g.canonical_edge(u, v)]
        masks.append(mask)
    chosen = exact_set_cover((1 << len(bits)) - 1, masks, budget=budget)
    picked = [cliques[i] for i in sorted(chosen)]
    pieces = tuple(g.subgraph(c, [g.canonical_edge(u, v) for u, v in itertools.combinations(c, 2)])
                   for c in picked)
    cert = CoverCertificate(g, pieces, "clique", None, tuple((c,) for c in picked))
    if len(cert) > len(g.edges):
        raise AssertionError("clique cover exceeded the edge count")
    return CoverResult(len(cert), cert)


def _colour_floor(g: Graph, l: int, budget: Budget) -> int:
    """⌈log_ℓ χ(g)⌉: k pieces that are ℓ-colourable give a product colouring with ℓ^k colours."""
    return max(1, ceil_log(chromatic_number(g, budget)[0], l))


def particity(g: Graph, l: int, budget: Budget = DEFAULT_BUDGET) -> CoverResult:
    """β_ℓ(g): fewest ℓ-partite subgraphs covering every edge.

    Every ℓ-partite piece extends to a spanning one whose parts split all of V(g),
    so the candidates are the cross-edge sets of the partitions of V(g) into
    exactly ℓ nonempty parts, and an exact set cover picks the fewest."""
    _require_simple(g)
    if l < 2:
        raise ValueError("ℓ must be at least 2")
    n = len(g.vertices)
    if n < l:
        return CoverResult(INF, None, note="fewer than ℓ vertices")
    if n > budget.particity_vertices:
        raise BudgetExceeded(f"particity search limited to {budget.particity_vertices} vertices")
    bits = _edge_bits(g)
    candidates, masks = [], []
    for blocks in _groupings(n, l):
        budget.check_time()
        parts = tuple(tuple(g.vertices[i] for i in blk) for blk in blocks)
        where = {v: i for i, part in enumerate(parts) for v in part}
        mask = 0
        for (u, v), bit in bits.items():
            if where[u] != where[v]:
                mask |= bit
        candidates.append(parts)
        masks.append(mask)
    floor = _colour_floor(g, l, budget)
    if not g.edges:
        chosen = [0]
    else:
        keep = drop_dominated(masks)
        candidates = [candidates[i] for i in keep]
        masks = [masks[i] for i in keep]
        chosen = exact_set_cover((1 << len(bits)) - 1, masks, lower=floor, budget=budget)
        if chosen is None:
            return CoverResult(INF, None, note="edges cannot be covered")
    picked = [candidates[i] for i in sorted(chosen)]
    pieces = []
    for parts, i in zip(picked, sorted(chosen)):
        es = [e for e, bit in bits.items() if masks[i] & bit]
        pieces.append(g.subgraph(g.vertices, es))
    cert = CoverCertificate(g, tuple(pieces), "l-partite", l, tuple(picked))
    return CoverResult(len(cert), cert, floor)


def maximal_bicliques(g: Graph, budget: Budget = DEFAULT_BUDGET) -> list[tuple[tuple[str, ...], tuple[str, ...]]]:
    """Closed pairs (A, B) with B = N(A) and A = N(B), both nonempty; each pair listed once."""
    n = len(g.vertices)
    if n > budget.biclique_vertices:
        raise BudgetExceeded(f"biclique enumeration limited to {budget.biclique_vertices} vertices")
    ix = g.index
    nb = [0] * n
    for v in g.vertices:
        for w in g.nbrs[v]:
            nb[ix[v]] |= 1 << ix[w]
    full = (1 << n) - 1
    found = set()
    for a in range(1, 1 << n):
        if a & 1023 == 0:
            budget.check_time()
        b = full
        x = a
        while x:
            low = x & -x
            b &= nb[low.bit_length() - 1]
            x ^= low
        if not b:
            continue
        a2 = full
        y = b
        while y:
            low = y & -y
            a2 &= nb[low.bit_length() - 1]
            y ^= low
        found.add((min(a2, b), max(a2, b)))
    names = lambda m: tuple(g.vertices[i] for i in range(n) if m >> i & 1)
    return [(names(a), names(b)) for a, b in sorted(found)]


def _multipartite_candidates(g: Graph, l: int, budget: Budget):
    """Edge-maximal complete ℓ-partite subgraphs: parts are unions of the components of the
    complement of g[S], grouped into exactly ℓ groups, over all vertex sets S."""
    n = len(g.vertices)
    if n > budget.multipartite_vertices:
        raise BudgetExceeded(f"complete multipartite enumeration limited to {budget.multipartite_vertices} vertices")
    out = []
    for size in range(l, n + 1):
        for s in itertools.combinations(g.vertices, size):
            budget.check_time()
            comps = _complement_components(g, s)
            if len(comps) < l:
                continue
            for groups in _groupings(len(comps), l):
                parts = tuple(tuple(v for c in grp for v in comps[c]) for grp in groups)
                out.append(tuple(tuple(sorted(p, key=g.index.__getitem__)) for p in parts))
    return out


def _complement_components(g: Graph, s: Sequence[str]) -> list[list[str]]:
    left = list(s)
    comps = []
    while left:
        comp = [left.pop(0)]
        for v in comp:
            joined = [w for w in left if w not in g.nbrs[v]]
            for w in joined:
                left.remove(w)
            comp += joined
        comps.append(comp)
    return comps


def _groupings(r: int, l: int):
    """Set partitions of range(r) into exactly l nonempty blocks (restricted growth strings)."""
    def rec(i: int, labels: list[int], used: int):
        if r - i < l - used:
            return
        if i == r:
            if used == l:
                blocks = [[] for _ in range(l)]
                for item, lab in enumerate(labels):
                    blocks[lab].append(item)
                yield blocks
            return
        for lab in range(min(used + 1, l)):
            labels.append(lab)
            yield from rec(i + 1, labels, max(used, lab + 1))
            labels.pop()

    yield from rec(0, [], 0)


def partite_dimension(g: Graph, l: int = 2, budget: Budget = DEFAULT_BUDGET) -> CoverResult:
    """d_ℓ(g): fewest complete ℓ-partite subgraphs covering every edge (ℓ = 2: bipartite dimension)."""
    _require_simple(g)
    if l < 2:
        raise ValueError("ℓ must be at least 2")
    if len(g.vertices) < l:
        return CoverResult(INF, None, note="fewer than ℓ vertices")
    if not g.edges:
        parts = tuple((v,) for v in g.vertices[:l])
        piece = g.subgraph([v for p in parts for v in p], [])
        return CoverResult(1, CoverCertificate(g, (piece,), "complete-l-partite", l, (parts,)))
    if l == 2:
        candidates = [(a, b) for a, b in maximal_bicliques(g, budget)]
    else:
        candidates = _multipartite_candidates(g, l, budget)
    bits = _edge_bits(g)
    masks = []
    for parts in candidates:
        mask = 0
        for a, b in itertools.combinations(parts, 2):
            for u in a:
                for v in b:
                    mask |= bits[g.canonical_edge(u, v)]
        masks.append(mask)
    keep = drop_dominated(masks)
    candidates = [candidates[i] for i in keep]
    masks = [masks[i] for i in keep]
    floor = _colour_floor(g, l, budget)
    chosen = exact_set_cover((1 << len(bits)) - 1, masks, lower=floor, budget=budget)
    if chosen is None:
        return CoverResult(INF, None, note="edges cannot be covered")
    picked = [candidates[i] for i in sorted(chosen)]
    pieces = []
    for parts in picked:
        vs = [v for p in parts for v in p]
        es = [g.canonical_edge(u, v) for a, b in itertools.combinations(parts, 2) for u in a for v in b]
        pieces.append(g.subgraph(vs, es))
    cert = CoverCertificate(g, tuple(pieces), "complete-l-partite", l, tuple(picked))
    return CoverResult(len(cert), cert, int(floor))


def bipartite_dimension(g: Graph, budget: Budget = DEFAULT_BUDGET) -> CoverResult:
    return partite_dimension(g, 2, budget)


@dataclass
class CliqueCoverBounds:
    injective_bound: float  # IC(G; K_ω)
    log_bound: int  # ⌈log_ω χ⌉
    log2_vertices: float  # log2(|V| + 1), the classical bound
    quarter_square: int  # ⌊n² / 4⌋, the classical upper bound
    omega: int
    chi: int
    trail: list[str] = field(default_factory=list)


def cc_lower_bounds(g: Graph, budget: Budget = DEFAULT_BUDGET) -> CliqueCoverBounds:
    """Lower bounds on cc(g) from injective complexity into K_ω and from ⌈log_ω χ⌉."""
    _require_simple(g)
    if g.isolated:
        raise HypothesisError("the bounds need a graph without isolated vertices")
    omega = clique_number(g, budget)[0]
    if omega < 2:
        raise HypothesisError("the bounds need ω(G) >= 2")
    chi = chromatic_number(g, budget)[0]
    ic = injective_hom_complexity(g, complete(omega), budget=budget)
    n = len(g.vertices)
    trail = [f"injective_complexity_into_max_clique={ic.value} via {ic.method}",
             f"clique_log_chromatic={ceil_log(chi, omega)}"]
    return CliqueCoverBounds(ic.value, ceil_log(chi, omega), math.log2(n + 1), n * n // 4,
                             omega, chi, trail)
