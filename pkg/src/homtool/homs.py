"""Homomorphism search: existence, injective search, enumeration, retractions and cores.

The solver is a backtracking search with forward checking. Variables are the
source vertices, picked by smallest remaining domain (ties: higher degree,
then earlier vertex); values are tried in target vertex order. Every answer
is therefore reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator

from .budget import DEFAULT_BUDGET, Budget, BudgetExceeded
from .graph import Graph, ModeMismatch, SubgraphRef, tuple_id


@dataclass(frozen=True, eq=False)
class VertexMap:
    """A total map V(domain) -> V(codomain) plus the properties verified so far."""

    domain: Graph
    codomain: Graph
    mapping: dict[str, str]
    is_hom: bool = False
    is_vertex_injective: bool = False
    is_vertex_surjective: bool = False

    def __getitem__(self, v: str) -> str:
        return self.mapping[v]

    def __eq__(self, other):
        if not isinstance(other, VertexMap):
            return NotImplemented
        return (self.domain == other.domain and self.codomain == other.codomain
                and self.mapping == other.mapping)

    def __hash__(self):
        return hash((self.domain, self.codomain, tuple(sorted(self.mapping.items()))))

    def images(self) -> tuple[str, ...]:
        return tuple(self.mapping[v] for v in self.domain.vertices)

    def verified(self, require: Iterable[str] = ()) -> "VertexMap":
        """Return a copy with flags set; raises ValueError if a required property fails."""
        report = is_hom(self, require)
        if not report.ok:
            raise ValueError("; ".join(report.messages()))
        return report.vmap

    def compose(self, after: "VertexMap") -> "VertexMap":
        """``after`` applied after ``self``."""
        if after.domain != self.codomain:
            raise ValueError("maps are not composable")
        return VertexMap(self.domain, after.codomain,
                         {v: after.mapping[x] for v, x in self.mapping.items()})


@dataclass
class HomReport:
    """Outcome of checking a vertex map; ``ok`` covers the required flags only."""

    vmap: VertexMap
    ok: bool
    missing: list[str] = field(default_factory=list)
    bad_images: list[str] = field(default_factory=list)
    broken_edges: list[tuple[str, str]] = field(default_factory=list)
    collisions: list[tuple[str, str]] = field(default_factory=list)
    uncovered_vertices: list[str] = field(default_factory=list)
    edge_surjective: bool = False

    def __bool__(self):
        return self.ok

    def messages(self) -> list[str]:
        out = [f"vertex {v} has no image" for v in self.missing]
        out += [f"vertex {v} maps outside the codomain" for v in self.bad_images]
        out += [f"edge {u}{'->' if self.vmap.domain.directed else '-'}{v} is not preserved"
                for u, v in self.broken_edges]
        out += [f"vertices {u} and {v} share an image" for u, v in self.collisions]
        out += [f"codomain vertex {x} is not hit" for x in self.uncovered_vertices]
        return out


def is_hom(f: VertexMap, require: Iterable[str] = ()) -> HomReport:
    """Check f against the homomorphism condition and the optional flags
    ``"injective"`` / ``"surjective"``. Failures are listed, never raised."""
    require = set(require)
    unknown = require - {"injective", "surjective"}
    if unknown:
        raise ValueError(f"unknown requirement(s): {sorted(unknown)}")
    g, h = f.domain, f.codomain
    missing = [v for v in g.vertices if v not in f.mapping]
    bad = [v for v in g.vertices if v in f.mapping and f.mapping[v] not in h.index]
    broken: list[tuple[str, str]] = []
    if not missing and not bad:
        for u, v in g.edge_list():
            if not h.has_edge(f.mapping[u], f.mapping[v]):
                broken.append((u, v))
    total = not missing and not bad
    hom = total and not broken

    seen: dict[str, str] = {}
    collisions = []
    for v in g.vertices:
        x = f.mapping.get(v)
        if x is None:
            continue
        if x in seen:
            collisions.append((seen[x], v))
        else:
            seen[x] = v
    injective = total and not collisions
    uncovered = [x for x in h.vertices if x not in seen]
    surjective = total and not uncovered

    edge_surj = False
    if hom:
        hit = {h.canonical_edge(f.mapping[u], f.mapping[v]) for u, v in g.edges}
        edge_surj = hit == set(h.edges)

    ok = hom and ("injective" not in require or injective) and \
        ("surjective" not in require or surjective)
    flagged = replace(f, is_hom=hom, is_vertex_injective=injective,
                      is_vertex_surjective=surjective)
    return HomReport(flagged, ok, missing, bad, broken,
                     collisions if "injective" in require else [],
                     uncovered if "surjective" in require else [], edge_surj)


def identity(g: Graph) -> VertexMap:
    return VertexMap(g, g, {v: v for v in g.vertices}, True, True, True)


# --- search targets ----------------------------------------------------------

class _ExplicitTarget:
    def __init__(self, h: Graph):
        ix = h.index
        self.names = list(h.vertices)
        self.n = len(self.names)
        self.directed = h.directed
        self.out = [frozenset(ix[y] for y in h.out_nbrs[x]) for x in h.vertices]
        self.inn = [frozenset(ix[y] for y in h.in_nbrs[x]) for x in h.vertices]
        self.loops = frozenset(ix[x] for x in h.loops)
        self.deg = [h.degree(x) for x in h.vertices]
        self.indeg = [h.indegree(x) for x in h.vertices]
        self.outdeg = [h.outdegree(x) for x in h.vertices]

    def restrict_out(self, x: int, dom: set[int]) -> set[int]:
        return dom & self.out[x]

    def restrict_in(self, x: int, dom: set[int]) -> set[int]:
        return dom & self.inn[x]


class OrPowerTarget:
    """The k-fold OR-power of h, kept implicit: tuple t is encoded as an int in base |V(h)|."""

    def __init__(self, h: Graph, k: int, budget: Budget = DEFAULT_BUDGET):
        base = len(h.vertices)
        self.n = base ** k
        if self.n > budget.orpower_vertices:
            raise BudgetExceeded(f"or-power has {self.n} vertices (limit {budget.orpower_vertices})")
        self.h = h
        self.k = k
        self.base = base
        self.directed = h.directed
        ix = h.index
        self._out = [frozenset(ix[y] for y in h.out_nbrs[x]) for x in h.vertices]
        self._in = [frozenset(ix[y] for y in h.in_nbrs[x]) for x in h.vertices]
        self._non_out = [tuple(sorted(set(range(base)) - s)) for s in self._out]
        self._non_in = [tuple(sorted(set(range(base)) - s)) for s in self._in]
        hl = {ix[x] for x in h.loops}
        self.loops = frozenset(t for t in range(self.n) if any(d in hl for d in self.digits(t)))

    def digits(self, t: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            t, d = divmod(t, self.base)
            out.append(d)
        return tuple(reversed(out))

    def encode(self, digits: Iterable[int]) -> int:
        t = 0
        for d in digits:
            t = t * self.base + d
        return t

    def name(self, t: int) -> str:
        return tuple_id(self.h.vertices[d] for d in self.digits(t))

    @property
    def names(self) -> list[str]:
        return [self.name(t) for t in range(self.n)]

    def _restrict(self, x: int, dom: set[int], non: list[tuple[int, ...]]) -> set[int]:
        blocked = 1
        choices = [non[d] for d in self.digits(x)]
        for c in choices:
            blocked *= len(c)
        if blocked == 0:
            return dom
        if blocked <= 4 * len(dom):
            return dom - {self.encode(p) for p in itertools.product(*choices)}
        sets = [frozenset(c) for c in choices]
        return {y for y in dom if not all(d in s for d, s in zip(self.digits(y), sets))}

    def restrict_out(self, x: int, dom: set[int]) -> set[int]:
        return self._restrict(x, dom, self._non_out)

    def restrict_in(self, x: int, dom: set[int]) -> set[int]:
        return self._restrict(x, dom, self._non_in)


@dataclass
class SearchStats:
    nodes: int = 0


def _search(g: Graph, target, *, injective: bool = False, fixed: dict[int, int] | None = None,
            degree_prune: bool = True, canonical_order: bool = False,
            budget: Budget = DEFAULT_BUDGET, stats: SearchStats | None = None) -> Iterator[list[int]]:
    """Yield assignments (target indices, in g's vertex order)."""
    if stats is None:
        stats = SearchStats()
    n = len(g.vertices)
    N = target.n
    ix = g.index
    out_g = [[ix[w] for w in g.out_nbrs[v] if w != v] for v in g.vertices]
    in_g = [[ix[w] for w in g.in_nbrs[v] if w != v] for v in g.vertices] if g.directed else None
    deg = [g.degree(v) for v in g.vertices]
    if injective and n > N:
        return

    domains: list[set[int]] = []
    for v in g.vertices:
        dom = set(target.loops) if g.has_loop(v) else set(range(N))
        if injective and degree_prune and isinstance(target, _ExplicitTarget):
            i = ix[v]
            dom = {x for x in dom if target.deg[x] >= deg[i]}
            if g.directed:
                dom = {x for x in dom if target.indeg[x] >= g.indegree(v)
                       and target.outdeg[x] >= g.outdegree(v)}
        domains.append(dom)
    if fixed:
        for i, x in fixed.items():
            domains[i] &= {x}
    if any(not d for d in domains):
        return

    assign = [-1] * n
    unassigned = set(range(n))

    def pick() -> int:
        if canonical_order:
            return min(unassigned)
        return min(unassigned, key=lambda i: (len(domains[i]), -deg[i], i))

    def rec(depth: int) -> Iterator[list[int]]:
        if depth == n:
            yield list(assign)
            return
        v = pick()
        unassigned.discard(v)
        for x in sorted(domains[v]):
            stats.nodes += 1
            if stats.nodes & 1023 == 0:
                budget.check_time()
            assign[v] = x
            saved: list[tuple[int, set[int]]] = []
            ok = True
            for w in out_g[v]:
                if assign[w] < 0:
                    new = target.restrict_out(x, domains[w])
                    if len(new) != len(domains[w]):
                        saved.append((w, domains[w]))
                        domains[w] = new
                        if not new:
                            ok = False
                            break
            if ok and in_g is not None:
                for w in in_g[v]:
                    if assign[w] < 0:
                        new = target.restrict_in(x, domains[w])
                        if len(new) != len(domains[w]):
                            saved.append((w, domains[w]))
                            domains[w] = new
                            if not new:
                                ok = False
                                break
            if ok and injective:
                for w in unassigned:
                    if x in domains[w]:
                        saved.append((w, domains[w]))
                        domains[w] = domains[w] - {x}
                        if not domains[w]:
                            ok = False
                            break
            if ok:
                yield from rec(depth + 1)
            for w, d in reversed(saved):
                domains[w] = d
            assign[v] = -1
        unassigned.add(v)

    yield from rec(0)


def _check_modes(g: Graph, h: Graph) -> None:
    if g.directed != h.directed:
        raise ModeMismatch(f"cannot map a {g.mode} graph into a {h.mode} graph")


def _to_map(g: Graph, h: Graph, names: list[str], assign: list[int]) -> VertexMap:
    return VertexMap(g, h, {v: names[x] for v, x in zip(g.vertices, assign)})


def find_hom(g: Graph, h: Graph, budget: Budget = DEFAULT_BUDGET,
             stats: SearchStats | None = None) -> VertexMap | None:
    _check_modes(g, h)
    target = _ExplicitTarget(h)
    sol = next(_search(g, target, budget=budget, stats=stats), None)
    return None if sol is None else _to_map(g, h, target.names, sol).verified()


def find_injective_hom(g: Graph, h: Graph, budget: Budget = DEFAULT_BUDGET,
                       degree_prune: bool = True,
                       stats: SearchStats | None = None) -> VertexMap | None:
    _check_modes(g, h)
    target = _ExplicitTarget(h)
    sol = next(_search(g, target, injective=True, degree_prune=degree_prune,
                       budget=budget, stats=stats), None)
    return None if sol is None else _to_map(g, h, target.names, sol).verified(["injective"])


def hom_exists(g: Graph, h: Graph, budget: Budget = DEFAULT_BUDGET) -> bool:
    return find_hom(g, h, budget) is not None


def find_hom_to_or_power(g: Graph, h: Graph, k: int, budget: Budget = DEFAULT_BUDGET
                         ) -> list[tuple[int, ...]] | None:
    """Map V(g) into V(h)^k so every edge is preserved in some coordinate.

    Returns per-vertex index tuples (into h's vertex order) or None."""
    _check_modes(g, h)
    target = OrPowerTarget(h, k, budget)
    sol = next(_search(g, target, budget=budget), None)
    if sol is None:
        return None
    return [target.digits(t) for t in sol]


def enumerate_homs(g: Graph, h: Graph, limit: int | None = None,
                   budget: Budget = DEFAULT_BUDGET) -> list[VertexMap]:
    """All homomorphisms g -> h in lexicographic order of the image tuple."""
    _check_modes(g, h)
    target = _ExplicitTarget(h)
    out = []
    for sol in _search(g, target, canonical_order=True, budget=budget):
        out.append(_to_map(g, h, target.names, sol).verified())
        if limit is not None and len(out) >= limit:
            break
    return out


def automorphisms(h: Graph, limit: int = 5040,
                  budget: Budget = DEFAULT_BUDGET) -> list[tuple[int, ...]] | None:
    """Every automorphism of h as an index permutation, or None past ``limit``.

    A bijective endomorphism of a finite graph preserves the edge count, so it
    also reflects edges and is an automorphism."""
    out = []
    for sol in _search(h, _ExplicitTarget(h), injective=True, budget=budget):
        out.append(tuple(sol))
        if len(out) > limit:
            return None
    return out


def find_retraction(g: Graph, hsub: SubgraphRef | Graph,
                    budget: Budget = DEFAULT_BUDGET) -> VertexMap | None:
    """A homomorphism g -> hsub fixing every vertex of hsub, or None."""
    if isinstance(hsub, SubgraphRef):
        if hsub.parent != g:
            raise ValueError("subgraph does not belong to g")
        sub = hsub.graph
    else:
        sub = hsub
        if not set(sub.vertices) <= set(g.vertices) or not sub.edges <= g.edges:
            raise ValueError("not a subgraph of g")
    target = _ExplicitTarget(sub)
    fixed = {g.index[v]: target.names.index(v) for v in sub.vertices}
    sol = next(_search(g, target, fixed=fixed, budget=budget), None)
    return None if sol is None else _to_map(g, sub, target.names, sol).verified()


def core(g: Graph, budget: Budget = DEFAULT_BUDGET) -> tuple[SubgraphRef, VertexMap]:
    """Smallest retract of g (ties: first vertex subset in canonical order) with its retraction."""
    n = len(g.vertices)
    if n > budget.core_vertices:
        raise BudgetExceeded(f"core search limited to {budget.core_vertices} vertices, got {n}")
    if n == 0:
        return g.whole(), identity(g)
    for size in range(1, n + 1):
        for combo in itertools.combinations(g.vertices, size):
            sub = g.induced(combo)
            if g.edges and not sub.edges:
                continue
            if g.loops and not sub.loops:
                continue
            r = find_retraction(g, sub, budget)
            if r is not None:
                return g.subgraph(sub.vertices, sub.edges), r
    raise AssertionError("unreachable: g retracts to itself")


def core_graph(g: Graph, budget: Budget = DEFAULT_BUDGET) -> Graph:
    return core(g, budget)[0].graph


class UnverifiedMap(ValueError):
    """An operation needs a verified homomorphism but got an unchecked or invalid map."""


def inverse_image(f: VertexMap, k: SubgraphRef) -> SubgraphRef:
    """f⁻¹(k): vertices sent into V(k) and edges whose image is an edge of k."""
    if not f.is_hom:
        raise UnverifiedMap("inverse image needs a verified homomorphism")
    if k.parent != f.codomain:
        raise ValueError("k must be a subgraph of the codomain")
    g = f.domain
    kv = set(k.vertices)
    vs = [v for v in g.vertices if f.mapping[v] in kv]
    es = [(u, v) for u, v in g.edges
          if k.parent.canonical_edge(f.mapping[u], f.mapping[v]) in k.edges]
    sub = g.subgraph(vs, es)
    restricted = VertexMap(sub.graph, k.graph, {v: f.mapping[v] for v in sub.vertices})
    if not is_hom(restricted):
        raise AssertionError("restriction of a homomorphism failed to be one")
    return sub
