"""Finite graphs (directed or undirected, loops allowed, no multi-edges) and graph algebra."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .budget import DEFAULT_BUDGET, Budget, BudgetExceeded

Edge = tuple[str, str]


class ModeMismatch(ValueError):
    """Raised when a binary operation mixes directed and undirected graphs."""


def tuple_id(parts: Iterable[str]) -> str:
    """Identifier of a product/power vertex: ``(a,b,...)``."""
    return "(" + ",".join(parts) + ")"


def _canonical(u: str, v: str, directed: bool) -> Edge:
    if directed or u <= v:
        return (u, v)
    return (v, u)


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable graph. Vertex order is insertion order; undirected edges are
    stored once with the lexicographically smaller endpoint first."""

    vertices: tuple[str, ...]
    edges: frozenset[Edge]
    directed: bool = False
    name: str | None = field(default=None)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex identifier")
        vs = set(self.vertices)
        for u, v in self.edges:
            if u not in vs or v not in vs:
                raise ValueError(f"edge ({u},{v}) has an undeclared endpoint")
            if not self.directed and u > v:
                raise ValueError(f"undirected edge ({u},{v}) is not canonically oriented")

    @classmethod
    def build(cls, vertices: Iterable[str], edges: Iterable[Sequence[str]] = (),
              directed: bool = False, name: str | None = None) -> "Graph":
        """Construct from loose data, canonicalising edge orientation."""
        vs = tuple(str(v) for v in vertices)
        es = frozenset(_canonical(str(u), str(v), directed) for u, v in edges)
        return cls(vs, es, directed, name)

    # --- structural identity -------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.directed == other.directed and self.vertices == other.vertices
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.directed, self.vertices, self.edges))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} {self.mode} |V|={len(self.vertices)} |E|={len(self.edges)}>"

    @property
    def mode(self) -> str:
        return "directed" if self.directed else "undirected"

    def named(self, name: str | None) -> "Graph":
        return Graph(self.vertices, self.edges, self.directed, name)

    # --- derived queries -----------------------------------------------------

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def out_nbrs(self) -> dict[str, frozenset[str]]:
        out: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            out[u].add(v)
            if not self.directed:
                out[v].add(u)
        return {v: frozenset(s) for v, s in out.items()}

    @cached_property
    def in_nbrs(self) -> dict[str, frozenset[str]]:
        if not self.directed:
            return self.out_nbrs
        inn: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            inn[v].add(u)
        return {v: frozenset(s) for v, s in inn.items()}

    @cached_property
    def nbrs(self) -> dict[str, frozenset[str]]:
        """Neighbours other than the vertex itself, ignoring direction."""
        return {v: (self.out_nbrs[v] | self.in_nbrs[v]) - {v} for v in self.vertices}

    def degree(self, v: str) -> int:
        return len(self.nbrs[v])

    def indegree(self, v: str) -> int:
        return len(self.in_nbrs[v] - {v})

    def outdegree(self, v: str) -> int:
        return len(self.out_nbrs[v] - {v})

    def has_edge(self, u: str, v: str) -> bool:
        """Arc u->v (directed) or edge {u,v} (undirected)."""
        return v in self.out_nbrs[u]

    def has_loop(self, v: str) -> bool:
        return v in self.out_nbrs[v]

    @cached_property
    def loops(self) -> frozenset[str]:
        return frozenset(u for u, v in self.edges if u == v)

    @property
    def has_loops(self) -> bool:
        return bool(self.loops)

    @property
    def is_simple(self) -> bool:
        return not self.directed and not self.loops

    def is_isolated(self, v: str) -> bool:
        """No incident edge at all (a loop counts as incident)."""
        return not self.out_nbrs[v] and not self.in_nbrs[v]

    @cached_property
    def isolated(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if self.is_isolated(v))

    def edge_list(self) -> list[Edge]:
        """Edges sorted by endpoint positions in the vertex order."""
        ix = self.index
        return sorted(self.edges, key=lambda e: (ix[e[0]], ix[e[1]]))

    def canonical_edge(self, u: str, v: str) -> Edge:
        return _canonical(u, v, self.directed)

    # --- derived graphs ------------------------------------------------------

    def induced(self, vertices: Iterable[str]) -> "Graph":
        keep = set(vertices)
        vs = tuple(v for v in self.vertices if v in keep)
        es = frozenset(e for e in self.edges if e[0] in keep and e[1] in keep)
        return Graph(vs, es, self.directed)

    def relabel(self, mapping: dict[str, str], name: str | None = None) -> "Graph":
        """Rename vertices through an injective mapping."""
        if len(set(mapping[v] for v in self.vertices)) != len(self.vertices):
            raise ValueError("relabelling must be injective")
        return Graph.build((mapping[v] for v in self.vertices),
                           ((mapping[u], mapping[v]) for u, v in self.edges),
                           self.directed, name)

    def subgraph(self, vertices: Iterable[str] | None = None,
                 edges: Iterable[Sequence[str]] = ()) -> "SubgraphRef":
        es = frozenset(self.canonical_edge(u, v) for u, v in edges)
        vs = set(vertices) if vertices is not None else set()
        unknown = sorted(vs - self.index.keys())
        if unknown:
            raise ValueError(f"vertices {unknown} are not in the graph")
        for u, v in es:
            vs.update((u, v))
        return SubgraphRef(self, tuple(v for v in self.vertices if v in vs), es)

    def whole(self) -> "SubgraphRef":
        return SubgraphRef(self, self.vertices, self.edges)


@dataclass(frozen=True, eq=False)
class SubgraphRef:
    """A subgraph of ``parent`` given by vertex and edge subsets."""

    parent: Graph
    vertices: tuple[str, ...]
    edges: frozenset[Edge]

    def __post_init__(self):
        pv = self.parent.index
        vs = set(self.vertices)
        if not vs <= pv.keys():
            raise ValueError("subgraph vertices must belong to the parent")
        for e in self.edges:
            if e not in self.parent.edges:
                raise ValueError(f"edge {e} is not an edge of the parent")
            if e[0] not in vs or e[1] not in vs:
                raise ValueError(f"edge {e} has an endpoint outside the subgraph")

    def __eq__(self, other):
        if not isinstance(other, SubgraphRef):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.edges == other.edges

    def __hash__(self):
        return hash((frozenset(self.vertices), self.edges))

    def __repr__(self):
        return f"<SubgraphRef |V|={len(self.vertices)} |E|={len(self.edges)}>"

    @cached_property
    def graph(self) -> Graph:
        order = self.parent.index
        return Graph(tuple(sorted(self.vertices, key=order.__getitem__)), self.edges,
                     self.parent.directed)

    def is_spanning(self) -> bool:
        return len(self.vertices) == len(self.parent.vertices)


# --- graph algebra -----------------------------------------------------------

def _same_mode(a: Graph, b: Graph) -> None:
    if a.directed != b.directed:
        raise ModeMismatch(f"cannot combine a {a.mode} graph with a {b.mode} graph")


def union(a: Graph, b: Graph) -> Graph:
    _same_mode(a, b)
    seen = set(a.vertices)
    vs = a.vertices + tuple(v for v in b.vertices if v not in seen)
    return Graph(vs, a.edges | b.edges, a.directed)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Union after priming b's identifiers when they clash with a's."""
    _same_mode(a, b)
    taken = set(a.vertices)
    suffix = ""
    while any(v + suffix in taken for v in b.vertices):
        suffix += "'"
    if suffix:
        b = b.relabel({v: v + suffix for v in b.vertices})
    return Graph(a.vertices + b.vertices, a.edges | b.edges, a.directed)


def tensor_product(a: Graph, b: Graph) -> Graph:
    """Categorical product: (u1,u2)~(v1,v2) iff u1~v1 and u2~v2."""
    _same_mode(a, b)
    vs = [tuple_id((x, y)) for x in a.vertices for y in b.vertices]
    arcs_a = [(u, v) for u, v in a.edges] + ([] if a.directed else [(v, u) for u, v in a.edges])
    arcs_b = [(u, v) for u, v in b.edges] + ([] if b.directed else [(v, u) for u, v in b.edges])
    es = {(tuple_id((u1, u2)), tuple_id((v1, v2))) for u1, v1 in arcs_a for u2, v2 in arcs_b}
    return Graph.build(vs, es, a.directed)


def or_power(h: Graph, k: int, budget: Budget = DEFAULT_BUDGET) -> Graph:
    """k-fold OR-power: tuples adjacent iff adjacent in at least one coordinate."""
    if k < 1:
        raise ValueError("k must be positive")
    n = len(h.vertices) ** k
    if n > budget.orpower_vertices:
        raise BudgetExceeded(f"or-power would have {n} vertices (limit {budget.orpower_vertices})")
    tuples = list(itertools.product(h.vertices, repeat=k))
    names = [tuple_id(t) for t in tuples]
    es = []
    for i, x in enumerate(tuples):
        for j, y in enumerate(tuples):
            if (h.directed or i <= j) and any(h.has_edge(a, b) for a, b in zip(x, y)):
                es.append((names[i], names[j]))
    return Graph.build(names, es, h.directed)


def remove_isolated(g: Graph) -> Graph:
    keep = [v for v in g.vertices if not g.is_isolated(v)]
    return Graph(tuple(keep), g.edges, g.directed)
