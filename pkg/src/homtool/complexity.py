"""Hom-complexity C(G;H), injective hom-complexity IC(G;H) and strong hom-complexity sC(G;H).

Every finite answer carries a certificate: a family of subgraphs covering G,
each with a homomorphism into H. Certificates are re-checked before return.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable

from .budget import DEFAULT_BUDGET, Budget, BudgetExceeded
from .graph import Graph, ModeMismatch, SubgraphRef
from .homs import VertexMap, automorphisms, find_hom_to_or_power, find_injective_hom, is_hom
from .invariants import chromatic_number, clique_number
from .setcover import drop_dominated, exact_set_cover

INF = math.inf
METHODS = ("auto", "formula", "orpower", "partition")
IC_METHODS = ("auto", "closed_form", "partition")


class HypothesisError(ValueError):
    """A forced method was asked to run outside the conditions that make it exact."""


class UnverifiedCertificate(RuntimeError):
    """Internal consistency failure: a produced certificate did not verify."""


def ceil_log(x: int, base: int) -> int:
    """Least n >= 0 with base**n >= x."""
    if base < 2:
        raise ValueError("base must be at least 2")
    n, p = 0, 1
    while p < x:
        p *= base
        n += 1
    return n


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# --- certificate types ---------------------------------------------------------

@dataclass(frozen=True)
class Piece:
    subgraph: SubgraphRef
    map: VertexMap


@dataclass(frozen=True)
class QuasiHom:
    """Subgraphs G_1..G_k whose union is ``source``, each mapped into ``target``."""

    source: Graph
    target: Graph
    pieces: tuple[Piece, ...]
    kind: str = "plain"  # plain | injective | strong

    def __len__(self) -> int:
        return len(self.pieces)

    @classmethod
    def from_parts(cls, source: Graph, target: Graph,
                   parts: Iterable[tuple[Iterable[str], Iterable[tuple[str, str]], dict[str, str]]],
                   kind: str = "plain") -> "QuasiHom":
        pieces = []
        for vs, es, mapping in parts:
            sub = source.subgraph(vs, es)
            pieces.append(Piece(sub, VertexMap(sub.graph, target, dict(mapping))))
        return cls(source, target, tuple(pieces), kind)


def check_quasi_hom(q: QuasiHom, injective: bool = False, strong: bool = False) -> list[str]:
    """Every way ``q`` fails to be a (injective / strong) quasi-homomorphism; empty when valid."""
    problems: list[str] = []
    g, h = q.source, q.target
    seen_v: set[str] = set()
    seen_e: set[tuple[str, str]] = set()
    hit_v: set[str] = set()
    hit_e: set[tuple[str, str]] = set()
    for i, p in enumerate(q.pieces, 1):
        if p.subgraph.parent != g:
            problems.append(f"piece {i} is not a subgraph of the source")
            continue
        if p.map.domain != p.subgraph.graph or p.map.codomain != h:
            problems.append(f"piece {i}: map has the wrong domain or codomain")
            continue
        report = is_hom(p.map, ["injective"] if injective else [])
        problems += [f"piece {i}: {m}" for m in report.messages()]
        seen_v.update(p.subgraph.vertices)
        seen_e.update(p.subgraph.edges)
        if report.vmap.is_hom:
            hit_v.update(p.map.mapping.values())
            hit_e.update(h.canonical_edge(p.map[u], p.map[v]) for u, v in p.subgraph.edges)
    arrow = "->" if g.directed else "-"
    problems += [f"vertex {v} is not covered" for v in g.vertices if v not in seen_v]
    problems += [f"edge {u}{arrow}{v} is not covered" for u, v in g.edge_list()
                 if (u, v) not in seen_e]
    if strong:
        problems += [f"target vertex {x} is not in any image" for x in h.vertices if x not in hit_v]
        problems += [f"target edge {x}{arrow}{y} is not in any image" for x, y in h.edge_list()
                     if (x, y) not in hit_e]
    return problems


def _certified(q: QuasiHom, injective: bool = False, strong: bool = False) -> QuasiHom:
    problems = check_quasi_hom(q, injective, strong)
    if problems:
        raise UnverifiedCertificate("; ".join(problems))
    return q


@dataclass(frozen=True)
class Bound:
    value: float
    tag: str


@dataclass
class ComplexityResult:
    value: float  # int when finite, math.inf otherwise
    lower: Bound
    upper: Bound
    method: str
    certificate: QuasiHom | None = None
    reason: str | None = None
    trail: list[Bound] = field(default_factory=list)
    kind: str = "plain"

    @property
    def finite(self) -> bool:
        return self.value != INF


@dataclass(frozen=True)
class Finiteness:
    finite: bool
    reason: str | None = None
    upper: int | None = None


# --- finiteness and bounds -----------------------------------------------------

def _check_modes(g: Graph, h: Graph) -> None:
    if g.directed != h.directed:
        raise ModeMismatch(f"cannot compare a {g.mode} graph with a {h.mode} graph")


def finiteness(g: Graph, h: Graph, injective: bool = False) -> Finiteness:
    """Decide whether C (or IC) is finite; if so give the single-edge-piece upper bound."""
    _check_modes(g, h)
    if g.vertices and not h.vertices:
        return Finiteness(False, "empty-codomain")
    if g.loops and not h.loops:
        return Finiteness(False, "loop-mismatch")
    proper = [e for e in g.edges if e[0] != e[1]]
    h_proper = any(u != v for u, v in h.edges)
    if proper and not (h_proper if injective else h.edges):
        return Finiteness(False, "no-edges")
    return Finiteness(True, None, len(_single_edge_parts(g, h, injective)))


def _single_edge_parts(g: Graph, h: Graph, injective: bool) -> list[tuple[list, list, dict]]:
    """One piece per edge, then isolated vertices placed as cheaply as possible."""
    parts = []
    looped = next((x for x in h.vertices if h.has_loop(x)), None)
    arc = next(((x, y) for x, y in h.edge_list() if x != y), None)
    any_edge = arc or (looped, looped)
    for u, v in g.edge_list():
        if u == v:
            parts.append(([u], [(u, v)], {u: looped}))
        else:
            x, y = arc if injective else any_edge
            parts.append(([u, v], [(u, v)], {u: x, v: y}))
    return _pack_isolated(parts, list(g.isolated), h, injective)


def _pack_isolated(parts: list, isolated: list[str], h: Graph, injective: bool) -> list:
    """Attach isolated vertices to pieces; injective pieces only take free target vertices."""
    if not isolated:
        return parts or [([], [], {})]
    if not injective:
        if not parts:
            return [(list(isolated), [], {v: h.vertices[0] for v in isolated})]
        vs, es, m = parts[0]
        parts[0] = (vs + isolated, es, {**m, **{v: h.vertices[0] for v in isolated}})
        return parts
    rest = list(isolated)
    out = []
    for vs, es, m in parts:
        free = [x for x in h.vertices if x not in set(m.values())]
        take = rest[:len(free)]
        rest = rest[len(free):]
        out.append((vs + take, es, {**m, **dict(zip(take, free))}))
    while rest:
        take = rest[:len(h.vertices)]
        rest = rest[len(h.vertices):]
        out.append((take, [], dict(zip(take, h.vertices))))
    return out


def _simple(g: Graph) -> bool:
    return not g.directed and not g.loops


def complexity_bounds(g: Graph, h: Graph, budget: Budget = DEFAULT_BUDGET
                      ) -> tuple[Bound | None, Bound | None, list[Bound]]:
    """Colouring bounds on C(g;h): lower ⌈log_χ(h) χ(g)⌉, upper least n with χ(g) <= ω(h)^n.

    A bound whose hypotheses fail is left out of the trail (and returned as None)."""
    trail: list[Bound] = []
    lower = upper = None
    if _simple(g) and _simple(h):
        chi_g = chromatic_number(g, budget)[0]
        chi_h = chromatic_number(h, budget)[0]
        omega_h = clique_number(h, budget)[0]
        if chi_h >= 2:
            lower = Bound(ceil_log(chi_g, chi_h), "chromatic_power_lower")
            trail.append(lower)
        if chi_g >= 2 and omega_h >= 2:
            upper = Bound(ceil_log(chi_g, omega_h), "clique_power_upper")
            trail.append(upper)
    return lower, upper, trail


def formula_applies(g: Graph, h: Graph, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Both simple, χ(g) >= 2 and ω(h) = χ(h) >= 2."""
    if not (_simple(g) and _simple(h)):
        return False
    if chromatic_number(g, budget)[0] < 2:
        return False
    chi_h = chromatic_number(h, budget)[0]
    return chi_h >= 2 and clique_number(h, budget)[0] == chi_h


def _infinite(fin: Finiteness, kind: str) -> ComplexityResult:
    b = Bound(INF, fin.reason)
    return ComplexityResult(INF, b, b, "finiteness", None, fin.reason, [b], kind)


def _plain_bounds(g: Graph, h: Graph, fin: Finiteness, budget: Budget) -> tuple[Bound, Bound, list[Bound]]:
    trail = [Bound(1, "trivial"), Bound(fin.upper, "single_edge_pieces")]
    _, _, extra = complexity_bounds(g, h, budget)
    trail += extra
    lower = max((b for b in trail if b.tag != "single_edge_pieces" and b.tag != "clique_power_upper"),
                key=lambda b: b.value)
    upper = min((b for b in trail if b.tag in ("single_edge_pieces", "clique_power_upper")),
                key=lambda b: b.value)
    return lower, upper, trail


# --- plain hom-complexity -------------------------------------------------------

def hom_complexity(g: Graph, h: Graph, method: str = "auto",
                   budget: Budget = DEFAULT_BUDGET) -> ComplexityResult:
    """Least k such that g is a union of k subgraphs each admitting a homomorphism to h."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    fin = finiteness(g, h)
    if not fin.finite:
        return _infinite(fin, "plain")
    lower, upper, trail = _plain_bounds(g, h, fin, budget)

    if method == "formula" or (method == "auto" and formula_applies(g, h, budget)):
        if not formula_applies(g, h, budget):
            raise HypothesisError("the closed formula needs simple graphs, χ(G) >= 2 and ω(H) = χ(H) >= 2")
        value, used, cert = _formula(g, h, budget)
    elif method == "orpower":
        value, cert = _orpower(g, h, int(lower.value), int(upper.value), budget)
        used = "orpower"
    elif method == "partition":
        value, cert = _partition(g, h, False, int(lower.value), int(upper.value), budget)
        used = "partition"
    else:
        try:
            value, cert = _orpower(g, h, int(lower.value), int(upper.value), budget)
            used = "orpower"
        except BudgetExceeded:
            value, cert = _partition(g, h, False, int(lower.value), int(upper.value), budget)
            used = "partition"

    if not lower.value <= value <= upper.value:
        raise UnverifiedCertificate(f"value {value} escapes its bounds [{lower.value}, {upper.value}]")
    if len(cert) != value:
        raise UnverifiedCertificate("certificate size differs from the value")
    return ComplexityResult(value, lower, upper, used, _certified(cert), None, trail, "plain")


def _formula(g: Graph, h: Graph, budget: Budget) -> tuple[int, str, QuasiHom]:
    from .decompose import design_into_target

    chi_g = chromatic_number(g, budget)[0]
    chi_h = chromatic_number(h, budget)[0]
    value = ceil_log(chi_g, chi_h)
    plan = design_into_target(g, h, budget=budget)
    return value, "formula", plan.quasi


def _orpower(g: Graph, h: Graph, lower: int, upper: int, budget: Budget) -> tuple[int, QuasiHom]:
    """Smallest k with g -> h^(k); pieces keep the edges first preserved in each coordinate."""
    for k in range(max(1, lower), upper + 1):
        sol = find_hom_to_or_power(g, h, k, budget)
        if sol is None:
            continue
        coords = dict(zip(g.vertices, sol))
        buckets: list[list[tuple[str, str]]] = [[] for _ in range(k)]
        for u, v in g.edge_list():
            i = next(i for i in range(k)
                     if h.has_edge(h.vertices[coords[u][i]], h.vertices[coords[v][i]]))
            buckets[i].append((u, v))
        parts = [(g.vertices, buckets[i], {v: h.vertices[coords[v][i]] for v in g.vertices})
                 for i in range(k)]
        return k, QuasiHom.from_parts(g, h, parts)
    raise UnverifiedCertificate("no or-power homomorphism up to the finiteness bound")


# --- partition search ---------------------------------------------------------------

def _edge_order(g: Graph) -> list[tuple[str, str]]:
    """Edges grouped by their later endpoint in a breadth-first vertex order."""
    pos: dict[str, int] = {}
    for root in g.vertices:
        if root in pos:
            continue
        pos[root] = len(pos)
        queue = [root]
        for v in queue:
            for w in sorted(g.nbrs[v], key=g.index.__getitem__):
                if w not in pos:
                    pos[w] = len(pos)
                    queue.append(w)
    return sorted(g.edges, key=lambda e: (max(pos[e[0]], pos[e[1]]), min(pos[e[0]], pos[e[1]])))


class _PartitionSearch:
    """Assign every edge of g to one of k pieces; each piece carries a partial
    homomorphism into h that is fixed as its vertices arrive.

    The next edge is the one with the fewest pieces still able to take it, and
    a branch dies as soon as some edge has none. Pieces open in first-use order,
    and the edge opening a piece only tries one image per orbit of Aut(h):
    composing a piece with an automorphism keeps it valid.
    """

    def __init__(self, g: Graph, h: Graph, injective: bool, budget: Budget):
        self.g, self.h, self.injective, self.budget = g, h, injective, budget
        self.edges = _edge_order(g)
        self.isolated = list(g.isolated) if injective else []
        self.hn = len(h.vertices)
        self.n_active = len(g.vertices) - len(g.isolated)
        self.out = {x: [y for y in h.vertices if h.has_edge(x, y)] for x in h.vertices}
        self.inn = {x: [y for y in h.vertices if h.has_edge(y, x)] for x in h.vertices}
        self.arcs = [(x, y) for x in h.vertices for y in h.vertices
                     if h.has_edge(x, y) and (x != y or not injective)]
        self.looped = [x for x in h.vertices if h.has_loop(x)]
        self.fresh_arcs, self.fresh_looped = self._orbit_representatives()
        self.nodes = 0

    def _orbit_representatives(self) -> tuple[list, list]:
        group = automorphisms(self.h, budget=self.budget)
        if group is None:
            return self.arcs, self.looped
        ix, names = self.h.index, self.h.vertices

        def least(*xs):
            return min(tuple(names[s[ix[x]]] for x in xs) for s in group)

        return ([a for a in self.arcs if least(*a) == a],
                [x for x in self.looped if least(x) == (x,)])

    def _choices(self, img: dict, used: set, u: str, v: str) -> list[tuple]:
        """Ways to place edge uv in a piece with images ``img``: tuples of new (vertex, image)."""
        a, b = img.get(u), img.get(v)
        free = (lambda x: x not in used) if self.injective else (lambda x: True)
        if u == v:
            if a is not None:
                return [()] if self.h.has_edge(a, a) else []
            looped = self.looped if img else self.fresh_looped
            return [((u, x),) for x in looped if free(x)]
        if a is not None and b is not None:
            return [()] if self.h.has_edge(a, b) else []
        if a is not None:
            return [((v, y),) for y in self.out[a] if free(y)]
        if b is not None:
            return [((u, x),) for x in self.inn[b] if free(x)]
        arcs = self.arcs if img else self.fresh_arcs
        return [((u, x), (v, y)) for x, y in arcs if free(x) and free(y)]

    def _placeable(self, img: dict, used: set, u: str, v: str) -> bool:
        return bool(self._choices(img, used, u, v))

    def run(self, k: int) -> list[dict] | None:
        m = len(self.edges)
        if not m:
            if not self.isolated:
                return []
            return [] if ceil_div(len(self.isolated), self.hn) <= k else None
        pieces: list[dict] = []
        assigned = [False] * m

        def options(i: int) -> list[int]:
            u, v = self.edges[i]
            ps = [p for p, pc in enumerate(pieces) if self._placeable(pc["img"], pc["used"], u, v)]
            if len(pieces) < k and self._placeable({}, set(), u, v):
                ps.append(len(pieces))
            return ps

        def rec(left: int) -> bool:
            self.nodes += 1
            if self.nodes & 255 == 0:
                self.budget.check_time()
            # every vertex still outside all pieces, isolated or not, needs a free slot later
            if self.isolated:
                placed = set().union(*(pc["img"] for pc in pieces)) if pieces else set()
                used = sum(len(pc["img"]) for pc in pieces)
                if used + self.n_active - len(placed) + len(self.isolated) > k * self.hn:
                    return False
            if not left:
                return len(pieces) + self._extra_pieces(pieces) <= k
            best, best_opts = -1, None
            for i in range(m):
                if assigned[i]:
                    continue
                opts = options(i)
                if not opts:
                    return False
                if best_opts is None or len(opts) < len(best_opts):
                    best, best_opts = i, opts
                    if len(opts) == 1:
                        break
            u, v = self.edges[best]
            assigned[best] = True
            for p in best_opts:
                if p == len(pieces):
                    pieces.append({"edges": [], "img": {}, "used": set()})
                pc = pieces[p]
                for extra in self._choices(pc["img"], pc["used"], u, v):
                    for w, x in extra:
                        pc["img"][w] = x
                        pc["used"].add(x)
                    pc["edges"].append((u, v))
                    if rec(left - 1):
                        return True
                    pc["edges"].pop()
                    for w, x in extra:
                        del pc["img"][w]
                        if x not in pc["img"].values():
                            pc["used"].discard(x)
                if not pc["edges"]:
                    pieces.pop()
            assigned[best] = False
            return False

        if not rec(m):
            return None
        return [{"edges": pc["edges"], "w": dict(pc["img"])} for pc in pieces]

    def _extra_pieces(self, pieces) -> int:
        if not self.isolated:
            return 0
        spare = sum(self.hn - len(pc["img"]) for pc in pieces)
        rest = len(self.isolated) - spare
        return ceil_div(rest, self.hn) if rest > 0 else 0


def _partition(g: Graph, h: Graph, injective: bool, lower: int, upper: int,
               budget: Budget) -> tuple[int, QuasiHom]:
    limit = budget.partition_edges_injective if injective else budget.partition_edges
    if len(g.edges) > limit:
        raise BudgetExceeded(f"partition search limited to {limit} edges, got {len(g.edges)}")
    search = _PartitionSearch(g, h, injective, budget)
    for k in range(max(1, lower), upper + 1):
        pieces = search.run(k)
        if pieces is None:
            continue
        parts = [([], list(p["edges"]), dict(p["w"])) for p in pieces]
        for vs, es, m in parts:
            vs.extend(v for v in g.vertices if v in m)
        if injective:
            parts = _pack_isolated(parts, search.isolated, h, True)
        else:
            parts = _pack_isolated(parts, list(g.isolated), h, False)
        kind = "injective" if injective else "plain"
        return len(parts), QuasiHom.from_parts(g, h, parts, kind)
    raise UnverifiedCertificate("partition search found nothing up to the finiteness bound")


# --- injective hom-complexity --------------------------------------------------------

def _is_k2(h: Graph) -> bool:
    return not h.directed and len(h.vertices) == 2 and len(h.edges) == 1 and not h.loops


def injective_hom_complexity(g: Graph, h: Graph, method: str = "auto",
                             budget: Budget = DEFAULT_BUDGET) -> ComplexityResult:
    """Least k such that g is a union of k subgraphs with vertex-injective homomorphisms to h.

    Isolated vertices count: every vertex of g must lie in some piece."""
    if method not in IC_METHODS:
        raise ValueError(f"unknown method {method!r}")
    fin = finiteness(g, h, injective=True)
    if not fin.finite:
        return _infinite(fin, "injective")
    trail = [Bound(1, "trivial"), Bound(fin.upper, "single_edge_pieces")]
    if h.vertices:
        trail.append(Bound(ceil_div(len(g.vertices), len(h.vertices)), "vertex_count_lower"))
    if h.edges:
        trail.append(Bound(ceil_div(len(g.edges), len(h.edges)), "edge_count_lower"))
    lo, _, extra = complexity_bounds(g, h, budget)
    if lo is not None:
        trail.append(lo)
    lower = max((b for b in trail if b.tag != "single_edge_pieces"), key=lambda b: b.value)
    upper = trail[1]

    closed = _is_k2(h) and not g.directed and (not g.edges or not g.isolated)
    if method == "closed_form" and not closed:
        raise HypothesisError("the closed form needs H = K2 and G edgeless or without isolated vertices")
    if closed and method != "partition":
        parts = _single_edge_parts(g, h, True)
        value, used = len(parts), "closed_form_ic"
        cert = QuasiHom.from_parts(g, h, parts, "injective")
    else:
        single = find_injective_hom(g, h, budget) if method == "auto" else None
        if single is not None:
            value, used = 1, "partition"
            cert = QuasiHom.from_parts(g, h, [(g.vertices, g.edges, single.mapping)], "injective")
        else:
            value, cert = _partition(g, h, True, int(lower.value), int(upper.value), budget)
            used = "partition"

    if not lower.value <= value <= upper.value:
        raise UnverifiedCertificate(f"value {value} escapes its bounds [{lower.value}, {upper.value}]")
    return ComplexityResult(value, lower, upper, used, _certified(cert, injective=True),
                            None, trail, "injective")


# --- strong hom-complexity ------------------------------------------------------------

def strong_hom_complexity(g: Graph, h: Graph, budget: Budget = DEFAULT_BUDGET) -> ComplexityResult:
    """Least k such that g is covered by k subgraphs with homomorphisms whose images cover h.

    Brute force over all vertex maps; each map contributes its largest spanning piece
    (all edges it preserves), then an exact set cover picks the fewest."""
    _check_modes(g, h)
    cap = budget.strong_size
    if max(len(g.vertices), len(g.edges), len(h.vertices), len(h.edges)) > cap:
        raise BudgetExceeded(f"strong hom-complexity limited to {cap} vertices and edges")
    plain = hom_complexity(g, h, budget=budget)
    if not plain.finite:
        b = plain.lower
        return ComplexityResult(INF, b, b, "finiteness", None, plain.reason, [b], "strong")
    if not g.vertices:
        if h.vertices:
            b = Bound(INF, "image-cover-impossible")
            return ComplexityResult(INF, b, b, "strong_search", None, b.tag, [b], "strong")
        cert = QuasiHom.from_parts(g, h, [([], [], {})], "strong")
        b = Bound(1, "trivial")
        return ComplexityResult(1, b, b, "strong_search", _certified(cert, strong=True), None, [b], "strong")

    g_edges = g.edge_list()
    h_edges = h.edge_list()
    eb = len(g_edges)
    vbit = {x: 1 << (eb + i) for i, x in enumerate(h.vertices)}
    ebit = {e: 1 << (eb + len(h.vertices) + i) for i, e in enumerate(h_edges)}
    universe = (1 << (eb + len(h.vertices) + len(h_edges))) - 1

    first_map: dict[int, tuple[str, ...]] = {}
    for images in itertools.product(h.vertices, repeat=len(g.vertices)):
        budget.check_time()
        f = dict(zip(g.vertices, images))
        key = 0
        for x in set(images):
            key |= vbit[x]
        for i, (u, v) in enumerate(g_edges):
            if h.has_edge(f[u], f[v]):
                key |= (1 << i) | ebit[h.canonical_edge(f[u], f[v])]
        first_map.setdefault(key, images)
    keys = list(first_map)
    kept = [keys[i] for i in drop_dominated(keys)]
    lower = Bound(plain.value, "plain_complexity_lower")
    chosen = exact_set_cover(universe, kept, lower=int(plain.value), budget=budget)
    if chosen is None:
        b = Bound(INF, "image-cover-impossible")
        return ComplexityResult(INF, lower, b, "strong_search", None, b.tag, [lower, b], "strong")
    parts = []
    for idx in sorted(chosen):
        f = dict(zip(g.vertices, first_map[kept[idx]]))
        es = [(u, v) for u, v in g_edges if h.has_edge(f[u], f[v])]
        parts.append((g.vertices, es, f))
    value = len(parts)
    if value < plain.value:
        raise UnverifiedCertificate("strong hom-complexity fell below the plain value")
    cert = _certified(QuasiHom.from_parts(g, h, parts, "strong"), strong=True)
    upper = Bound(value, "strong_search")
    return ComplexityResult(value, lower, upper, "strong_search", cert, None, [lower, upper], "strong")
