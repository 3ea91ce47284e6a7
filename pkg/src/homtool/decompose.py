"""Constructive optimal quasi-homomorphisms.

``decompose_complete`` splits K_j into ⌈log_ℓ j⌉ spanning ℓ-partite pieces by
recursing on ℓ blocks; ``design_quasi_hom`` pulls that split back along a
colouring; ``design_into_target`` pushes it into a maximum clique of a target.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .budget import DEFAULT_BUDGET, Budget
from .complexity import QuasiHom, Piece, ceil_log, check_quasi_hom, hom_complexity
from .generators import complete
from .graph import Graph
from .homs import VertexMap, inverse_image, is_hom
from .invariants import chromatic_number, clique_number, complete_graph


@dataclass(frozen=True)
class DesignPlan:
    quasi: QuasiHom
    colouring: VertexMap | None = None
    trace: tuple[dict, ...] = ()
    embedding: tuple[str, ...] | None = None  # class c goes to embedding[c-1]
    optimal: bool = False

    @property
    def pieces(self) -> tuple[Piece, ...]:
        return self.quasi.pieces

    def surjective(self) -> list[bool]:
        """Whether each piece map hits every target vertex."""
        return [set(p.map.mapping.values()) == set(self.quasi.target.vertices)
                for p in self.quasi.pieces]


# --- complete graphs -----------------------------------------------------------

def _rotate(c: int, shift: int, l: int) -> int:
    return (c - 1 + shift) % l + 1


def _split(vs: list[str], l: int, depth: int, trace: list[dict]) -> list[tuple[list, dict]]:
    """Pieces of the complete graph on ``vs``: (edge list, class map onto 1..l)."""
    n = len(vs)
    if n <= l:
        edges = [(vs[a], vs[b]) for a in range(n) for b in range(a + 1, n)]
        return [(edges, {v: t + 1 for t, v in enumerate(vs)})]
    m = -(-n // l)
    r = n - (m - 1) * l
    blocks = [vs[b::l] for b in range(l)]
    trace.append({"depth": depth, "j": n, "m": m, "r": r, "blocks": [list(b) for b in blocks]})
    sub = [_split(b, l, depth + 1, trace) for b in blocks]
    pieces = []
    for i in range(max(len(s) for s in sub)):
        edges, classes = [], {}
        for b, s in enumerate(sub):
            own_edges, own = s[i] if i < len(s) else ([], s[0][1])
            edges += own_edges
            classes.update({v: _rotate(c, b, l) for v, c in own.items()})
        pieces.append((edges, classes))
    across = [(u, v) for a in range(l) for b in range(a + 1, l) for u in blocks[a] for v in blocks[b]]
    pieces.append((across, {v: b + 1 for b, blk in enumerate(blocks) for v in blk}))
    return pieces


def decompose_complete(j: int, l: int) -> DesignPlan:
    """Cover K_j by ⌈log_ℓ j⌉ spanning subgraphs, each mapped onto K_ℓ.

    Vertex t goes to block (t-1) mod ℓ; the last piece joins the blocks completely,
    earlier pieces are disjoint unions of the blocks' own pieces with classes
    rotated by block index so each piece still uses all ℓ classes."""
    if j < 2 or l < 2:
        raise ValueError("need j >= 2 and ℓ >= 2")
    kj, kl = complete(j), complete(l)
    trace: list[dict] = []
    raw = _split(list(kj.vertices), l, 0, trace)
    parts = [(kj.vertices, edges, {v: str(c) for v, c in classes.items()})
             for edges, classes in raw]
    q = QuasiHom.from_parts(kj, kl, parts)
    _assert_valid(q)
    return DesignPlan(q, None, tuple(trace), None, len(q) == max(1, ceil_log(j, l)))


def _assert_valid(q: QuasiHom) -> None:
    problems = check_quasi_hom(q)
    if problems:
        raise AssertionError("designer produced an invalid plan: " + "; ".join(problems))


# --- arbitrary sources -----------------------------------------------------------

def _colouring(g: Graph, colouring: VertexMap | None, budget: Budget) -> VertexMap:
    if g.directed or g.loops:
        raise ValueError("designs need a simple undirected source graph")
    if colouring is None:
        return chromatic_number(g, budget)[1]
    report = is_hom(colouring)
    if not report or colouring.domain != g:
        raise ValueError("the supplied colouring is not a homomorphism from g")
    cod = colouring.codomain
    if cod.loops or len(cod.edges) != len(cod.vertices) * (len(cod.vertices) - 1) // 2:
        raise ValueError("the supplied colouring must map into a complete graph")
    return report.vmap


def design_quasi_hom(g: Graph, l: int, colouring: VertexMap | None = None,
                     budget: Budget = DEFAULT_BUDGET) -> DesignPlan:
    """A quasi-homomorphism g -> K_ℓ with ⌈log_ℓ j⌉ pieces, j the number of colours used."""
    if l < 2:
        raise ValueError("ℓ must be at least 2")
    f = _colouring(g, colouring, budget)
    j = len(f.codomain.vertices)
    chi = chromatic_number(g, budget)[0]
    target = complete(l)
    if j <= l:
        colour_pos = {x: str(i + 1) for i, x in enumerate(f.codomain.vertices)}
        q = QuasiHom.from_parts(g, target, [(g.vertices, g.edges,
                                             {v: colour_pos[f[v]] for v in g.vertices})])
        _assert_valid(q)
        return DesignPlan(q, f, (), None, True)
    base = decompose_complete(j, l)
    kj = f.codomain
    rename = dict(zip(base.quasi.source.vertices, kj.vertices))
    parts = []
    for p in base.pieces:
        piece_in_kj = kj.subgraph((rename[v] for v in p.subgraph.vertices),
                                  ((rename[u], rename[v]) for u, v in p.subgraph.edges))
        pulled = inverse_image(f, piece_in_kj)
        back = {x: v for v, x in rename.items()}
        parts.append((pulled.vertices, pulled.edges,
                      {v: p.map[back[f[v]]] for v in pulled.vertices}))
    q = QuasiHom.from_parts(g, target, parts)
    _assert_valid(q)
    optimal = len(q) == max(1, ceil_log(chi, l))
    return DesignPlan(q, f, base.trace, None, optimal)


def design_into_target(g: Graph, h: Graph, colouring: VertexMap | None = None,
                       budget: Budget = DEFAULT_BUDGET) -> DesignPlan:
    """Design into K_ω(h), then embed through the first maximum clique of h.

    The plan is flagged optimal when ω(h) = χ(h) and the piece count meets ⌈log_χ(h) χ(g)⌉."""
    if h.directed or h.loops:
        raise ValueError("the target must be a simple undirected graph")
    omega, clique = clique_number(h, budget)
    if omega < 2:
        raise ValueError("the target needs a clique of size at least 2")
    inner = design_quasi_hom(g, omega, colouring, budget)
    parts = [(p.subgraph.vertices, p.subgraph.edges,
              {v: clique[int(c) - 1] for v, c in p.map.mapping.items()})
             for p in inner.pieces]
    q = QuasiHom.from_parts(g, h, parts)
    _assert_valid(q)
    chi_g = chromatic_number(g, budget)[0]
    chi_h = chromatic_number(h, budget)[0]
    optimal = omega == chi_h and len(q) == max(1, ceil_log(chi_g, chi_h))
    return DesignPlan(q, inner.colouring, inner.trace, clique, optimal)


# --- verification --------------------------------------------------------------------

@dataclass
class VerificationReport:
    ok: bool
    problems: list[str] = field(default_factory=list)
    pieces: int = 0
    optimal: bool | None = None
    exact_value: float | None = None
    strong: bool = False
    uncovered_target: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def verify_quasi_hom(plan: QuasiHom | DesignPlan, g: Graph, h: Graph, injective: bool = False,
                     check_optimal: bool = False, budget: Budget = DEFAULT_BUDGET) -> VerificationReport:
    """Independently re-check a plan against g and h; failures are itemised, never raised."""
    q = plan.quasi if isinstance(plan, DesignPlan) else plan
    problems: list[str] = []
    if q.source != g:
        problems.append("the plan's source differs from g")
    if q.target != h:
        problems.append("the plan's target differs from h")
    if not problems:
        problems += check_quasi_hom(q, injective)
    strong_gaps = [p for p in check_quasi_hom(q, injective, strong=True)
                   if p.startswith("target ")] if not problems else []
    report = VerificationReport(not problems, problems, len(q), None, None,
                                not problems and not strong_gaps, strong_gaps)
    if check_optimal and report.ok:
        from .complexity import injective_hom_complexity
        exact = (injective_hom_complexity if injective else hom_complexity)(g, h, budget=budget)
        report.exact_value = exact.value
        report.optimal = len(q) == exact.value
        if not report.optimal:
            report.ok = False
            report.problems.append(f"plan has {len(q)} pieces but the optimum is {exact.value}")
    return report


@dataclass
class InducedMap:
    map: VertexMap
    broken_edges: list[tuple[str, str]]

    @property
    def is_hom(self) -> bool:
        return not self.broken_edges


def induced_map(plan: QuasiHom | DesignPlan) -> InducedMap:
    """Flatten a plan: each vertex takes its image under the first piece containing it."""
    q = plan.quasi if isinstance(plan, DesignPlan) else plan
    mapping: dict[str, str] = {}
    for p in q.pieces:
        for v in p.subgraph.vertices:
            mapping.setdefault(v, p.map[v])
    missing = [v for v in q.source.vertices if v not in mapping]
    if missing:
        raise ValueError(f"plan does not cover vertices {missing}")
    f = VertexMap(q.source, q.target, {v: mapping[v] for v in q.source.vertices})
    report = is_hom(f)
    return InducedMap(report.vmap, report.broken_edges)
