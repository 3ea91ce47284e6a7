"""JSON encodings of maps, plans, results and covers.

Infinite values are written as the string ``"inf"``. Loading a plan never
raises on malformed pieces; each defect becomes a problem string instead.
"""

from __future__ import annotations

import math
from typing import Any

from .complexity import Bound, ComplexityResult, Piece, QuasiHom
from .covering import CoverResult
from .decompose import DesignPlan, VerificationReport
from .graph import Graph
from .homs import VertexMap
from .invariants import InvariantReport

INF_TOKEN = "inf"


def number(x: float | int | None) -> int | str | None:
    if x is None:
        return None
    if x == math.inf:
        return INF_TOKEN
    return int(x)


def parse_number(x: Any) -> float:
    return math.inf if x == INF_TOKEN else int(x)


def vertex_map(f: VertexMap) -> dict:
    return {
        "domain": f.domain.name,
        "codomain": f.codomain.name,
        "map": {v: f.mapping[v] for v in f.domain.vertices if v in f.mapping},
        "flags": {
            "hom": f.is_hom,
            "injective": f.is_vertex_injective,
            "surjective": f.is_vertex_surjective,
        },
    }


def load_vertex_map(data: dict, domain: Graph, codomain: Graph) -> VertexMap:
    """Rebuild a map against known graphs; flags are dropped and must be re-verified."""
    mapping = data.get("map")
    if not isinstance(mapping, dict):
        raise ValueError("a vertex map needs a 'map' object")
    return VertexMap(domain, codomain, {str(k): str(v) for k, v in mapping.items()})


def _piece(p: Piece, target: Graph) -> dict:
    sub = p.subgraph
    return {
        "vertices": list(sub.vertices),
        "edges": [list(e) for e in sub.graph.edge_list()],
        "map": {v: p.map[v] for v in sub.vertices},
        "surjective": set(p.map.mapping.values()) == set(target.vertices),
    }


def quasi_hom(q: QuasiHom) -> dict:
    return {
        "source": q.source.name,
        "target": q.target.name,
        "kind": q.kind,
        "pieces": [_piece(p, q.target) for p in q.pieces],
    }


def design_plan(plan: DesignPlan) -> dict:
    out = quasi_hom(plan.quasi)
    out["colouring"] = vertex_map(plan.colouring) if plan.colouring is not None else None
    out["embedding"] = list(plan.embedding) if plan.embedding is not None else None
    out["optimal"] = plan.optimal
    out["trace"] = list(plan.trace)
    return out


def load_quasi_hom(data: Any, g: Graph, h: Graph) -> tuple[QuasiHom, list[str]]:
    """Read a plan or certificate against g and h.

    Pieces that do not describe a subgraph of g are left out and reported, so the
    returned problems plus a coverage check give a complete verdict."""
    problems: list[str] = []
    if not isinstance(data, dict) or not isinstance(data.get("pieces"), list):
        return QuasiHom(g, h, ()), ["the plan has no 'pieces' list"]
    pieces = []
    for i, raw in enumerate(data["pieces"], 1):
        try:
            vs = [str(v) for v in raw.get("vertices", [])]
            es = []
            for e in raw.get("edges", []):
                if not isinstance(e, list) or len(e) != 2:
                    raise ValueError(f"malformed edge {e!r}")
                es.append((str(e[0]), str(e[1])))
            sub = g.subgraph(vs, es)
            mapping = {str(k): str(v) for k, v in dict(raw.get("map", {})).items()}
        except (AttributeError, TypeError, ValueError) as exc:
            problems.append(f"piece {i}: {exc}")
            continue
        extra = sorted(set(mapping) - set(sub.vertices))
        if extra:
            problems.append(f"piece {i}: map names vertices outside the piece {extra}")
        keep = set(sub.vertices)
        mapping = {v: x for v, x in mapping.items() if v in keep}
        pieces.append(Piece(sub, VertexMap(sub.graph, h, mapping)))
    kind = data.get("kind", "plain")
    return QuasiHom(g, h, tuple(pieces), kind if isinstance(kind, str) else "plain"), problems


def _bound(b: Bound) -> dict:
    return {"value": number(b.value), "tag": b.tag}


def complexity_result(r: ComplexityResult) -> dict:
    return {
        "kind": r.kind,
        "value": number(r.value),
        "finite": r.finite,
        "method": r.method,
        "reason": r.reason,
        "lower": _bound(r.lower),
        "upper": _bound(r.upper),
        "bounds": [_bound(b) for b in r.trail],
        "certificate": quasi_hom(r.certificate) if r.certificate is not None else None,
    }


def cover_result(r: CoverResult, name: str) -> dict:
    cert = r.certificate
    out = {"number": name, "value": number(r.value), "lower": r.lower, "note": r.note,
           "certificate": None}
    if cert is not None:
        out["certificate"] = {
            "source": cert.source.name,
            "class": cert.kind,
            "l": cert.l,
            "pieces": [{"vertices": list(p.vertices),
                        "edges": [list(e) for e in p.graph.edge_list()],
                        "witness": [list(w) for w in wit]}
                       for p, wit in zip(cert.pieces, cert.witnesses)],
        }
    return out


def invariant_report(r: InvariantReport) -> dict:
    return {
        "chromatic": r.chromatic,
        "clique": r.clique,
        "colouring": vertex_map(r.colouring),
        "clique_witness": list(r.clique_witness),
    }


def verification(r: VerificationReport) -> dict:
    return {
        "ok": r.ok,
        "pieces": r.pieces,
        "problems": list(r.problems),
        "strong": r.strong,
        "uncovered_target": list(r.uncovered_target),
        "optimal": r.optimal,
        "exact_value": number(r.exact_value),
    }
