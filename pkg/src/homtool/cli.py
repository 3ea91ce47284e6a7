"""The ``homtool`` command line.

Exit codes: 0 affirmative, 1 negative decision, 2 bad input, 3 budget exhausted.
With ``--json`` exactly one JSON document goes to stdout, errors included.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path
from typing import Any, Callable

from . import serialize
from .budget import Budget, BudgetExceeded
from .complexity import (HypothesisError, hom_complexity, injective_hom_complexity,
                         strong_hom_complexity)
from .covering import bipartite_dimension, clique_cover_number, partite_dimension, particity
from .decompose import design_into_target, design_quasi_hom, verify_quasi_hom
from .generators import FAMILIES, generate
from .graph import Graph
from .hgf import HGFError, read_hgf, serialize_hgf, write_hgf
from .homs import core, find_hom, find_injective_hom
from .invariants import chromatic_number, clique_number, is_l_partite

OK, NEGATIVE, INPUT_ERROR, BUDGET = 0, 1, 2, 3


class InputError(Exception):
    """Bad invocation or unreadable input."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


# --- input helpers -------------------------------------------------------------------

def bundled_fixtures() -> Path:
    return Path(str(resources.files("homtool") / "fixtures"))


def resolve(path: str) -> Path:
    """The path itself, or the bundled copy when a missing path starts with ``fixtures/``."""
    p = Path(path)
    if p.exists():
        return p
    parts = p.parts
    if parts and parts[0] == "fixtures":
        bundled = bundled_fixtures().joinpath(*parts[1:])
        if bundled.exists():
            return bundled
    raise InputError(f"cannot read {path}: no such file")


def load_graph(path: str) -> Graph:
    p = resolve(path)
    try:
        return read_hgf(p)
    except HGFError as exc:
        raise InputError(f"{path}: {exc}") from None
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def load_json(path: str) -> Any:
    p = resolve(path)
    try:
        return json.loads(p.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def budget_from(args) -> Budget:
    changes = {}
    if getattr(args, "max_edges", None) is not None:
        n = args.max_edges
        changes.update(partition_edges=n, partition_edges_injective=n, cover_edges=n)
    return Budget.with_time_limit(getattr(args, "time_limit", None), **changes)


def write_json_file(path: str, data: Any) -> None:
    try:
        Path(path).write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


def _fmt_value(x) -> str:
    return "∞" if serialize.number(x) == serialize.INF_TOKEN else str(serialize.number(x))


def _fmt_map(f) -> str:
    """A VertexMap in domain order."""
    return ", ".join(f"{v}->{f.mapping[v]}" for v in f.domain.vertices if v in f.mapping)


# --- subcommands ---------------------------------------------------------------------
# Each returns (exit code, JSON payload, text lines).

Outcome = tuple[int, dict, list[str]]


def cmd_hom(args) -> Outcome:
    g, h = load_graph(args.G), load_graph(args.H)
    budget = budget_from(args)
    f = (find_injective_hom if args.injective else find_hom)(g, h, budget)
    payload = {"exists": f is not None, "injective": args.injective,
               "witness": serialize.vertex_map(f) if f else None}
    if f is None:
        return NEGATIVE, payload, [f"no {'injective ' if args.injective else ''}homomorphism "
                                   f"{g.name} -> {h.name}"]
    return OK, payload, ["homomorphism found", _fmt_map(f)]


def _colour_facts(g: Graph, h: Graph, budget: Budget) -> dict | None:
    if g.directed or h.directed or g.loops or h.loops:
        return None
    return {"chi_G": chromatic_number(g, budget)[0], "chi_H": chromatic_number(h, budget)[0],
            "omega_H": clique_number(h, budget)[0]}


def cmd_complexity(args) -> Outcome:
    g, h = load_graph(args.G), load_graph(args.H)
    budget = budget_from(args)
    if args.strong and args.injective:
        raise InputError("--strong and --injective cannot be combined")
    if args.strong:
        if args.method != "auto":
            raise InputError("--strong always uses exhaustive search; drop --method")
        result = strong_hom_complexity(g, h, budget)
        symbol = "sC"
    elif args.injective:
        if args.method in ("formula", "orpower"):
            raise InputError(f"method {args.method} is not available with --injective")
        result = injective_hom_complexity(g, h, args.method, budget)
        symbol = "IC"
    else:
        try:
            result = hom_complexity(g, h, args.method, budget)
        except HypothesisError as exc:
            raise InputError(str(exc)) from None
        symbol = "C"
    payload = serialize.complexity_result(result)
    facts = _colour_facts(g, h, budget)
    payload["invariants"] = facts
    if args.cert:
        if result.certificate is None:
            raise InputError("no certificate exists for an infinite value")
        write_json_file(args.cert, payload["certificate"])
    method = result.method
    if method == "formula" and facts:
        method += f" (ω(H)={facts['omega_H']}, χ(H)={facts['chi_H']}, χ(G)={facts['chi_G']})"
    lines = [f"{symbol}({g.name}; {h.name}) = {_fmt_value(result.value)}",
             f"method: {method}"]
    if result.reason:
        lines.append(f"reason: {result.reason}")
    lines.append(f"lower bound: {_fmt_value(result.lower.value)} [{result.lower.tag}]")
    lines.append(f"upper bound: {_fmt_value(result.upper.value)} [{result.upper.tag}]")
    lines += [f"  bound {_fmt_value(b.value)} [{b.tag}]" for b in result.trail]
    if result.certificate is not None:
        for i, p in enumerate(result.certificate.pieces, 1):
            es = " ".join(f"{u}{'>' if g.directed else ''}{v}" for u, v in p.subgraph.graph.edge_list())
            lines.append(f"piece {i}: edges [{es}] map {_fmt_map(p.map)}")
    if args.cert:
        lines.append(f"certificate written to {args.cert}")
    return OK, payload, lines


def cmd_invariant(args) -> Outcome:
    g = load_graph(args.G)
    budget = budget_from(args)
    name = args.name
    if g.directed and name != "core":
        raise InputError(f"{name} needs an undirected graph")
    if name == "chromatic":
        chi, f = chromatic_number(g, budget)
        return OK, {"invariant": name, "value": chi, "witness": serialize.vertex_map(f)}, \
            [f"χ({g.name}) = {chi}", _fmt_map(f)]
    if name == "clique":
        omega, c = clique_number(g, budget)
        return OK, {"invariant": name, "value": omega, "witness": list(c)}, \
            [f"ω({g.name}) = {omega}", "clique: " + " ".join(c)]
    if name == "core":
        sub, r = core(g, budget)
        payload = {"invariant": name, "value": len(sub.vertices),
                   "vertices": list(sub.vertices),
                   "edges": [list(e) for e in sub.graph.edge_list()],
                   "retraction": serialize.vertex_map(r)}
        return OK, payload, [f"core of {g.name} has {len(sub.vertices)} vertices: "
                             + " ".join(sub.vertices), "retraction: " + _fmt_map(r)]
    if args.l is None:
        raise InputError("lpartite needs --l")
    yes, parts = is_l_partite(g, args.l, budget)
    payload = {"invariant": name, "l": args.l, "value": yes,
               "parts": [list(p) for p in parts] if parts else None}
    if not yes:
        return NEGATIVE, payload, [f"{g.name} is not {args.l}-partite"]
    return OK, payload, [f"{g.name} is {args.l}-partite",
                         *(f"part {i}: {' '.join(p)}" for i, p in enumerate(parts, 1))]


def cmd_cover(args) -> Outcome:
    g = load_graph(args.G)
    budget = budget_from(args)
    if args.name == "cc":
        result, label = clique_cover_number(g, budget), "cc"
    elif args.name == "particity":
        l = 2 if args.l is None else args.l
        result, label = particity(g, l, budget), f"β_{l}"
    else:
        l = 2 if args.l is None else args.l
        result = bipartite_dimension(g, budget) if l == 2 else partite_dimension(g, l, budget)
        label = f"d_{l}"
    payload = serialize.cover_result(result, args.name)
    lines = [f"{label}({g.name}) = {_fmt_value(result.value)}"]
    if result.note:
        lines.append(f"note: {result.note}")
    if result.certificate is not None:
        for i, (p, wit) in enumerate(zip(result.certificate.pieces, result.certificate.witnesses), 1):
            lines.append(f"piece {i}: " + " | ".join(" ".join(w) for w in wit))
    return OK, payload, lines


def cmd_design(args) -> Outcome:
    g = load_graph(args.G)
    budget = budget_from(args)
    try:
        if args.target is not None:
            plan = design_into_target(g, load_graph(args.target), budget=budget)
        else:
            plan = design_quasi_hom(g, args.target_complete, budget=budget)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    data = serialize.design_plan(plan)
    if args.out:
        write_json_file(args.out, data)
    lines = [f"plan {g.name} -> {plan.quasi.target.name}: {len(plan.pieces)} pieces, "
             f"{'optimal' if plan.optimal else 'not proven optimal'}"]
    for i, (p, surj) in enumerate(zip(plan.pieces, plan.surjective()), 1):
        lines.append(f"piece {i}: {len(p.subgraph.edges)} edges, "
                     f"{'onto' if surj else 'not onto'} the target; {_fmt_map(p.map)}")
    if args.out:
        lines.append(f"plan written to {args.out}")
    return OK, data, lines


def cmd_verify(args) -> Outcome:
    data = load_json(args.plan)
    g, h = load_graph(args.G), load_graph(args.H)
    budget = budget_from(args)
    q, load_problems = serialize.load_quasi_hom(data, g, h)
    report = verify_quasi_hom(q, g, h, args.injective, args.check_optimal and not load_problems,
                              budget)
    if load_problems:
        report.ok = False
        report.problems[:0] = load_problems
    payload = serialize.verification(report)
    lines = [f"plan {'accepted' if report.ok else 'rejected'}: {report.pieces} pieces"]
    lines += [f"problem: {p}" for p in report.problems]
    if report.exact_value is not None:
        lines.append(f"optimum: {_fmt_value(report.exact_value)}")
    if report.ok:
        lines.append("images cover the target" if report.strong else
                     f"images miss {len(report.uncovered_target)} target element(s)")
    return (OK if report.ok else NEGATIVE), payload, lines


def cmd_gen(args) -> Outcome:
    try:
        g = generate(args.family, *args.params, seed=args.seed)
    except IndexError:
        raise InputError(f"{args.family} needs more parameters") from None
    except ValueError as exc:
        raise InputError(f"cannot generate {args.family}: {exc}") from None
    if args.out:
        try:
            write_hgf(g, args.out)
        except OSError as exc:
            raise InputError(f"cannot write {args.out}: {exc.strerror}") from None
        return OK, {"written": args.out, "vertices": len(g.vertices), "edges": len(g.edges)}, \
            [f"wrote {args.out}: {len(g.vertices)} vertices, {len(g.edges)} edges"]
    text = serialize_hgf(g).decode("utf-8")
    return OK, {"hgf": text}, [text.rstrip("\n")]


# --- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON document on stdout")
    common.add_argument("--time-limit", type=float, default=argparse.SUPPRESS,
                        metavar="SECONDS", help="abort searches after this many seconds")
    common.add_argument("--max-edges", type=int, default=argparse.SUPPRESS, metavar="N",
                        help="edge limit for the partition and cover searches")

    parser = _Parser(prog="homtool", parents=[common],
                     description="Graph homomorphisms, hom-complexity and edge-covering numbers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, fn: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=fn)
        return p

    p = add("hom", cmd_hom, "decide whether G maps homomorphically into H")
    p.add_argument("G")
    p.add_argument("H")
    p.add_argument("--injective", action="store_true")

    p = add("complexity", cmd_complexity, "exact hom-complexity with a certificate")
    p.add_argument("G")
    p.add_argument("H")
    p.add_argument("--injective", action="store_true")
    p.add_argument("--strong", action="store_true",
                   help="require the piece images to cover H (exhaustive, tiny graphs only)")
    p.add_argument("--method", choices=("auto", "formula", "orpower", "partition"), default="auto")
    p.add_argument("--cert", metavar="PATH", help="write the certificate as JSON")

    p = add("invariant", cmd_invariant, "chromatic number, clique number, core, ℓ-partiteness")
    p.add_argument("name", choices=("chromatic", "clique", "core", "lpartite"))
    p.add_argument("G")
    p.add_argument("--l", type=int)

    p = add("cover", cmd_cover, "clique cover number, ℓ-particity, ℓ-partite dimension")
    p.add_argument("name", choices=("cc", "particity", "bipdim"))
    p.add_argument("G")
    p.add_argument("--l", type=int)

    p = add("design", cmd_design, "build an optimal quasi-homomorphism from a colouring")
    p.add_argument("G")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--target", metavar="H.hgf")
    target.add_argument("--target-complete", type=int, metavar="L")
    p.add_argument("--out", metavar="PLAN.json")

    p = add("verify", cmd_verify, "check a plan against G and H")
    p.add_argument("plan")
    p.add_argument("G")
    p.add_argument("H")
    p.add_argument("--injective", action="store_true")
    p.add_argument("--check-optimal", action="store_true")

    p = add("gen", cmd_gen, f"generate a graph ({', '.join(FAMILIES)})")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int)
    p.add_argument("--out", metavar="PATH")
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    as_json = "--json" in argv
    code, payload, lines, error = OK, {}, [], None
    try:
        args = build_parser().parse_args(argv)
        as_json = getattr(args, "json", False)
        code, payload, lines = args.func(args)
    except InputError as exc:
        code, error = INPUT_ERROR, str(exc)
    except BudgetExceeded as exc:
        code, error = BUDGET, f"budget exceeded: {exc}"
    except ValueError as exc:
        code, error = INPUT_ERROR, str(exc)
    if as_json:
        out = {"error": error, "exit_code": code} if error else {**payload, "exit_code": code}
        print(json.dumps(out, ensure_ascii=False))
    elif error:
        print(f"homtool: {error}", file=sys.stderr)
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
