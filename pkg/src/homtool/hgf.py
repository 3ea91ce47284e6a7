"""The HGF text format.

    hgf 1 <directed|undirected>
    v <id>
    e <id> <id>
    # comment

Identifiers are non-empty and contain no whitespace. Undirected edges are
canonicalised before duplicate detection.
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph


class HGFError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokens(line: str) -> list[tuple[str, int]]:
    out, i = [], 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((line[i:j], i + 1))
        i = j
    return out


def parse_hgf(text: bytes | str, name: str | None = None) -> Graph:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise HGFError(f"invalid UTF-8 ({exc.reason})", 1, 1) from None
    lines = text.split("\n")
    header = _tokens(lines[0]) if lines else []
    if [t for t, _ in header[:2]] != ["hgf", "1"] or len(header) != 3:
        raise HGFError("expected header 'hgf 1 <directed|undirected>'", 1, 1)
    mode, col = header[2]
    if mode not in ("directed", "undirected"):
        raise HGFError(f"unknown mode {mode!r}", 1, col)
    directed = mode == "directed"

    vertices: list[str] = []
    declared: set[str] = set()
    edges: set[tuple[str, str]] = set()
    for lineno, raw in enumerate(lines[1:], start=2):
        raw = raw.rstrip("\r")
        toks = _tokens(raw)
        if not toks or toks[0][0].startswith("#"):
            continue
        kind, col = toks[0]
        if kind == "v":
            if len(toks) != 2:
                raise HGFError("'v' takes exactly one identifier", lineno, col)
            vid, vcol = toks[1]
            if vid in declared:
                raise HGFError(f"duplicate vertex {vid!r}", lineno, vcol)
            declared.add(vid)
            vertices.append(vid)
        elif kind == "e":
            if len(toks) != 3:
                raise HGFError("'e' takes exactly two identifiers", lineno, col)
            (u, ucol), (v, vcol) = toks[1], toks[2]
            for w, wcol in ((u, ucol), (v, vcol)):
                if w not in declared:
                    raise HGFError(f"undeclared endpoint {w!r}", lineno, wcol)
            e = (u, v) if directed or u <= v else (v, u)
            if e in edges:
                raise HGFError(f"duplicate edge {u} {v}", lineno, col)
            edges.add(e)
        else:
            raise HGFError(f"unknown record {kind!r}", lineno, col)
    return Graph(tuple(vertices), frozenset(edges), directed, name)


def serialize_hgf(g: Graph) -> bytes:
    lines = [f"hgf 1 {g.mode}"]
    lines += [f"v {v}" for v in g.vertices]
    lines += [f"e {u} {v}" for u, v in g.edge_list()]
    return ("\n".join(lines) + "\n").encode("utf-8")


def read_hgf(path: str | Path) -> Graph:
    path = Path(path)
    return parse_hgf(path.read_bytes(), name=path.stem)


def write_hgf(g: Graph, path: str | Path) -> None:
    Path(path).write_bytes(serialize_hgf(g))
