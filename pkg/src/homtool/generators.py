"""Standard graph families."""

from __future__ import annotations

import itertools
import random as _random

from .graph import Graph

FAMILIES = ("complete", "path", "cycle", "complete_multipartite", "grotzsch", "kneser",
            "random", "random_directed", "loop_vertex", "empty")


def _names(n: int) -> list[str]:
    return [str(i) for i in range(1, n + 1)]


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    vs = _names(n)
    return Graph.build(vs, itertools.combinations(vs, 2), name=f"K{n}")


def path(m: int) -> Graph:
    if m < 1:
        raise ValueError("path needs m >= 1")
    vs = _names(m)
    return Graph.build(vs, zip(vs, vs[1:]), name=f"P{m}")


def cycle(m: int) -> Graph:
    if m < 3:
        raise ValueError("cycle needs m >= 3")
    vs = _names(m)
    return Graph.build(vs, zip(vs, vs[1:] + vs[:1]), name=f"C{m}")


def complete_multipartite(*sizes: int) -> Graph:
    """Parts are consecutive runs of vertex names."""
    if not sizes or any(m < 1 for m in sizes):
        raise ValueError("every part needs at least one vertex")
    vs = _names(sum(sizes))
    parts, start = [], 0
    for m in sizes:
        parts.append(vs[start:start + m])
        start += m
    es = [(u, v) for p, q in itertools.combinations(parts, 2) for u in p for v in q]
    return Graph.build(vs, es, name="K" + ",".join(map(str, sizes)))


def multipartite_parts(*sizes: int) -> list[list[str]]:
    vs = _names(sum(sizes))
    out, start = [], 0
    for m in sizes:
        out.append(vs[start:start + m])
        start += m
    return out


def mycielskian(g: Graph) -> Graph:
    n = len(g.vertices)
    shadow = {v: str(n + i + 1) for i, v in enumerate(g.vertices)}
    apex = str(2 * n + 1)
    es = set(g.edges)
    for u, v in g.edges:
        es.add((shadow[u], v))
        es.add((u, shadow[v]))
    es.update((s, apex) for s in shadow.values())
    return Graph.build(list(g.vertices) + list(shadow.values()) + [apex], es)


def grotzsch() -> Graph:
    """Mycielskian of C5: 11 vertices, 20 edges, triangle-free, chromatic number 4."""
    return mycielskian(cycle(5)).named("grotzsch")


def kneser(n: int, k: int) -> Graph:
    """Vertices are k-subsets of {1..n} written ``{a,b}``; disjoint subsets are adjacent."""
    if not (1 <= k and 2 * k <= n):
        raise ValueError("kneser graph needs 1 <= k <= n/2")
    subsets = list(itertools.combinations(range(1, n + 1), k))
    name = {s: "{" + ",".join(map(str, s)) + "}" for s in subsets}
    es = [(name[a], name[b]) for a, b in itertools.combinations(subsets, 2)
          if not set(a) & set(b)]
    return Graph.build([name[s] for s in subsets], es, name=f"kneser({n},{k})")


def random_graph(n: int, p: float, seed: int | None = None, directed: bool = False,
                 loops: bool = False) -> Graph:
    if n < 1 or not 0.0 <= p <= 1.0:
        raise ValueError("random graph needs n >= 1 and 0 <= p <= 1")
    rng = _random.Random(seed)
    vs = _names(n)
    if directed:
        pairs = [(u, v) for u in vs for v in vs if u != v or loops]
    else:
        pairs = list(itertools.combinations(vs, 2)) + ([(v, v) for v in vs] if loops else [])
    es = [e for e in pairs if rng.random() < p]
    return Graph.build(vs, es, directed=directed, name=f"random({n},{p},{seed})")


def loop_vertex() -> Graph:
    return Graph.build(["1"], [("1", "1")], name="loop")


def empty(n: int = 0) -> Graph:
    return Graph.build(_names(n), ())


def generate(family: str, *params, seed: int | None = None) -> Graph:
    """Dispatch by family name; params are the family's positional arguments."""
    if family == "complete":
        return complete(int(params[0]))
    if family == "path":
        return path(int(params[0]))
    if family == "cycle":
        return cycle(int(params[0]))
    if family == "complete_multipartite":
        return complete_multipartite(*(int(p) for p in params))
    if family == "grotzsch":
        return grotzsch()
    if family == "kneser":
        return kneser(int(params[0]), int(params[1]))
    if family in ("random", "random_directed"):
        n, p = int(params[0]), float(params[1])
        if len(params) > 2:
            seed = int(params[2])
        return random_graph(n, p, seed, directed=family == "random_directed")
    if family == "loop_vertex":
        return loop_vertex()
    if family == "empty":
        return empty(int(params[0]) if params else 0)
    raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
