"""Exact minimum set cover over bitmask-encoded sets."""

from __future__ import annotations

from typing import Sequence

from .budget import DEFAULT_BUDGET, Budget


def popcount(x: int) -> int:
    return bin(x).count("1")


def drop_dominated(sets: Sequence[int]) -> list[int]:
    """Indices of sets not strictly contained in another set (first copy of duplicates kept)."""
    order = sorted(range(len(sets)), key=lambda i: (-popcount(sets[i]), i))
    kept: list[int] = []
    seen: set[int] = set()
    for i in order:
        s = sets[i]
        if s in seen or any(s & ~sets[j] == 0 for j in kept):
            continue
        seen.add(s)
        kept.append(i)
    return sorted(kept)


def exact_set_cover(universe: int, sets: Sequence[int], lower: int = 1,
                    upper: int | None = None, budget: Budget = DEFAULT_BUDGET
                    ) -> list[int] | None:
    """Minimum number of ``sets`` whose union contains ``universe``.

    Returns the chosen indices (in selection order), or None if no cover exists
    or none exists within ``upper`` sets. Iterative deepening from ``lower``; the
    first cover found at the optimal size is returned.
    """
    if universe == 0:
        return []
    sets = [s & universe for s in sets]
    covered_all = 0
    for s in sets:
        covered_all |= s
    if covered_all & universe != universe:
        return None
    elements = []
    u = universe
    while u:
        low = u & -u
        elements.append(low)
        u ^= low
    holders = {e: [i for i, s in enumerate(sets) if s & e] for e in elements}
    sizes = [popcount(s) for s in sets]
    limit = upper if upper is not None else len(elements)
    nodes = 0

    def search(uncovered: int, depth: int, k: int, chosen: list[int]) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes & 1023 == 0:
            budget.check_time()
        if not uncovered:
            return True
        if depth == k:
            return False
        best = 0
        for i, s in enumerate(sets):
            if sizes[i] > best:
                c = popcount(s & uncovered)
                if c > best:
                    best = c
        if depth + -(-popcount(uncovered) // best) > k:
            return False
        pivot, cands = None, None
        u = uncovered
        while u:
            low = u & -u
            u ^= low
            h = holders[low]
            if cands is None or len(h) < len(cands):
                pivot, cands = low, h
                if len(h) == 1:
                    break
        ranked = sorted(cands, key=lambda i: (-popcount(sets[i] & uncovered), i))
        for i in ranked:
            chosen.append(i)
            if search(uncovered & ~sets[i], depth + 1, k, chosen):
                return True
            chosen.pop()
        return False

    best_single = max(sizes)
    k = max(lower, -(-len(elements) // best_single), 1)
    while k <= limit:
        chosen: list[int] = []
        if search(universe, 0, k, chosen):
            return chosen
        k += 1
    return None
