"""Induced path counting.

The depth-first counters extend a path only at its free endpoint while
carrying a forbidden mask (the united neighborhoods of all non-terminal
path vertices), so every emitted vertex sequence is an induced path by
construction.  Unordered copies are counted once each by requiring the
first endpoint to be smaller than the last.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

from .graph import Graph, bits


@dataclass(frozen=True)
class PathCount:
    k: int
    copies: int


def count_induced_paths(g: Graph, k: int) -> PathCount:
    """Number of unordered induced paths on ``k`` vertices."""
    n = g.n
    if not 1 <= k <= n:
        raise ValueError(f"path length k must be in 1..{n}, got {k}")
    if k == 1:
        return PathCount(1, n)
    adj = g.adj
    total = 0

    def extend(last: int, pmask: int, forb: int, depth: int, start: int) -> None:
        nonlocal total
        cand = adj[last] & ~(pmask | forb)
        if depth + 1 == k:
            total += (cand >> (start + 1)).bit_count()
            return
        nforb = forb | adj[last]
        for w in bits(cand):
            extend(w, pmask | (1 << w), nforb, depth + 1, start)

    for s in range(n):
        extend(s, 1 << s, 0, 1, s)
    return PathCount(k, total)


def count_induced_p3_closed_form(g: Graph) -> int:
    """Independent 3-vertex oracle: sum over v of C(deg v, 2) - e(G[N(v)])."""
    adj = g.adj
    total = 0
    for v in range(g.n):
        row = adj[v]
        pairs = comb(row.bit_count(), 2)
        inside = 0
        for u in bits(row):
            inside += (adj[u] & row).bit_count()
        total += pairs - inside // 2
    return total


def count_induced_paths_between(g: Graph, x: int, y: int, k: int) -> int:
    """Number of induced ``k``-vertex paths whose endpoint set is {x, y}."""
    n = g.n
    if not (0 <= x < n and 0 <= y < n):
        raise ValueError(f"vertices must be in 0..{n - 1}")
    if x == y:
        raise ValueError("endpoints must be distinct")
    if not 2 <= k <= n:
        raise ValueError(f"path length k must be in 2..{n}, got {k}")
    adj = g.adj
    ybit = 1 << y
    total = 0

    def extend(last: int, pmask: int, forb: int, depth: int) -> None:
        nonlocal total
        cand = adj[last] & ~(pmask | forb)
        if depth + 1 == k:
            if cand & ybit:
                total += 1
            return
        if forb & ybit:
            return
        nforb = forb | adj[last]
        for w in bits(cand & ~ybit):
            extend(w, pmask | (1 << w), nforb, depth + 1)

    extend(x, 1 << x, 0, 1)
    return total


def iter_induced_paths(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """Yield each induced ``k``-vertex path once, as a tuple with first < last."""
    n = g.n
    if not 2 <= k <= n:
        raise ValueError(f"path length k must be in 2..{n}, got {k}")
    adj = g.adj
    path: list[int] = []

    def extend(last: int, pmask: int, forb: int) -> Iterator[tuple[int, ...]]:
        cand = adj[last] & ~(pmask | forb)
        if len(path) + 1 == k:
            for w in bits(cand >> (path[0] + 1) << (path[0] + 1)):
                yield tuple(path) + (w,)
            return
        nforb = forb | adj[last]
        for w in bits(cand):
            path.append(w)
            yield from extend(w, pmask | (1 << w), nforb)
            path.pop()

    for s in range(n):
        path[:] = [s]
        yield from extend(s, 1 << s, 0)
