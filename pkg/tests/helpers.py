"""Independent oracles used across the test suite.

Everything here is deliberately naive (permutation scans, O(n^k)
enumeration) and shares no code with the library paths it checks.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from outerpath import Graph


def brute_count_induced_paths(g: Graph, k: int) -> int:
    """Count induced k-vertex paths by scanning all ordered k-tuples."""
    if k == 1:
        return g.n
    count = 0
    for verts in combinations(range(g.n), k):
        for order in permutations(verts):
            if order[0] > order[-1]:
                continue
            ok = True
            for i in range(k):
                for j in range(i + 1, k):
                    adjacent = g.has_edge(order[i], order[j])
                    if adjacent != (j == i + 1):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                count += 1
    return count


def brute_count_between(g: Graph, x: int, y: int, k: int) -> int:
    count = 0
    others = [v for v in range(g.n) if v not in (x, y)]
    for mid in permutations(others, k - 2):
        order = (x,) + mid + (y,)
        ok = True
        for i in range(k):
            for j in range(i + 1, k):
                if g.has_edge(order[i], order[j]) != (j == i + 1):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def orders_cross(g: Graph, order: tuple[int, ...]) -> bool:
    """Naive pairwise crossing test for a circular layout."""
    pos = {v: i for i, v in enumerate(order)}
    edges = list(g.edges())
    for (u1, v1), (u2, v2) in combinations(edges, 2):
        if {u1, v1} & {u2, v2}:
            continue
        a1, b1 = sorted((pos[u1], pos[v1]))
        a2, b2 = sorted((pos[u2], pos[v2]))
        if (a1 < a2 < b1) != (a1 < b2 < b1):
            return True
    return False


def outerplanar_by_order_search(g: Graph) -> bool:
    """True iff some circular vertex order draws g without crossings."""
    n = g.n
    if n <= 3:
        return True
    rest = list(range(1, n))
    for perm in permutations(rest):
        if perm[0] > perm[-1]:
            continue  # reflections are equivalent
        if not orders_cross(g, (0,) + perm):
            return True
    return False


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def relabel(g: Graph, perm: list[int]) -> Graph:
    """New graph with vertex v renamed perm[v]."""
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
