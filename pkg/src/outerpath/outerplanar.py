"""Outerplanarity recognition, outer-cycle embeddings and triangulating completions.

Recognition is dual-path.  A supplied cyclic vertex order acts as a
certificate checked by :func:`verify_embedding` (no two chords may
interleave), which works at any supported size.  Without a certificate,
:func:`is_outerplanar` searches for a K4 or a K2,3 subdivision; since both
patterns have maximum degree 3, subdivision containment coincides with
minor containment, so their joint absence characterizes outerplanarity.
The subdivision search is capped at 16 vertices.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graph import Graph, UnsupportedSizeError, bits, is_two_connected

SUBDIVISION_SEARCH_CAP = 16


@dataclass(frozen=True)
class OuterEmbedding:
    """Counter-clockwise outer-cycle positions, as a vertex permutation."""

    order: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "OuterEmbedding":
        return cls(tuple(range(n)))

    @classmethod
    def from_string(cls, text: str) -> "OuterEmbedding":
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError:
            raise ValueError(f"bad embedding order string: {text!r}") from None

    def to_string(self) -> str:
        return ",".join(str(v) for v in self.order)

    def positions(self) -> tuple[int, ...]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return tuple(pos)


def _check_permutation(g: Graph, emb: OuterEmbedding) -> None:
    if sorted(emb.order) != list(range(g.n)):
        raise ValueError("embedding order is not a permutation of the vertices")


def verify_embedding(g: Graph, emb: OuterEmbedding) -> bool:
    """True iff no two edges interleave in the cyclic order.

    Interleaving means exactly one endpoint of one edge lies strictly
    between the endpoints of the other; edges sharing an endpoint never
    cross.
    """
    _check_permutation(g, emb)
    pos = emb.positions()
    spans = []
    for u, v in g.edges():
        a, b = pos[u], pos[v]
        spans.append((a, b) if a < b else (b, a))
    for (a1, b1), (a2, b2) in combinations(spans, 2):
        if a1 == a2 or a1 == b2 or b1 == a2 or b1 == b2:
            continue
        if (a1 < a2 < b1) != (a1 < b2 < b1):
            return False
    return True


# -- subdivision search ------------------------------------------------------


def _path_interiors(adj: tuple[int, ...], a: int, b: int, blocked: int) -> Iterator[int]:
    """Yield interior masks of simple a-b paths avoiding ``blocked`` inside."""

    def go(u: int, interior: int, visited: int) -> Iterator[int]:
        row = adj[u]
        if row >> b & 1:
            yield interior
        for w in bits(row & ~visited & ~blocked & ~(1 << b)):
            yield from go(w, interior | (1 << w), visited | (1 << w))

    yield from go(a, 0, (1 << a) | (1 << b))


def _has_k4_subdivision(g: Graph) -> bool:
    adj = g.adj
    branch_candidates = [v for v in range(g.n) if g.degree(v) >= 3]
    for quad in combinations(branch_candidates, 4):
        branch_mask = 0
        for v in quad:
            branch_mask |= 1 << v
        pairs = list(combinations(quad, 2))

        def connectable(idx: int, used: int) -> bool:
            if idx == len(pairs):
                return True
            a, b = pairs[idx]
            for interior in _path_interiors(adj, a, b, branch_mask | used):
                if connectable(idx + 1, used | interior):
                    return True
            return False

        if connectable(0, 0):
            return True
    return False


def _internally_disjoint_count(g: Graph, a: int, b: int, limit: int) -> int:
    """Max internally vertex-disjoint a-b paths of length >= 2, up to ``limit``.

    Unit-capacity max flow on the split graph (v_in -> v_out), with the
    direct edge ab removed so every augmenting path has length >= 2.
    """
    cap: dict[tuple[int, int], int] = defaultdict(int)
    for v in range(g.n):
        if v != a and v != b:
            cap[(2 * v, 2 * v + 1)] = 1
    for u, v in g.edges():
        if (u, v) == (min(a, b), max(a, b)):
            continue
        cap[(2 * u + 1, 2 * v)] += 1
        cap[(2 * v + 1, 2 * u)] += 1
    src, snk = 2 * a + 1, 2 * b
    forward: dict[int, set[int]] = defaultdict(set)
    for x, y in cap:
        forward[x].add(y)
        forward[y].add(x)

    flow = 0
    while flow < limit:
        parent = {src: src}
        queue = [src]
        while queue and snk not in parent:
            x = queue.pop()
            for y in forward[x]:
                if y not in parent and cap[(x, y)] > 0:
                    parent[y] = x
                    queue.append(y)
        if snk not in parent:
            break
        y = snk
        while y != src:
            x = parent[y]
            cap[(x, y)] -= 1
            cap[(y, x)] += 1
            y = x
        flow += 1
    return flow


def _has_k23_subdivision(g: Graph) -> bool:
    for a, b in combinations(range(g.n), 2):
        direct = g.has_edge(a, b)
        if g.degree(a) - direct < 3 or g.degree(b) - direct < 3:
            continue
        if _internally_disjoint_count(g, a, b, 3) >= 3:
            return True
    return False


def is_outerplanar(g: Graph) -> bool:
    """Subdivision-based recognition, capped at 16 vertices.

    Rejects immediately on the edge bound e > 2n-3; beyond the size cap
    callers must certify an embedding through :func:`verify_embedding`.
    """
    n = g.n
    if n >= 2 and g.edge_count() > 2 * n - 3:
        return False
    if n <= 3:
        return True
    if n > SUBDIVISION_SEARCH_CAP:
        raise UnsupportedSizeError(
            f"subdivision search is capped at n <= {SUBDIVISION_SEARCH_CAP}; "
            "supply an embedding and use verify_embedding instead"
        )
    return not (_has_k23_subdivision(g) or _has_k4_subdivision(g))


# -- outer cycle and completion ----------------------------------------------


def _hamiltonian_cycle(g: Graph) -> list[int] | None:
    n = g.n
    adj = g.adj
    path = [0]

    def extend(u: int, visited: int) -> bool:
        if len(path) == n:
            return bool(adj[u] & 1)
        for w in bits(adj[u] & ~visited):
            path.append(w)
            if extend(w, visited | (1 << w)):
                return True
            path.pop()
        return False

    return path if extend(0, 1) else None


def outer_cycle(g: Graph) -> OuterEmbedding:
    """The unique Hamiltonian cycle of a 2-connected outerplanar graph.

    Returned with vertex 0 first and its smaller cycle neighbor second.
    """
    if not is_two_connected(g):
        raise ValueError("outer_cycle requires a 2-connected graph")
    cycle = _hamiltonian_cycle(g)
    if cycle is None:
        raise ValueError("graph has no Hamiltonian cycle, so no outer cycle")
    if cycle[1] > cycle[-1]:
        cycle = [cycle[0]] + cycle[:0:-1]
    emb = OuterEmbedding(tuple(cycle))
    if not verify_embedding(g, emb):
        raise ValueError("graph is not outerplanar: chords cross on its Hamiltonian cycle")
    return emb


def maximal_completion(g: Graph, emb: OuterEmbedding) -> Graph:
    """Triangulating supergraph on the same vertices and embedding.

    Adds the outer cycle of ``emb`` plus non-crossing chords until every
    bounded region is a triangle: regions are split along existing chords
    first, then chord-free regions are fan-triangulated from their lowest
    position.  Result has exactly 2n-3 edges for n >= 3 and is a fixed
    point of the operation.
    """
    if not verify_embedding(g, emb):
        raise ValueError("cannot complete: embedding has crossing chords")
    n = g.n
    order = emb.order
    if n <= 2:
        return g.with_edges([(order[0], order[1])]) if n == 2 else g

    def padj(i: int, j: int) -> bool:
        return g.has_edge(order[i], order[j])

    new_edges = [(order[i], order[(i + 1) % n]) for i in range(n)]
    stack = [tuple(range(n))]
    while stack:
        region = stack.pop()
        m = len(region)
        if m < 4:
            continue
        split = None
        for ai in range(m - 1):
            hi = m if ai else m - 1  # (first, last) is a region boundary edge
            for bi in range(ai + 2, hi):
                if padj(region[ai], region[bi]):
                    split = (ai, bi)
                    break
            if split:
                break
        if split:
            ai, bi = split
            stack.append(region[ai : bi + 1])
            stack.append(region[bi:] + region[: ai + 1])
        else:
            for j in range(2, m - 1):
                new_edges.append((order[region[0]], order[region[j]]))
    done = g.with_edges(new_edges)
    if done.edge_count() != 2 * n - 3:
        raise RuntimeError("completion did not reach 2n-3 edges; invariant violated")
    return done
