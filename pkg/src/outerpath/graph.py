"""Bitmask-backed small graphs and basic structural operations.

Vertices are dense indices 0..n-1 (n <= 64) and each adjacency row is a
single machine word, so induced subgraphs, neighborhood intersections and
connectivity sweeps reduce to integer arithmetic.  Graphs are immutable
values: every operation returns a new instance, which keeps them safe to
share across worker processes.
"""

from __future__ import annotations

import functools
from typing import Iterable, Iterator

MAX_VERTICES = 64

# Full permutation scan only stays tractable up to here; larger searches
# never deduplicate by isomorphism.
CANONICAL_CAP = 9

# A vertex set is a plain bitmask over vertex indices.
VertexSet = int


class UnsupportedSizeError(ValueError):
    """An operation was asked to exceed its supported size cap."""


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit indices of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph on vertices 0..n-1 with bitmask adjacency rows."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.adj = tuple(rows)
        self._hash = None

    @classmethod
    def _from_rows(cls, rows: tuple[int, ...]) -> "Graph":
        # Internal fast path; rows must already satisfy the invariants.
        g = object.__new__(cls)
        g.n = len(rows)
        g.adj = tuple(rows)
        g._hash = None
        return g

    # -- basic accessors -------------------------------------------------

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> VertexSet:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(row):
                yield (u, v)

    @property
    def full_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        """New graph with ``extra`` edges added (duplicates are fine)."""
        rows = list(self.adj)
        for u, v in extra:
            if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
                raise ValueError(f"bad edge ({u},{v}) for n={self.n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph._from_rows(tuple(rows))

    # -- value semantics -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def induced_subgraph(g: Graph, s: VertexSet) -> Graph:
    """Subgraph induced by the vertex set ``s``, relabeled 0..|s|-1.

    Kept vertices are renumbered in ascending original index.
    """
    if s == 0:
        raise ValueError("cannot take the subgraph induced by an empty vertex set")
    if s & ~g.full_mask:
        raise ValueError("vertex set contains indices outside the graph")
    verts = list(bits(s))
    index = {v: i for i, v in enumerate(verts)}
    rows = [0] * len(verts)
    for i, v in enumerate(verts):
        for u in bits(g.adj[v] & s):
            rows[i] |= 1 << index[u]
    return Graph._from_rows(tuple(rows))


def _component_count(g: Graph, within: VertexSet) -> int:
    adj = g.adj
    remaining = within
    count = 0
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            nxt &= within & ~comp
            comp |= nxt
            frontier = nxt
        remaining &= ~comp
        count += 1
    return count


def is_connected(g: Graph) -> bool:
    return _component_count(g, g.full_mask) <= 1


def cut_vertices(g: Graph) -> VertexSet:
    """Bitmask of vertices whose removal increases the component count."""
    base = _component_count(g, g.full_mask)
    out = 0
    for v in range(g.n):
        rest = g.full_mask & ~(1 << v)
        if rest and _component_count(g, rest) > base:
            out |= 1 << v
    return out


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and cut_vertices(g) == 0


@functools.lru_cache(maxsize=1 << 16)
def canonical_form(g: Graph) -> bytes:
    """Lexicographically minimal upper-triangle encoding, equal iff isomorphic.

    The bit string is column-major: position m contributes the m bits
    linking it to positions 0..m-1 (earlier position = more significant
    bit).  Branch-and-bound over vertex placements finds the minimum over
    all relabelings; interchangeable twins (identical open or closed
    neighborhoods) are explored once.  The result is the graph6 encoding
    of the minimizing relabeling.
    """
    from .graph6 import to_graph6

    n = g.n
    if n > CANONICAL_CAP:
        raise UnsupportedSizeError(f"canonical_form supports n <= {CANONICAL_CAP}, got {n}")
    adj = g.adj
    best: list[int] | None = None

    def place(perm: list[int], used: int, cols: list[int]) -> None:
        nonlocal best
        m = len(perm)
        if m == n:
            if best is None or cols < best:
                best = cols.copy()
            return
        cands = []
        seen_open: set[int] = set()
        seen_closed: set[int] = set()
        for v in range(n):
            if used >> v & 1:
                continue
            row = adj[v]
            closed = row | (1 << v)
            if row in seen_open or closed in seen_closed:
                continue
            seen_open.add(row)
            seen_closed.add(closed)
            code = 0
            for u in perm:
                code = (code << 1) | (row >> u & 1)
            cands.append((code, v))
        cands.sort()
        for code, v in cands:
            if best is not None:
                tight = True
                for i in range(m):
                    if cols[i] != best[i]:
                        tight = False
                        break
                if tight and code > best[m]:
                    break
            cols.append(code)
            place(perm + [v], used | (1 << v), cols)
            cols.pop()

    place([], 0, [])
    assert best is not None
    rows = [0] * n
    for m in range(1, n):
        for i in range(m):
            if best[m] >> (m - 1 - i) & 1:
                rows[i] |= 1 << m
                rows[m] |= 1 << i
    return to_graph6(Graph._from_rows(tuple(rows))).encode("ascii")


def to_dot(g: Graph, name: str = "G") -> str:
    """Graphviz source for the graph, isolated vertices included."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
