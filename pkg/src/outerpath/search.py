"""Exhaustive extremal search over outerplanar graphs.

Every maximal outerplanar graph on n >= 3 vertices is a triangulated
convex polygon, so every outerplanar graph (up to relabeling the outer
cycle to the identity) is an edge subset of some polygon triangulation.
The searches therefore enumerate triangulations (Catalan(n-2) of them)
and, per triangulation, sweep all 2^(2n-3) edge subsets at once with
numpy:  a candidate vertex sequence that is a path of the triangulation
is an induced path of the subset graph iff its consecutive pairs are all
present and its other triangulation pairs are all absent, which is two
mask comparisons against the whole subset range.

Work is split across processes by contiguous triangulation blocks; the
reduction (max, then union of canonical witness forms) is associative, so
reports are byte-identical for any worker count.
"""

from __future__ import annotations

import multiprocessing
import random
import time
from dataclasses import dataclass
from math import comb
from typing import Iterator

import numpy as np

from .constructions import fib
from .graph import Graph, UnsupportedSizeError, canonical_form

TRIANGULATION_CAP = 16
SEARCH_CAP = 8
ENDPOINT_LEN_CAP = 8


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def _triangulation_chords(lo: int, hi: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Chord sets triangulating the polygon on positions lo..hi over base (lo, hi)."""
    if hi - lo < 2:
        yield ()
        return
    for c in range(lo + 1, hi):
        extra = []
        if c - lo >= 2:
            extra.append((lo, c))
        if hi - c >= 2:
            extra.append((c, hi))
        extra = tuple(extra)
        for left in _triangulation_chords(lo, c):
            for right in _triangulation_chords(c, hi):
                yield left + extra + right


def triangulation_chord_sets(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    if not 3 <= n <= TRIANGULATION_CAP:
        raise ValueError(f"triangulation enumeration supports 3 <= n <= {TRIANGULATION_CAP}")
    for chords in _triangulation_chords(0, n - 1):
        yield tuple(sorted(chords))


def _cycle_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]


def enumerate_triangulations(n: int) -> Iterator[Graph]:
    """All triangulations of the convex n-gon with outer cycle 0..n-1."""
    cycle = _cycle_edges(n)
    for chords in triangulation_chord_sets(n):
        yield Graph(n, cycle + list(chords))


def enumerate_outerplanar(n: int, dedup: bool = False) -> Iterator[Graph]:
    """Every edge subset of every triangulation; with ``dedup``, one graph per class."""
    if not 3 <= n <= TRIANGULATION_CAP:
        raise ValueError(f"enumeration supports 3 <= n <= {TRIANGULATION_CAP}")
    if dedup and n > SEARCH_CAP:
        raise UnsupportedSizeError(f"dedup enumeration is capped at n <= {SEARCH_CAP}")
    seen: set[bytes] = set()
    for chords in triangulation_chord_sets(n):
        edges = sorted(_cycle_edges(n) + list(chords))
        for subset in range(1 << len(edges)):
            g = Graph(n, [edges[i] for i in range(len(edges)) if subset >> i & 1])
            if dedup:
                key = canonical_form(g)
                if key in seen:
                    continue
                seen.add(key)
            yield g


def random_outerplanar(n: int, rng: random.Random) -> Graph:
    """Random edge subset of a random triangulation of the n-gon."""
    if not 3 <= n <= TRIANGULATION_CAP:
        raise ValueError(f"random generation supports 3 <= n <= {TRIANGULATION_CAP}")

    def tri(lo: int, hi: int) -> list[tuple[int, int]]:
        if hi - lo < 2:
            return []
        c = rng.randint(lo + 1, hi - 1)
        out = []
        if c - lo >= 2:
            out.append((lo, c))
        if hi - c >= 2:
            out.append((c, hi))
        return out + tri(lo, c) + tri(c, hi)

    keep = rng.uniform(0.3, 1.0)
    edges = _cycle_edges(n) + tri(0, n - 1)
    return Graph(n, [e for e in edges if rng.random() < keep])


# -- per-triangulation subset sweep -------------------------------------------


def _tri_edge_list(n: int, chords: tuple[tuple[int, int], ...]) -> list[tuple[int, int]]:
    return sorted(_cycle_edges(n) + list(chords))


def _path_candidates(
    n: int, edges: list[tuple[int, int]], min_len: int, max_len: int
) -> list[tuple[int, int, int, int, int]]:
    """Self-avoiding paths of the triangulation as (start, end, length, req, forb).

    ``req`` collects the edge-index bits of consecutive pairs, ``forb``
    those of non-consecutive pairs that are triangulation edges.  Paths
    are produced once each (start < end).
    """
    eidx: dict[tuple[int, int], int] = {e: i for i, e in enumerate(edges)}
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    out: list[tuple[int, int, int, int, int]] = []
    path: list[int] = []

    def bit(u: int, v: int) -> int:
        return 1 << eidx[(u, v) if u < v else (v, u)]

    def extend(u: int, pmask: int, req: int, forb: int) -> None:
        depth = len(path)
        m = adj[u] & ~pmask
        while m:
            low = m & -m
            w = low.bit_length() - 1
            m ^= low
            nreq = req | bit(u, w)
            nforb = forb
            for v in path[:-1]:
                if adj[v] >> w & 1:
                    nforb |= bit(v, w)
            if depth + 1 >= min_len and w > path[0]:
                out.append((path[0], w, depth + 1, nreq, nforb))
            if depth + 1 < max_len:
                path.append(w)
                extend(w, pmask | low, nreq, nforb)
                path.pop()

    for s in range(n):
        path[:] = [s]
        extend(s, 1 << s, 0, 0)
    return out


def _subset_counts(n: int, chords: tuple[tuple[int, int], ...], k: int) -> np.ndarray:
    """Induced k-path count for every edge subset of one triangulation."""
    edges = _tri_edge_list(n, chords)
    subs = np.arange(1 << len(edges), dtype=np.uint32)
    counts = np.zeros(len(subs), dtype=np.int32)
    for _, _, length, req, forb in _path_candidates(n, edges, k, k):
        if length != k:
            continue
        ok = (subs & req) == req
        if forb:
            ok &= (subs & forb) == 0
        counts += ok
    return counts


@dataclass(frozen=True)
class SearchReport:
    n: int
    k: int
    max_copies: int
    witnesses: tuple[str, ...]
    graphs_scanned: int
    triangulations: int
    elapsed: float

    def to_json_dict(self, include_witnesses: bool = True, timing: bool = False) -> dict:
        out: dict = {
            "schema": "outerpath/1",
            "n": self.n,
            "k": self.k,
            "max_copies": self.max_copies,
            "graphs_scanned": self.graphs_scanned,
            "triangulations": self.triangulations,
        }
        if include_witnesses:
            out["witnesses"] = list(self.witnesses)
        if timing:
            out["elapsed"] = self.elapsed
        return out


def _scan_chunk(args: tuple[int, int, list[tuple[tuple[int, int], ...]]]) -> tuple[int, set[str]]:
    n, k, chunk = args
    best = -1
    tied: list[tuple[tuple[tuple[int, int], ...], np.ndarray]] = []
    for chords in chunk:
        counts = _subset_counts(n, chords, k)
        local = int(counts.max())
        if local > best:
            best = local
            tied = []
        if local == best:
            tied.append((chords, np.flatnonzero(counts == best)))
    witnesses: set[str] = set()
    for chords, subset_ids in tied:
        edges = _tri_edge_list(n, chords)
        for sid in subset_ids:
            g = Graph(n, [edges[i] for i in range(len(edges)) if sid >> i & 1])
            witnesses.add(canonical_form(g).decode("ascii"))
    return best, witnesses


def _chunked(items: list, jobs: int) -> list[list]:
    jobs = max(1, min(jobs, len(items)))
    size = (len(items) + jobs - 1) // jobs
    return [items[i : i + size] for i in range(0, len(items), size)]


def _pool_map(fn, args_list: list, jobs: int) -> list:
    if jobs <= 1 or len(args_list) <= 1:
        return [fn(a) for a in args_list]
    with multiprocessing.Pool(min(jobs, len(args_list))) as pool:
        return pool.map(fn, args_list)


def extremal_value(n: int, k: int, jobs: int = 1) -> SearchReport:
    """Exact maximum induced k-path count over all n-vertex outerplanar graphs.

    Scans every edge subset of every triangulation; witnesses are the
    canonical forms (graph6) of all maximizing graphs.
    """
    if not 3 <= n <= SEARCH_CAP:
        raise UnsupportedSizeError(f"extremal search supports 3 <= n <= {SEARCH_CAP}")
    if not 2 <= k <= n:
        # k = 1 is degenerate: every n-vertex graph has exactly n copies
        raise ValueError(f"k must be in 2..{n}, got {k}")
    start = time.perf_counter()
    tris = list(triangulation_chord_sets(n))
    expected = catalan(n - 2)
    if len(tris) != expected:
        raise RuntimeError(f"triangulation count {len(tris)} != Catalan {expected}")
    results = _pool_map(_scan_chunk, [(n, k, c) for c in _chunked(tris, jobs)], jobs)
    best = max(r[0] for r in results)
    witnesses: set[str] = set()
    for local, wit in results:
        if local == best:
            witnesses |= wit
    return SearchReport(
        n=n,
        k=k,
        max_copies=best,
        witnesses=tuple(sorted(witnesses)),
        graphs_scanned=expected * (1 << (2 * n - 3)),
        triangulations=expected,
        elapsed=time.perf_counter() - start,
    )


# -- endpoint-pair census ------------------------------------------------------


def _census_chunk(args: tuple[int, int, list[tuple[tuple[int, int], ...]]]) -> np.ndarray:
    n, max_len, chunk = args
    maxima = np.zeros((n * n, max_len + 1), dtype=np.int32)
    for chords in chunk:
        edges = _tri_edge_list(n, chords)
        counts = np.zeros((n * n, max_len + 1, 1 << len(edges)), dtype=np.int16)
        subs = np.arange(1 << len(edges), dtype=np.uint32)
        for s, e, length, req, forb in _path_candidates(n, edges, 2, max_len):
            ok = (subs & req) == req
            if forb:
                ok &= (subs & forb) == 0
            counts[s * n + e, length] += ok
        np.maximum(maxima, counts.max(axis=2), out=maxima)
    return maxima


_census_cache: dict[int, np.ndarray] = {}


def endpoint_pair_maxima(n: int, jobs: int = 1) -> np.ndarray:
    """max over all outerplanar graphs and pairs x<y of the induced m-path
    count between x and y, indexed [x*n+y, m] for m <= min(n, 8)."""
    if not 3 <= n <= SEARCH_CAP:
        raise UnsupportedSizeError(f"endpoint census supports 3 <= n <= {SEARCH_CAP}")
    if n in _census_cache:
        return _census_cache[n]
    max_len = min(n, ENDPOINT_LEN_CAP)
    tris = list(triangulation_chord_sets(n))
    parts = _pool_map(_census_chunk, [(n, max_len, c) for c in _chunked(tris, jobs)], jobs)
    maxima = parts[0]
    for p in parts[1:]:
        np.maximum(maxima, p, out=maxima)
    _census_cache[n] = maxima
    return maxima


def verify_fib_bounds(n: int, k: int, jobs: int = 1) -> bool:
    """Endpoint counts within fib(k+1) everywhere, and the extremal value
    within fib(k+1) * C(n, 2)."""
    if not 1 <= k < n:
        raise ValueError(f"k must be in 1..{n - 1}, got {k}")
    maxima = endpoint_pair_maxima(n, jobs=jobs)
    if k + 1 <= min(n, ENDPOINT_LEN_CAP):
        if int(maxima[:, k + 1].max()) > fib(k + 1):
            return False
    report = extremal_value(n, k + 1, jobs=jobs)
    return report.max_copies <= fib(k + 1) * comb(n, 2)
