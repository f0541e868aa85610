import random
from itertools import combinations

import networkx as nx
import pytest

from outerpath import (
    Graph,
    OuterEmbedding,
    UnsupportedSizeError,
    is_outerplanar,
    is_two_connected,
    maximal_completion,
    outer_cycle,
    verify_embedding,
)

from helpers import outerplanar_by_order_search, random_graph

K4 = Graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
K23 = Graph(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def c6_chord():
    return cycle(6).with_edges([(0, 3)])


def apex_planarity_oracle(g: Graph) -> bool:
    """g is outerplanar iff g plus a vertex adjacent to everything is planar."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n + 1))
    h.add_edges_from(g.edges())
    h.add_edges_from((g.n, v) for v in range(g.n))
    return nx.check_planarity(h)[0]


class TestIsOuterplanar:
    def test_forbidden_patterns(self):
        assert not is_outerplanar(K4)
        assert not is_outerplanar(K23)

    def test_c6_with_long_chord(self):
        assert is_outerplanar(c6_chord())

    def test_edge_bound_fast_reject(self):
        g = Graph(6, [(a, b) for a in range(6) for b in range(a + 1, 6)])
        assert not is_outerplanar(g)

    def test_small_graphs_always(self):
        assert is_outerplanar(Graph(1))
        assert is_outerplanar(Graph(3, [(0, 1), (1, 2), (0, 2)]))

    def test_size_cap(self):
        with pytest.raises(UnsupportedSizeError):
            is_outerplanar(Graph(17))

    def test_exhaustive_agreement_n5(self):
        # all labeled graphs on 5 vertices against the order-search oracle
        pairs = list(combinations(range(5), 2))
        for mask in range(1 << 10):
            g = Graph(5, [pairs[i] for i in range(10) if mask >> i & 1])
            assert is_outerplanar(g) == outerplanar_by_order_search(g)

    def test_sampled_agreement_with_order_search_n6(self):
        rng = random.Random(2024)
        for _ in range(150):
            g = random_graph(6, rng.uniform(0.2, 0.8), rng)
            assert is_outerplanar(g) == outerplanar_by_order_search(g)

    def test_sampled_agreement_with_apex_planarity(self):
        rng = random.Random(625)
        for _ in range(300):
            n = rng.randint(4, 12)
            g = random_graph(n, rng.uniform(0.1, 0.6), rng)
            assert is_outerplanar(g) == apex_planarity_oracle(g)


class TestVerifyEmbedding:
    def test_c6_chord_natural_order(self):
        assert verify_embedding(c6_chord(), OuterEmbedding.identity(6))

    def test_k4_crosses_in_every_order(self):
        from itertools import permutations

        for perm in permutations(range(4)):
            assert not verify_embedding(K4, OuterEmbedding(perm))

    def test_fan_hexagon(self):
        g = cycle(6).with_edges([(0, 2), (0, 3), (0, 4)])
        assert verify_embedding(g, OuterEmbedding.identity(6))

    def test_crossing_detected(self):
        g = cycle(6).with_edges([(0, 3), (1, 4)])
        assert not verify_embedding(g, OuterEmbedding.identity(6))

    def test_non_permutation_rejected(self):
        with pytest.raises(ValueError):
            verify_embedding(cycle(4), OuterEmbedding((0, 1, 2, 2)))

    def test_order_string_round_trip(self):
        emb = OuterEmbedding.from_string("2,0,1")
        assert emb.order == (2, 0, 1)
        assert emb.to_string() == "2,0,1"


class TestOuterCycle:
    def test_c6_chord_recovers_cycle_order(self):
        emb = outer_cycle(c6_chord())
        assert emb.order == tuple(range(6))

    def test_c4_is_its_own_order(self):
        assert outer_cycle(cycle(4)).order == (0, 1, 2, 3)

    def test_fan_hexagon(self):
        g = cycle(6).with_edges([(0, 2), (0, 3), (0, 4)])
        emb = outer_cycle(g)
        assert emb.order == tuple(range(6))
        assert verify_embedding(g, emb)

    def test_rejects_non_two_connected(self):
        with pytest.raises(ValueError):
            outer_cycle(Graph(4, [(0, 1), (1, 2), (2, 3)]))

    def test_rejects_k4(self):
        with pytest.raises(ValueError):
            outer_cycle(K4)

    def test_unique_hamiltonian_cycle_exhaustive(self):
        # 2-connected outerplanar graphs on n <= 8: exactly one cycle up to
        # rotation and reflection, i.e. two directed traversals from a
        # fixed start
        from itertools import permutations

        from outerpath import triangulation_chord_sets

        def directed_ham_cycles(g):
            found = 0
            for perm in permutations(range(1, g.n)):
                order = (0,) + perm
                if all(g.has_edge(order[i], order[(i + 1) % g.n]) for i in range(g.n)):
                    found += 1
            return found

        for n in (5, 6, 7, 8):
            cyc = [(i, (i + 1) % n) for i in range(n)]
            seen = set()
            for chords in triangulation_chord_sets(n):
                for sub in range(1 << len(chords)):
                    key = tuple(chords[i] for i in range(len(chords)) if sub >> i & 1)
                    if key in seen:
                        continue
                    seen.add(key)
                    g = Graph(n, cyc + list(key))
                    assert is_two_connected(g)
                    assert directed_ham_cycles(g) == 2


class TestMaximalCompletion:
    def test_c4_gets_one_chord(self):
        g = maximal_completion(cycle(4), OuterEmbedding.identity(4))
        assert g.edge_count() == 5

    def test_hexagon_has_nine_edges_and_triangular_faces(self):
        from outerpath import weak_dual

        g = maximal_completion(cycle(6), OuterEmbedding.identity(6))
        assert g.edge_count() == 9
        dual = weak_dual(g, OuterEmbedding.identity(6))
        assert all(len(face) == 3 for face in dual.nodes)

    def test_fixed_point_and_idempotence(self):
        rng = random.Random(31)
        from outerpath import random_outerplanar

        for _ in range(100):
            g = random_outerplanar(rng.randint(3, 12), rng)
            emb = OuterEmbedding.identity(g.n)
            done = maximal_completion(g, emb)
            assert done.edge_count() == 2 * g.n - 3
            assert verify_embedding(done, emb)
            assert maximal_completion(done, emb) == done
            # contains g
            assert all(done.has_edge(u, v) for u, v in g.edges())

    def test_embedding_agnostic_edge_bound(self):
        rng = random.Random(77)
        from outerpath import random_outerplanar

        for _ in range(200):
            g = random_outerplanar(rng.randint(3, 14), rng)
            assert g.edge_count() <= 2 * g.n - 3

    def test_invalid_embedding_rejected(self):
        g = cycle(6).with_edges([(0, 3)])
        bad = OuterEmbedding((0, 3, 1, 4, 2, 5))
        with pytest.raises(ValueError):
            maximal_completion(g, bad)
