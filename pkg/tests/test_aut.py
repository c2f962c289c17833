import random

from bruteforce import automorphism_count
from digspec import aut, perm, reldig
from digspec.reldig import Digraph


def random_digraph(rng, n, density=0.4):
    return Digraph.from_arcs(
        n, [(u, v) for u in range(n) for v in range(n) if rng.random() < density]
    )


class TestAutomorphismGroup:
    def test_directed_cycle_rotations_only(self):
        g = reldig.delta_circulant(5, 0, 1)
        G = aut.automorphism_group(g)
        assert perm.group_order(G) == automorphism_count(g) == 5

    def test_complete_graph_all_permutations(self):
        import math

        for n in (2, 4, 6):
            assert perm.group_order(aut.automorphism_group(reldig.complete(n))) == math.factorial(n)

    def test_petersen_order(self, petersen):
        assert perm.group_order(aut.automorphism_group(petersen)) == 120

    def test_generators_preserve_arcs(self):
        rng = random.Random(41)
        for _ in range(15):
            g = random_digraph(rng, rng.randint(2, 7))
            for gen in aut.automorphism_group(g).generators:
                arcs = set(g.arcs())
                assert {(gen(u), gen(v)) for u, v in arcs} == arcs

    def test_matches_brute_force(self):
        rng = random.Random(43)
        for _ in range(20):
            g = random_digraph(rng, rng.randint(2, 6))
            assert perm.group_order(aut.automorphism_group(g)) == automorphism_count(g)

    def test_invariant_under_inverse_and_complement(self):
        rng = random.Random(47)
        for _ in range(10):
            g = random_digraph(rng, rng.randint(2, 6))
            G = aut.automorphism_group(g)
            for variant in (reldig.inverse_relation(g), reldig.complement(g)):
                H = aut.automorphism_group(variant)
                assert perm.group_order(G) == perm.group_order(H)
                assert all(perm.contains(H, gen) for gen in G.generators)
                assert all(perm.contains(G, gen) for gen in H.generators)


class TestVertexTransitivity:
    def test_complete(self):
        assert aut.is_vertex_transitive(reldig.complete(4))

    def test_single_arc(self):
        assert not aut.is_vertex_transitive(Digraph.from_arcs(3, [(0, 1)]))

    def test_hamming_product_symmetry(self):
        assert aut.is_vertex_transitive(reldig.hamming_k4())


class TestVertexPrimitivity:
    def test_prime_circulants(self):
        for (p, x, d) in ((3, 0, 1), (5, 1, 2), (7, 3, 4), (11, 0, 5)):
            assert aut.is_vertex_primitive(reldig.delta_circulant(p, x, d))

    def test_four_cycle_blocks(self):
        square = Digraph.from_arcs(4, [(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2), (3, 0), (0, 3)])
        assert not aut.is_vertex_primitive(square)

    def test_petersen(self, petersen):
        assert aut.is_vertex_primitive(petersen)
