import random
from itertools import combinations

import pytest

from bruteforce import arcs_of, compose_pair_sets, transitive_closure_pairs
from digspec import perm, reldig
from digspec.reldig import Digraph


def random_digraph(rng, n, density=0.4):
    return Digraph.from_arcs(
        n, [(u, v) for u in range(n) for v in range(n) if rng.random() < density]
    )


class TestDgFormat:
    def test_parse_two_cycle(self):
        g = reldig.parse_dg("n 2\n0 1\n1 0")
        assert arcs_of(g) == {(0, 1), (1, 0)}

    def test_parse_empty_relation(self):
        g = reldig.parse_dg("n 1")
        assert g.n == 1 and g.arc_count() == 0

    def test_round_trip_fixtures(self):
        rng = random.Random(5)
        fixtures = [
            reldig.complete(4),
            reldig.diagonal(3),
            reldig.kneser(5, 2),
            reldig.delta_circulant(7, 2, 3),
            random_digraph(rng, 6),
        ]
        for g in fixtures:
            assert reldig.parse_dg(reldig.emit_dg(g)) == g

    def test_emit_is_sorted_and_normalizing(self):
        text = "n 3\n2 1\n0 2\n0 1\n"
        g = reldig.parse_dg(text)
        assert reldig.emit_dg(g) == "n 3\n0 1\n0 2\n2 1\n"

    def test_duplicate_arc_warns_but_parses(self):
        with pytest.warns(UserWarning):
            g = reldig.parse_dg("n 2\n0 1\n0 1\n")
        assert arcs_of(g) == {(0, 1)}

    def test_errors(self):
        with pytest.raises(ValueError):
            reldig.parse_dg("0 1\n")
        with pytest.raises(ValueError):
            reldig.parse_dg("n 2\n0 2\n")
        with pytest.raises(ValueError):
            reldig.parse_dg("n 2\n0\n")


class TestBasicRelations:
    def test_diagonal(self):
        assert arcs_of(reldig.diagonal(3)) == {(0, 0), (1, 1), (2, 2)}

    def test_complete_two(self):
        assert arcs_of(reldig.complete(2)) == {(0, 1), (1, 0)}

    def test_partition_of_full(self):
        for n in (1, 2, 5, 9):
            diag, comp = reldig.diagonal(n), reldig.complete(n)
            assert reldig.union(diag, comp) == reldig.full(n)
            assert all(a & b == 0 for a, b in zip(diag.rows, comp.rows))

    def test_inverse(self):
        g = Digraph.from_arcs(2, [(0, 1)])
        assert arcs_of(reldig.inverse_relation(g)) == {(1, 0)}
        sym = reldig.complete(4)
        assert reldig.inverse_relation(sym) == sym
        rng = random.Random(11)
        for _ in range(10):
            g = random_digraph(rng, 6)
            assert reldig.inverse_relation(reldig.inverse_relation(g)) == g


class TestComposition:
    def test_identity_of_composition(self):
        rng = random.Random(13)
        for _ in range(10):
            g = random_digraph(rng, 5)
            assert reldig.compose_relations(g, reldig.diagonal(5)) == g
            assert reldig.compose_relations(reldig.diagonal(5), g) == g

    def test_delta_shift(self):
        d = reldig.delta_circulant(5, 0, 1)
        assert reldig.compose_relations(d, d) == reldig.delta_circulant(5, 1, 1)

    def test_matches_pair_arithmetic(self):
        rng = random.Random(17)
        for _ in range(20):
            n = rng.randint(1, 7)
            g, h = random_digraph(rng, n), random_digraph(rng, n)
            expect = compose_pair_sets(arcs_of(g), arcs_of(h))
            assert arcs_of(reldig.compose_relations(g, h)) == expect

    def test_contravariance(self):
        rng = random.Random(19)
        for _ in range(10):
            n = rng.randint(2, 6)
            g, h = random_digraph(rng, n), random_digraph(rng, n)
            left = reldig.inverse_relation(reldig.compose_relations(g, h))
            right = reldig.compose_relations(
                reldig.inverse_relation(h), reldig.inverse_relation(g)
            )
            assert left == right

    def test_associativity(self):
        rng = random.Random(23)
        for _ in range(15):
            n = rng.randint(1, 8)
            a, b, c = (random_digraph(rng, n) for _ in range(3))
            assert reldig.compose_relations(reldig.compose_relations(a, b), c) == (
                reldig.compose_relations(a, reldig.compose_relations(b, c))
            )

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            reldig.compose_relations(reldig.full(2), reldig.full(3))


class TestTransitiveClosure:
    def test_chain(self):
        g = Digraph.from_arcs(3, [(0, 1), (1, 2)])
        assert arcs_of(reldig.transitive_closure(g)) == {(0, 1), (1, 2), (0, 2)}

    def test_directed_cycle_closes_to_full(self):
        assert reldig.transitive_closure(reldig.delta_circulant(5, 0, 1)) == reldig.full(5)

    def test_fixpoint_and_pair_oracle(self):
        rng = random.Random(29)
        for _ in range(20):
            n = rng.randint(1, 7)
            g = random_digraph(rng, n, density=0.3)
            closed = reldig.transitive_closure(g)
            assert arcs_of(closed) == transitive_closure_pairs(arcs_of(g), n)
            assert reldig.transitive_closure(closed) == closed
            assert reldig.is_transitive_relation(closed)

    def test_monotone(self):
        rng = random.Random(31)
        for _ in range(10):
            n = rng.randint(2, 6)
            g = random_digraph(rng, n, density=0.25)
            h = reldig.union(g, random_digraph(rng, n, density=0.25))
            assert reldig.is_subrelation(
                reldig.transitive_closure(g), reldig.transitive_closure(h)
            )


class TestSetOps:
    def test_complement_of_complete(self):
        for n in (1, 3, 6):
            assert reldig.complement(reldig.complete(n)) == reldig.diagonal(n)

    def test_full_is_transitive(self):
        assert reldig.is_transitive_relation(reldig.full(4))

    def test_induced_subgraph(self):
        assert reldig.induced_subgraph(reldig.complete(4), {1, 3}) == reldig.complete(2)
        with pytest.raises(ValueError):
            reldig.induced_subgraph(reldig.complete(4), set())

    def test_induced_relabels_in_sorted_order(self):
        g = Digraph.from_arcs(5, [(4, 1), (1, 2), (2, 4)])
        sub = reldig.induced_subgraph(g, {1, 2, 4})
        assert arcs_of(sub) == {(2, 0), (0, 1), (1, 2)}

    def test_is_symmetric(self):
        assert reldig.is_symmetric(reldig.kneser(5, 2))
        assert not reldig.is_symmetric(reldig.delta_circulant(5, 0, 1))


class TestValencyProfile:
    def test_complete(self):
        assert reldig.valency_profile(reldig.complete(5)) == (True, 4)

    def test_irregular(self):
        assert reldig.valency_profile(Digraph.from_arcs(2, [(0, 1)])) == (False, None)

    def test_circulants_regular(self):
        assert reldig.valency_profile(reldig.delta_circulant(7, 2, 3)) == (True, 3)


class TestDeltaCirculant:
    def test_directed_cycle(self):
        g = reldig.delta_circulant(5, 0, 1)
        assert arcs_of(g) == {(u, (u + 1) % 5) for u in range(5)}

    def test_empty_connection(self):
        assert reldig.delta_circulant(7, 3, 0).arc_count() == 0

    def test_wrap_to_diagonal(self):
        assert reldig.delta_circulant(5, 4, 1) == reldig.diagonal(5)

    def test_regular_with_rotation_symmetry(self):
        from digspec import aut

        for (p, x, d) in ((5, 2, 2), (7, 0, 3), (11, 9, 4)):
            g = reldig.delta_circulant(p, x, d)
            assert reldig.valency_profile(g) == (True, d)
            rotation = perm.Permutation([(i + 1) % p for i in range(p)])
            assert perm.contains(aut.automorphism_group(g), rotation)

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            reldig.delta_circulant(6, 0, 1)
        with pytest.raises(ValueError):
            reldig.delta_circulant(5, 0, 6)


class TestNamedGraphs:
    def test_petersen_shape(self, petersen):
        assert petersen.n == 10
        assert reldig.valency_profile(petersen) == (True, 3)
        assert reldig.is_symmetric(petersen)

    def test_petersen_girth_five(self, petersen):
        # no triangles and no 4-cycles via common-neighbour counts, but
        # an odd closed walk of length 5 exists
        nbrs = [set(petersen.neighbourhood(v)) for v in range(10)]
        for u in range(10):
            for v in range(10):
                if u == v:
                    continue
                common = len(nbrs[u] & nbrs[v])
                assert common <= 1
                if petersen.has_arc(u, v):
                    assert common == 0
        walks = {(v, v): 1 for v in range(10)}
        power = {
            (u, v): 1 if petersen.has_arc(u, v) else 0
            for u in range(10)
            for v in range(10)
        }
        mat = power
        for _ in range(4):
            mat = {
                (u, v): sum(mat[(u, w)] * power[(w, v)] for w in range(10))
                for u in range(10)
                for v in range(10)
            }
        assert any(mat[(v, v)] > 0 for v in range(10))

    def test_petersen_vertex_transitive(self, petersen):
        from digspec import aut

        assert aut.is_vertex_transitive(petersen)

    def test_kneser_6_2_parameters(self):
        g = reldig.kneser(6, 2, loops=True)
        assert g.n == 15
        assert reldig.valency_profile(g) == (True, 7)

    def test_kneser_vertex_order_is_lexicographic(self):
        g = reldig.kneser(5, 2)
        subsets = list(combinations(range(5), 2))
        assert subsets == sorted(subsets)
        # vertex 0 = {0,1}; its neighbours are the disjoint pairs {2,3},{2,4},{3,4}
        expected = [i for i, s in enumerate(subsets) if not set(s) & {0, 1}]
        assert g.neighbourhood(0) == expected

    def test_clebsch_strongly_regular(self):
        g = reldig.clebsch()
        assert g.n == 16
        assert reldig.valency_profile(g) == (True, 5)
        nbrs = [set(g.neighbourhood(v)) for v in range(16)]
        for u in range(16):
            for v in range(16):
                if u == v:
                    continue
                common = len(nbrs[u] & nbrs[v])
                assert common == (0 if g.has_arc(u, v) else 2)

    def test_loop_variants(self):
        assert reldig.valency_profile(reldig.clebsch(loops=True)) == (True, 6)
        assert reldig.valency_profile(reldig.hamming_k4()) == (True, 6)
        assert reldig.valency_profile(reldig.hamming_k4(loops=True)) == (True, 7)

    def test_hamming_adjacency(self):
        g = reldig.hamming_k4()
        assert g.has_arc(0, 1) and g.has_arc(0, 4)  # same row / same column
        assert not g.has_arc(0, 5)  # differs in both coordinates
        assert not g.has_arc(0, 0)

    def test_kneser_validation(self):
        with pytest.raises(ValueError):
            reldig.kneser(3, 2)


class TestIsomorphism:
    def test_self_identity(self):
        g = reldig.kneser(5, 2)
        ok, witness = reldig.are_isomorphic(g, g)
        assert ok and witness == perm.identity(10)

    def test_reversed_cycle_multiplier(self):
        d = reldig.delta_circulant(5, 0, 1)
        rev = reldig.inverse_relation(d)
        # explicit multiplier u -> -u carries the cycle onto its reverse
        negation = perm.Permutation([(-u) % 5 for u in range(5)])
        from digspec.reldig import _preserves

        assert _preserves(d, rev, negation.images)
        ok, witness = reldig.are_isomorphic(d, rev)
        assert ok
        assert _preserves(d, rev, witness.images)

    def test_petersen_is_no_circulant(self, petersen):
        # exhaustive check at order 10: no 3-element connection set works
        from itertools import combinations as comb

        for conn in comb(range(1, 10), 3):
            ok, _ = reldig.are_isomorphic(petersen, reldig.cyclic_cayley(10, conn))
            assert not ok

    def test_distinguishes_loops(self):
        ok, _ = reldig.are_isomorphic(reldig.hamming_k4(), reldig.hamming_k4(loops=True))
        assert not ok

    def test_finds_relabelling(self):
        rng = random.Random(37)
        for _ in range(10):
            n = rng.randint(2, 8)
            g = random_digraph(rng, n)
            images = list(range(n))
            rng.shuffle(images)
            h = Digraph.from_arcs(n, [(images[u], images[v]) for u, v in g.arcs()])
            ok, witness = reldig.are_isomorphic(g, h)
            assert ok
            from digspec.reldig import _preserves

            assert _preserves(g, h, witness.images)
