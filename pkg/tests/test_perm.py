import random

import pytest

from bruteforce import group_closure
from digspec import perm
from digspec.perm import PermGroup, Permutation


def cyc(n, *cycles):
    return perm.from_cycles(n, *cycles)


class TestPermutation:
    def test_validation(self):
        with pytest.raises(ValueError):
            Permutation([0, 0, 1])
        with pytest.raises(ValueError):
            Permutation([0, 2])
        with pytest.raises(ValueError):
            Permutation([])

    def test_compose_identity(self):
        p = cyc(5, (0, 1, 2, 3, 4))
        assert perm.compose(perm.identity(5), p) == p
        assert perm.compose(p, perm.identity(5)) == p

    def test_compose_inverse(self):
        p = cyc(5, (0, 1, 2, 3, 4))
        assert perm.compose(p, perm.inverse(p)) == perm.identity(5)
        assert perm.compose(perm.inverse(p), p) == perm.identity(5)

    def test_compose_cycle_squared(self):
        # direct table computation: the 5-cycle squared sends i to i+2
        p = cyc(5, (0, 1, 2, 3, 4))
        assert perm.compose(p, p).images == tuple((i + 2) % 5 for i in range(5))

    def test_compose_degree_mismatch(self):
        with pytest.raises(ValueError):
            perm.compose(perm.identity(3), perm.identity(4))

    def test_compose_applies_left_first(self):
        p = cyc(3, (0, 1))
        q = cyc(3, (1, 2))
        assert perm.compose(p, q).images == (2, 0, 1)


class TestOrbit:
    def test_cyclic_regular(self):
        assert perm.orbit(perm.cyclic_group(5), 0) == {0, 1, 2, 3, 4}

    def test_fixed_point(self):
        G = PermGroup([cyc(4, (0, 1))])
        assert perm.orbit(G, 2) == {2}

    def test_klein_closure(self):
        G = PermGroup([cyc(4, (0, 1), (2, 3)), cyc(4, (0, 2), (1, 3))])
        assert perm.orbit(G, 0) == {0, 1, 2, 3}

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            perm.orbit(perm.cyclic_group(3), 3)

    def test_orbit_invariant_under_generators(self):
        rng = random.Random(97)
        for _ in range(25):
            n = rng.randint(2, 8)
            gens = []
            for _ in range(rng.randint(1, 3)):
                images = list(range(n))
                rng.shuffle(images)
                gens.append(Permutation(images))
            G = PermGroup(gens)
            for alpha in range(n):
                orb = perm.orbit(G, alpha)
                for g in gens:
                    assert {g(x) for x in orb} == orb


class TestOrderAndMembership:
    def test_symmetric_degree_5(self):
        assert perm.group_order(perm.symmetric_group(5)) == 120

    def test_cyclic(self):
        assert perm.group_order(perm.cyclic_group(5)) == 5

    def test_dihedral_matches_closure(self):
        G = perm.dihedral_group(5)
        assert perm.group_order(G) == len(group_closure(g.images for g in G.generators)) == 10

    def test_contains_identity(self):
        for G in (perm.cyclic_group(4), perm.symmetric_group(5)):
            assert perm.contains(G, perm.identity(G.n))

    def test_cyclic_misses_transposition(self):
        assert not perm.contains(perm.cyclic_group(5), cyc(5, (0, 1)))

    def test_dihedral_contains_reflection(self):
        G = perm.dihedral_group(5)
        candidate = cyc(5, (0, 4), (1, 3))
        assert candidate.images in group_closure(g.images for g in G.generators)
        assert perm.contains(G, candidate)

    def test_contains_degree_mismatch(self):
        with pytest.raises(ValueError):
            perm.contains(perm.cyclic_group(5), perm.identity(4))

    def test_order_matches_closure_on_random_groups(self):
        rng = random.Random(1729)
        for _ in range(30):
            n = rng.randint(2, 7)
            gens = []
            for _ in range(rng.randint(1, 3)):
                images = list(range(n))
                rng.shuffle(images)
                gens.append(Permutation(images))
            G = PermGroup(gens)
            closure = group_closure(g.images for g in gens)
            assert perm.group_order(G) == len(closure)
            # membership agrees with the closure for a sample of maps
            for _ in range(10):
                images = list(range(n))
                rng.shuffle(images)
                assert perm.contains(G, Permutation(images)) == (tuple(images) in closure)


class TestTransitivity:
    def test_cyclic_transitive(self):
        assert perm.is_transitive(perm.cyclic_group(5))

    def test_small_support_not_transitive(self):
        assert not perm.is_transitive(PermGroup([cyc(3, (0, 1))]))

    def test_klein_transitive(self):
        G = PermGroup([cyc(4, (0, 1), (2, 3)), cyc(4, (0, 2), (1, 3))])
        assert perm.is_transitive(G)


class TestBlocksAndPrimitivity:
    def test_minimal_block_c4(self):
        G = perm.cyclic_group(4)
        assert perm.minimal_block(G, 0, 2) == {0, 2}
        assert perm.minimal_block(G, 0, 1) == {0, 1, 2, 3}

    def test_minimal_block_symmetric(self):
        G = perm.symmetric_group(5)
        for beta in range(1, 5):
            assert perm.minimal_block(G, 0, beta) == {0, 1, 2, 3, 4}

    def test_minimal_block_prime_cycle(self):
        G = perm.cyclic_group(5)
        assert perm.minimal_block(G, 0, 1) == {0, 1, 2, 3, 4}

    def test_minimal_block_preconditions(self):
        with pytest.raises(ValueError):
            perm.minimal_block(perm.cyclic_group(4), 1, 1)
        with pytest.raises(ValueError):
            perm.minimal_block(PermGroup([cyc(4, (0, 1))]), 0, 1)

    def test_block_system_c4(self):
        system = perm.block_system(perm.cyclic_group(4), 0, 2)
        assert system.blocks == ((0, 2), (1, 3))

    def test_primitivity_basics(self):
        assert not perm.is_primitive(perm.cyclic_group(4))
        assert perm.is_primitive(perm.cyclic_group(5))

    def test_trivial_group_on_two_points(self):
        assert perm.is_primitive(PermGroup([perm.identity(2)]))

    def test_intransitive_of_degree_three_is_imprimitive(self):
        assert not perm.is_primitive(PermGroup([cyc(3, (0, 1))]))
        assert not perm.is_primitive(PermGroup([perm.identity(3)]))

    def test_primitive_implies_transitive_beyond_degree_two(self):
        groups = [
            perm.cyclic_group(4),
            perm.cyclic_group(7),
            perm.dihedral_group(6),
            perm.symmetric_group(4),
            PermGroup([cyc(4, (0, 1))]),
        ]
        for G in groups:
            if perm.is_primitive(G) and G.n >= 3:
                assert perm.is_transitive(G)

    def test_transitive_prime_degree_is_primitive(self):
        for p in (2, 3, 5, 7, 11, 13):
            assert perm.is_primitive(perm.cyclic_group(p))
            assert perm.is_primitive(perm.dihedral_group(p))


class TestFamilies:
    def test_orders(self):
        assert perm.group_order(perm.alternating_group(5)) == 60
        assert perm.group_order(perm.alternating_group(6)) == 360
        assert perm.group_order(perm.symmetric_group(6)) == 720
        assert perm.group_order(perm.affine_group(5)) == 20
        assert perm.group_order(perm.affine_group(7)) == 42

    def test_affine_is_primitive(self):
        assert perm.is_primitive(perm.affine_group(5))
        assert perm.is_primitive(perm.affine_group(7))

    def test_affine_rejects_composites(self):
        with pytest.raises(ValueError):
            perm.affine_group(6)


class TestGrpFormat:
    def test_round_trip(self):
        G = perm.dihedral_group(5)
        again = perm.parse_grp(perm.emit_grp(G))
        assert [g.images for g in again.generators] == [g.images for g in G.generators]

    def test_comments_and_blanks(self):
        text = "# a comment\nn 3\n\n1 2 0  # rotation\n"
        G = perm.parse_grp(text)
        assert G.n == 3
        assert G.generators[0].images == (1, 2, 0)

    def test_errors(self):
        with pytest.raises(ValueError):
            perm.parse_grp("1 2 0\n")
        with pytest.raises(ValueError):
            perm.parse_grp("n 3\n1 2\n")
        with pytest.raises(ValueError):
            perm.parse_grp("n 3\n")
