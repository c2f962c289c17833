"""Automorphism groups of digraphs, vertex-transitivity, vertex-primitivity."""

from __future__ import annotations

from digspec import _refine, perm
from digspec.perm import PermGroup, Permutation
from digspec.reldig import Digraph


def automorphism_group(g: Digraph) -> PermGroup:
    """The group of permutations of the vertices preserving the arc set.

    Partition-refinement backtracking; generators are the verified leaf
    candidates of the search.  The PermGroup canonicalizes order and
    membership through its stabilizer chain.
    """
    gens = _refine.automorphism_generators(g)
    if not gens:
        return PermGroup([perm.identity(g.n)])
    return PermGroup([Permutation(images) for images in gens])


def is_vertex_transitive(g: Digraph) -> bool:
    return perm.is_transitive(automorphism_group(g))


def is_vertex_primitive(g: Digraph) -> bool:
    """True iff the automorphism group acts primitively on the vertices."""
    return perm.is_primitive(automorphism_group(g))
