"""Independent brute-force oracles used by the tests.

Everything here works on plain tuples, sets of pairs, and dicts, on
purpose: these are the reference computations the library is checked
against, so they share no representation or code path with the bit-packed
implementations under test.
"""

from __future__ import annotations

from itertools import permutations


def group_closure(image_tuples) -> set[tuple]:
    """All elements of the group generated by the given image tuples."""
    gens = [tuple(g) for g in image_tuples]
    seen = set(gens)
    frontier = list(seen)
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                b = tuple(g[v] for v in a)
                if b not in seen:
                    seen.add(b)
                    new.append(b)
        frontier = new
    n = len(gens[0])
    seen.add(tuple(range(n)))
    return seen


def semigroup_closure_pairs(image_tuples) -> set[tuple]:
    """Closure of arbitrary self-maps under composition (words applied
    left to right), as image tuples."""
    gens = [tuple(g) for g in image_tuples]
    seen = set(gens)
    frontier = list(seen)
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                b = tuple(g[v] for v in a)
                if b not in seen:
                    seen.add(b)
                    new.append(b)
        frontier = new
    return seen


def arcs_of(dg) -> set[tuple[int, int]]:
    return set(dg.arcs())


def compose_pair_sets(a: set, b: set) -> set:
    return {(x, w) for (x, y) in a for (z, w) in b if y == z}


def transitive_closure_pairs(arcs: set, n: int) -> set:
    closed = set(arcs)
    while True:
        extra = compose_pair_sets(closed, closed) - closed
        if not extra:
            return closed
        closed |= extra


def automorphism_count(dg) -> int:
    """|Aut| by scanning every permutation; set-of-pairs arithmetic only."""
    arcs = arcs_of(dg)
    n = dg.n
    count = 0
    for p in permutations(range(n)):
        if all((p[u], p[v]) in arcs for (u, v) in arcs):
            # a bijection mapping arcs into arcs maps the arc set onto itself
            count += 1
    return count


def neighbour_sets(dg) -> list[set[int]]:
    return [set(dg.neighbourhood(v)) for v in range(dg.n)]


def intersection_levels(dg) -> dict[int, set[tuple[int, int]]]:
    """Pairs grouped by i = d - |shared neighbours|, via plain sets."""
    nbrs = neighbour_sets(dg)
    d = len(nbrs[0])
    assert all(len(s) == d for s in nbrs)
    levels: dict[int, set] = {}
    for u in range(dg.n):
        for v in range(dg.n):
            i = d - len(nbrs[u] & nbrs[v])
            levels.setdefault(i, set()).add((u, v))
    return levels
