"""Partition refinement and backtracking searches over vertex maps.

Shared engine for digraph automorphism generators and isomorphism
witnesses.  An ordered partition is a list of sorted vertex lists.  A
refinement pass recomputes, for every vertex, the tuple of
(out-neighbours, in-neighbours) counts into each cell and splits cells by
that key; passes repeat to a fixpoint.  Keys are pure counts, so the cell
order produced is invariant under relabelling, which is what makes
position-wise cell matching across two graphs (or across branches of the
automorphism search tree) sound.
"""

from __future__ import annotations

from typing import Sequence


def _transpose(n: int, rows: Sequence[int]) -> list[int]:
    out = [0] * n
    for u, r in enumerate(rows):
        while r:
            low = r & -r
            out[low.bit_length() - 1] |= 1 << u
            r ^= low
    return out


def _initial_cells(n: int, rows: Sequence[int], rows_in: Sequence[int]):
    """Split by (out-valency, in-valency, loop flag), cells ordered by key."""
    groups: dict[tuple, list[int]] = {}
    for v in range(n):
        key = (rows[v].bit_count(), rows_in[v].bit_count(), rows[v] >> v & 1)
        groups.setdefault(key, []).append(v)
    trace = []
    cells = []
    for key in sorted(groups):
        cells.append(groups[key])
        trace.append((key, len(groups[key])))
    return cells, tuple(trace)


def _refine(n: int, rows: Sequence[int], rows_in: Sequence[int], cells):
    """Refine to an equitable partition; returns (cells, trace).

    The trace records every split decision (keys and sizes in order), so
    two refinements correspond position-wise iff their traces are equal.
    """
    cells = [list(c) for c in cells]
    trace = []
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        changed = False
        new_cells = []
        pass_trace = []
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in c:
                rv, iv = rows[v], rows_in[v]
                key = tuple((rv & m).bit_count() * 4097 + (iv & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) > 1:
                changed = True
            for key in sorted(groups):
                new_cells.append(groups[key])
                pass_trace.append((key, len(groups[key])))
        trace.append(tuple(pass_trace))
        cells = new_cells
        if not changed:
            return cells, tuple(trace)


def _individualize(cells, cell_index: int, v: int):
    target = cells[cell_index]
    rest = [w for w in target if w != v]
    return cells[:cell_index] + [[v], rest] + cells[cell_index + 1 :]


def _target_cell(cells) -> int:
    """First smallest non-singleton cell."""
    best = -1
    best_size = None
    for i, c in enumerate(cells):
        if len(c) > 1 and (best_size is None or len(c) < best_size):
            best, best_size = i, len(c)
    return best


def _maps_arcs(n: int, rows: Sequence[int], rows2: Sequence[int], images) -> bool:
    """Check (u, v) in rows iff (images[u], images[v]) in rows2."""
    for u in range(n):
        mapped = 0
        r = rows[u]
        while r:
            low = r & -r
            mapped |= 1 << images[low.bit_length() - 1]
            r ^= low
        if mapped != rows2[images[u]]:
            return False
    return True


def automorphism_generators(dg) -> list[tuple[int, ...]]:
    """Generators of Aut(dg) as image tuples, found at backtrack leaves.

    Individualization-refinement search.  The leftmost leaf fixes a
    reference ordering; every other leaf whose discrete partition matches
    the reference trace yields a candidate permutation which is verified
    arc-by-arc before being kept.  Siblings are pruned when they lie in
    the orbit of an already-explored sibling under the automorphisms found
    so far that fix the branch point's individualized prefix.
    """
    n, rows = dg.n, dg.rows
    rows_in = _transpose(n, rows)
    cells0, _ = _initial_cells(n, rows, rows_in)
    cells0, _ = _refine(n, rows, rows_in, cells0)

    gens: list[tuple[int, ...]] = []
    ref_order: list[int] | None = None
    ref_sizes: dict[int, tuple[int, ...]] = {}

    def orbit_closure(points: list[int], path: tuple[int, ...]) -> set[int]:
        fixing = [g for g in gens if all(g[p] == p for p in path)]
        seen = set(points)
        if not fixing:
            return seen
        queue = list(points)
        while queue:
            x = queue.pop()
            for g in fixing:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    def recurse(cells, depth: int, path: tuple[int, ...]) -> None:
        nonlocal ref_order
        sizes = tuple(len(c) for c in cells)
        if ref_order is None:
            ref_sizes[depth] = sizes
        elif ref_sizes.get(depth) != sizes:
            return
        ti = _target_cell(cells)
        if ti < 0:
            order = [c[0] for c in cells]
            if ref_order is None:
                ref_order = order
                return
            cand = [0] * n
            for r, l in zip(ref_order, order):
                cand[r] = l
            if _maps_arcs(n, rows, rows, cand):
                gens.append(tuple(cand))
            return
        processed: list[int] = []
        for v in cells[ti]:
            if processed and v in orbit_closure(processed, path):
                continue
            refined, _ = _refine(n, rows, rows_in, _individualize(cells, ti, v))
            recurse(refined, depth + 1, path + (v,))
            processed.append(v)

    recurse(cells0, 0, ())
    return gens


def isomorphism_map(g1, g2) -> list[int] | None:
    """An isomorphism g1 -> g2 as an image list, or None.

    Both graphs are refined with the same key functions; branches survive
    only while the refinement traces agree, which keeps the two ordered
    partitions aligned cell-by-cell.  Search order is by vertex index.
    """
    n = g1.n
    rows1, rows2 = g1.rows, g2.rows
    in1 = _transpose(n, rows1)
    in2 = _transpose(n, rows2)
    c1, t1 = _initial_cells(n, rows1, in1)
    c2, t2 = _initial_cells(n, rows2, in2)
    if t1 != t2:
        return None
    c1, t1 = _refine(n, rows1, in1, c1)
    c2, t2 = _refine(n, rows2, in2, c2)
    if t1 != t2:
        return None

    def recurse(cells1, cells2) -> list[int] | None:
        ti = _target_cell(cells1)
        if ti < 0:
            images = [0] * n
            for a, b in zip(cells1, cells2):
                images[a[0]] = b[0]
            if _maps_arcs(n, rows1, rows2, images):
                return images
            return None
        v = cells1[ti][0]
        r1, tr1 = _refine(n, rows1, in1, _individualize(cells1, ti, v))
        for w in cells2[ti]:
            r2, tr2 = _refine(n, rows2, in2, _individualize(cells2, ti, w))
            if tr1 != tr2:
                continue
            found = recurse(r1, r2)
            if found is not None:
                return found
        return None

    return recurse(c1, c2)
