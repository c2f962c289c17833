"""Digraphs as binary relations on {0..n-1}.

A digraph is a set of ordered pairs; loops are allowed.  The single
representation is dense boolean rows packed into Python ints: bit v of
rows[u] is set iff (u, v) is an arc, so row AND + popcount drives the
whole spectrum machinery.  Order is capped at 4096 vertices.
"""

from __future__ import annotations

import warnings
from itertools import combinations
from typing import Iterable, Sequence

MAX_ORDER = 4096


class Digraph:
    """Immutable binary relation with bit-packed adjacency rows."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]):
        if not 1 <= n <= MAX_ORDER:
            raise ValueError(f"order must be in 1..{MAX_ORDER}, got {n}")
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} rows, got {len(rows)}")
        mask = (1 << n) - 1
        for r in rows:
            if r & ~mask:
                raise ValueError("row has bits outside 0..n-1")
        self.n = n
        self.rows = rows

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        rows = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for order {n}")
            rows[u] |= 1 << v
        return cls(n, rows)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbourhood(self, v: int) -> list[int]:
        """Out-neighbours of v, ascending."""
        return _bits(self.rows[v])

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u])]

    def arc_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, Digraph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arc_count()})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# ---------------------------------------------------------------------------
# Basic relations and relation algebra.

def diagonal(n: int) -> Digraph:
    """The relation {(v, v)}."""
    return Digraph(n, [1 << v for v in range(n)])


def complete(n: int) -> Digraph:
    """All ordered pairs of distinct vertices (the complete graph)."""
    mask = (1 << n) - 1
    return Digraph(n, [mask ^ (1 << v) for v in range(n)])


def full(n: int) -> Digraph:
    """All of Omega x Omega."""
    mask = (1 << n) - 1
    return Digraph(n, [mask] * n)


def inverse_relation(g: Digraph) -> Digraph:
    rows = [0] * g.n
    for u, r in enumerate(g.rows):
        while r:
            low = r & -r
            rows[low.bit_length() - 1] |= 1 << u
            r ^= low
    return Digraph(g.n, rows)


def compose_relations(g: Digraph, h: Digraph) -> Digraph:
    """(a, b) present iff some c has (a, c) in g and (c, b) in h."""
    if g.n != h.n:
        raise ValueError(f"order mismatch: {g.n} != {h.n}")
    rows = []
    for r in g.rows:
        acc = 0
        rr = r
        while rr:
            low = rr & -rr
            acc |= h.rows[low.bit_length() - 1]
            rr ^= low
        rows.append(acc)
    return Digraph(g.n, rows)


def union(g: Digraph, h: Digraph) -> Digraph:
    if g.n != h.n:
        raise ValueError(f"order mismatch: {g.n} != {h.n}")
    return Digraph(g.n, [a | b for a, b in zip(g.rows, h.rows)])


def complement(g: Digraph) -> Digraph:
    mask = (1 << g.n) - 1
    return Digraph(g.n, [mask ^ r for r in g.rows])


def is_subrelation(g: Digraph, h: Digraph) -> bool:
    if g.n != h.n:
        raise ValueError(f"order mismatch: {g.n} != {h.n}")
    return all(a & ~b == 0 for a, b in zip(g.rows, h.rows))


def is_symmetric(g: Digraph) -> bool:
    return g == inverse_relation(g)


def is_transitive_relation(g: Digraph) -> bool:
    return is_subrelation(compose_relations(g, g), g)


def transitive_closure(g: Digraph) -> Digraph:
    """Smallest transitive relation containing g."""
    rows = list(g.rows)
    for k in range(g.n):
        bit = 1 << k
        rk = rows[k]
        for u in range(g.n):
            if rows[u] & bit:
                rows[u] |= rk
    return Digraph(g.n, rows)


def induced_subgraph(g: Digraph, psi: Iterable[int]) -> Digraph:
    """Restriction to psi, relabelled to 0..|psi|-1 in psi's sorted order."""
    vertices = sorted(set(psi))
    if not vertices:
        raise ValueError("vertex set must be nonempty")
    if vertices[0] < 0 or vertices[-1] >= g.n:
        raise ValueError("vertex set outside 0..n-1")
    index = {v: i for i, v in enumerate(vertices)}
    rows = []
    for v in vertices:
        acc = 0
        for w in vertices:
            if g.has_arc(v, w):
                acc |= 1 << index[w]
        rows.append(acc)
    return Digraph(len(vertices), rows)


def valency_profile(g: Digraph) -> tuple[bool, int | None]:
    """(True, d) when every row has popcount d, else (False, None)."""
    counts = {r.bit_count() for r in g.rows}
    if len(counts) == 1:
        return True, counts.pop()
    return False, None


# ---------------------------------------------------------------------------
# Named constructions.

def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % q for q in range(2, int(p**0.5) + 1))


def cyclic_cayley(n: int, connection: Iterable[int]) -> Digraph:
    """Cayley digraph on Z_n: (u, v) is an arc iff (v - u) mod n is in the
    connection set."""
    conn = {c % n for c in connection}
    row0 = 0
    for c in conn:
        row0 |= 1 << c
    rows = []
    mask = (1 << n) - 1
    for u in range(n):
        # rotate row0 left by u within n bits
        rows.append(((row0 << u) | (row0 >> (n - u))) & mask if u else row0)
    return Digraph(n, rows)


def delta_circulant(p: int, x: int, d: int) -> Digraph:
    """Interval circulant on Z_p with connection set {x+1, ..., x+d}."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not 0 <= d <= p:
        raise ValueError(f"valency {d} out of range 0..{p}")
    return cyclic_cayley(p, [x + i for i in range(1, d + 1)])


def kneser(m: int, k: int, loops: bool = False) -> Digraph:
    """Kneser graph: vertices are the k-subsets of {0..m-1} in lexicographic
    order, adjacent iff disjoint; optionally a loop at every vertex."""
    if not (1 <= k and 2 * k <= m):
        raise ValueError("need 1 <= k and 2k <= m")
    subsets = list(combinations(range(m), k))
    masks = []
    for s in subsets:
        acc = 0
        for e in s:
            acc |= 1 << e
        masks.append(acc)
    n = len(subsets)
    rows = []
    for i in range(n):
        acc = 1 << i if loops else 0
        for j in range(n):
            if i != j and masks[i] & masks[j] == 0:
                acc |= 1 << j
        rows.append(acc)
    return Digraph(n, rows)


def clebsch(loops: bool = False) -> Digraph:
    """The 16-vertex strongly regular (16, 5, 0, 2) graph.

    Folded five-cube model: vertices are the antipodal vertex pairs of the
    five-dimensional binary cube, labelled 0..15 by their low four bits;
    two classes are adjacent iff representatives differ in one coordinate
    or in all five, i.e. the labels differ in 1 or 4 of the 4 bits.
    """
    rows = []
    for u in range(16):
        acc = 1 << u if loops else 0
        for v in range(16):
            if (u ^ v).bit_count() in (1, 4):
                acc |= 1 << v
        rows.append(acc)
    return Digraph(16, rows)


def hamming_k4(loops: bool = False) -> Digraph:
    """Cartesian product of two complete graphs of order 4: vertices are
    pairs (a, b) in {0..3}^2 numbered 4a+b, adjacent iff they agree in
    exactly one coordinate.  Loopless by default."""
    rows = []
    for u in range(16):
        a, b = divmod(u, 4)
        acc = 1 << u if loops else 0
        for v in range(16):
            c, e = divmod(v, 4)
            if (a == c) != (b == e):
                acc |= 1 << v
        rows.append(acc)
    return Digraph(16, rows)


# ---------------------------------------------------------------------------
# Isomorphism with witness.

def are_isomorphic(g1: Digraph, g2: Digraph):
    """Decide isomorphism; returns (flag, witness Permutation or None).

    Backtracking over vertex maps with iterated-degree partition
    refinement for pruning.  The first witness found (search ordered by
    vertex index) is verified arc-by-arc before being returned.
    """
    from digspec import _refine
    from digspec.perm import Permutation

    if g1.n != g2.n or g1.arc_count() != g2.arc_count():
        return False, None
    images = _refine.isomorphism_map(g1, g2)
    if images is None:
        return False, None
    witness = Permutation(images)
    if not _preserves(g1, g2, images):
        raise AssertionError("isomorphism search returned a bad witness")
    return True, witness


def _preserves(g1: Digraph, g2: Digraph, images) -> bool:
    """Check (u, v) in g1 iff (images[u], images[v]) in g2."""
    for u in range(g1.n):
        mapped = 0
        r = g1.rows[u]
        while r:
            low = r & -r
            mapped |= 1 << images[low.bit_length() - 1]
            r ^= low
        if mapped != g2.rows[images[u]]:
            return False
    return True


# ---------------------------------------------------------------------------
# .dg text format: line 1 "n <N>"; one arc "u v" per line; '#' comments;
# duplicate arcs warn and are ignored.  Canonical emit sorts arcs.

def parse_dg(text: str) -> Digraph:
    n = None
    rows: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ValueError(f"line {lineno}: expected header 'n <N>'")
            n = int(parts[1])
            if n < 1:
                raise ValueError(f"line {lineno}: order must be >= 1")
            rows = [0] * n
            continue
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v'")
        u, v = int(parts[0]), int(parts[1])
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if rows[u] >> v & 1:
            warnings.warn(f"line {lineno}: duplicate arc ({u}, {v}) ignored")
        rows[u] |= 1 << v
    if n is None:
        raise ValueError("missing 'n <N>' header")
    return Digraph(n, rows)


def emit_dg(g: Digraph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.arcs())
    return "\n".join(lines) + "\n"
