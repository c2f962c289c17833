"""Permutations and permutation groups on {0..n-1}.

Composition applies left-to-right: compose(p, q) maps i to q(p(i)).
Group order and membership go through a deterministic Schreier-Sims
stabilizer chain; no randomized variants, so repeated runs produce
identical chains and identical test output.
"""

from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class Permutation:
    """A bijection of {0..n-1}, stored as an image table."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        n = len(images)
        if n == 0:
            raise ValueError("permutation must have degree >= 1")
        seen = [False] * n
        for v in images:
            if not 0 <= v < n or seen[v]:
                raise ValueError(f"not a permutation of 0..{n - 1}: {images}")
            seen[v] = True
        self.images = images

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __getitem__(self, point: int) -> int:
        return self.images[point]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * self.n
        out = []
        for i in range(self.n):
            if seen[i] or self.images[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            j = self.images[i]
            seen[i] = True
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def __repr__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return f"Permutation(id, n={self.n})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)
        return f"Permutation({body}, n={self.n})"


def identity(n: int) -> Permutation:
    return Permutation(range(n))


def from_cycles(n: int, *cycles: Sequence[int]) -> Permutation:
    """Permutation of degree n from disjoint cycles."""
    images = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            if images[a] != a:
                raise ValueError("cycles are not disjoint")
            images[a] = b
    return Permutation(images)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply p first, then q: compose(p, q)[i] = q[p[i]]."""
    if p.n != q.n:
        raise ValueError(f"degree mismatch: {p.n} != {q.n}")
    qi = q.images
    return Permutation(tuple(qi[v] for v in p.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, v in enumerate(p.images):
        inv[v] = i
    return Permutation(inv)


# Raw image-tuple helpers used by the stabilizer chain (avoids object
# churn in the inner loops).

def _mul(a: tuple, b: tuple) -> tuple:
    return tuple(b[v] for v in a)


def _inv(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def _is_id(a: tuple) -> bool:
    return all(i == v for i, v in enumerate(a))


class _Chain:
    """Deterministic Schreier-Sims stabilizer chain.

    One node per level; a node's group is generated by its own generators
    together with all generators of deeper nodes (those fix this node's
    base point, so they sit in every stabilizer along the way).  Adding a
    generator re-roots the orbit and reprocesses every Schreier generator
    of each node on the descent path, which keeps sifting a complete
    membership test.  Base points are the smallest point moved by the
    generator that created the level.  No Monte Carlo shortcuts.
    """

    __slots__ = ("n", "base", "own_gens", "transversal", "stab")

    def __init__(self, n: int, gens: Iterable[tuple] = ()):
        self.n = n
        self.base: int | None = None
        self.own_gens: list[tuple] = []
        self.transversal: dict[int, tuple] = {}
        self.stab: _Chain | None = None
        for g in gens:
            self.add_generator(g)

    def generators(self) -> list[tuple]:
        deeper = self.stab.generators() if self.stab is not None else []
        return deeper + self.own_gens

    def sift(self, g: tuple) -> tuple:
        """Reduce g by transversal elements; identity result means member."""
        if self.base is None:
            return g
        t = self.transversal.get(g[self.base])
        if t is None:
            return g
        return self.stab.sift(_mul(g, _inv(t)))

    def add_generator(self, g: tuple) -> None:
        residue = self.sift(g)
        if not _is_id(residue):
            self._add_new(residue)

    def _add_new(self, g: tuple) -> None:
        if self.base is None:
            self.base = min(i for i, v in enumerate(g) if v != i)
            self.transversal = {self.base: tuple(range(self.n))}
            self.stab = _Chain(self.n)
        if g[self.base] == self.base:
            self.stab.add_generator(g)
        else:
            self.own_gens.append(g)
        self._rebuild_orbit()
        # Schreier's lemma over the full generator set of this node; new
        # stabilizer elements found here are genuinely new group members
        # only below, so recursing into stab cannot invalidate this orbit.
        gens = self.generators()
        for point in sorted(self.transversal):
            t = self.transversal[point]
            for s in gens:
                u = _mul(t, s)
                t2 = self.transversal[u[self.base]]
                schreier = _mul(u, _inv(t2))
                if not _is_id(schreier):
                    self.stab.add_generator(schreier)

    def _rebuild_orbit(self) -> None:
        gens = self.generators()
        queue = deque(sorted(self.transversal))
        while queue:
            point = queue.popleft()
            t = self.transversal[point]
            for g in gens:
                image = g[point]
                if image not in self.transversal:
                    self.transversal[image] = _mul(t, g)
                    queue.append(image)

    def order(self) -> int:
        if self.base is None:
            return 1
        return len(self.transversal) * self.stab.order()

    def contains(self, g: tuple) -> bool:
        return _is_id(self.sift(g))


class PermGroup:
    """A permutation group given by generators, with a lazily built
    stabilizer chain providing order and membership.

    Immutable once constructed; the chain is built under a lock so
    finished groups are safe to share across threads.
    """

    def __init__(self, generators: Sequence[Permutation]):
        gens = tuple(generators)
        if not gens:
            raise ValueError("generator list must be nonempty")
        n = gens[0].n
        for g in gens:
            if g.n != n:
                raise ValueError("generators have mixed degrees")
        self.n = n
        self.generators = gens
        self._chain: _Chain | None = None
        self._lock = threading.Lock()

    def _ensure_chain(self) -> _Chain:
        with self._lock:
            if self._chain is None:
                self._chain = _Chain(self.n, (g.images for g in self.generators))
            return self._chain

    def __repr__(self) -> str:
        return f"PermGroup(n={self.n}, gens={list(self.generators)!r})"


@dataclass(frozen=True)
class BlockSystem:
    """A G-invariant partition of {0..n-1} into parts of equal size."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = set()
        sizes = {len(b) for b in self.blocks}
        for b in self.blocks:
            seen.update(b)
        if len(sizes) != 1 or seen != set(range(self.n)) or sum(map(len, self.blocks)) != self.n:
            raise ValueError("blocks must partition 0..n-1 into equal-size parts")
        if self.n % next(iter(sizes)) != 0:
            raise ValueError("block size must divide n")


def group_order(G: PermGroup) -> int:
    """Order of the group generated by G's generators."""
    return G._ensure_chain().order()


def contains(G: PermGroup, p: Permutation) -> bool:
    """Membership test via sifting through the stabilizer chain."""
    if p.n != G.n:
        raise ValueError(f"degree mismatch: {p.n} != {G.n}")
    return G._ensure_chain().contains(p.images)


def orbit(G: PermGroup, alpha: int) -> set[int]:
    """Smallest G-invariant set containing alpha."""
    if not 0 <= alpha < G.n:
        raise ValueError(f"point {alpha} out of range 0..{G.n - 1}")
    gens = [g.images for g in G.generators]
    seen = {alpha}
    queue = deque([alpha])
    while queue:
        point = queue.popleft()
        for g in gens:
            image = g[point]
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return seen


def is_transitive(G: PermGroup) -> bool:
    return len(orbit(G, 0)) == G.n


def minimal_block(G: PermGroup, alpha: int, beta: int) -> set[int]:
    """Smallest block containing {alpha, beta} of a G-invariant partition.

    Union-find block algorithm: seed the union of alpha and beta, then
    propagate merges through the generators until the class system is
    G-invariant.  Requires a transitive G.
    """
    if alpha == beta:
        raise ValueError("alpha and beta must be distinct")
    if not is_transitive(G):
        raise ValueError("minimal_block requires a transitive group")
    n = G.n
    parent = list(range(n))

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    gens = [g.images for g in G.generators]
    queue = deque()
    parent[find(beta)] = find(alpha)
    queue.append((alpha, beta))
    while queue:
        u, v = queue.popleft()
        for g in gens:
            gu, gv = g[u], g[v]
            ru, rv = find(gu), find(gv)
            if ru != rv:
                parent[rv] = ru
                queue.append((ru, rv))
    rep = find(alpha)
    return {x for x in range(n) if find(x) == rep}


def is_primitive(G: PermGroup) -> bool:
    """True iff G preserves no partition with part size strictly between 1
    and n.

    Intransitive groups of degree >= 3 always preserve one (an orbit
    against the rest), hence are imprimitive.  On two points there is no
    nontrivial partition at all, so every group of degree 2 is primitive,
    including the trivial group.
    """
    if G.n <= 2:
        return True
    if not is_transitive(G):
        return False
    full = set(range(G.n))
    return all(minimal_block(G, 0, beta) == full for beta in range(1, G.n))


def block_system(G: PermGroup, alpha: int, beta: int) -> BlockSystem:
    """The full G-invariant partition generated by the minimal block of
    {alpha, beta}."""
    block = frozenset(minimal_block(G, alpha, beta))
    gens = [g.images for g in G.generators]
    seen = {block}
    queue = deque([block])
    while queue:
        b = queue.popleft()
        for g in gens:
            image = frozenset(g[x] for x in b)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    blocks = tuple(sorted(tuple(sorted(b)) for b in seen))
    return BlockSystem(G.n, blocks)


# ---------------------------------------------------------------------------
# Named families (test and suite fixtures).

def cyclic_group(n: int) -> PermGroup:
    """C_n acting regularly: generated by the n-cycle i -> i+1."""
    return PermGroup([Permutation([(i + 1) % n for i in range(n)])])


def dihedral_group(n: int) -> PermGroup:
    """D_n of order 2n on n points: rotation plus the reflection i -> -i."""
    rot = Permutation([(i + 1) % n for i in range(n)])
    refl = Permutation([(-i) % n for i in range(n)])
    return PermGroup([rot, refl])


def symmetric_group(n: int) -> PermGroup:
    if n == 1:
        return PermGroup([identity(1)])
    rot = Permutation([(i + 1) % n for i in range(n)])
    swap = from_cycles(n, (0, 1))
    return PermGroup([rot, swap])


def alternating_group(n: int) -> PermGroup:
    if n <= 2:
        return PermGroup([identity(n)])
    three = from_cycles(n, (0, 1, 2))
    if n % 2 == 1:
        big = Permutation([(i + 1) % n for i in range(n)])
    else:
        # n-1 cycle on 1..n-1 is even for even n
        big = from_cycles(n, tuple(range(1, n)))
    return PermGroup([three, big])


def affine_group(p: int) -> PermGroup:
    """AGL(1, p) of order p(p-1): translations and the smallest primitive
    root acting by multiplication."""
    if p < 2 or any(p % q == 0 for q in range(2, p)):
        raise ValueError(f"{p} is not prime")
    rot = Permutation([(i + 1) % p for i in range(p)])
    g = _primitive_root(p)
    mult = Permutation([(g * i) % p for i in range(p)])
    return PermGroup([rot, mult])


def _primitive_root(p: int) -> int:
    for g in range(2, p):
        seen = set()
        x = 1
        for _ in range(p - 1):
            x = x * g % p
            seen.add(x)
        if len(seen) == p - 1:
            return g
    return 1  # p == 2


# ---------------------------------------------------------------------------
# .grp text format: line 1 "n <N>"; each non-comment line one permutation
# as N space-separated images; '#' starts a comment.

def parse_grp(text: str) -> PermGroup:
    """Parse a generator set from .grp text."""
    n = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "n":
                raise ValueError(f"line {lineno}: expected header 'n <N>'")
            n = int(parts[1])
            if n < 1:
                raise ValueError(f"line {lineno}: degree must be >= 1")
            continue
        values = line.split()
        if len(values) != n:
            raise ValueError(f"line {lineno}: expected {n} images, got {len(values)}")
        gens.append(Permutation([int(v) for v in values]))
    if n is None:
        raise ValueError("missing 'n <N>' header")
    if not gens:
        raise ValueError("no generators in input")
    return PermGroup(gens)


def emit_grp(G: PermGroup) -> str:
    lines = [f"n {G.n}"]
    lines.extend(" ".join(map(str, g.images)) for g in G.generators)
    return "\n".join(lines) + "\n"
