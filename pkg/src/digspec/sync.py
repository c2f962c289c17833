"""Transformations of {0..n-1}, kernels, and synchronisation.

A group G synchronises a map f when the semigroup generated by G and f
contains a constant map.  The decision procedure is a breadth-first
search over image sets: start from the image of f and apply each group
generator and f until a singleton appears.  Group letters preserve set
size, any constant word must contain f, and the image of any word after
its first f is reachable from im(f), so the abstraction is exact.  The
independent check is plain semigroup closure (semigroup_closure) at
desk scale.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from digspec import _engine, perm, reldig
from digspec.perm import PermGroup
from digspec.reldig import Digraph
from digspec.spectrum import SpectrumReport, spectrum


@dataclass(frozen=True)
class Transformation:
    """An arbitrary self-map of {0..n-1}, stored as an image table."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n == 0:
            raise ValueError("transformation must have degree >= 1")
        if any(not 0 <= v < n for v in self.images):
            raise ValueError("images out of range")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def is_permutation(self) -> bool:
        return len(set(self.images)) == self.n

    def __repr__(self) -> str:
        return f"Transformation({list(self.images)})"


@dataclass(frozen=True)
class KernelType:
    """Non-increasing part sizes of a map's kernel; sums to the degree."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError("parts must be positive")
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError("parts must be non-increasing")


@dataclass(frozen=True)
class SyncResult:
    synchronises: bool
    witness: tuple[str, ...] | None
    reached_images: int


@dataclass(frozen=True)
class Theorem44Verdict:
    status: str  # PASS | FAIL | SKIP
    kernel_type: KernelType | None = None
    reason: str | None = None
    sync: SyncResult | None = None
    diagnostic: "FailureDiagnostic | None" = None

    def to_dict(self) -> dict:
        out: dict = {"status": self.status}
        if self.kernel_type is not None:
            out["kernel_type"] = list(self.kernel_type.parts)
        if self.reason is not None:
            out["reason"] = self.reason
        if self.sync is not None:
            out["synchronises"] = self.sync.synchronises
            out["reached_images"] = self.sync.reached_images
        if self.diagnostic is not None:
            out["diagnostic"] = self.diagnostic.to_dict()
        return out


@dataclass(frozen=True)
class FailureDiagnostic:
    """Proof objects emitted when a kernel-type (p,2,1,...,1) instance
    fails to synchronise: the non-collapsible-pair graph, its spectrum,
    the two distinguished kernel parts, and the bipartite subgraph they
    induce with its degree sequence."""

    graph: Digraph
    spectrum: SpectrumReport
    part_a: tuple[int, ...]
    part_b: tuple[int, ...]
    induced: Digraph
    degrees: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "graph_arcs": self.graph.arcs(),
            "spectrum": self.spectrum.to_dict(),
            "part_a": list(self.part_a),
            "part_b": list(self.part_b),
            "induced_arcs": self.induced.arcs(),
            "degrees": list(self.degrees),
        }


def kernel(f: Transformation) -> list[list[int]]:
    """Partition of the domain into preimages of the image points, classes
    ordered by their smallest element."""
    classes: dict[int, list[int]] = {}
    for point, value in enumerate(f.images):
        classes.setdefault(value, []).append(point)
    return sorted(classes.values(), key=lambda c: c[0])


def kernel_type(f: Transformation) -> KernelType:
    sizes = sorted((len(c) for c in kernel(f)), reverse=True)
    return KernelType(tuple(sizes))


def _check_degrees(G: PermGroup, f: Transformation) -> None:
    if G.n != f.n:
        raise ValueError(f"degree mismatch: group {G.n}, map {f.n}")


def _apply_to_mask(images: Sequence[int], mask: int) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << images[low.bit_length() - 1]
        mask ^= low
    return out


def synchronises(G: PermGroup, f: Transformation) -> SyncResult:
    """Decide whether the semigroup generated by G and f contains a
    constant map; on success the witness word (letters g1..gk, f, applied
    left to right) is reconstructed from the BFS parents and verified by
    direct application to every point before returning."""
    _check_degrees(G, f)
    letters: list[tuple[str, tuple[int, ...]]] = [
        (f"g{i + 1}", g.images) for i, g in enumerate(G.generators)
    ]
    letters.append(("f", f.images))
    start = 0
    for v in f.images:
        start |= 1 << v
    parents: dict[int, tuple[int, str] | None] = {start: None}
    queue = deque([start])
    goal = start if start & (start - 1) == 0 else None
    while queue and goal is None:
        state = queue.popleft()
        for label, images in letters:
            nxt = _apply_to_mask(images, state)
            if nxt in parents:
                continue
            parents[nxt] = (state, label)
            if nxt & (nxt - 1) == 0:
                goal = nxt
                break
            queue.append(nxt)
    if goal is None:
        return SyncResult(False, None, len(parents))
    word = []
    cursor = goal
    while parents[cursor] is not None:
        cursor, label = parents[cursor]
        word.append(label)
    word.append("f")  # the start state is the image of f itself
    word.reverse()
    witness = tuple(word)
    _verify_witness(G, f, witness)
    return SyncResult(True, witness, len(parents))


def _verify_witness(G: PermGroup, f: Transformation, witness: Sequence[str]) -> None:
    by_label = {f"g{i + 1}": g.images for i, g in enumerate(G.generators)}
    by_label["f"] = f.images
    values = set()
    for point in range(G.n):
        x = point
        for label in witness:
            x = by_label[label][x]
        values.add(x)
    if len(values) != 1:
        raise AssertionError("witness word does not evaluate to a constant map")


def synchronises_batch(G: PermGroup, maps: np.ndarray) -> np.ndarray:
    """Synchronisation flags for many maps (rows) against one group; the
    same image-set search as synchronises, run through the bulk engine."""
    if maps.shape[1] != G.n:
        raise ValueError("map degree does not match group degree")
    return _engine.batch_synchronises([g.images for g in G.generators], maps) != 0


def closure_contains_constant_batch(G: PermGroup, maps: np.ndarray) -> np.ndarray:
    """For each map row, whether semigroup_closure(gens(G) + [f]) contains
    a constant map, by exhaustive enumeration of the closure (early exit
    once a constant is seen)."""
    if maps.shape[1] != G.n:
        raise ValueError("map degree does not match group degree")
    if G.n == 1:
        return np.ones(len(maps), dtype=bool)
    return (
        _engine.batch_closure_contains_constant(
            [g.images for g in G.generators], maps
        )
        != 0
    )


def semigroup_closure(generators: Iterable[Transformation]) -> set[Transformation]:
    """Full closure of the given transformations under composition.

    Breadth-first over right-multiplication by the generators, so every
    nonempty word is reached.  Guarded at degree 7 (closure size can reach
    n^n).
    """
    gens = list(generators)
    if not gens:
        raise ValueError("generator list must be nonempty")
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValueError("generators have mixed degrees")
    if n > 7:
        raise ValueError("semigroup closure is guarded at degree <= 7")
    gen_rows = [g.images for g in gens]
    seen: set[tuple[int, ...]] = set(gen_rows)
    queue = deque(seen)
    while queue:
        current = queue.popleft()
        for g in gen_rows:
            nxt = tuple(g[v] for v in current)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return {Transformation(images) for images in seen}


def non_collapsible_graph(G: PermGroup, f: Transformation) -> Digraph:
    """Graph joining v, w exactly when no element of the semigroup
    generated by G and f maps them to a common point.

    A pair collapses iff it can reach, in the deterministic pair-transition
    system ({v,w} -> {v^g, w^g} and -> {f(v), f(w)}), a pair that f sends
    to a single point; those are found by backwards propagation from the
    directly-collapsed pairs.  Group letters are injective so they never
    collapse anything themselves.
    """
    _check_degrees(G, f)
    n = G.n
    pairs = [(v, w) for v in range(n) for w in range(v + 1, n)]
    index = {p: i for i, p in enumerate(pairs)}
    reverse: list[list[int]] = [[] for _ in pairs]
    direct: list[bool] = [False] * len(pairs)
    letter_rows = [g.images for g in G.generators] + [f.images]
    for p, (v, w) in enumerate(pairs):
        for images in letter_rows:
            a, b = images[v], images[w]
            if a == b:
                direct[p] = True  # only the f letter can do this
                continue
            target = index[(a, b) if a < b else (b, a)]
            if target != p:
                reverse[target].append(p)
    collapsible = list(direct)
    queue = deque(i for i, flag in enumerate(direct) if flag)
    while queue:
        q = queue.popleft()
        for p in reverse[q]:
            if not collapsible[p]:
                collapsible[p] = True
                queue.append(p)
    rows = [0] * n
    for p, (v, w) in enumerate(pairs):
        if not collapsible[p]:
            rows[v] |= 1 << w
            rows[w] |= 1 << v
    return Digraph(n, rows)


def _matches_hypothesis(kt: KernelType) -> bool:
    """Kernel type (p, 2, 1, ..., 1) with p >= 2."""
    parts = kt.parts
    return (
        len(parts) >= 2
        and parts[0] >= 2
        and parts[1] == 2
        and all(p == 1 for p in parts[2:])
    )


def check_theorem_4_4(G: PermGroup, f: Transformation) -> Theorem44Verdict:
    """Synchronisation check for a primitive group against a map of kernel
    type (p, 2, 1, ..., 1), p >= 2.

    PASS when the pair synchronises.  Hypothesis violations are reported
    as SKIP.  A FAIL would contradict the classification this library
    implements, so it comes with the full proof-object diagnostic.
    """
    _check_degrees(G, f)
    kt = kernel_type(f)
    if not perm.is_primitive(G):
        return Theorem44Verdict(status="SKIP", kernel_type=kt, reason="group is not primitive")
    if not _matches_hypothesis(kt):
        return Theorem44Verdict(
            status="SKIP",
            kernel_type=kt,
            reason=f"kernel type {list(kt.parts)} is not (p,2,1,...,1) with p >= 2",
        )
    result = synchronises(G, f)
    if result.synchronises:
        return Theorem44Verdict(status="PASS", kernel_type=kt, sync=result)
    return Theorem44Verdict(
        status="FAIL",
        kernel_type=kt,
        sync=result,
        diagnostic=_failure_diagnostic(G, f),
    )


# ---------------------------------------------------------------------------
# Transformation text format: "n <N>" header, then one line of N
# space-separated images; '#' starts a comment (same framing as .grp).

def parse_trans(text: str) -> Transformation:
    n = None
    images = None
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
        if images is not None:
            raise ValueError(f"line {lineno}: more than one transformation line")
        values = line.split()
        if len(values) != n:
            raise ValueError(f"line {lineno}: expected {n} images, got {len(values)}")
        images = tuple(int(v) for v in values)
    if n is None:
        raise ValueError("missing 'n <N>' header")
    if images is None:
        raise ValueError("missing transformation line")
    return Transformation(images)


def emit_trans(f: Transformation) -> str:
    return f"n {f.n}\n" + " ".join(map(str, f.images)) + "\n"


def _failure_diagnostic(G: PermGroup, f: Transformation) -> FailureDiagnostic:
    graph = non_collapsible_graph(G, f)
    classes = kernel(f)
    part_b = next(c for c in classes if len(c) == max(len(x) for x in classes))
    part_a = next(c for c in classes if len(c) == 2 and c is not part_b)
    vertices = sorted(part_a + part_b)
    induced = reldig.induced_subgraph(graph, vertices)
    degrees = tuple(induced.rows[i].bit_count() for i in range(induced.n))
    try:
        spec_report = spectrum(graph)
    except Exception:  # irregular graph: report order only
        from digspec.spectrum import SpectrumReport as _SR, TrivialCase as _TC

        spec_report = _SR(n=graph.n, trivial=_TC.NOT_REGULAR)
    return FailureDiagnostic(
        graph=graph,
        spectrum=spec_report,
        part_a=tuple(part_a),
        part_b=tuple(part_b),
        induced=induced,
        degrees=degrees,
    )
