"""The neighbourhood-intersection spectrum of a regular digraph.

For a digraph of valency d, level i of the spectrum joins two vertices
exactly when their out-neighbourhoods share d-i elements, so level 0
contains the diagonal and level d holds the fully-disjoint pairs.  kappa
is the smallest positive nonempty level; ell is the effective top of the
spectrum (the last level before a gap of width kappa).  The classifier
reports, for vertex-primitive nontrivial inputs, which branch of the
dichotomy applies: either levels 0 and kappa already cover all pairs and
(n-1)(d-kappa) = d(d-1), or some level in {kappa..d-1} has valency
between 1 and kappa^2 + kappa.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from digspec import aut, reldig
from digspec.reldig import Digraph


class NotRegularError(ValueError):
    """Raised when an operation needs a regular digraph and got an
    irregular one."""


class Branch1NotSatisfied(ValueError):
    """Raised by design extraction when the first branch of the dichotomy
    does not hold for the input."""


class DichotomyViolation(AssertionError):
    """A vertex-primitive nontrivial digraph satisfied neither branch;
    this indicates an implementation bug, not a property of the input."""


class TrivialCase(enum.Enum):
    """Why the dichotomy does not apply; NONE means it does."""

    EMPTY = "Empty"
    FULL = "Full"
    NOT_REGULAR = "NotRegular"
    NOT_PRIMITIVE = "NotPrimitive"
    NONE = "None"


@dataclass(frozen=True)
class Branch1:
    """The covering branch: levels 0 and kappa partition all pairs and the
    counting identity (n-1)(d-kappa) = d(d-1) holds."""

    holds: bool
    lhs: int
    rhs: int

    def to_dict(self) -> dict:
        return {"holds": self.holds, "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class Branch2:
    """Small-level branch: the levels i in {kappa..d-1} whose valency lies
    in [1, kappa^2 + kappa]."""

    witnesses: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"witnesses": list(self.witnesses)}


@dataclass(frozen=True)
class SpectrumReport:
    n: int
    trivial: TrivialCase
    d: int | None = None
    valencies: tuple[int | None, ...] | None = None
    kappa: int | None = None
    ell: int | None = None
    branch1: Branch1 | None = None
    branch2: Branch2 | None = None

    def to_dict(self) -> dict:
        out: dict = {"n": self.n}
        if self.d is not None:
            out["d"] = self.d
        if self.valencies is not None:
            out["valencies"] = list(self.valencies)
        if self.kappa is not None:
            out["kappa"] = self.kappa
        if self.ell is not None:
            out["ell"] = self.ell
        if self.branch1 is not None:
            out["branch1"] = self.branch1.to_dict()
        if self.branch2 is not None:
            out["branch2"] = self.branch2.to_dict()
        out["trivial"] = self.trivial.value
        return out


@dataclass(frozen=True)
class DesignParams:
    """A symmetric 2-design extracted from the neighbourhood family."""

    v: int
    k: int
    lambda_: int
    blocks: tuple[tuple[int, ...], ...]
    is_projective_plane: bool
    kantor_prime_note: str | None = None

    def to_dict(self) -> dict:
        out: dict = {
            "v": self.v,
            "k": self.k,
            "lambda": self.lambda_,
            "blocks": [list(b) for b in self.blocks],
            "is_projective_plane": self.is_projective_plane,
        }
        if self.kantor_prime_note is not None:
            out["kantor_prime_note"] = self.kantor_prime_note
        return out


@dataclass(frozen=True)
class FeasibleEntry:
    d: int
    n: int
    reduced: bool


@dataclass(frozen=True)
class FeasibleParameters:
    kappa: int
    entries: tuple[FeasibleEntry, ...]
    n_max: int

    def to_dict(self) -> dict:
        return {
            "kappa": self.kappa,
            "entries": [{"d": e.d, "n": e.n, "reduced": e.reduced} for e in self.entries],
            "n_max": self.n_max,
        }


def common_neighbour_matrix(g: Digraph) -> list[list[int]]:
    """Entry (u, v) is the size of the intersection of the two
    out-neighbourhoods (popcount of the row AND)."""
    return [[(ru & rv).bit_count() for rv in g.rows] for ru in g.rows]


def _require_valency(g: Digraph) -> int:
    regular, d = reldig.valency_profile(g)
    if not regular:
        raise NotRegularError("digraph is not out-regular")
    return d


def gamma_family(g: Digraph) -> list[Digraph]:
    """All spectrum levels 0..d at once; level i joins u, v when their
    neighbourhoods share d-i elements.  Requires a regular digraph."""
    d = _require_valency(g)
    n = g.n
    masks = [[0] * n for _ in range(d + 1)]
    for u in range(n):
        ru = g.rows[u]
        for v in range(n):
            i = d - (ru & g.rows[v]).bit_count()
            masks[i][u] |= 1 << v
    return [Digraph(n, rows) for rows in masks]


def gamma_i(g: Digraph, i: int) -> Digraph:
    """Spectrum level i; symmetric by construction, with the diagonal
    sitting inside level 0."""
    d = _require_valency(g)
    if not 0 <= i <= d:
        raise ValueError(f"level {i} out of range 0..{d}")
    return gamma_family(g)[i]


def _kappa_ell(levels: list[Digraph]) -> tuple[int | None, int | None]:
    d = len(levels) - 1
    empty = [all(r == 0 for r in lv.rows) for lv in levels]
    kappa = next((i for i in range(1, d + 1) if not empty[i]), None)
    if kappa is None:
        return None, None
    for i in range(kappa, d + 1):
        if all(j > d or empty[j] for j in range(i + 1, i + kappa + 1)):
            return kappa, i
    return kappa, d


def _level_valencies(levels: list[Digraph]) -> tuple[int | None, ...]:
    out = []
    for lv in levels:
        regular, dv = reldig.valency_profile(lv)
        out.append(dv if regular else None)
    return tuple(out)


def spectrum(g: Digraph, *, _vertex_primitive: bool | None = None) -> SpectrumReport:
    """Full spectrum report for a regular digraph.

    Vertex-primitivity is decided through the automorphism group unless
    the caller already knows it.  Branch verdicts are filled only when the
    dichotomy applies (vertex-primitive, neither empty nor full); both
    flags are always computed independently in that case.
    """
    d = _require_valency(g)
    n = g.n
    if all(r == 0 for r in g.rows):
        return SpectrumReport(n=n, trivial=TrivialCase.EMPTY, d=0, valencies=(n,))
    mask = (1 << n) - 1
    if all(r == mask for r in g.rows):
        return SpectrumReport(
            n=n, trivial=TrivialCase.FULL, d=n, valencies=(n,) + (0,) * n
        )
    levels = gamma_family(g)
    valencies = _level_valencies(levels)
    kappa, ell = _kappa_ell(levels)
    primitive = (
        _vertex_primitive
        if _vertex_primitive is not None
        else aut.is_vertex_primitive(g)
    )
    if not primitive:
        return SpectrumReport(
            n=n,
            trivial=TrivialCase.NOT_PRIMITIVE,
            d=d,
            valencies=valencies,
            kappa=kappa,
            ell=ell,
        )
    # Vertex-primitive and nontrivial: kappa exists (two distinct vertices
    # cannot share a full neighbourhood here) and every level is regular.
    if kappa is None:
        raise DichotomyViolation(
            "vertex-primitive nontrivial digraph with all positive levels empty"
        )
    covered = reldig.union(levels[0], levels[kappa])
    set_condition = all(r == mask for r in covered.rows)
    lhs = (n - 1) * (d - kappa)
    rhs = d * (d - 1)
    branch1 = Branch1(holds=set_condition and lhs == rhs, lhs=lhs, rhs=rhs)
    bound = kappa * kappa + kappa
    witnesses = tuple(
        i
        for i in range(kappa, d)
        if valencies[i] is not None and 1 <= valencies[i] <= bound
    )
    return SpectrumReport(
        n=n,
        trivial=TrivialCase.NONE,
        d=d,
        valencies=valencies,
        kappa=kappa,
        ell=ell,
        branch1=branch1,
        branch2=Branch2(witnesses),
    )


def classify_theorem_main(g: Digraph) -> SpectrumReport:
    """Spectrum report plus the dichotomy check.

    Irregular input yields a descriptive report (trivial = NotRegular)
    rather than an error.  When the dichotomy applies, at least one branch
    must hold; a violation raises DichotomyViolation because it can only
    come from a bug in this library.
    """
    try:
        report = spectrum(g)
    except NotRegularError:
        return SpectrumReport(n=g.n, trivial=TrivialCase.NOT_REGULAR)
    if report.trivial is TrivialCase.NONE:
        if not (report.branch1.holds or report.branch2.witnesses):
            raise DichotomyViolation(
                f"neither branch holds for n={report.n}, d={report.d}, "
                f"kappa={report.kappa}"
            )
    return report


def design_from_branch1(g: Digraph) -> DesignParams:
    """Extract the symmetric 2-design (n, d, d-kappa) carried by the
    neighbourhood family when the covering branch holds.

    All three design conditions are verified by direct counting: the n
    neighbourhoods are pairwise distinct, each has size d, and any two
    distinct ones meet in exactly d-kappa points.
    """
    report = spectrum(g)
    if report.trivial is not TrivialCase.NONE or not report.branch1.holds:
        raise Branch1NotSatisfied(
            "design extraction needs a vertex-primitive nontrivial digraph "
            "with the covering branch satisfied"
        )
    n, d, kappa = report.n, report.d, report.kappa
    lam = d - kappa
    blocks = sorted(tuple(g.neighbourhood(v)) for v in range(n))
    if len(set(blocks)) != n:
        raise AssertionError("neighbourhoods are not pairwise distinct")
    if any(len(b) != d for b in blocks):
        raise AssertionError("some block does not have size d")
    row_masks = sorted(g.rows)
    for i in range(n):
        for j in range(i + 1, n):
            if (row_masks[i] & row_masks[j]).bit_count() != lam:
                raise AssertionError("two blocks meet in the wrong number of points")
    plane = lam == 1
    note = None
    if plane and n == kappa * kappa + kappa + 1:
        note = (
            f"projective plane of order {kappa}; by Kantor's classification of "
            "point-primitive planes n must then be prime -- not verified here"
        )
    return DesignParams(
        v=n,
        k=d,
        lambda_=lam,
        blocks=tuple(blocks),
        is_projective_plane=plane,
        kantor_prime_note=note,
    )


def feasible_parameters(kappa: int) -> FeasibleParameters:
    """All (d, n) compatible with the covering-branch identity for a given
    kappa >= 2: kappa+1 <= d <= kappa^2 with (d - kappa) dividing
    kappa(kappa - 1) and n = d + kappa + kappa(kappa-1)/(d-kappa).
    Entries with 2d <= n are flagged as the complement-reduced sublist."""
    if kappa < 2:
        raise ValueError("kappa must be >= 2")
    product = kappa * (kappa - 1)
    entries = []
    for d in range(kappa + 1, kappa * kappa + 1):
        if product % (d - kappa):
            continue
        n = d + kappa + product // (d - kappa)
        entries.append(FeasibleEntry(d=d, n=n, reduced=2 * d <= n))
    return FeasibleParameters(
        kappa=kappa, entries=tuple(entries), n_max=kappa * kappa + kappa + 1
    )
