"""Coloring invariants of pseudodiagrams.

The classical coloring system has one row x + y - 2z = 0 per classical
crossing (x, y the under-arcs, z the over-arc) and one column per arc.
The strong system appends an equality row for the two arcs that run
through each precrossing.  Everything downstream (determinant,
pseudodeterminant, colorability, coloring numbers, the Kauffman-Harary
property) is driven by those matrices and exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

from .diagram import DEFAULT_PRECROSSING_CAP, PseudoDiagram
from .errors import HasPrecrossings
from .linalg import IntMatrix, minor_determinant, solution_space_mod

DEFAULT_ENUMERATION_CAP = 10**6


@dataclass(frozen=True)
class ColoringSystem:
    matrix: IntMatrix          # classical rows only
    strong_rows: IntMatrix     # precrossing equality rows (may be 0-row)
    n_arcs: int

    def full_rows(self) -> list[list[int]]:
        return self.matrix.row_lists() + self.strong_rows.row_lists()


def coloring_system(d: PseudoDiagram, strong: bool = False) -> ColoringSystem:
    arcs = d.arcs()
    n = arcs.n_arcs
    rows = []
    for idx in sorted(arcs.classical):
        over, uin, uout = arcs.classical[idx]
        row = [0] * n
        row[uin] += 1
        row[uout] += 1
        row[over] -= 2
        rows.append(row)
    strong_rows = []
    if strong:
        for idx in sorted(arcs.precrossing):
            a, b = arcs.precrossing[idx]
            if a == b:
                continue
            row = [0] * n
            row[a] += 1
            row[b] -= 1
            strong_rows.append(row)
    return ColoringSystem(
        IntMatrix(rows) if rows else IntMatrix([]),
        IntMatrix(strong_rows) if strong_rows else IntMatrix([]),
        n,
    )


@dataclass(frozen=True)
class Coloring:
    modulus: int
    values: tuple[int, ...]  # indexed by arc id

    @property
    def is_trivial(self) -> bool:
        return len(set(self.values)) <= 1


def count_colors(c: Coloring) -> int:
    return len(set(c.values))


# ---------------------------------------------------------------------------
# Determinants


def determinant(d: PseudoDiagram) -> int:
    """Determinant of a fully classical diagram.

    Single crossingless component: 1.  Crossingless multi-component, or any
    diagram with a never-undercrossing component: 0 falls out of the minor.
    """
    pres = d.precrossing_indices()
    if pres:
        raise HasPrecrossings(len(pres))
    arcs = d.arcs()
    n = len(arcs.classical)
    if n == 0:
        return 1 if arcs.components == 1 else 0
    if arcs.n_arcs > n:
        return 0  # a component never passes under: split-style diagram
    system = coloring_system(d)
    return minor_determinant(system.matrix, 0, 0)


@dataclass(frozen=True)
class ResolutionDet:
    assignment: str  # one '+'/'-' per precrossing, in node-index order
    det: int


@dataclass(frozen=True)
class PseudoDetReport:
    symbol: str | None
    resolutions: tuple[ResolutionDet, ...]
    pseudodeterminant: int

    def to_dict(self) -> dict:
        return {
            "symbol": self.symbol,
            "resolutions": [{"assignment": r.assignment, "det": r.det} for r in self.resolutions],
            "pseudodet": self.pseudodeterminant,
        }


def _assignment_string(d: PseudoDiagram, assignment: dict[int, int]) -> str:
    return "".join("+" if assignment[i] == 0 else "-" for i in sorted(assignment))


def pseudodeterminant(
    d: PseudoDiagram,
    symbol: str | None = None,
    cap: int = DEFAULT_PRECROSSING_CAP,
) -> PseudoDetReport:
    """gcd of the determinants over all full resolutions, with the table."""
    entries = []
    g = 0
    for assignment in d.resolutions(cap):
        det = determinant(d.resolve(assignment))
        entries.append(ResolutionDet(_assignment_string(d, assignment), det))
        g = math.gcd(g, det)
    return PseudoDetReport(symbol, tuple(entries), g)


def max_colors(d: PseudoDiagram, cap: int = DEFAULT_PRECROSSING_CAP) -> int:
    """Largest achievable color count over all diagrams: the pseudodeterminant."""
    return pseudodeterminant(d, cap=cap).pseudodeterminant


# ---------------------------------------------------------------------------
# Colorability


def _has_nontrivial_solution(rows: list[list[int]], n_arcs: int, p: int) -> bool:
    if n_arcs == 0:
        return False
    if not rows:
        return n_arcs > 1  # several unconstrained arcs: color them apart
    space = solution_space_mod(rows, p)
    return space.count > p


def is_colorable(d: PseudoDiagram, p: int, cap: int = DEFAULT_PRECROSSING_CAP) -> bool:
    """Colorable mod p: every full resolution has a nontrivial p-coloring."""
    if p < 2:
        raise ValueError("modulus must be >= 2")
    for assignment in d.resolutions(cap):
        resolved = d.resolve(assignment)
        system = coloring_system(resolved)
        if not _has_nontrivial_solution(system.matrix.row_lists(), system.n_arcs, p):
            return False
    return True


def is_strong_colorable(d: PseudoDiagram, p: int) -> bool:
    """Strong colorable mod p: the combined system has a nontrivial solution."""
    if p < 2:
        raise ValueError("modulus must be >= 2")
    system = coloring_system(d, strong=True)
    return _has_nontrivial_solution(system.full_rows(), system.n_arcs, p)


def coloring_numbers(d: PseudoDiagram, bound: int, cap: int = DEFAULT_PRECROSSING_CAP) -> set[int]:
    """All p in 2..bound for which the diagram is colorable mod p.

    Uses the per-resolution determinants: p qualifies exactly when it shares
    a factor with every resolution determinant (0 counts as sharing all).
    """
    dets = [r.det for r in pseudodeterminant(d, cap=cap).resolutions]
    out = set()
    for p in range(2, bound + 1):
        if all(det == 0 or math.gcd(det, p) > 1 for det in dets):
            out.add(p)
    return out


# ---------------------------------------------------------------------------
# Explicit colorings


def find_colorings(
    d: PseudoDiagram,
    p: int,
    strong: bool = False,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Iterator[Coloring]:
    """All nontrivial colorings mod p of the requested system.

    With strong=False the diagram must already be resolved (classical); use
    strong=True to enumerate strong colorings of a pseudodiagram.
    """
    if not strong and d.precrossing_indices():
        raise HasPrecrossings(len(d.precrossing_indices()))
    system = coloring_system(d, strong=strong)
    rows = system.full_rows()
    if system.n_arcs == 0:
        return
    if not rows:
        rows = [[0] * system.n_arcs]
    for vec in solution_space_mod(rows, p, cap=cap):
        coloring = Coloring(p, vec)
        if not coloring.is_trivial:
            yield coloring


# ---------------------------------------------------------------------------
# Kauffman-Harary property


@dataclass(frozen=True)
class KHReport:
    holds: bool
    modulus: int
    witnesses: tuple[Coloring | None, ...] = field(default=())

    def witness_color_counts(self) -> tuple[int, ...]:
        return tuple(count_colors(w) for w in self.witnesses if w is not None)


def kh_property(
    d: PseudoDiagram,
    cap: int = DEFAULT_PRECROSSING_CAP,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
) -> KHReport:
    """Whether every resolution has a coloring giving each arc its own color.

    The modulus is the pseudodeterminant; it must be at least 2.
    """
    modulus = pseudodeterminant(d, cap=cap).pseudodeterminant
    if modulus < 2:
        raise ValueError(f"Kauffman-Harary check undefined for pseudodeterminant {modulus}")
    witnesses: list[Coloring | None] = []
    holds = True
    for assignment in d.resolutions(cap):
        resolved = d.resolve(assignment)
        witness = None
        for coloring in find_colorings(resolved, modulus, cap=enumeration_cap):
            if count_colors(coloring) == len(coloring.values):
                witness = coloring
                break
        witnesses.append(witness)
        if witness is None:
            holds = False
    return KHReport(holds, modulus, tuple(witnesses))


# ---------------------------------------------------------------------------
# Twist-family determinant behavior


def det_progression(diagrams: list[PseudoDiagram]) -> bool:
    """Check the constant-step law for three members of a twist family."""
    if len(diagrams) != 3:
        raise ValueError("need exactly three consecutive family members")
    d0, d1, d2 = (determinant(d) for d in diagrams)
    return d1 - d0 == d2 - d1
