#!/usr/bin/env python3
"""Regenerate src/pseudolink/data/polyhedra.json.

The abstract maps of the basic polyhedra are fixed (the octahedron for 6*,
the square antiprism for 8*, the 3-fold triangular drum for 9*), but their
conventional vertex numbering and per-vertex corner orientations are only
published as drawings.  This script reconstructs both: corner parities are
normalized so that the bare polyhedron symbol denotes the alternating
diagram, and the numbering is found by searching all labelings against
published determinant and colorability values of knots written on these
polyhedra.  The first surviving labeling (lexicographically) is frozen
into the packaged JSON file.

Run from the repository root:  python scripts/derive_polyhedra.py
"""

from __future__ import annotations

import itertools
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from pseudolink import diagram, invariants, notation  # noqa: E402
from pseudolink.polyhedra import CORNERS, PolyhedronTemplate, register_template  # noqa: E402

# Abstract maps as face lists (vertices 0-based).
FACES = {
    "6*": [
        [0, 1, 2], [0, 2, 4], [0, 4, 5], [0, 5, 1],
        [3, 2, 1], [3, 4, 2], [3, 5, 4], [3, 1, 5],
    ],
    "8*": [
        [0, 1, 2, 3], [4, 5, 6, 7],
        [0, 4, 1], [1, 5, 2], [2, 6, 3], [3, 7, 0],
        [4, 5, 1], [5, 6, 2], [6, 7, 3], [7, 4, 0],
    ],
    "9*": [
        [0, 1, 2], [6, 7, 8],
        [0, 3, 1], [1, 4, 2], [2, 5, 0],
        [3, 6, 7], [4, 7, 8], [5, 8, 6],
        [0, 3, 6, 5], [1, 4, 7, 3], [2, 5, 8, 4],
    ],
}


def rotation_orders(faces: list[list[int]]) -> dict[int, list[int]]:
    """Neighbor rotation order at each vertex from a coherent face orientation."""
    face_edges = [[(f[i], f[(i + 1) % len(f)]) for i in range(len(f))] for f in faces]
    by_edge: dict[frozenset, list[int]] = {}
    for fi, edges in enumerate(face_edges):
        for a, b in edges:
            by_edge.setdefault(frozenset((a, b)), []).append(fi)
    for edge, fis in by_edge.items():
        assert len(fis) == 2, f"edge {set(edge)} not on exactly two faces"
    oriented: dict[int, list[tuple[int, int]]] = {0: face_edges[0]}
    queue = [0]
    while queue:
        fi = queue.pop()
        for a, b in oriented[fi]:
            for fj in by_edge[frozenset((a, b))]:
                if fj in oriented:
                    continue
                if (b, a) in face_edges[fj]:
                    oriented[fj] = face_edges[fj]
                else:
                    assert (a, b) in face_edges[fj]
                    oriented[fj] = [(y, x) for x, y in reversed(face_edges[fj])]
                queue.append(fj)
    assert len(oriented) == len(faces)
    nxt: dict[tuple[int, int], tuple[int, int]] = {}
    for fe in oriented.values():
        for i, dart in enumerate(fe):
            nxt[dart] = fe[(i + 1) % len(fe)]
    rot = {dart: nxt[(dart[1], dart[0])] for dart in nxt}
    orders: dict[int, list[int]] = {}
    vertices = {a for a, _ in nxt}
    for v in vertices:
        start = min(d for d in nxt if d[0] == v)
        cycle = [start]
        cur = rot[start]
        while cur != start:
            cycle.append(cur)
            cur = rot[cur]
        assert len(cycle) == 4, f"vertex {v} has degree {len(cycle)}"
        orders[v] = [b for _, b in cycle]
    return orders


class MapSearch:
    """One abstract map with alternation-normalized substitution frames.

    Requiring the all-ones filling to be the alternating diagram pins each
    vertex's corner anchor mod 2 relative to the others; the remaining
    convention (vertex numbering and per-vertex frame handedness) is what
    the pin search recovers.
    """

    def __init__(self, key: str):
        self.key = key
        self.rot = rotation_orders(FACES[key])
        self.n = len(self.rot)
        self.vertices = sorted(self.rot)
        self.edges = sorted(
            {frozenset((u, w)) for u in self.rot for w in self.rot[u]}, key=sorted
        )
        self.anchors = self._alternating_anchors()

    def _build_template(
        self,
        perm: tuple[int, ...],
        anchors: dict[int, int],
        reflections: dict[int, int] | None = None,
    ) -> PolyhedronTemplate:
        """Template for a labeling.  A reflected vertex receives its tangle
        transposed (the builder handles that); the corner map itself is the
        same for both frame handednesses."""
        pos_of = {abstract: i + 1 for i, abstract in enumerate(perm)}
        entries = []
        for edge in self.edges:
            u, w = sorted(edge)
            ju = self.rot[u].index(w)
            jw = self.rot[w].index(u)
            ku = (ju - anchors[u]) % 4
            kw = (jw - anchors[w]) % 4
            entries.append(((pos_of[u], CORNERS[ku]), (pos_of[w], CORNERS[kw])))
        refl = tuple((reflections or {}).get(v, 0) for v in perm)
        template = PolyhedronTemplate(self.key, self.n, tuple(sorted(entries)), refl)
        template.validate()
        return template

    def _alternating_anchors(self) -> dict[int, int]:
        identity = tuple(self.vertices)
        raw = self._build_template(identity, {v: 0 for v in self.vertices})
        ones = raw.build([diagram.Tangle.crossing(0) for _ in range(self.n)])
        solved = ones.alternating_assignment()
        assert solved is not None, "abstract map is not planar"
        x, _comp = solved
        anchors = {self.vertices[i]: x[i] for i in range(self.n)}
        check = self._build_template(identity, anchors)
        built = check.build([diagram.Tangle.crossing(0) for _ in range(self.n)])
        assert built.euler_ok()
        assert built.is_pseudoalternating() and not built.precrossing_indices()
        return anchors

    def template_for(
        self,
        perm: tuple[int, ...],
        reflections: tuple[int, ...] | None = None,
    ) -> PolyhedronTemplate:
        refl = dict(zip(self.vertices, reflections)) if reflections else None
        return self._build_template(perm, self.anchors, refl)

def pdet(symbol: str) -> int:
    return invariants.pseudodeterminant(diagram.build_diagram(symbol)).pseudodeterminant


def det(symbol: str) -> int:
    return invariants.determinant(diagram.build_diagram(symbol))


def colorable(symbol: str, p: int) -> bool:
    return invariants.is_colorable(diagram.build_diagram(symbol), p)


def row_pin(symbol: str, want: int):
    return lambda: pdet(symbol) == want


PINS = {
    # every 6* family row of the table at its base parameter point, plus the
    # two published colorings (mod 7 and mod 5) of the first members
    "6*": [
        ("r11", (1, 2, 3), row_pin("6*2.2 0.i", 7)),
        ("r11b", (1, 2, 3), row_pin("6*4.4 0.i", 13)),
        ("r12", (1, 2, 3), row_pin("6*2.2 0.i 0", 7)),
        ("r13", (1, 2, 3, 4, 5, 6), row_pin("6*2.2 0.i.-1.-1.-1", 5)),
        ("r14", (1, 2, 3, 4, 5, 6), row_pin("6*2.2 0.i 0.-1.-1.-1", 5)),
        ("r15", (1, 2, 6), row_pin("6*2.2 0::i", 5)),
        ("r16", (1, 2, 6), row_pin("6*2.2 0::i 0", 5)),
        ("r27", (1, 2, 4, 5), row_pin("6*i.2:i^2.2 0", 3)),
        ("r28", (1, 2, 4, 5), row_pin("6*i 0.2:i^2.2 0", 3)),
        ("r29", (2, 5, 6), row_pin("6*.i^2:-(2).2 0", 9)),
        ("r30", (2, 3, 4, 5, 6), row_pin("6*.2.i.-(2).2 0.i", 3)),
        ("r31", (2, 5, 6), row_pin("6*.2:i^2.2 0", 3)),
        ("r42", (1, 2, 4, 5), row_pin("6*2 0.i^2 0:2.i", 3)),
        ("r43", (1, 2, 4, 5), row_pin("6*2 0.i^2 0:2.i 0", 3)),
        ("r44", (1, 2, 3, 5), row_pin("6*2.i.2:2 0", 11)),
        ("r45", (1, 2, 3, 5), row_pin("6*2.i 0.2:2 0", 11)),
        ("r46", (1, 3, 5), row_pin("6*2:2:i^2 0", 5)),
        ("r58", (1, 3, 5), row_pin("6*i^2 0:2 0:2 0", 7)),
        ("r59", (1, 2, 3, 5), row_pin("6*2 0.i.2 0:2 0", 7)),
        ("r60", (1, 2, 3, 5), row_pin("6*2 0.i 0.2 0:2 0", 7)),
        ("mod7", (1, 2, 3), lambda: colorable("6*2.2 0.i", 7)),
        ("mod5", (1, 2, 6), lambda: colorable("6*2.2 0.1.1.1.i", 5)),
    ],
    "8*": [
        ("r17", (1, 5), row_pin("8*i::i", 3)),
        ("r17b", (1, 5), row_pin("8*i^3::i", 3)),
        ("r18", (1, 5), row_pin("8*i 0::i", 3)),
        ("r19", (1, 5), row_pin("8*i 0::i 0", 3)),
        ("r33", (1, 5), row_pin("8*i^2 0::i", 3)),
        ("r34", (1, 5), row_pin("8*i^2 0::i 0", 3)),
        ("fig mod3", (1, 5), lambda: colorable("8*i.1.1.1.i.1.1.1", 3)),
        ("fig res", (1, 5), lambda: colorable("8*i.1.1.1.-1.1.1.1", 3)),
        ("r35", (1, 5, 6, 7, 8), row_pin("8*i^2 0::i.-1.-1.-1", 9)),
        ("r36", (1, 5, 6, 7, 8), row_pin("8*i^2 0::i 0.-1.-1.-1", 9)),
        ("r37", tuple(range(1, 9)), row_pin("8*2 0.-1.i.-1.-1.-1.i.-1", 9)),
        ("r38", tuple(range(1, 9)), row_pin("8*2 0.-1.i 0.-1.-1.-1.i.-1", 9)),
        ("r39", tuple(range(1, 9)), row_pin("8*2 0.-1.i 0.-1.-1.-1.i 0.-1", 9)),
        ("thm4 ex", tuple(range(1, 9)), row_pin("8*i^2 0::i.-1.-1.-1", 9)),
    ],
    "9*": [
        ("dot-i", (2,), row_pin("9*.i", 15)),
        ("r47", (1, 9), row_pin("9*i::::i", 5)),
        ("r47b", (1, 9), row_pin("9*i^3::::i", 5)),
        ("r48", (1, 9), row_pin("9*i 0::::i", 5)),
        ("r49", (1, 9), row_pin("9*i 0::::i 0", 5)),
        ("r50", (2, 5, 8), row_pin("9*.i:.i:.i", 3)),
        ("r51", (2, 5, 8), row_pin("9*.i 0:.i:.i", 3)),
        ("r52", (2, 5, 8), row_pin("9*.i 0:.i 0:.i", 3)),
        ("r53", (2, 5, 8), row_pin("9*.i 0:.i 0:.i 0", 3)),
        ("r54", (2, 3, 5, 6, 8, 9), row_pin("9*.i.-1:i.-1:i.-1", 9)),
        ("r55", (2, 3, 5, 6, 8, 9), row_pin("9*.i 0.-1:i.-1:i.-1", 9)),
        ("r56", (2, 3, 5, 6, 8, 9), row_pin("9*.i 0.-1:i 0.-1:i.-1", 9)),
        ("r57", (2, 3, 5, 6, 8, 9), row_pin("9*.i 0.-1:i 0.-1:i 0.-1", 9)),
    ],
}

# The drawing convention the values pin down: positions run along a
# Hamiltonian cycle (closed for even vertex counts, open for 9*) and the
# corner frames alternate handedness position by position.
ALTERNATING_REFLECTIONS = {
    "6*": (1, 0, 1, 0, 1, 0),
    "8*": (1, 0, 1, 0, 1, 0, 1, 0),
    "9*": (1, 0, 1, 0, 1, 0, 1, 0, 1),
}


def candidate_numberings(ms: MapSearch, closed: bool):
    if ms.key == "9*":
        # positions run in three sectors (outer, middle, inner) around the
        # drum; consecutive positions within a sector are adjacent
        neigh = {v: set(ms.rot[v]) for v in ms.vertices}
        out = []
        for p in itertools.permutations(ms.vertices):
            if all(p[i + 1] in neigh[p[i]] for i in (0, 1, 3, 4, 6, 7)):
                out.append(p)
        return out
    neigh = {v: set(ms.rot[v]) for v in ms.vertices}
    span = ms.n if closed else ms.n - 1
    return [
        p
        for p in itertools.permutations(ms.vertices)
        if all(p[(i + 1) % ms.n] in neigh[p[i]] for i in range(span))
    ]


def search_polyhedron(key: str) -> PolyhedronTemplate:
    ms = MapSearch(key)
    pattern = ALTERNATING_REFLECTIONS[key]
    survivors = []
    for closed in (True, False):
        for perm in candidate_numberings(ms, closed):
            refl = [0] * ms.n
            for i, v in enumerate(perm):
                refl[v] = pattern[i]
            template = ms.template_for(perm, tuple(refl))
            register_template(template)
            if all(check() for _name, _pos, check in PINS[key]):
                survivors.append((perm, tuple(refl)))
        if survivors:
            break
    if not survivors:
        raise SystemExit(f"{key}: no numbering satisfies the pins")
    perm, refl = sorted(survivors)[0]
    print(f"{key}: {len(survivors)} numberings pass all {len(PINS[key])} pins; frozen {perm}")
    return ms.template_for(perm, refl)


def main() -> None:
    out: dict[str, PolyhedronTemplate] = {}
    one_star = PolyhedronTemplate("1*", 1, (((1, "nw"), (1, "ne")), ((1, "sw"), (1, "se"))))
    one_star.validate()
    out["1*"] = one_star

    for key, want in (("6*", 16), ("8*", 45), ("9*", 75)):
        ms = MapSearch(key)
        register_template(ms.template_for(tuple(ms.vertices)))
        got = det(key)
        assert got == want, f"{key} all-ones determinant {got} != {want}"
        print(f"{key} all-ones determinant: {got}")
        out[key] = search_polyhedron(key)

    path = Path(__file__).resolve().parent.parent / "src" / "pseudolink" / "data" / "polyhedra.json"
    payload = {"version": 1, "templates": [out[k].to_dict() for k in ("1*", "6*", "8*", "9*")]}
    path.write_text(json.dumps(payload, indent=1) + "\n")
    print("wrote", path)


if __name__ == "__main__":
    main()
