"""Basic polyhedron templates and substitution.

A template is a 4-regular planar map with numbered vertices; each vertex
stores which of its four edge-ends plays NW, NE, SE, SW for the tangle
substituted there.  Templates are loaded from the packaged JSON file and
the registry can be extended at runtime from files in the same format:

    {"key": "6*", "vertices": 6,
     "edges": [[[1, "ne"], [2, "nw"]], ...]}

Every (vertex, corner) pair appears exactly once across the edge list.
The corner orientations in the shipped file are normalized so that filling
every vertex with the elementary tangle 1 yields an alternating diagram,
which is what the bare symbol of a basic polyhedron denotes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .diagram import PseudoDiagram, Tangle, _weld, build_tangle
from .errors import DiagramError, UnsupportedPolyhedron
from .notation import ConwayExpr, Polyhedral

CORNERS = ("nw", "ne", "se", "sw")


@dataclass(frozen=True)
class PolyhedronTemplate:
    key: str
    vertices: int
    edges: tuple[tuple[tuple[int, str], tuple[int, str]], ...]
    reflected: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.reflected:
            object.__setattr__(self, "reflected", (0,) * self.vertices)

    def validate(self) -> None:
        stubs = [(v, c) for edge in self.edges for v, c in edge]
        expected = {(v, c) for v in range(1, self.vertices + 1) for c in CORNERS}
        if len(stubs) != len(set(stubs)) or set(stubs) != expected:
            raise DiagramError(
                f"template {self.key!r}: every vertex corner must appear exactly once"
            )
        if len(self.reflected) != self.vertices:
            raise DiagramError(f"template {self.key!r}: one reflection flag per vertex")

    def build(self, slots: list[Tangle]) -> PseudoDiagram:
        """Substitute one tangle per vertex and close up.

        A reflected vertex receives its tangle transposed: the drawings
        these templates transcribe alternate the handedness of the
        substitution frame from one vertex to the next.
        """
        if len(slots) != self.vertices:
            raise DiagramError(
                f"template {self.key!r} needs {self.vertices} substituents, got {len(slots)}"
            )
        placed: list[Tangle] = []
        offset = 0
        nodes = []
        pair: dict[int, int] = {}
        loops = 0
        for tangle, flip in zip(slots, self.reflected):
            if flip:
                tangle = tangle.transpose()
            shifted = tangle.shifted(offset)
            offset = shifted.next_id
            placed.append(shifted)
            nodes.extend(shifted.nodes)
            pair.update(shifted.pair)
            loops += shifted.loops
        for (v1, c1), (v2, c2) in self.edges:
            loops += _weld(pair, placed[v1 - 1].corners[c1], placed[v2 - 1].corners[c2])
        return PseudoDiagram(nodes, pair, loops)

    def to_dict(self) -> dict:
        return {
            "key": self.key,
            "vertices": self.vertices,
            "reflected": list(self.reflected),
            "edges": [[[v1, c1], [v2, c2]] for (v1, c1), (v2, c2) in self.edges],
        }

    @staticmethod
    def from_dict(data: dict) -> "PolyhedronTemplate":
        template = PolyhedronTemplate(
            data["key"],
            int(data["vertices"]),
            tuple(
                ((int(e[0][0]), e[0][1]), (int(e[1][0]), e[1][1]))
                for e in data["edges"]
            ),
            tuple(int(x) for x in data.get("reflected", [])),
        )
        template.validate()
        return template


_REGISTRY: dict[str, PolyhedronTemplate] | None = None


def _load_registry() -> dict[str, PolyhedronTemplate]:
    global _REGISTRY
    if _REGISTRY is None:
        text = resources.files("pseudolink").joinpath("data/polyhedra.json").read_text()
        _REGISTRY = {}
        for entry in json.loads(text)["templates"]:
            template = PolyhedronTemplate.from_dict(entry)
            _REGISTRY[template.key] = template
    return _REGISTRY


def registered_keys() -> set[str]:
    return set(_load_registry())


def get_template(key: str) -> PolyhedronTemplate:
    registry = _load_registry()
    if key not in registry:
        raise UnsupportedPolyhedron(f"no basic polyhedron template for {key!r}")
    return registry[key]


def register_template(template: PolyhedronTemplate) -> None:
    template.validate()
    _load_registry()[template.key] = template


def register_from_file(path: str) -> list[str]:
    """Add templates from a JSON file; returns the keys registered."""
    with open(path) as fh:
        data = json.load(fh)
    entries = data["templates"] if isinstance(data, dict) else data
    keys = []
    for entry in entries:
        template = PolyhedronTemplate.from_dict(entry)
        register_template(template)
        keys.append(template.key)
    return keys


def build_polyhedral(expr: ConwayExpr) -> PseudoDiagram:
    if not isinstance(expr, Polyhedral):
        raise DiagramError("build_polyhedral needs a polyhedral expression")
    template = get_template(expr.key())
    slots = [build_tangle(slot) for slot in expr.slots]
    return template.build(slots)
