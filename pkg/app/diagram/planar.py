"""Planar data read off the PD rotation system.

A dart ``(crossing, position)`` is the arc leaving ``crossing`` at
``position``; the face it bounds is the one on its left. Corner ``(p, p+1)``
of a crossing lies in the face of dart ``(crossing, p)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Dict, List, Sequence, Tuple

import networkx as nx

from app.exceptions import ComplexConstructionError, NonPlanarError

if TYPE_CHECKING:
    from app.diagram.link import LinkDiagram, Resolution

Dart = Tuple[int, int]

# corners joined by each smoothing, named by the dart whose face holds them
_JOINED_CORNERS = {0: (1, 3), 1: (0, 2)}


def other_end(d: "LinkDiagram", dart: Dart) -> Dart:
    tail, head = d.ends[d.crossings[dart[0]][dart[1]]]
    return head if dart == tail else tail


def trace_faces(d: "LinkDiagram") -> Tuple[Tuple[Dart, ...], ...]:
    seen = set()
    faces = []
    for ci in range(d.n_crossings):
        for p in range(4):
            dart = (ci, p)
            if dart in seen:
                continue
            face = []
            while dart not in seen:
                seen.add(dart)
                face.append(dart)
                y, q = other_end(d, dart)
                dart = (y, (q + 3) % 4)
            faces.append(tuple(face))
    return tuple(faces)


def crossing_pieces(d: "LinkDiagram") -> List[List[int]]:
    """Connected pieces of the projection, as sorted crossing indices."""
    g = nx.Graph()
    g.add_nodes_from(range(d.n_crossings))
    for tail, head in d.ends.values():
        g.add_edge(tail[0], head[0])
    return sorted((sorted(c) for c in nx.connected_components(g)), key=lambda c: c[0])


def check_planar(d: "LinkDiagram") -> None:
    if not d.crossings:
        return
    faces = trace_faces(d)
    for piece in crossing_pieces(d):
        members = set(piece)
        n_faces = sum(1 for f in faces if f[0][0] in members)
        if n_faces != len(piece) + 2:
            raise NonPlanarError(
                f"PD code is not planar: a piece with {len(piece)} crossing(s) "
                f"bounds {n_faces} faces, expected {len(piece) + 2}"
            )


@dataclass(frozen=True)
class PlanarData:
    faces: Tuple[Tuple[Dart, ...], ...]
    face_of: Dict[Dart, int]
    outer: Tuple[int, ...]  # outer face of each piece


def planar_data(d: "LinkDiagram") -> PlanarData:
    faces = trace_faces(d)
    face_of = {dart: i for i, f in enumerate(faces) for dart in f}
    outer = []
    for piece in crossing_pieces(d):
        members = set(piece)
        candidates = [i for i, f in enumerate(faces) if f[0][0] in members]
        outer.append(max(candidates, key=lambda i: (len(faces[i]), [-x for x in min(faces[i])])))
    return PlanarData(faces, face_of, tuple(outer))


@dataclass(frozen=True)
class CirclePlacement:
    depth: int
    clockwise: bool

    @property
    def group_a(self) -> bool:
        return (self.depth + int(self.clockwise)) % 2 == 0


def circle_placements(
    d: "LinkDiagram", resolution: "Resolution", choice: Sequence[int]
) -> List[CirclePlacement]:
    """Nesting depth and rotation sense of each circle.

    Circles are oriented by the link orientation with the components flagged in
    ``choice`` reversed; every circle of ``resolution`` must inherit a
    consistent orientation from it.
    """
    flips = tuple(int(b) & 1 for b in choice)

    if not d.crossings:
        return [CirclePlacement(depth=0, clockwise=bool(flips[i])) for i in range(resolution.n_circles)]

    data = planar_data(d)
    regions = nx.Graph()
    regions.add_nodes_from(range(len(data.faces)))
    for ci, bit in enumerate(resolution.vertex):
        p, q = _JOINED_CORNERS[bit]
        regions.add_edge(data.face_of[(ci, p)], data.face_of[(ci, q)])
    for a, b in zip(data.outer, data.outer[1:]):
        regions.add_edge(a, b)
    region_of = {}
    for r, comp in enumerate(nx.connected_components(regions)):
        for face in comp:
            region_of[face] = r
    outer_region = region_of[data.outer[0]]

    tree = nx.MultiGraph()
    tree.add_nodes_from(set(region_of.values()))
    sides = []
    for path in resolution.traversals:
        along = {forward != bool(flips[d.arc_component[arc]]) for arc, forward in path}
        if len(along) != 1:
            raise ComplexConstructionError(
                "Resolution is not compatible with the chosen orientation"
            )
        arc, forward = path[0]
        tail, head = d.ends[arc]
        start, end = (tail, head) if forward else (head, tail)
        left, right = region_of[data.face_of[start]], region_of[data.face_of[end]]
        tree.add_edge(left, right)
        sides.append((left, right, along.pop()))

    if tree.number_of_edges() != tree.number_of_nodes() - 1 or not nx.is_tree(nx.Graph(tree)):
        raise ComplexConstructionError("Circles do not cut the sphere into a tree of regions")
    distance = nx.single_source_shortest_path_length(tree, outer_region)

    placements = []
    for left, right, along in sides:
        depth = min(distance[left], distance[right])
        counterclockwise = distance[right] < distance[left]
        if not along:
            counterclockwise = not counterclockwise
        placements.append(CirclePlacement(depth=depth, clockwise=not counterclockwise))
    return placements
