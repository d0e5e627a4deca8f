"""Oriented link diagrams, their resolutions and the cube of smoothings."""

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from app.diagram.pd import Crossing, PDCode, read_pd
from app.exceptions import (
    ArcMultiplicityError,
    ComplexConstructionError,
    DiagramError,
    DiagramTooLargeError,
    InconsistentOrientationError,
    VertexLengthError,
)
from app.settings import get_settings

End = Tuple[int, int]  # (crossing index, position 0..3)
Vertex = Tuple[int, ...]

# position -> partner position, for the 0- and 1-smoothing
SMOOTHING_PARTNER = {
    0: (1, 0, 3, 2),
    1: (3, 2, 1, 0),
}


@dataclass(frozen=True, eq=False)
class LinkDiagram:
    """A validated, oriented PD diagram.

    ``ends[arc]`` is ``(tail, head)``: where the arc leaves and where it enters
    a crossing when traversed along the link orientation. Components are arc
    tuples in traversal order, each starting at its least label, ordered by
    that label.
    """

    pd: PDCode
    signs: Tuple[int, ...]
    components: Tuple[Tuple[int, ...], ...]
    ends: Mapping[int, Tuple[End, End]]
    crossing_components: Tuple[Tuple[int, int], ...]  # (under, over)

    @property
    def crossings(self) -> Tuple[Crossing, ...]:
        return self.pd.crossings

    @property
    def n_crossings(self) -> int:
        return len(self.pd.crossings)

    @property
    def n_plus(self) -> int:
        return sum(1 for s in self.signs if s > 0)

    @property
    def n_minus(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    @property
    def writhe(self) -> int:
        return self.n_plus - self.n_minus

    @property
    def k(self) -> int:
        return len(self.components)

    @property
    def gamma(self) -> int:
        return self.k % 2

    @property
    def is_knot(self) -> bool:
        return self.k == 1

    @property
    def arcs(self) -> Tuple[int, ...]:
        return self.pd.arcs

    @cached_property
    def arc_component(self) -> Dict[int, int]:
        return {a: i for i, comp in enumerate(self.components) for a in comp}

    @cached_property
    def resolutions(self) -> Dict[Vertex, "Resolution"]:
        """Every vertex of the cube, in lexicographic order."""
        limit = get_settings().max_crossings
        if self.n_crossings > limit:
            raise DiagramTooLargeError(
                f"Diagram has {self.n_crossings} crossings; the limit is {limit} "
                "(KNOTREADER_MAX_CROSSINGS)"
            )
        out = {v: resolve(self, v) for v in cube_vertices(self.n_crossings)}
        logging.debug("Resolved %d cube vertices", len(out))
        return out

    def __repr__(self) -> str:
        return (
            f"LinkDiagram({self.pd.to_text()}, k={self.k}, "
            f"n+={self.n_plus}, n-={self.n_minus})"
        )


@dataclass(frozen=True, eq=False)
class Resolution:
    """A complete smoothing: circles as arc tuples in traversal order.

    ``traversals`` keeps, per circle, whether each arc is run along
    (``True``) or against the link orientation.
    """

    vertex: Vertex
    traversals: Tuple[Tuple[Tuple[int, bool], ...], ...]
    arc_circle: Mapping[int, int]

    @property
    def circles(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(a for a, _ in t) for t in self.traversals)

    @property
    def n_circles(self) -> int:
        return len(self.traversals)

    @property
    def height(self) -> int:
        return sum(self.vertex)


@dataclass(frozen=True)
class CubeEdge:
    tail: Vertex
    head: Vertex
    crossing: int
    kind: str  # "merge" or "split"
    tail_active: Tuple[int, ...]
    head_active: Tuple[int, ...]
    passive: Tuple[Tuple[int, int], ...]

    @property
    def circle_map(self) -> Tuple[Tuple[int, int], ...]:
        """Every (tail circle, head circle) incidence, passive and active."""
        active = tuple(itertools.product(self.tail_active, self.head_active))
        return tuple(sorted(self.passive + active))


def cube_vertices(n: int) -> List[Vertex]:
    return list(itertools.product((0, 1), repeat=n))


# --- construction --------------------------------------------------------------


def _collect_ends(crossings: Sequence[Crossing]) -> Dict[int, List[End]]:
    ends: Dict[int, List[End]] = {}
    for ci, x in enumerate(crossings):
        for p, arc in enumerate(x):
            ends.setdefault(arc, []).append((ci, p))
    return ends


def _walk(crossings, ends, start_arc: int, start_tail: End) -> List[Tuple[int, End, End]]:
    """Follow a strand straight through crossings until it closes up."""
    path = []
    arc, tail = start_arc, start_tail
    for _ in range(len(ends) + 1):
        first, second = ends[arc]
        head = second if tail == first else first
        path.append((arc, tail, head))
        ci, q = head
        out = (ci, (q + 2) % 4)
        arc, tail = crossings[ci][out[1]], out
        if (arc, tail) == (start_arc, start_tail):
            return path
    raise InconsistentOrientationError("Inconsistent orientation: strand does not close up")


def _orient_component(
    crossings, ends, arcs: List[int], head_hint: Optional[Mapping[int, End]]
) -> List[Tuple[int, End, End]]:
    members = set(arcs)
    for ci, x in enumerate(crossings):
        if x[2] in members:
            return _walk(crossings, ends, x[2], (ci, 2))

    # No under passage: orient so that labels increase.
    low = arcs[0]
    if head_hint and low in head_hint:
        first, second = ends[low]
        tail = first if head_hint[low] == second else second
        return _walk(crossings, ends, low, tail)
    walks = [_walk(crossings, ends, low, tail) for tail in ends[low]]
    for path in walks:
        if len(path) == 1 or path[1][0] == low + 1:
            return path
    return walks[0]


def _check_consecutive(path: List[Tuple[int, End, End]]) -> Tuple[int, ...]:
    labels = [arc for arc, _, _ in path]
    start = labels.index(min(labels))
    labels = labels[start:] + labels[:start]
    low, high = labels[0], max(labels)
    for prev, nxt in zip(labels, labels[1:] + labels[:1]):
        if nxt != prev + 1 and not (prev == high and nxt == low):
            raise InconsistentOrientationError(
                f"Inconsistent orientation: arc {nxt} follows arc {prev} along a component"
            )
    return tuple(labels)


def build_diagram(code: PDCode, head_hint: Optional[Mapping[int, End]] = None) -> LinkDiagram:
    """Validate a PD code and orient it by tracing strands."""
    from app.diagram.planar import check_planar

    if not code.crossings:
        loops = tuple((a,) for a in code.arcs)
        return LinkDiagram(code, (), loops, {}, ())

    crossings = code.crossings
    raw_ends = _collect_ends(crossings)
    for arc in sorted(raw_ends):
        if len(raw_ends[arc]) != 2:
            raise ArcMultiplicityError(
                f"arc multiplicity: arc {arc} appears {len(raw_ends[arc])} time(s), expected 2"
            )

    strands = nx.Graph()
    strands.add_nodes_from(raw_ends)
    for x in crossings:
        strands.add_edge(x[0], x[2])
        strands.add_edge(x[1], x[3])
    pieces = sorted((sorted(c) for c in nx.connected_components(strands)), key=lambda c: c[0])

    components = []
    ends: Dict[int, Tuple[End, End]] = {}
    over_in: Dict[int, int] = {}
    for arcs in pieces:
        path = _orient_component(crossings, raw_ends, arcs, head_hint)
        for arc, tail, head in path:
            if tail[1] == 0 or head[1] == 2:
                raise InconsistentOrientationError(
                    f"Inconsistent orientation: arc {arc} runs against the under-strand "
                    f"at crossing {head[0] + 1 if head[1] == 2 else tail[0] + 1}"
                )
            if head[1] in (1, 3):
                over_in[head[0]] = head[1]
            ends[arc] = (tail, head)
        components.append(_check_consecutive(path))

    arc_component = {a: i for i, comp in enumerate(components) for a in comp}
    signs = tuple(1 if over_in[ci] == 3 else -1 for ci in range(len(crossings)))
    crossing_components = tuple((arc_component[x[0]], arc_component[x[1]]) for x in crossings)
    diagram = LinkDiagram(code, signs, tuple(components), ends, crossing_components)
    check_planar(diagram)
    return diagram


def parse_pd(text: str) -> LinkDiagram:
    diagram = build_diagram(read_pd(text))
    logging.debug(
        "Parsed %s: %d crossings, %d component(s)",
        diagram.pd.to_text(),
        diagram.n_crossings,
        diagram.k,
    )
    return diagram


def normalized_pd(d: LinkDiagram) -> str:
    return d.pd.to_text()


# --- interrogation ---------------------------------------------------------------


def resolve(d: LinkDiagram, vertex: Iterable[int]) -> Resolution:
    vertex = tuple(int(b) for b in vertex)
    if len(vertex) != d.n_crossings:
        raise VertexLengthError(
            f"Vertex has length {len(vertex)} but the diagram has {d.n_crossings} crossings"
        )
    if any(b not in (0, 1) for b in vertex):
        raise VertexLengthError("Vertex entries must be 0 or 1")

    if not d.crossings:
        traversals = tuple(((a, True),) for a in d.arcs)
        return Resolution(vertex, traversals, {a: i for i, a in enumerate(d.arcs)})

    visited = set()
    traversals = []
    for start in d.arcs:
        if start in visited:
            continue
        path = []
        arc, entry = start, d.ends[start][0]
        while True:
            visited.add(arc)
            tail, head = d.ends[arc]
            forward = entry == tail
            path.append((arc, forward))
            ci, q = head if forward else tail
            partner = SMOOTHING_PARTNER[vertex[ci]][q]
            arc, entry = d.crossings[ci][partner], (ci, partner)
            if arc == start and entry == d.ends[start][0]:
                break
        traversals.append(tuple(path))

    arc_circle = {a: i for i, path in enumerate(traversals) for a, _ in path}
    return Resolution(vertex, tuple(traversals), arc_circle)


def _edge(d: LinkDiagram, tail: Resolution, head: Resolution, c: int) -> CubeEdge:
    at = d.crossings[c]
    tail_active = tuple(sorted({tail.arc_circle[a] for a in at}))
    head_active = tuple(sorted({head.arc_circle[a] for a in at}))
    if len(tail_active) == 2 and len(head_active) == 1:
        kind = "merge"
    elif len(tail_active) == 1 and len(head_active) == 2:
        kind = "split"
    else:
        raise ComplexConstructionError(
            f"Edge {tail.vertex}->{head.vertex} changes {len(tail_active)} circle(s) "
            f"into {len(head_active)}"
        )
    passive = tuple(
        (i, head.arc_circle[circle[0]])
        for i, circle in enumerate(tail.circles)
        if i not in tail_active
    )
    return CubeEdge(tail.vertex, head.vertex, c, kind, tail_active, head_active, passive)


def cube_edges(d: LinkDiagram) -> List[CubeEdge]:
    """All n * 2^(n-1) edges, ordered by tail vertex then crossing."""
    resolutions = d.resolutions
    edges = []
    for v, res in resolutions.items():
        for c, bit in enumerate(v):
            if bit == 0:
                w = v[:c] + (1,) + v[c + 1 :]
                edges.append(_edge(d, res, resolutions[w], c))
    return edges


def linking_matrix(d: LinkDiagram) -> np.ndarray:
    m = np.zeros((d.k, d.k), dtype=np.int64)
    for sign, (under, over) in zip(d.signs, d.crossing_components):
        if under != over:
            m[under, over] += sign
            m[over, under] += sign
    if np.any(m % 2):
        raise InconsistentOrientationError("Inconsistent orientation: odd crossing count between components")
    return m // 2


def _flips(d: LinkDiagram, choice: Sequence[int]) -> Tuple[int, ...]:
    choice = tuple(int(b) & 1 for b in choice)
    if len(choice) != d.k:
        raise DiagramError(
            f"Orientation choice has length {len(choice)} but the diagram has {d.k} components"
        )
    return choice


def oriented_signs(d: LinkDiagram, choice: Sequence[int]) -> Tuple[int, ...]:
    """Crossing signs after reversing the components flagged in ``choice``."""
    flips = _flips(d, choice)
    return tuple(
        s if flips[under] == flips[over] else -s
        for s, (under, over) in zip(d.signs, d.crossing_components)
    )


def orientation_resolution(d: LinkDiagram, choice: Sequence[int]) -> Resolution:
    vertex = tuple(0 if s > 0 else 1 for s in oriented_signs(d, choice))
    return resolve(d, vertex)


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Change every crossing, keeping arc labels and orientation."""
    if not d.crossings:
        return d
    crossings = []
    shift = []
    for (a, b, c, e), sign in zip(d.crossings, d.signs):
        if sign > 0:
            crossings.append((e, a, b, c))
            shift.append(1)
        else:
            crossings.append((b, c, e, a))
            shift.append(3)
    hint = {arc: (head[0], (head[1] + shift[head[0]]) % 4) for arc, (_, head) in d.ends.items()}
    return build_diagram(PDCode(tuple(crossings)), head_hint=hint)
