"""Bigraded cube-of-resolutions complexes over F2."""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from app.complexes.algebra import BETA, KHOVANOV, EdgeAlgebra
from app.diagram.link import CubeEdge, LinkDiagram, Vertex, cube_edges
from app.exceptions import BasepointError, ComplexConstructionError, NotAKnotError
from app.linalg.gf2 import GF2Matrix
from app.tables import Bigrading, DimTable, SignedPoly

State = Tuple[int, int]  # (vertex index, label)


@dataclass(frozen=True, eq=False)
class StateBasis:
    """Ordered basis of every chain group C^{i,j}.

    States are ``(vertex index, label)`` with bit ``t`` of the label set when
    circle ``t`` carries ``x``. Within a group, states are ordered by vertex
    (lexicographic) and then by label.
    """

    vertices: Tuple[Vertex, ...]
    n_circles: Tuple[int, ...]
    groups: Dict[Bigrading, Tuple[State, ...]]
    index: Dict[State, Tuple[Bigrading, int]]
    q_shift: int = 0
    marked: Optional[Tuple[int, ...]] = None  # marked circle per vertex

    def dim(self, key: Bigrading) -> int:
        return len(self.groups.get(key, ()))

    @property
    def size(self) -> int:
        return len(self.index)

    def degree_states(self, i: int) -> List[State]:
        """All states of homological degree ``i``, ordered by j then position."""
        return [s for key in sorted(self.groups) if key[0] == i for s in self.groups[key]]


def build_state_basis(d: LinkDiagram, basepoint: Optional[int] = None) -> StateBasis:
    resolutions = d.resolutions
    vertices = tuple(resolutions)
    groups: Dict[Bigrading, List[State]] = defaultdict(list)
    n_circles = []
    marked = [] if basepoint is not None else None
    q_shift = 1 if basepoint is not None else 0
    for vi, v in enumerate(vertices):
        res = resolutions[v]
        c = res.n_circles
        h = res.height
        n_circles.append(c)
        mark = res.arc_circle[basepoint] if basepoint is not None else None
        if marked is not None:
            marked.append(mark)
        i = h - d.n_minus
        for label in range(1 << c):
            if mark is not None and not label >> mark & 1:
                continue
            j = c - 2 * label.bit_count() + h + d.n_plus - 2 * d.n_minus + q_shift
            groups[(i, j)].append((vi, label))

    frozen = {key: tuple(groups[key]) for key in sorted(groups)}
    index = {s: (key, pos) for key, states in frozen.items() for pos, s in enumerate(states)}
    return StateBasis(
        vertices=vertices,
        n_circles=tuple(n_circles),
        groups=frozen,
        index=index,
        q_shift=q_shift,
        marked=tuple(marked) if marked is not None else None,
    )


def edges_by_tail(d: LinkDiagram, basis: StateBasis) -> Dict[int, List[Tuple[int, CubeEdge]]]:
    """Cube edges grouped by tail vertex index, each with its head vertex index."""
    position = {v: vi for vi, v in enumerate(basis.vertices)}
    out: Dict[int, List[Tuple[int, CubeEdge]]] = defaultdict(list)
    for edge in cube_edges(d):
        out[position[edge.tail]].append((position[edge.head], edge))
    return out


def assemble(
    basis: StateBasis,
    edges: Dict[int, List[Tuple[int, CubeEdge]]],
    algebra: EdgeAlgebra,
) -> Dict[Bigrading, GF2Matrix]:
    """Blocks ``C^{i,j} -> C^{i+di,j+dj}`` of the edge-sum map of ``algebra``.

    Raises if an image leaves the basis (closure) or lands outside the
    declared bidegree (grading contract).
    """
    di, dj = algebra.bidegree
    triplets: Dict[Bigrading, List[Tuple[int, int]]] = defaultdict(list)
    for key, states in basis.groups.items():
        target_key = (key[0] + di, key[1] + dj)
        for col, (vi, label) in enumerate(states):
            for head, edge in edges.get(vi, ()):
                for out in algebra.images(edge, label):
                    hit = basis.index.get((head, out))
                    if hit is None:
                        raise ComplexConstructionError(
                            f"{algebra.name} map leaves the basis at vertex "
                            f"{basis.vertices[head]} (label {out})"
                        )
                    if hit[0] != target_key:
                        raise ComplexConstructionError(
                            f"{algebra.name} entry {key} -> {hit[0]} violates bidegree {algebra.bidegree}"
                        )
                    triplets[key].append((hit[1], col))
    return {
        key: GF2Matrix.from_triplets(
            basis.dim((key[0] + di, key[1] + dj)), basis.dim(key), triplets.get(key, ())
        )
        for key in basis.groups
    }


@dataclass(frozen=True, eq=False)
class BigradedComplex:
    """Chain groups with the differential and beta stored block by block.

    ``d_blocks[(i, j)]`` maps C^{i,j} to C^{i+1,j}; ``beta_blocks[(i, j)]``
    maps C^{i,j} to C^{i+1,j+2}. Both act on column vectors.
    """

    diagram: LinkDiagram
    basis: StateBasis
    d_blocks: Dict[Bigrading, GF2Matrix]
    beta_blocks: Dict[Bigrading, GF2Matrix]
    basepoint: Optional[int] = None
    meta: Dict[str, int] = field(default_factory=dict)

    @property
    def gamma(self) -> int:
        return self.diagram.gamma

    @property
    def reduced(self) -> bool:
        return self.basepoint is not None

    @property
    def parity(self) -> int:
        """Residue of every occupied q-degree mod 2."""
        return (self.gamma + self.basis.q_shift) % 2

    @property
    def keys(self) -> List[Bigrading]:
        return list(self.basis.groups)

    def dim(self, i: int, j: int) -> int:
        return self.basis.dim((i, j))

    def dims(self) -> DimTable:
        return DimTable(entries={k: len(v) for k, v in self.basis.groups.items()})

    def d_block(self, i: int, j: int) -> GF2Matrix:
        block = self.d_blocks.get((i, j))
        return block if block is not None else GF2Matrix.zeros(self.dim(i + 1, j), self.dim(i, j))

    def beta_block(self, i: int, j: int) -> GF2Matrix:
        block = self.beta_blocks.get((i, j))
        return block if block is not None else GF2Matrix.zeros(self.dim(i + 1, j + 2), self.dim(i, j))

    def bounds(self) -> Tuple[int, int, int, int]:
        return self.dims().bounds()


def verify_complex(c: BigradedComplex) -> None:
    """Blockwise d^2 = 0, beta^2 = 0, d beta = beta d and the parity rule."""
    for i, j in c.keys:
        if (j - c.parity) % 2:
            raise ComplexConstructionError(f"Chain group at {(i, j)} has the wrong q-parity")
        if not (c.d_block(i + 1, j) @ c.d_block(i, j)).is_zero():
            raise ComplexConstructionError(f"d^2 != 0 at {(i, j)}")
        if not (c.beta_block(i + 1, j + 2) @ c.beta_block(i, j)).is_zero():
            raise ComplexConstructionError(f"beta^2 != 0 at {(i, j)}")
        left = c.d_block(i + 1, j + 2) @ c.beta_block(i, j)
        right = c.beta_block(i + 1, j) @ c.d_block(i, j)
        if left != right:
            raise ComplexConstructionError(f"d beta != beta d at {(i, j)}")


def _build(d: LinkDiagram, basepoint: Optional[int]) -> BigradedComplex:
    basis = build_state_basis(d, basepoint)
    edges = edges_by_tail(d, basis)
    c = BigradedComplex(
        diagram=d,
        basis=basis,
        d_blocks=assemble(basis, edges, KHOVANOV),
        beta_blocks=assemble(basis, edges, BETA),
        basepoint=basepoint,
        meta={"n_plus": d.n_plus, "n_minus": d.n_minus, "generators": basis.size},
    )
    verify_complex(c)
    logging.debug(
        "Built %s complex: %d generators in %d groups",
        "reduced" if basepoint is not None else "Khovanov",
        basis.size,
        len(basis.groups),
    )
    return c


def build_khovanov(d: LinkDiagram) -> BigradedComplex:
    return _build(d, None)


def check_basepoint(d: LinkDiagram, basepoint: Optional[int]) -> int:
    if not d.is_knot:
        raise NotAKnotError(f"Reduced theory needs a knot; the diagram has {d.k} components")
    if basepoint is None:
        return d.arcs[0]
    if basepoint not in d.arcs:
        raise BasepointError(f"Basepoint arc {basepoint} is not an arc of the diagram")
    return basepoint


def build_reduced(d: LinkDiagram, basepoint: Optional[int] = None) -> BigradedComplex:
    """The subcomplex of states whose marked circle carries x, q shifted by +1."""
    return _build(d, check_basepoint(d, basepoint))


def euler_characteristic(c: BigradedComplex) -> SignedPoly:
    return c.dims().euler_characteristic()
