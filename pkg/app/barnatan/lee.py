"""Orientation generators of the u = 1 theory.

Every orientation of the link picks out one resolution (smooth each crossing
the oriented way). Labelling its circles a = x + 1 or b = x by the Group A/B
rule gives a cycle, and the 2^k cycles span the homology.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterable, List, Optional, Tuple

from pydantic import BaseModel, Field

from app.complexes.algebra import change_of_basis
from app.complexes.cube import BigradedComplex, build_khovanov
from app.complexes.filtered import DiagonalComplex, build_diagonal, filtered_from_complex
from app.diagram.link import LinkDiagram, linking_matrix, orientation_resolution
from app.diagram.planar import circle_placements
from app.exceptions import ConsistencyError, DiagramError, TheoryConfigError
from app.linalg.gf2 import GF2Matrix, image_basis, kernel_basis, rank
from app.linalg.subquotient import subquotient
from app.spectral.filtered import FilteredComplex

HARMONIC_BASES = ("diagonal", "monomial")


class OrientationClass(BaseModel):
    flips: Tuple[int, ...] = Field(description="1 for every component whose orientation is reversed")
    degree: int = Field(description="2 * sum of lk(L_l, L_m) over l flipped, m kept")

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(i for i, bit in enumerate(self.flips) if bit)


def _degree(lk, flips: Tuple[int, ...]) -> int:
    return 2 * sum(
        int(lk[a, b])
        for a, fa in enumerate(flips)
        for b, fb in enumerate(flips)
        if fa and not fb
    )


def orientation_classes(d: LinkDiagram) -> List[OrientationClass]:
    """All 2^k subsets of components, each with the degree of its generator."""
    lk = linking_matrix(d)
    classes = []
    for flips in product((0, 1), repeat=d.k):
        degree = _degree(lk, flips)
        complement = _degree(lk, tuple(1 - b for b in flips))
        if degree != complement:
            raise ConsistencyError(
                "orientation degree is not symmetric under complement",
                witness={"flips": list(flips), "degree": degree, "complement": complement},
            )
        classes.append(OrientationClass(flips=flips, degree=degree))
    return classes


def theorem31_dims(d: LinkDiagram) -> Dict[int, int]:
    """Dimension of the u = 1 theory per degree, counted from linking numbers."""
    counts = Counter(c.degree for c in orientation_classes(d))
    return dict(sorted(counts.items()))


def _flips_for(d: LinkDiagram, subset: Iterable[int]) -> Tuple[int, ...]:
    members = set(subset)
    bad = [m for m in members if not 0 <= m < d.k]
    if bad:
        raise DiagramError(f"Component {bad[0]} is out of range; the diagram has {d.k} components")
    return tuple(int(i in members) for i in range(d.k))


@dataclass(frozen=True, eq=False)
class LeeGenerator:
    flips: Tuple[int, ...]
    degree: int
    vertex: Tuple[int, ...]
    state: Tuple[int, int]  # (vertex index, label) in the a/b basis, bit set = b
    chain: GF2Matrix  # one row in the monomial basis of the filtered complex

    @property
    def terms(self) -> int:
        return self.chain.nnz()


class _LeeContext:
    def __init__(self, d: LinkDiagram, c: Optional[BigradedComplex] = None):
        self.diagram = d
        self.complex = c if c is not None else build_khovanov(d)
        self.filtered: FilteredComplex = filtered_from_complex(self.complex)
        self.diagonal: DiagonalComplex = build_diagonal(self.complex)
        self.vertex_index = {v: vi for vi, v in enumerate(self.complex.basis.vertices)}

    def generator(self, flips: Tuple[int, ...]) -> LeeGenerator:
        d = self.diagram
        basis = self.complex.basis
        vertex = orientation_resolution(d, flips).vertex
        vi = self.vertex_index[vertex]
        resolution = d.resolutions[vertex]
        placements = circle_placements(d, resolution, flips)
        label = sum(1 << t for t, place in enumerate(placements) if not place.group_a)
        degree = resolution.height - d.n_minus

        expected = _degree(linking_matrix(d), flips)
        if degree != expected:
            raise ConsistencyError(
                "orientation generator sits in the wrong degree",
                witness={"flips": list(flips), "degree": degree, "expected": expected},
            )

        position = self.filtered.positions[degree]
        columns = [position[(vi, m)] for m in change_of_basis(label, basis.n_circles[vi])]
        chain = GF2Matrix.from_triplets(1, self.filtered.dim(degree), [(0, col) for col in columns])
        self._check(flips, degree, (vi, label), chain)
        return LeeGenerator(flips=flips, degree=degree, vertex=vertex, state=(vi, label), chain=chain)

    def _check(self, flips, degree: int, state, chain: GF2Matrix) -> None:
        witness = {"flips": list(flips), "degree": degree, "state": list(state)}
        if not (chain @ self.filtered.differential(degree).transpose()).is_zero():
            raise ConsistencyError("orientation generator is not a cycle", witness=witness)

        col = self.diagonal.states[degree].index(state)
        if self.diagonal.differential(degree).select_cols([col]).nnz():
            raise ConsistencyError("diagonal differential does not vanish on the generator", witness=witness)
        if self.diagonal.differential(degree - 1).select_rows([col]).nnz():
            raise ConsistencyError("adjoint differential does not vanish on the generator", witness=witness)


def lee_generators(
    d: LinkDiagram,
    subset: Iterable[int] = (),
    complex_: Optional[BigradedComplex] = None,
) -> LeeGenerator:
    """The generator of the orientation reversing the components in ``subset`` (0-based)."""
    return _LeeContext(d, complex_).generator(_flips_for(d, subset))


def all_lee_generators(d: LinkDiagram, complex_: Optional[BigradedComplex] = None) -> List[LeeGenerator]:
    ctx = _LeeContext(d, complex_)
    return [ctx.generator(c.flips) for c in orientation_classes(d)]


def lee_class_rank(d: LinkDiagram, generators: Optional[List[LeeGenerator]] = None) -> Dict[int, int]:
    """Rank of the generators' classes in the u = 1 homology, per degree."""
    fc = filtered_from_complex(build_khovanov(d))
    generators = generators if generators is not None else all_lee_generators(d)
    by_degree: Dict[int, List[GF2Matrix]] = {}
    for g in generators:
        by_degree.setdefault(g.degree, []).append(g.chain)
    out = {}
    for n, chains in sorted(by_degree.items()):
        cycles = kernel_basis(fc.differential(n))
        boundaries = image_basis(fc.differential(n - 1))
        homology = subquotient(cycles, boundaries)
        out[n] = rank(homology.project(GF2Matrix.vstack(chains, cols=fc.dim(n))))
    return out


def harmonic_dims(
    d: LinkDiagram,
    complex_: Optional[BigradedComplex] = None,
    basis: str = "diagonal",
) -> Dict[int, int]:
    """dim(ker d ∩ ker d*) per degree, d* the transpose.

    ``basis`` is where the transpose is taken: the a/b states (``diagonal``)
    or the monomials of the filtered complex (``monomial``).
    """
    c = complex_ if complex_ is not None else build_khovanov(d)
    if basis == "diagonal":
        cx = build_diagonal(c)
        degrees = sorted(cx.states)
    elif basis == "monomial":
        cx = filtered_from_complex(c)
        degrees = cx.degrees
    else:
        raise TheoryConfigError(f"Unknown basis: {basis}. Use one of {list(HARMONIC_BASES)}")
    out = {}
    for n in degrees:
        stacked = GF2Matrix.vstack(
            [cx.differential(n), cx.differential(n - 1).transpose()], cols=cx.dim(n)
        )
        value = cx.dim(n) - rank(stacked)
        if value:
            out[n] = value
    logging.debug("Harmonic dimensions (%s basis) %s", basis, out)
    return out
