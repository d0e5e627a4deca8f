"""Singly graded complexes built from the bigraded blocks.

Both the u = 1 theory and the graded Bar-Natan columns use d = ∂ + β on a
direct sum of chain groups; only the choice of summands and the filtration
level differ.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from app.complexes.algebra import DIAGONAL, change_of_basis
from app.complexes.cube import (
    BigradedComplex,
    State,
    build_khovanov,
    build_reduced,
    edges_by_tail,
)
from app.diagram.link import LinkDiagram
from app.exceptions import ComplexConstructionError
from app.linalg.gf2 import GF2Matrix
from app.spectral.filtered import FilteredComplex
from app.tables import Bigrading


def total_complex(
    c: BigradedComplex, base: int, floor: Optional[int] = None, name: str = "total"
) -> FilteredComplex:
    """Sum of the groups C^{i,q} with q ≡ base (mod 2) and q >= floor.

    The summand at q gets level (q - base) / 2; ∂ keeps the level and β
    raises it by one.
    """
    keys = [
        (i, q)
        for i, q in c.keys
        if (q - base) % 2 == 0 and (floor is None or q >= floor)
    ]
    by_degree: Dict[int, List[Bigrading]] = defaultdict(list)
    for key in sorted(keys, key=lambda k: (k[0], k[1])):
        by_degree[key[0]].append(key)

    offsets: Dict[Bigrading, int] = {}
    levels: Dict[int, np.ndarray] = {}
    labels: Dict[int, Tuple[State, ...]] = {}
    for i, ks in by_degree.items():
        run, lv, lab = 0, [], []
        for key in ks:
            offsets[key] = run
            run += c.dim(*key)
            lv.extend([(key[1] - base) // 2] * c.dim(*key))
            lab.extend(c.basis.groups[key])
        levels[i] = np.asarray(lv, dtype=np.int64)
        labels[i] = tuple(lab)

    differentials: Dict[int, GF2Matrix] = {}
    for i, ks in by_degree.items():
        placements = []
        for key in ks:
            col = offsets[key]
            down = (i + 1, key[1])
            up = (i + 1, key[1] + 2)
            if down in offsets:
                placements.append((offsets[down], col, c.d_block(*key)))
            if up in offsets:
                placements.append((offsets[up], col, c.beta_block(*key)))
        rows = len(levels.get(i + 1, ()))
        differentials[i] = GF2Matrix.from_blocks(rows, len(levels[i]), placements)

    fc = FilteredComplex(levels=levels, differentials=differentials, labels=labels, name=name)
    fc.validate()
    return fc


def filtered_from_complex(c: BigradedComplex) -> FilteredComplex:
    name = "reduced filtered" if c.reduced else "filtered"
    return total_complex(c, base=c.parity, name=name)


def build_filtered(d: LinkDiagram, reduced: bool = False, basepoint: Optional[int] = None) -> FilteredComplex:
    """The u = 1 complex with level k = (q - γ) / 2 (reduced: (q - γ - 1) / 2)."""
    c = build_reduced(d, basepoint) if reduced else build_khovanov(d)
    return filtered_from_complex(c)


def barnatan_column(c: BigradedComplex, j: int) -> FilteredComplex:
    """⊕_{p>=0} C̄^{*, j+2p} with level p; empty when j has the wrong parity."""
    if (j - c.parity) % 2:
        return FilteredComplex(levels={}, differentials={}, name=f"BN column {j}")
    return total_complex(c, base=j, floor=j, name=f"BN column {j}")


def build_barnatan_column(d: LinkDiagram, j: int) -> FilteredComplex:
    return barnatan_column(build_khovanov(d), j)


@dataclass(frozen=True, eq=False)
class DiagonalComplex:
    """The u = 1 complex written in the a/b state basis.

    States use the same ``(vertex, label)`` pairs and the same per-degree
    order as ``filtered_from_complex``; a set bit now means the circle carries b.
    """

    source: BigradedComplex
    states: Dict[int, Tuple[State, ...]]
    differentials: Dict[int, GF2Matrix]

    def dim(self, i: int) -> int:
        return len(self.states.get(i, ()))

    def differential(self, i: int) -> GF2Matrix:
        m = self.differentials.get(i)
        return m if m is not None else GF2Matrix.zeros(self.dim(i + 1), self.dim(i))

    def to_monomial(self, i: int) -> GF2Matrix:
        """Change of basis on degree ``i``; it is its own inverse."""
        states = self.states.get(i, ())
        position = {s: p for p, s in enumerate(states)}
        entries = []
        for col, (vi, label) in enumerate(states):
            for other in change_of_basis(label, self.source.basis.n_circles[vi]):
                entries.append((position[(vi, other)], col))
        return GF2Matrix.from_triplets(len(states), len(states), entries)


def build_diagonal(c: BigradedComplex) -> DiagonalComplex:
    basis = c.basis
    degrees = sorted({i for i, _ in basis.groups})
    states = {i: tuple(basis.degree_states(i)) for i in degrees}
    position = {i: {s: p for p, s in enumerate(sts)} for i, sts in states.items()}
    edges = edges_by_tail(c.diagram, basis)

    differentials = {}
    for i in degrees:
        target = position.get(i + 1, {})
        entries = []
        for col, (vi, label) in enumerate(states[i]):
            for head, edge in edges.get(vi, ()):
                for out in DIAGONAL.images(edge, label):
                    row = target.get((head, out))
                    if row is None:
                        raise ComplexConstructionError(
                            f"diagonal map leaves the basis at vertex {basis.vertices[head]}"
                        )
                    entries.append((row, col))
        differentials[i] = GF2Matrix.from_triplets(len(target), len(states[i]), entries)
    logging.debug("Built diagonal complex in degrees %s", degrees)
    return DiagonalComplex(source=c, states=states, differentials=differentials)
