"""Pages of the spectral sequence of a bounded filtered complex.

With Z_r^p = {x in F^p : dx in F^{p+r}} (and Z_r^p = F^p for r <= 0),

    E_r^p = Z_r^p / (Z_{r-1}^{p+1} + d Z_{r-1}^{p-r+1}),

and d_r: E_r^{p,n} -> E_r^{p+r,n+1} is induced by d. Positions are reported
as (k, l) = (p, n - p).
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from app.exceptions import NotStabilizedError, SpectralSequenceError
from app.linalg.gf2 import GF2Matrix, kernel_basis, rank
from app.linalg.subquotient import Subquotient, induced_map, subquotient
from app.spectral.filtered import FilteredComplex
from app.tables import DimTable

Position = Tuple[int, int]


@dataclass(frozen=True, eq=False)
class SSPage:
    r: int
    groups: Dict[Position, int]
    differentials: Dict[Position, GF2Matrix]
    final: bool = False
    spaces: Dict[Position, Subquotient] = field(default_factory=dict, repr=False)

    def dims(self) -> DimTable:
        return DimTable(entries=self.groups)

    def dim(self, k: int, l: int) -> int:
        return self.groups.get((k, l), 0)

    def differential_rank(self, k: int, l: int) -> int:
        """Rank of d_r leaving (k, l)."""
        m = self.differentials.get((k, l))
        return rank(m) if m is not None else 0

    def total_by_degree(self) -> Dict[int, int]:
        acc: Dict[int, int] = {}
        for (k, l), v in self.groups.items():
            acc[k + l] = acc.get(k + l, 0) + v
        return dict(sorted(acc.items()))

    @property
    def is_zero_differential(self) -> bool:
        return all(m.is_zero() for m in self.differentials.values())


@dataclass(frozen=True, eq=False)
class SpectralSequence:
    complex: FilteredComplex
    pages: List[SSPage]
    stable_page: int

    def __getitem__(self, r: int) -> SSPage:
        return self.pages[r]

    def __iter__(self) -> Iterator[SSPage]:
        return iter(self.pages)

    def __len__(self) -> int:
        return len(self.pages)

    @property
    def last(self) -> SSPage:
        return self.pages[-1]

    @property
    def stabilized(self) -> bool:
        return self.last.final

    @property
    def collapse_page(self) -> Optional[int]:
        """Least r whose page already equals E_infinity; None if not stabilized."""
        if not self.stabilized:
            return None
        final = self.last.groups
        for page in self.pages:
            if page.groups == final:
                return page.r
        return self.last.r


class _Engine:
    def __init__(self, fc: FilteredComplex):
        self.fc = fc
        self.dense = {n: fc.differential(n).to_dense() for n in fc.degrees}
        self._z: Dict[Tuple[int, int, int], GF2Matrix] = {}

    def filtration(self, p: int, n: int) -> GF2Matrix:
        cols = np.flatnonzero(self.fc.level(n) >= p)
        basis = np.zeros((len(cols), self.fc.dim(n)), dtype=np.uint8)
        basis[np.arange(len(cols)), cols] = 1
        return GF2Matrix.from_dense(basis, len(cols), self.fc.dim(n))

    def cycles(self, r: int, p: int, n: int) -> GF2Matrix:
        key = (r, p, n)
        if key in self._z:
            return self._z[key]
        if r <= 0 or self.fc.dim(n + 1) == 0:
            z = self.filtration(p, n)
        else:
            cols = np.flatnonzero(self.fc.level(n) >= p)
            rows = np.flatnonzero(self.fc.level(n + 1) < p + r)
            sub = self.dense[n][np.ix_(rows, cols)]
            ker = kernel_basis(GF2Matrix.from_dense(sub, len(rows), len(cols))).to_dense()
            full = np.zeros((ker.shape[0], self.fc.dim(n)), dtype=np.uint8)
            full[:, cols] = ker
            z = GF2Matrix.from_dense(full, ker.shape[0], self.fc.dim(n))
        self._z[key] = z
        return z

    def image(self, vectors: GF2Matrix, n: int) -> GF2Matrix:
        """Rows ``d v`` in degree ``n + 1`` for rows ``v`` in degree ``n``."""
        if vectors.rows == 0 or self.fc.dim(n + 1) == 0:
            return GF2Matrix.zeros(0, self.fc.dim(n + 1))
        return vectors @ self.fc.differential(n).transpose()

    def term(self, r: int, p: int, n: int) -> Subquotient:
        z = self.cycles(r, p, n)
        below = self.cycles(r - 1, p + 1, n)
        if self.fc.dim(n - 1):
            boundaries = self.image(self.cycles(r - 1, p - r + 1, n - 1), n - 1)
        else:
            boundaries = GF2Matrix.zeros(0, self.fc.dim(n))
        return subquotient(z, GF2Matrix.vstack([below, boundaries], cols=self.fc.dim(n)))


def compute_pages(fc: FilteredComplex, r_max: Optional[int] = None) -> SpectralSequence:
    """Pages E_0 .. E_{r_max}; by default up to the first page that must be E_infinity."""
    fc.validate()
    k_min, k_max = fc.level_range
    stable = k_max - k_min + 1
    last = stable if r_max is None else r_max
    if last < 0:
        raise SpectralSequenceError(f"r_max must be >= 0, got {r_max}")

    engine = _Engine(fc)
    levels = range(k_min, k_max + 1)
    alive = {(p, n) for n in fc.degrees for p in levels if np.any(fc.level(n) == p)}
    pages = []
    for r in range(last + 1):
        spaces = {}
        for p, n in sorted(alive):
            sq = engine.term(r, p, n)
            if sq.dim:
                spaces[(p, n)] = sq
        differentials = {}
        for (p, n), sq in spaces.items():
            target = spaces.get((p + r, n + 1))
            if target is None:
                continue
            differentials[(p, n - p)] = induced_map(fc.differential(n), sq, target)
        groups = {(p, n - p): sq.dim for (p, n), sq in spaces.items()}
        pages.append(
            SSPage(
                r=r,
                groups=dict(sorted(groups.items())),
                differentials=differentials,
                final=r >= stable,
                spaces={(p, n - p): sq for (p, n), sq in spaces.items()},
            )
        )
        alive = set(spaces)
        logging.debug("%s: E_%d has total dimension %d", fc.name, r, sum(groups.values()))

    return SpectralSequence(complex=fc, pages=pages, stable_page=stable)


def reconstruct_abutment(pages) -> Dict[int, int]:
    """Anti-diagonal sums of the final page."""
    seq = list(pages)
    if not seq:
        raise NotStabilizedError("No pages were computed")
    last = seq[-1]
    if not last.final:
        raise NotStabilizedError(
            f"Spectral sequence has not stabilized by E_{last.r}; compute further pages"
        )
    return last.total_by_degree()


def page_homology(page: SSPage) -> Dict[Position, int]:
    """dim ker d_r - rank of d_r arriving, at every position of ``page``."""
    r = page.r
    out = {}
    for (k, l), dim in page.groups.items():
        leaving = page.differentials.get((k, l))
        arriving = page.differentials.get((k - r, l + r - 1))
        value = dim - (rank(leaving) if leaving is not None else 0)
        value -= rank(arriving) if arriving is not None else 0
        if value:
            out[(k, l)] = value
    return dict(sorted(out.items()))
