"""Bigraded Bar-Natan homology, one q-column at a time, and the u = 1 theory."""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from app.complexes.cube import BigradedComplex, build_khovanov, build_reduced
from app.complexes.filtered import barnatan_column, filtered_from_complex
from app.diagram.link import LinkDiagram
from app.linalg.gf2 import GF2Matrix, image_basis, kernel_basis, rank
from app.linalg.subquotient import induced_map, subquotient
from app.settings import get_settings
from app.spectral.filtered import FilteredComplex
from app.tables import DimTable


class BNTable(BaseModel):
    table: DimTable = Field(description="dim BN^{i,j} over the computed window")
    stable_threshold: int = Field(description="j_s: columns with j <= j_s all agree")
    stable_column: Dict[int, int] = Field(description="i -> dim BN^{i,j} for every j <= j_s")
    j_window: Tuple[int, int] = Field(description="Inclusive range of computed q-degrees")

    def column(self, j: int) -> Dict[int, int]:
        if j <= self.stable_threshold:
            return dict(self.stable_column)
        return self.table.column(j)


def stable_threshold(c: BigradedComplex) -> int:
    """Least q-degree with a nonzero chain group; u is invertible at and below it."""
    return c.bounds()[2]


def default_window(c: BigradedComplex, stable_columns: Optional[int] = None) -> Tuple[int, int]:
    columns = stable_columns if stable_columns is not None else get_settings().stable_columns
    _, _, j_min, j_max = c.bounds()
    return j_min - 2 * columns, j_max


def window_columns(c: BigradedComplex, j_window: Tuple[int, int]) -> List[int]:
    lo, hi = j_window
    start = lo if (lo - c.parity) % 2 == 0 else lo + 1
    return list(range(start, hi + 1, 2))


def column_homology(c: BigradedComplex, j: int) -> Dict[int, int]:
    return barnatan_column(c, j).homology_dims()


def bn_homology(
    d: LinkDiagram,
    j_window: Optional[Tuple[int, int]] = None,
    workers: Optional[int] = None,
    complex_: Optional[BigradedComplex] = None,
) -> BNTable:
    c = complex_ if complex_ is not None else build_khovanov(d)
    window = tuple(j_window) if j_window is not None else default_window(c)
    columns = window_columns(c, window)
    workers = workers if workers is not None else get_settings().workers
    j_s = stable_threshold(c)

    if workers > 1 and len(columns) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda j: column_homology(c, j), columns))
    else:
        results = [column_homology(c, j) for j in columns]
    by_column = dict(zip(columns, results))
    stable = by_column.get(j_s)
    if stable is None:
        stable = column_homology(c, j_s)

    logging.debug("BN columns %s computed with %d worker(s)", columns, workers)
    return BNTable(
        table=DimTable(entries={(i, j): v for j, col in by_column.items() for i, v in col.items()}),
        stable_threshold=j_s,
        stable_column=stable,
        j_window=window,
    )


def filtered_complex(d: LinkDiagram, reduced: bool = False, basepoint: Optional[int] = None) -> FilteredComplex:
    c = build_reduced(d, basepoint) if reduced else build_khovanov(d)
    return filtered_from_complex(c)


def filtered_homology(
    d: LinkDiagram, reduced: bool = False, basepoint: Optional[int] = None
) -> Dict[int, int]:
    """Homology of the u = 1 complex, degree -> dimension."""
    return filtered_complex(d, reduced, basepoint).homology_dims()


def _column_quotients(fc: FilteredComplex) -> Dict[int, object]:
    out = {}
    for n in fc.degrees:
        cycles = kernel_basis(fc.differential(n))
        boundaries = image_basis(fc.differential(n - 1))
        out[n] = subquotient(cycles, boundaries)
    return out


def u_action(c: BigradedComplex, j: int) -> Dict[int, GF2Matrix]:
    """Multiplication by u on homology, BN^{i,j} -> BN^{i,j-2}.

    On chains it is the inclusion of the column at j into the column at
    j - 2 (a summand at q keeps its state and moves up one level).
    """
    source = barnatan_column(c, j)
    target = barnatan_column(c, j - 2)
    source_h = _column_quotients(source)
    target_h = _column_quotients(target)
    out = {}
    for n, sq in source_h.items():
        tq = target_h.get(n)
        if tq is None or not sq.dim:
            continue
        position = target.positions[n]
        entries = [(position[label], col) for col, label in enumerate(source.labels[n])]
        inclusion = GF2Matrix.from_triplets(target.dim(n), source.dim(n), entries)
        out[n] = induced_map(inclusion, sq, tq)
    return out


class StableIsoReport(BaseModel):
    passed: bool
    stable_threshold: int
    stable_column: Dict[int, int]
    filtered: Dict[int, int]
    u_checked: List[int] = Field(default_factory=list, description="j with u: BN^{*,j} -> BN^{*,j-2} checked")
    mismatches: List[str] = Field(default_factory=list)


def stable_iso_check(
    d: LinkDiagram,
    bn: Optional[BNTable] = None,
    filtered: Optional[Dict[int, int]] = None,
    complex_: Optional[BigradedComplex] = None,
) -> StableIsoReport:
    """Stable BN column against the u = 1 theory, and u invertible below j_s."""
    c = complex_ if complex_ is not None else build_khovanov(d)
    bn = bn if bn is not None else bn_homology(d, complex_=c)
    filtered = filtered if filtered is not None else filtered_from_complex(c).homology_dims()

    mismatches = []
    if bn.stable_column != filtered:
        mismatches.append(f"stable column {bn.stable_column} != filtered {filtered}")

    checked = []
    for j in window_columns(c, bn.j_window):
        if j > bn.stable_threshold or j - 2 < bn.j_window[0]:
            continue
        checked.append(j)
        for n, m in u_action(c, j).items():
            if m.rows != m.cols or rank(m) != m.cols:
                mismatches.append(f"u is not invertible on BN^{{{n},{j}}}")
        column = bn.table.column(j)
        if column != bn.stable_column:
            mismatches.append(f"column j={j} is {column}, stable column is {bn.stable_column}")

    return StableIsoReport(
        passed=not mismatches,
        stable_threshold=bn.stable_threshold,
        stable_column=bn.stable_column,
        filtered=filtered,
        u_checked=checked,
        mismatches=mismatches,
    )
