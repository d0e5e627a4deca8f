"""Khovanov-side checks on computed spectral sequences.

Two flavors are supported. ``filtered`` is the u = 1 complex with a summand at
q-degree q on level (q - base) / 2, so E_1^{k,l} = Kh^{k+l, 2k+base}.
``graded`` is the Bar-Natan column at j with the summand at j + 2k on level
k >= 0, so E_1^{k,l} = Kh^{k+l, j+2k}. In both, d_1 is β_* and E_2 is the
secondary group, except on the bottom column of the graded flavor where
nothing arrives and E_2 is ker β_*.

This module is not re-exported from ``app.spectral``; it depends on the
complex builders, which depend on ``app.spectral.filtered``.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from app.complexes.cube import BigradedComplex
from app.complexes.filtered import barnatan_column, filtered_from_complex
from app.exceptions import TheoryConfigError
from app.homology.core import CoreInvariants, beta_ranks, kernel_table
from app.spectral.filtered import FilteredComplex
from app.spectral.pages import (
    SpectralSequence,
    compute_pages,
    page_homology,
    reconstruct_abutment,
)
from app.tables import DimTable

Position = Tuple[int, int]

FLAVORS = ("filtered", "graded")


@dataclass(frozen=True)
class SequenceFlavor:
    """Where the q-degree q summand sits: level (q - base) / 2, from ``bottom`` up."""

    name: str
    base: int
    bottom: Optional[int] = None
    j: Optional[int] = None

    def level(self, q: int) -> Optional[int]:
        if (q - self.base) % 2:
            return None
        k = (q - self.base) // 2
        if self.bottom is not None and k < self.bottom:
            return None
        return k

    def position(self, i: int, q: int) -> Optional[Position]:
        k = self.level(q)
        return None if k is None else (k, i - k)


def filtered_flavor(c: BigradedComplex) -> SequenceFlavor:
    return SequenceFlavor(name="filtered", base=c.parity)


def graded_flavor(j: int) -> SequenceFlavor:
    return SequenceFlavor(name="graded", base=j, bottom=0, j=j)


def flavor_complex(c: BigradedComplex, flavor: SequenceFlavor) -> FilteredComplex:
    if flavor.name == "filtered":
        return filtered_from_complex(c)
    return barnatan_column(c, flavor.j)


def make_flavor(c: BigradedComplex, name: str, j: Optional[int] = None) -> SequenceFlavor:
    if name == "filtered":
        return filtered_flavor(c)
    if name == "graded":
        if j is None:
            raise TheoryConfigError("The graded flavor needs a q-degree (--j)")
        return graded_flavor(j)
    raise TheoryConfigError(f"Unknown spectral sequence flavor '{name}'. Use one of {list(FLAVORS)}")


def _reindex(flavor: SequenceFlavor, table: DimTable) -> Dict[Position, int]:
    out: Dict[Position, int] = {}
    for (i, q), dim in table.items():
        pos = flavor.position(i, q)
        if pos is not None and dim:
            out[pos] = out.get(pos, 0) + dim
    return dict(sorted(out.items()))


def expected_e1(flavor: SequenceFlavor, kh: DimTable) -> Dict[Position, int]:
    return _reindex(flavor, kh)


def expected_e2(flavor: SequenceFlavor, kk: DimTable, kernel: DimTable) -> Dict[Position, int]:
    out = {pos: dim for pos, dim in _reindex(flavor, kk).items() if pos[0] != flavor.bottom}
    if flavor.bottom is not None:
        for pos, dim in _reindex(flavor, kernel).items():
            if pos[0] == flavor.bottom:
                out[pos] = dim
    return dict(sorted(out.items()))


def expected_d1_ranks(flavor: SequenceFlavor, ranks: DimTable) -> Dict[Position, int]:
    return _reindex(flavor, ranks)


def _diff(label: str, got: Dict[Position, int], want: Dict[Position, int]) -> List[str]:
    out = []
    for pos in sorted(set(got) | set(want)):
        if got.get(pos, 0) != want.get(pos, 0):
            out.append(f"{label} at {pos}: computed {got.get(pos, 0)}, expected {want.get(pos, 0)}")
    return out


class E1E2Report(BaseModel):
    flavor: str
    j: Optional[int] = Field(None, description="q-degree of the column (graded flavor only)")
    passed: bool
    collapse_page: Optional[int] = Field(None, description="Least page equal to E_infinity")
    abutment: Dict[int, int] = Field(default_factory=dict, description="Anti-diagonal sums of the last page")
    homology: Dict[int, int] = Field(default_factory=dict, description="Directly computed homology of the total complex")
    mismatches: List[str] = Field(default_factory=list)


def page_coherence(seq: SpectralSequence) -> List[str]:
    """Each page must be the homology of the one before."""
    out = []
    for page, nxt in zip(seq.pages, seq.pages[1:]):
        out.extend(_diff(f"E_{nxt.r} vs H(E_{page.r})", nxt.groups, page_homology(page)))
    return out


def verify_e1_e2(
    seq: SpectralSequence,
    flavor: SequenceFlavor,
    kh: DimTable,
    kk: DimTable,
    ranks: DimTable,
    kernel: DimTable,
) -> E1E2Report:
    """Compare E_1, E_2 and d_1 with the Khovanov tables and check convergence."""
    mismatches = []
    if len(seq) > 1:
        e1 = seq[1]
        mismatches += _diff("E_1", e1.groups, expected_e1(flavor, kh))
        got_ranks = {pos: e1.differential_rank(*pos) for pos in e1.differentials}
        got_ranks = {pos: v for pos, v in got_ranks.items() if v}
        mismatches += _diff("rank d_1", got_ranks, expected_d1_ranks(flavor, ranks))
    if len(seq) > 2:
        mismatches += _diff("E_2", seq[2].groups, expected_e2(flavor, kk, kernel))
    mismatches += page_coherence(seq)

    abutment: Dict[int, int] = {}
    homology = seq.complex.homology_dims()
    if seq.stabilized:
        abutment = reconstruct_abutment(seq.pages)
        if abutment != homology:
            mismatches.append(f"E_infinity sums {abutment} != homology {homology}")

    if mismatches:
        logging.warning("%s spectral sequence: %d mismatch(es)", flavor.name, len(mismatches))
    return E1E2Report(
        flavor=flavor.name,
        j=flavor.j,
        passed=not mismatches,
        collapse_page=seq.collapse_page,
        abutment=abutment,
        homology=homology,
        mismatches=mismatches,
    )


def run_flavor(
    c: BigradedComplex, name: str, j: Optional[int] = None, r_max: Optional[int] = None
) -> Tuple[SequenceFlavor, SpectralSequence]:
    flavor = make_flavor(c, name, j)
    return flavor, compute_pages(flavor_complex(c, flavor), r_max)


def verify_flavor(
    core: CoreInvariants, name: str, j: Optional[int] = None, r_max: Optional[int] = None
) -> E1E2Report:
    flavor, seq = run_flavor(core.complex, name, j, r_max)
    return verify_e1_e2(
        seq,
        flavor,
        kh=core.kh,
        kk=core.kk,
        ranks=beta_ranks(core.beta),
        kernel=kernel_table(core.homology, core.beta),
    )


class ShiftReport(BaseModel):
    j: int
    shift: int = Field(description="Filtered level minus graded level")
    passed: bool
    mismatches: List[str] = Field(default_factory=list)


def shift_check(c: BigradedComplex, j: int) -> ShiftReport:
    """Pages of the graded column at j <= j_s against the filtered pages, re-indexed.

    Below the support every summand of the column is present, so the two
    complexes agree up to a shift of levels.
    """
    _, _, j_min, _ = c.bounds()
    if j > j_min or (j - c.parity) % 2:
        raise TheoryConfigError(f"shift check needs j <= {j_min} with parity {c.parity}, got {j}")
    shift = (j - c.parity) // 2
    graded = compute_pages(barnatan_column(c, j))
    filtered = compute_pages(filtered_from_complex(c))

    mismatches = []
    for g_page, f_page in zip(graded.pages, filtered.pages):
        moved = {(k - shift, l + shift): v for (k, l), v in f_page.groups.items()}
        mismatches += _diff(f"E_{g_page.r}", g_page.groups, moved)
    return ShiftReport(j=j, shift=shift, passed=not mismatches, mismatches=mismatches)
