import logging
from dataclasses import dataclass
from typing import Dict, Tuple

from app.complexes.cube import BigradedComplex
from app.exceptions import ConsistencyError
from app.linalg.gf2 import GF2Matrix, image_basis, kernel_basis, rank
from app.linalg.subquotient import Subquotient, induced_map, subquotient
from app.tables import Bigrading, DimTable, LaurentPoly2, format_key


@dataclass(frozen=True, eq=False)
class HomologyGroup:
    bigrading: Bigrading
    quotient: Subquotient

    @property
    def dim(self) -> int:
        return self.quotient.dim

    @property
    def representatives(self) -> GF2Matrix:
        """Cycles (rows) whose classes form the chosen basis."""
        return self.quotient.representatives


Homology = Dict[Bigrading, HomologyGroup]
BetaStar = Dict[Bigrading, GF2Matrix]


def khovanov_homology(c: BigradedComplex) -> Homology:
    """ker ∂ / im ∂ at every occupied bigrading."""
    groups = {}
    for i, j in c.keys:
        cycles = kernel_basis(c.d_block(i, j))
        boundaries = image_basis(c.d_block(i - 1, j))
        groups[(i, j)] = HomologyGroup((i, j), subquotient(cycles, boundaries))
    logging.debug("Homology computed at %d bigradings", len(groups))
    return groups


def homology_table(h: Homology) -> DimTable:
    return DimTable(entries={k: g.dim for k, g in h.items()})


def beta_star(c: BigradedComplex, h: Homology) -> BetaStar:
    """β_*: Kh^{i,j} -> Kh^{i+1,j+2} wherever both ends are nonzero."""
    out = {}
    for (i, j), group in h.items():
        target = h.get((i + 1, j + 2))
        if group.dim and target is not None and target.dim:
            out[(i, j)] = induced_map(c.beta_block(i, j), group.quotient, target.quotient)

    for (i, j), m in out.items():
        nxt = out.get((i + 1, j + 2))
        if nxt is not None and not (nxt @ m).is_zero():
            raise ConsistencyError(
                "β_* ∘ β_* != 0 on homology", witness={"bigrading": format_key((i, j))}
            )
    return out


def beta_ranks(bs: BetaStar) -> DimTable:
    return DimTable(entries={k: rank(m) for k, m in bs.items()})


def secondary_groups(h: Homology, bs: BetaStar) -> DimTable:
    """dim KK^{i,j} = dim ker(β_* at (i,j)) - rank(β_* into (i,j))."""
    ranks = {k: rank(m) for k, m in bs.items()}
    table = {}
    for (i, j), group in h.items():
        table[(i, j)] = group.dim - ranks.get((i, j), 0) - ranks.get((i - 1, j - 2), 0)
        if table[(i, j)] < 0:
            raise ConsistencyError(
                "negative secondary dimension", witness={"bigrading": format_key((i, j))}
            )
    return DimTable(entries=table)


def kernel_table(h: Homology, bs: BetaStar) -> DimTable:
    """dim ker(β_*: Kh^{i,j} -> Kh^{i+1,j+2})."""
    return DimTable(
        entries={k: g.dim - (rank(bs[k]) if k in bs else 0) for k, g in h.items()}
    )


def poincare_polynomial(table: DimTable) -> LaurentPoly2:
    return table.to_poly()


def poincare_polynomials(*tables: DimTable) -> Tuple[LaurentPoly2, ...]:
    return tuple(poincare_polynomial(t) for t in tables)


@dataclass(frozen=True, eq=False)
class CoreInvariants:
    """Everything the Khovanov/β pipeline produces for one complex."""

    complex: BigradedComplex
    homology: Homology
    beta: BetaStar
    kh: DimTable
    kk: DimTable

    @property
    def kh_poly(self) -> LaurentPoly2:
        return self.kh.to_poly()

    @property
    def secondary_poly(self) -> LaurentPoly2:
        return self.kk.to_poly()


def core_invariants(c: BigradedComplex) -> CoreInvariants:
    h = khovanov_homology(c)
    bs = beta_star(c, h)
    return CoreInvariants(
        complex=c,
        homology=h,
        beta=bs,
        kh=homology_table(h),
        kk=secondary_groups(h, bs),
    )
