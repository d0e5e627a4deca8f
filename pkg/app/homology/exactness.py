from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from app.homology.core import BetaStar, Homology, secondary_groups


class DiagonalExactness(BaseModel):
    diagonal: int = Field(description="k, where the sequence runs through Kh^{i, k+2i}")
    deviations: Dict[int, int] = Field(
        default_factory=dict, description="i -> dim of (ker β_* / im β_*) where nonzero"
    )


class ExactnessReport(BaseModel):
    collapsed: Optional[bool] = Field(
        None, description="Whether the filtered spectral sequence was seen to collapse at E_2"
    )
    diagonals: List[DiagonalExactness] = Field(default_factory=list)
    unexpected: List[int] = Field(
        default_factory=list,
        description="Degrees with a deviation but zero filtered homology",
    )

    @property
    def consistent(self) -> bool:
        return not self.unexpected or self.collapsed is False


def exactness_report(
    h: Homology,
    bs: BetaStar,
    filtered_dims: Dict[int, int],
    collapsed: Optional[bool] = None,
) -> ExactnessReport:
    """Where the β_* sequences along each diagonal fail to be exact."""
    kk = secondary_groups(h, bs)
    by_diagonal: Dict[int, Dict[int, int]] = {}
    for (i, j) in h:
        by_diagonal.setdefault(j - 2 * i, {})
    for (i, j), dim in kk.items():
        by_diagonal[j - 2 * i][i] = by_diagonal[j - 2 * i].get(i, 0) + dim

    degrees = sorted({i for row in by_diagonal.values() for i in row})
    unexpected = [i for i in degrees if not filtered_dims.get(i, 0)]
    return ExactnessReport(
        collapsed=collapsed,
        diagonals=[
            DiagonalExactness(diagonal=k, deviations=dict(sorted(row.items())))
            for k, row in sorted(by_diagonal.items())
        ],
        unexpected=unexpected,
    )
