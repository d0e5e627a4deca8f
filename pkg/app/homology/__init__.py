from app.homology.core import (
    CoreInvariants,
    HomologyGroup,
    beta_ranks,
    beta_star,
    core_invariants,
    homology_table,
    kernel_table,
    khovanov_homology,
    poincare_polynomial,
    poincare_polynomials,
    secondary_groups,
)
from app.homology.exactness import ExactnessReport, exactness_report
from app.homology.thin import infer_thin_s, reconstruct_thin, thin_decompose

__all__ = [
    "CoreInvariants",
    "ExactnessReport",
    "HomologyGroup",
    "beta_ranks",
    "beta_star",
    "core_invariants",
    "exactness_report",
    "homology_table",
    "infer_thin_s",
    "kernel_table",
    "khovanov_homology",
    "poincare_polynomial",
    "poincare_polynomials",
    "reconstruct_thin",
    "secondary_groups",
    "thin_decompose",
]
