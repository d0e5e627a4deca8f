from app.spectral.filtered import FilteredComplex
from app.spectral.pages import (
    SpectralSequence,
    SSPage,
    compute_pages,
    page_homology,
    reconstruct_abutment,
)

__all__ = [
    "FilteredComplex",
    "SSPage",
    "SpectralSequence",
    "compute_pages",
    "page_homology",
    "reconstruct_abutment",
]
