from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Hashable, List, Tuple

import numpy as np

from app.exceptions import SpectralSequenceError
from app.linalg.gf2 import GF2Matrix, rank


@dataclass(frozen=True, eq=False)
class FilteredComplex:
    """A bounded, finite filtered cochain complex over F2.

    ``levels[n][b]`` is the filtration level of basis element ``b`` in degree
    ``n``; F^p is spanned by elements of level >= p. ``differentials[n]`` maps
    degree ``n`` to ``n + 1`` and may only raise levels.
    """

    levels: Dict[int, np.ndarray]
    differentials: Dict[int, GF2Matrix]
    labels: Dict[int, Tuple[Hashable, ...]] = field(default_factory=dict)
    name: str = "filtered"

    @property
    def degrees(self) -> List[int]:
        return sorted(n for n, lv in self.levels.items() if len(lv))

    def dim(self, n: int) -> int:
        return len(self.levels.get(n, ()))

    def level(self, n: int) -> np.ndarray:
        return self.levels.get(n, np.zeros(0, dtype=np.int64))

    def differential(self, n: int) -> GF2Matrix:
        m = self.differentials.get(n)
        return m if m is not None else GF2Matrix.zeros(self.dim(n + 1), self.dim(n))

    @cached_property
    def level_range(self) -> Tuple[int, int]:
        occupied = [lv for lv in self.levels.values() if len(lv)]
        if not occupied:
            return 0, 0
        return int(min(lv.min() for lv in occupied)), int(max(lv.max() for lv in occupied))

    @cached_property
    def positions(self) -> Dict[int, Dict[Hashable, int]]:
        return {n: {lab: pos for pos, lab in enumerate(labs)} for n, labs in self.labels.items()}

    def total_dims(self) -> Dict[int, int]:
        return {n: self.dim(n) for n in self.degrees}

    def validate(self) -> None:
        for n in self.degrees:
            d = self.differential(n)
            if d.shape != (self.dim(n + 1), self.dim(n)):
                raise SpectralSequenceError(
                    f"{self.name}: differential in degree {n} has shape {d.shape}, "
                    f"expected {(self.dim(n + 1), self.dim(n))}"
                )
            if not (self.differential(n + 1) @ d).is_zero():
                raise SpectralSequenceError(f"{self.name}: d^2 != 0 in degree {n}")
            rows, cols = np.nonzero(d.to_dense())
            if rows.size and np.any(self.level(n + 1)[rows] < self.level(n)[cols]):
                raise SpectralSequenceError(f"{self.name}: differential lowers filtration in degree {n}")

    def homology_dims(self) -> Dict[int, int]:
        """dim H^n of the underlying complex, ignoring the filtration."""
        ranks = {n: rank(self.differential(n)) for n in self.degrees}
        out = {}
        for n in self.degrees:
            value = self.dim(n) - ranks[n] - ranks.get(n - 1, 0)
            if value:
                out[n] = value
        return out
