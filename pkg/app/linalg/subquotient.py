"""Subquotients Z/B of F2^n and the maps they inherit."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from app.exceptions import ContainmentError, DimensionMismatchError, WellDefinednessError
from app.linalg.gf2 import GF2Matrix, row_reduce


def _reduce(vectors: GF2Matrix, echelon: GF2Matrix, pivots: Tuple[int, ...]):
    """Eliminate the pivot columns of a reduced echelon basis from ``vectors``.

    Returns ``(coefficients, residual)``; ``residual`` is zero exactly when the
    vector lies in the span of ``echelon``.
    """
    if not pivots:
        return GF2Matrix.zeros(vectors.rows, 0), vectors
    coefficients = vectors.select_cols(list(pivots))
    return coefficients, vectors + coefficients @ echelon


@dataclass(frozen=True, eq=False)
class Subquotient:
    ambient_dim: int
    numerator: GF2Matrix
    denominator: GF2Matrix
    representatives: GF2Matrix
    denominator_pivots: Tuple[int, ...]
    representative_pivots: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return self.representatives.rows

    def project(self, vectors: GF2Matrix) -> GF2Matrix:
        """Quotient coordinates of vectors in the numerator (one row per vector)."""
        if vectors.cols != self.ambient_dim:
            raise DimensionMismatchError(
                f"vector length {vectors.cols} does not match ambient {self.ambient_dim}"
            )
        _, rest = _reduce(vectors, self.denominator, self.denominator_pivots)
        coords, residual = _reduce(rest, self.representatives, self.representative_pivots)
        bad = residual.nonzero_rows()
        if bad.size:
            raise ContainmentError(f"vector {int(bad[0])} is not in the numerator")
        return coords

    def lift(self, coords: GF2Matrix) -> GF2Matrix:
        return coords @ self.representatives


def subquotient(numerator: GF2Matrix, denominator: GF2Matrix) -> Subquotient:
    """Build ``span(numerator) / span(denominator)`` from spanning rows."""
    if numerator.cols != denominator.cols:
        raise DimensionMismatchError(
            f"numerator width {numerator.cols} != denominator width {denominator.cols}"
        )
    z = row_reduce(numerator)
    b = row_reduce(denominator)

    _, leftover = _reduce(b.matrix, z.matrix, z.pivots)
    bad = leftover.nonzero_rows()
    if bad.size:
        raise ContainmentError(f"denominator row {int(bad[0])} is not in the numerator span")

    _, residual = _reduce(z.matrix, b.matrix, b.pivots)
    reps = row_reduce(residual)
    if reps.rank != z.rank - b.rank:
        raise ContainmentError(
            f"quotient rank {reps.rank} != {z.rank} - {b.rank}"
        )
    return Subquotient(
        ambient_dim=numerator.cols,
        numerator=z.matrix,
        denominator=b.matrix,
        representatives=reps.matrix,
        denominator_pivots=b.pivots,
        representative_pivots=reps.pivots,
    )


def induced_map(f: GF2Matrix, source: Subquotient, target: Subquotient) -> GF2Matrix:
    """Matrix (``target.dim x source.dim``) of the map that ``f`` induces.

    ``f`` acts on column vectors, so it is ``target.ambient_dim x source.ambient_dim``.
    """
    if f.shape != (target.ambient_dim, source.ambient_dim):
        raise DimensionMismatchError(
            f"map of shape {f.shape} does not go "
            f"F2^{source.ambient_dim} -> F2^{target.ambient_dim}"
        )
    ft = f.transpose()
    try:
        coords = target.project(source.representatives @ ft)
    except ContainmentError as exc:
        raise WellDefinednessError(f"image of the numerator escapes: {exc.detail}") from exc
    if source.denominator.rows:
        try:
            killed = target.project(source.denominator @ ft)
        except ContainmentError as exc:
            raise WellDefinednessError(f"image of the denominator escapes: {exc.detail}") from exc
        if not killed.is_zero():
            raise WellDefinednessError("image of the denominator is not in the target denominator")
    return coords.transpose()


def zero_space(n: int) -> GF2Matrix:
    return GF2Matrix.zeros(0, n)


def whole_space(n: int) -> GF2Matrix:
    return GF2Matrix.identity(n)


__all__ = [
    "Subquotient",
    "subquotient",
    "induced_map",
    "zero_space",
    "whole_space",
]
