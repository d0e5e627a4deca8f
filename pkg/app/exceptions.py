# app/exceptions.py
from typing import Any, Dict, Optional


class KnotReaderError(Exception):
    """Base exception for KnotReader"""
    status_code: int = 500
    exit_code: int = 2
    detail: str = "An error occurred"

    def __init__(self, detail: Optional[str] = None):
        self.detail = detail or self.detail
        super().__init__(self.detail)

    def to_dict(self) -> Dict[str, Any]:
        return {"detail": self.detail, "error": type(self).__name__}


# --- input validation (exit code 1) ---------------------------------------


class DiagramError(KnotReaderError):
    """Raised when a link diagram is invalid"""
    status_code: int = 400
    exit_code: int = 1
    detail: str = "Invalid link diagram"


class PDSyntaxError(DiagramError):
    """Raised when PD text does not follow the grammar"""
    detail: str = "Malformed PD code"


class ArcMultiplicityError(DiagramError):
    """Raised when an arc label does not appear exactly twice"""
    detail: str = "arc multiplicity"


class NonPlanarError(DiagramError):
    """Raised when the PD rotation system is not planar"""
    detail: str = "PD code is not planar"


class InconsistentOrientationError(DiagramError):
    """Raised when arc labels do not run consecutively along a component"""
    detail: str = "Inconsistent orientation in PD code"


class VertexLengthError(DiagramError):
    """Raised when a cube vertex does not match the crossing count"""
    detail: str = "Vertex length does not match crossing count"


class BasepointError(DiagramError):
    """Raised when a basepoint arc is not part of the diagram"""
    detail: str = "Basepoint not found"


class NotAKnotError(DiagramError):
    """Raised when a knot-only construction gets a link"""
    detail: str = "Reduced theory needs a knot"


class DiagramTooLargeError(DiagramError):
    """Raised when a diagram exceeds the configured crossing limit"""
    detail: str = "Diagram has too many crossings"


class TheoryConfigError(KnotReaderError):
    """Raised when a theory or its options are invalid"""
    status_code: int = 400
    exit_code: int = 1
    detail: str = "Invalid theory configuration"


class ThinDecompositionError(KnotReaderError):
    """Raised when a Khovanov polynomial cannot be factored as a thin knot"""
    status_code: int = 422
    exit_code: int = 1
    detail: str = "Thin decomposition failed"

    def __init__(self, detail: Optional[str] = None, residual: Optional[str] = None):
        super().__init__(detail)
        self.residual = residual

    def to_dict(self) -> Dict[str, Any]:
        out = super().to_dict()
        if self.residual is not None:
            out["residual"] = self.residual
        return out


class NotThinError(ThinDecompositionError):
    detail: str = "not thin for this s"


class NotFactorizableError(ThinDecompositionError):
    detail: str = "no exact factorization"


# --- internal failures (exit code 2) ----------------------------------------


class LinearAlgebraError(KnotReaderError):
    """Raised on an inconsistent GF(2) computation"""
    detail: str = "GF(2) linear algebra error"


class DimensionMismatchError(LinearAlgebraError):
    detail: str = "Matrix dimensions do not match"


class ContainmentError(LinearAlgebraError):
    """Raised when a denominator is not contained in its numerator"""
    detail: str = "Denominator not contained in numerator"


class WellDefinednessError(LinearAlgebraError):
    """Raised when a map does not descend to the given subquotients"""
    detail: str = "Map is not well defined on subquotients"


class ComplexConstructionError(KnotReaderError):
    """Raised when a built complex violates its invariants"""
    detail: str = "Chain complex construction failed"


class SpectralSequenceError(KnotReaderError):
    """Raised on an invalid filtered complex"""
    detail: str = "Spectral sequence error"


class NotStabilizedError(SpectralSequenceError):
    detail: str = "Spectral sequence has not stabilized"


class ConsistencyError(KnotReaderError):
    """Raised when two independent computations disagree"""
    detail: str = "Consistency check failed"

    def __init__(self, detail: Optional[str] = None, witness: Optional[Dict[str, Any]] = None):
        super().__init__(detail)
        self.witness = witness or {}

    def to_dict(self) -> Dict[str, Any]:
        out = super().to_dict()
        out["witness"] = self.witness
        return out
