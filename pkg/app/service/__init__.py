from app.service.base import BaseTheory
from app.service.models import CheckResult, InvariantReport, TheoryRequest
from app.service.theories import THEORIES, TheoryService, load_diagram, make_theory

__all__ = [
    "BaseTheory",
    "CheckResult",
    "InvariantReport",
    "THEORIES",
    "TheoryRequest",
    "TheoryService",
    "load_diagram",
    "make_theory",
]
