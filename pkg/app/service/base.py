from abc import ABC, abstractmethod

from app.diagram.link import LinkDiagram
from app.service.models import InvariantReport, TheoryRequest


class BaseTheory(ABC):
    """Defines the interface shared by every invariant the service computes."""

    name: str = "theory"

    @abstractmethod
    def compute(
            self,
            d: LinkDiagram,
            request: TheoryRequest,
            report: InvariantReport,
    ) -> None:
        """Fill ``report`` with the invariants of ``d``."""
