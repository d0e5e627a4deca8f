from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from app.tables import DimTable


class TheoryRequest(BaseModel):
    pd: str = Field(..., description="PD code, or the name of a corpus entry")
    pd2: Optional[str] = Field(
        default=None, description="Second diagram for pairwise checks"
    )
    reduced: bool = Field(default=False, description="Use the reduced (basepointed) complex")
    basepoint: Optional[int] = Field(
        default=None, description="Arc carrying the basepoint; defaults to the least arc"
    )
    jmin: Optional[int] = Field(default=None, description="Lowest q-degree of the BN window")
    jmax: Optional[int] = Field(default=None, description="Highest q-degree of the BN window")
    flavor: str = Field(default="filtered", description="Spectral sequence flavor: filtered or graded")
    j: Optional[int] = Field(default=None, description="q-degree of the graded column")
    rmax: Optional[int] = Field(default=None, description="Last page to compute")
    s: Optional[int] = Field(default=None, description="s parameter for the thin factorization")
    workers: Optional[int] = Field(default=None, description="Threads for independent BN columns")
    timing: bool = Field(default=False, description="Include wall-clock timing in the report")


class CheckResult(BaseModel):
    name: str
    passed: bool
    informational: bool = Field(
        default=False, description="Reported for reference; never fails the suite"
    )
    detail: Optional[str] = None
    witness: Dict[str, Any] = Field(default_factory=dict)


class InvariantReport(BaseModel):
    theory: str
    diagram: str = Field(..., description="Normalized PD code of the input")
    diagram2: Optional[str] = None
    components: int
    crossings: int
    writhe: int
    reduced: bool = False
    basepoint: Optional[int] = None
    tables: Dict[str, DimTable] = Field(
        default_factory=dict, description="Bigraded dimension tables keyed '(i,j)'"
    )
    degrees: Dict[str, Dict[int, int]] = Field(
        default_factory=dict, description="Singly graded dimensions, degree -> dim"
    )
    polynomials: Dict[str, str] = Field(default_factory=dict)
    details: Dict[str, Any] = Field(default_factory=dict)
    checks: List[CheckResult] = Field(default_factory=list)
    timing_ms: Optional[float] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.informational)

    def to_json_dict(self) -> Dict[str, Any]:
        exclude = {"timing_ms"} if self.timing_ms is None else set()
        return self.model_dump(mode="json", exclude=exclude)
