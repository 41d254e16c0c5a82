"""
Pydantic schemas for verification reports
"""

from typing import List, Optional

from pydantic import BaseModel, Field


class VerdictRecord(BaseModel):
    rule: str = Field(..., description="Instantiated rule name, e.g. R1(v)")
    satisfied: bool
    violation_instant: Optional[int] = Field(
        None, description="Earliest 1-based instant at which the rule fails"
    )


class EnvelopeRecord(BaseModel):
    step: int
    s_min: float
    s_max: float
    d_left: List[List[float]] = Field(..., description="(s_i, d) samples")
    d_right: List[List[float]] = Field(..., description="(s_i, d) samples")


class TraceRecord(BaseModel):
    index: int = Field(..., description="Position in cost-sorted order")
    signatures: List[str] = Field(..., description="One cell signature per step")
    cost: float
    satisfied: bool
    verdicts: List[VerdictRecord] = Field(default_factory=list)
    first_violated_rule: Optional[str] = None
    envelopes: Optional[List[EnvelopeRecord]] = None


class DijkstraRecord(BaseModel):
    signatures: List[str]
    cost: float
    satisfied: bool


class TimingRecord(BaseModel):
    stage: str
    seconds: float


class PipelineReport(BaseModel):
    """Structured result of one verification run"""

    scenario_digest: str = Field(..., description="sha256 of the canonical scenario")
    num_steps: int
    step: float
    congested: bool
    rules: List[str]
    cells_per_step: List[int]
    vertices: int
    edges: int
    trace_count: int = Field(..., description="Number of root-to-goal paths")
    enumerated: int
    truncated: bool
    checked: int
    satisfying: int
    dijkstra: Optional[DijkstraRecord] = None
    timings: List[TimingRecord] = Field(default_factory=list)
    total_seconds: Optional[float] = None
    memory_usage_mb: Optional[float] = None
    traces: List[TraceRecord] = Field(default_factory=list)

    def to_document(self) -> dict:
        return self.model_dump(mode="json")
