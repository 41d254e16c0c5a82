"""
Pydantic schemas for scenario, rules and report documents
"""

from .report_schemas import (
    DijkstraRecord,
    EnvelopeRecord,
    PipelineReport,
    TimingRecord,
    TraceRecord,
    VerdictRecord,
)
from .scenario_schemas import (
    EgoDocument,
    ObstacleDocument,
    RoadDocument,
    RoadTypeDocument,
    RuleDocument,
    RulesDocument,
    ScenarioDocument,
)

__all__ = [
    "DijkstraRecord",
    "EgoDocument",
    "EnvelopeRecord",
    "ObstacleDocument",
    "PipelineReport",
    "RoadDocument",
    "RoadTypeDocument",
    "RuleDocument",
    "RulesDocument",
    "ScenarioDocument",
    "TimingRecord",
    "TraceRecord",
    "VerdictRecord",
]
