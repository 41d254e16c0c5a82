"""
Pydantic schemas for scenario and rules documents
"""

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from maneuver_verifier.models.enums import ObstacleKind, RoadType

IDENTIFIER_PATTERN = r"^[A-Za-z_][A-Za-z0-9_]*$"


class StrictDocument(BaseModel):
    model_config = ConfigDict(extra="forbid", allow_inf_nan=False)


class RoadTypeDocument(StrictDocument):
    s_lo: float = Field(..., description="Interval start along s [m]")
    s_hi: float = Field(..., description="Interval end along s [m]")
    type: RoadType = Field(..., description="carriageway or pedestrian_crosswalk")

    @field_validator("type", mode="before")
    @classmethod
    def parse_type(cls, v):
        if isinstance(v, str):
            return RoadType.parse(v)
        return v


class RoadDocument(StrictDocument):
    s_begin: float = Field(..., description="Road start along s [m]")
    s_end: float = Field(..., description="Road end along s [m]")
    d_min: float = Field(..., description="Right road edge [m]")
    d_max: float = Field(..., description="Left road edge [m]")
    road_types: List[RoadTypeDocument] = Field(
        default_factory=list,
        description="Typed intervals; gaps are filled with carriageway",
    )


class ObstacleDocument(StrictDocument):
    id: str = Field(..., pattern=IDENTIFIER_PATTERN, description="Unique token")
    kind: ObstacleKind = Field(..., description="Traffic participant type")
    half_length: float = Field(..., gt=0.0, description="Half extent along s [m]")
    half_width: float = Field(..., gt=0.0, description="Half extent along d [m]")
    s0: float
    d0: float
    s_vel: float = 0.0
    d_vel: float = 0.0
    s_acc: float = 0.0
    d_acc: float = 0.0

    @field_validator("id", mode="before")
    @classmethod
    def coerce_id(cls, v):
        # YAML turns bare numeric ids into ints
        return str(v) if isinstance(v, int) else v


class EgoDocument(StrictDocument):
    s0: float
    d0: float


class ScenarioDocument(StrictDocument):
    road: RoadDocument
    obstacles: List[ObstacleDocument] = Field(default_factory=list)
    ego: EgoDocument
    horizon: float = Field(..., gt=0.0, description="Planning horizon [s]")
    step: float = Field(..., gt=0.0, description="Planning interval [s]")
    congested: bool = False


class RuleDocument(StrictDocument):
    name: str = Field(..., min_length=1)
    applies_to: str = Field(
        ..., description="Obstacle kind the rule is instantiated for, or 'scene'"
    )
    formula: str = Field(..., description="LTL formula; {o} is the obstacle id")

    @field_validator("applies_to")
    @classmethod
    def validate_applies_to(cls, v):
        allowed = {kind.value for kind in ObstacleKind} | {"scene"}
        if v not in allowed:
            raise ValueError(f"applies_to must be one of {sorted(allowed)}")
        return v


class RulesDocument(BaseModel):
    rules: List[RuleDocument]

    @classmethod
    def from_entries(cls, entries: Optional[list]) -> "RulesDocument":
        return cls(rules=entries or [])
