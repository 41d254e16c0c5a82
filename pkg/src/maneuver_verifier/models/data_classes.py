"""
Data classes for scenes, cells and maneuver envelopes
"""

from dataclasses import dataclass, field, replace
from typing import Dict, Tuple

from maneuver_verifier.geometry import FrenetRect, Region
from maneuver_verifier.models.enums import ObstacleKind, Relation, RoadType


@dataclass(frozen=True)
class RoadTypeInterval:
    s_lo: float
    s_hi: float
    road_type: RoadType


@dataclass(frozen=True)
class RoadModel:
    """Straight road of constant width in Frenet coordinates"""

    s_begin: float
    s_end: float
    d_min: float
    d_max: float
    road_type_intervals: Tuple[RoadTypeInterval, ...]

    @property
    def extent(self) -> FrenetRect:
        return FrenetRect(self.s_begin, self.s_end, self.d_min, self.d_max)

    @property
    def area(self) -> float:
        return self.extent.area


@dataclass(frozen=True)
class Obstacle:
    """Traffic participant with a constant-acceleration prediction"""

    id: str
    kind: ObstacleKind
    half_length: float
    half_width: float
    s0: float
    d0: float
    s_vel: float = 0.0
    d_vel: float = 0.0
    s_acc: float = 0.0
    d_acc: float = 0.0


@dataclass(frozen=True)
class Scenario:
    """Validated scene: road, predicted obstacles and ego seed"""

    road: RoadModel
    obstacles: Tuple[Obstacle, ...]
    ego_s0: float
    ego_d0: float
    horizon: float
    step: float
    congested: bool = False

    @property
    def num_steps(self) -> int:
        """Number of intervals n; time points are theta_0..theta_n"""
        return int(round(self.horizon / self.step))

    @property
    def time_points(self) -> Tuple[float, ...]:
        return tuple(p * self.step for p in range(self.num_steps + 1))

    def obstacle(self, obstacle_id: str) -> Obstacle:
        for obstacle in self.obstacles:
            if obstacle.id == obstacle_id:
                return obstacle
        raise KeyError(obstacle_id)

    def with_step(self, step: float) -> "Scenario":
        from maneuver_verifier.core.scenario import validate_scenario

        return validate_scenario(replace(self, step=step))

    def with_congested(self, congested: bool) -> "Scenario":
        return replace(self, congested=congested)


@dataclass(frozen=True)
class Signature:
    """Relation letters per obstacle (index-aligned) plus the road type"""

    relations: Tuple[Relation, ...]
    road_type: RoadType

    @property
    def letters(self) -> str:
        return "".join(r.value for r in self.relations)

    @classmethod
    def parse(cls, text: str) -> "Signature":
        """Inverse of str(): 'cw:br' -> (b, r) on the carriageway"""
        road, _, letters = text.partition(":")
        return cls(tuple(Relation(c) for c in letters), RoadType.parse(road))

    def __str__(self) -> str:
        return f"{self.road_type.short}:{self.letters}"


@dataclass(frozen=True)
class Cell:
    """Collision-free space-time cell E_sigma^p"""

    signature: Signature
    step: int
    region: Region = field(compare=False)

    @property
    def key(self) -> Tuple[int, str]:
        return self.step, str(self.signature)

    def __str__(self) -> str:
        return f"{self.step}:{self.signature}"


Path = Tuple[Cell, ...]


@dataclass(frozen=True)
class ManeuverEnvelope:
    """Drivable bounds of one trace step, sampled along s"""

    step: int
    s_min: float
    s_max: float
    d_left: Tuple[Tuple[float, float], ...]
    d_right: Tuple[Tuple[float, float], ...]

    def as_dict(self) -> Dict[str, object]:
        return {
            "step": self.step,
            "s_min": self.s_min,
            "s_max": self.s_max,
            "d_left": [list(p) for p in self.d_left],
            "d_right": [list(p) for p in self.d_right],
        }
